#include "slash/cli_run.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <optional>
#include <thread>

#include "slash/json_io.hpp"
#include "slash/lie_courant.hpp"
#include "slash/orbit.hpp"

namespace slash {

namespace {

std::string side_str(Side s) {
  return s == Side::Complex ? "complex" : "symplectic";
}

Side parse_side(const std::string& s) {
  if (s == "complex") return Side::Complex;
  if (s == "symplectic") return Side::Symplectic;
  throw parse_error("--side must be 'complex' or 'symplectic', got '" + s +
                    "'");
}

int parse_sign(const std::string& flag, std::int64_t v) {
  if (v != 1 && v != -1)
    throw parse_error(flag + " must be +1 or -1");
  return static_cast<int>(v);
}

// everything the user can re-verify by hand goes into the report
Json slash_report_json(const SlashReport& rep) {
  Json out{{"side", side_str(rep.side)},
           {"lambda", rep.lambda},
           {"ell", rep.ell},
           {"clauses",
            {{"square", rep.square_ok},
             {"b_skew", rep.skew_ok},
             {"split", rep.split_ok},
             {"compatibility", rep.compat_ok},
             {"extra_split", rep.extra_split_ok},
             {"form_criterion", rep.criterion_ok}}},
           {"overall", rep.overall}};
  if (!rep.overall) {
    out["failed_clause"] = rep.failed_clause;
    if (rep.witness_i >= 0)
      out["witness"] = Json{{"i", rep.witness_i},
                            {"j", rep.witness_j},
                            {"value", rep.witness_value}};
  }
  return out;
}

Json inertia_json(const Signature& s) {
  return Json{{"p", s.p}, {"q", s.q}, {"z", s.z}};
}

Json signature_json(const SignatureResult& sig) {
  Json out{{"ok", sig.ok}, {"inertia", inertia_json(sig.inertia)}};
  if (sig.ok)
    out["n"] = sig.n;
  else
    out["message"] = sig.message;
  return out;
}

Json integrability_json(const IntegrabilityReport& rep) {
  return Json{{"plus_ok", rep.plus_ok},
              {"minus_ok", rep.minus_ok},
              {"plus_only", rep.plus_only},
              {"integrable", rep.integrable}};
}

Json label_json(const OrbitLabel& label) {
  Json out{{"side", side_str(label.side)},
           {"lambda", label.lambda},
           {"ell", label.ell},
           {"m", label.m},
           {"text", label_str(label)},
           {"group_dimension", group_dimension(label)}};
  if (label.n) out["n"] = *label.n;
  return out;
}

Json obstruction_json(const ObstructionReport& rep) {
  Json out{{"obstructed", rep.obstructed},
           {"antidiagonal_solvable", rep.antidiagonal_solvable},
           {"antidiagonal_valid", rep.antidiagonal_valid},
           {"diagonal_solvable", rep.diagonal_solvable},
           {"diagonal_valid", rep.diagonal_valid},
           {"normalized_lift_solvable", rep.normalized_lift_solvable},
           {"notes", rep.notes}};
  if (rep.antidiagonal_solvable) {
    out["witness_a_flat"] = json_from_matrix(rep.a);
    out["witness_b_flat"] = json_from_matrix(rep.b);
  }
  if (rep.diagonal_solvable) {
    out["witness_rho"] = json_from_matrix(rep.rho);
    out["witness_b_diag_flat"] = json_from_matrix(rep.b_diag);
  }
  return out;
}

Json conjugator_json(const ConjugatorResult& res) {
  Json out{{"backend",
            res.backend == ConjugatorBackend::Exact ? "exact" : "floating"},
           {"dim", res.dim},
           {"residual_conjugation", res.residual_conjugation},
           {"residual_isometry", res.residual_isometry}};
  if (res.backend == ConjugatorBackend::Exact) {
    out["F"] = res.F_lorentz.rows() > 0 ? json_from_matrix(res.F_lorentz)
                                        : json_from_matrix(res.F_exact);
  } else {
    Json rows = Json::array();
    for (std::size_t i = 0; i < res.dim; ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < res.dim; ++j) {
        const std::complex<double>& v = res.F_float[i * res.dim + j];
        row.push_back(Json::array({v.real(), v.imag()}));
      }
      rows.push_back(std::move(row));
    }
    out["F"] = Json{{"algebra", "complex-double"}, {"entries", std::move(rows)}};
  }
  return out;
}

std::string error_detail(const InputError& e) {
  const std::string what = e.what(), prefix = e.code() + ": ";
  return what.rfind(prefix, 0) == 0 ? what.substr(prefix.size()) : what;
}

bool is_negative_verdict(const InputError& e) {
  const std::string& c = e.code();
  return c == "NotInAnyOrbit" || c == "NotInOrbit" ||
         c == "ToleranceExceeded" || c == "NotASlashStructure";
}

// per-side dispatch used by check, courant, and the batch runner
SlashReport run_membership(Side side, const BlockEndo& S, const MatQ& form,
                           int lambda, int ell) {
  return side == Side::Complex ? check_slash_complex(S, form, lambda, ell)
                               : check_slash_symplectic(S, form, lambda, ell);
}

bool has_signature_integer(Side side, int lambda, int ell) {
  return (side == Side::Complex && lambda == 1 && ell == 1) ||
         (side == Side::Symplectic && lambda == -1 && ell == 1);
}

SignatureResult run_signature(Side side, const BlockEndo& S,
                              const MatQ& form) {
  return side == Side::Complex ? sig_complex_11(S, form)
                               : sig_symplectic_m11(S, form);
}

// one structure check: membership, signature integer when the label has
// one, integrability when an algebra is supplied
Json check_one(Side side, int lambda, int ell, const BlockEndo& S,
               const MatQ& form, const std::optional<LieAlgebra>& algebra,
               bool plus_only, bool* ok_out) {
  Json out;
  SlashReport rep = run_membership(side, S, form, lambda, ell);
  out["check"] = slash_report_json(rep);
  bool ok = rep.overall;
  if (rep.overall && has_signature_integer(side, lambda, ell)) {
    SignatureResult sig = run_signature(side, S, form);
    out["signature"] = signature_json(sig);
    if (sig.ok) out["sig"] = sig.n;
    ok = ok && sig.ok;
  }
  if (rep.overall && algebra) {
    IntegrabilityReport integ = is_integrable_slash(
        *algebra, S, side, form, lambda, ell, plus_only);
    out["integrability"] = integrability_json(integ);
    ok = ok && integ.integrable;
  }
  out["ok"] = ok;
  if (ok_out) *ok_out = ok;
  return out;
}

struct FormOpts {
  std::string side_text;
  std::int64_t lambda = 1, ell = 1;
  std::string s_path, j_path, omega_path, algebra_path;
  bool plus_only = false;
  CLI::Option *side_opt = nullptr, *lambda_opt = nullptr, *ell_opt = nullptr;
};

// not marked required at the CLI level: `check --batch` carries these fields
// per job, so presence is validated by the single-input paths instead
void add_side_options(CLI::App* sub, FormOpts& o, bool with_label) {
  o.side_opt = sub->add_option("--side", o.side_text, "complex | symplectic");
  if (with_label) {
    o.lambda_opt =
        sub->add_option("--lambda", o.lambda, "square of S: +1 or -1");
    o.ell_opt =
        sub->add_option("--ell", o.ell, "compatibility type: +1 or -1");
  }
  sub->add_option("--S", o.s_path, "block endomorphism JSON file");
  sub->add_option("--j", o.j_path, "complex structure Gram file (complex side)");
  sub->add_option("--omega", o.omega_path,
                  "symplectic form Gram file (symplectic side)");
}

void require_present(const CLI::Option* opt, const char* flag) {
  if (opt == nullptr || opt->count() == 0)
    throw parse_error(std::string(flag) + " is required");
}

void require_label_options(const FormOpts& o, bool with_label) {
  require_present(o.side_opt, "--side");
  if (with_label) {
    require_present(o.lambda_opt, "--lambda");
    require_present(o.ell_opt, "--ell");
  }
}

struct LoadedForm {
  Side side = Side::Complex;
  BlockEndo S;
  MatQ form;
};

LoadedForm load_form(const FormOpts& o) {
  LoadedForm lf;
  lf.side = parse_side(o.side_text);
  if (o.s_path.empty()) throw parse_error("--S is required");
  lf.S = json_to_blockendo(load_json_file(o.s_path), "S");
  const bool complex_side = lf.side == Side::Complex;
  const std::string& path = complex_side ? o.j_path : o.omega_path;
  const char* flag = complex_side ? "--j" : "--omega";
  const char* other = complex_side ? "--omega" : "--j";
  if (path.empty())
    throw parse_error(std::string(flag) + " is required for --side " +
                      o.side_text);
  if (!(complex_side ? o.omega_path : o.j_path).empty())
    throw parse_error(std::string(other) + " does not apply to --side " +
                      o.side_text);
  lf.form = json_to_matq(load_json_file(path), flag + 1);
  return lf;
}

std::optional<LieAlgebra> load_algebra(const std::string& path) {
  if (path.empty()) return std::nullopt;
  LieAlgebra g = json_to_lie_algebra(load_json_file(path), "algebra");
  if (!g.jacobi_ok())
    throw parse_error("algebra: structure constants violate Jacobi");
  return g;
}

// ---- subcommand bodies ----------------------------------------------------

RunResult finish(Json report, bool ok) {
  RunResult rr;
  rr.exit_code = ok ? 0 : 1;
  rr.out = dump_report(report);
  return rr;
}

RunResult do_check_single(const FormOpts& o,
                          const std::optional<LieAlgebra>& algebra) {
  require_label_options(o, true);
  LoadedForm lf = load_form(o);
  bool ok = false;
  Json out = check_one(lf.side, parse_sign("--lambda", o.lambda),
                       parse_sign("--ell", o.ell), lf.S, lf.form, algebra,
                       o.plus_only, &ok);
  out["command"] = "check";
  return finish(std::move(out), ok);
}

Json run_batch_job(const Json& job, std::size_t index) {
  std::ostringstream os;
  os << "jobs[" << index << "]";
  const std::string where = os.str();
  if (!job.is_object()) throw parse_error(where + ": expected an object");
  auto need = [&](const char* key) -> const Json& {
    auto it = job.find(key);
    if (it == job.end())
      throw parse_error(where + ": missing field '" + key + "'");
    return *it;
  };
  Side side = parse_side(need("side").get<std::string>());
  const int lambda = parse_sign("lambda", need("lambda").get<std::int64_t>());
  const int ell = parse_sign("ell", need("ell").get<std::int64_t>());
  BlockEndo S = json_to_blockendo(need("S"), where + ".S");
  const char* form_key = side == Side::Complex ? "j" : "omega";
  MatQ form = json_to_matq(need(form_key), where + "." + form_key);
  std::optional<LieAlgebra> algebra;
  if (auto it = job.find("algebra"); it != job.end()) {
    algebra = json_to_lie_algebra(*it, where + ".algebra");
    if (!algebra->jacobi_ok())
      throw parse_error(where + ".algebra: structure constants violate Jacobi");
  }
  bool plus_only = false;
  if (auto it = job.find("plus_only"); it != job.end())
    plus_only = it->get<bool>();
  Json out = check_one(side, lambda, ell, S, form, algebra, plus_only,
                       nullptr);
  out["index"] = index;
  return out;
}

RunResult do_check_batch(const std::string& batch_path, unsigned jobs) {
  Json doc = load_json_file(batch_path);
  const Json* items = &doc;
  if (doc.is_object()) items = &doc.at("jobs");
  if (!items->is_array())
    throw parse_error("batch file: expected an array of check jobs");
  const std::size_t count = items->size();
  std::vector<Json> results(count);
  std::vector<std::string> failures(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next.fetch_add(1); i < count;
         i = next.fetch_add(1)) {
      try {
        results[i] = run_batch_job((*items)[i], i);
      } catch (const InputError& e) {
        failures[i] = e.what();
      }
    }
  };
  const unsigned n_threads =
      std::min<unsigned>(std::max(1u, jobs), static_cast<unsigned>(count ? count : 1));
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  for (std::size_t i = 0; i < count; ++i)
    if (!failures[i].empty()) {
      std::ostringstream os;
      os << "input error in jobs[" << i << "]: " << failures[i];
      throw parse_error(os.str());
    }
  bool all_ok = true;
  Json arr = Json::array();
  for (Json& r : results) {
    all_ok = all_ok && r.at("ok").get<bool>();
    arr.push_back(std::move(r));
  }
  Json out{{"command", "check"}, {"jobs", std::move(arr)}, {"all_ok", all_ok}};
  return finish(std::move(out), all_ok);
}

RunResult do_signature(const FormOpts& o) {
  require_label_options(o, false);
  LoadedForm lf = load_form(o);
  SignatureResult sig = run_signature(lf.side, lf.S, lf.form);
  Json out{{"command", "signature"}, {"signature", signature_json(sig)},
           {"ok", sig.ok}};
  if (sig.ok) out["sig"] = sig.n;
  return finish(std::move(out), sig.ok);
}

RunResult do_classify(const FormOpts& o) {
  require_label_options(o, false);
  LoadedForm lf = load_form(o);
  try {
    std::vector<OrbitLabel> labels = classify_all(lf.S, lf.side, lf.form);
    Json arr = Json::array();
    for (const OrbitLabel& l : labels) arr.push_back(label_json(l));
    Json out{{"command", "classify"},
             {"ok", true},
             {"labels", std::move(arr)},
             {"primary", label_str(labels.front())}};
    return finish(std::move(out), true);
  } catch (const InputError& e) {
    if (e.code() != "NotInAnyOrbit") throw;
    Json out{{"command", "classify"},
             {"ok", false},
             {"code", e.code()},
             {"clause", error_detail(e)}};
    // attach the clause-by-clause reports so the verdict has a witness
    MatQ full = lf.S.full();
    MatQ sq = full * full;
    const std::size_t d = 2 * lf.S.n;
    int lambda = 0;
    if (sq == MatQ::identity(d)) lambda = 1;
    if (sq == -MatQ::identity(d)) lambda = -1;
    if (lambda != 0) {
      out["checks"] =
          Json{{"ell_plus", slash_report_json(
                                run_membership(lf.side, lf.S, lf.form, lambda, 1))},
               {"ell_minus", slash_report_json(run_membership(
                                 lf.side, lf.S, lf.form, lambda, -1))}};
    } else {
      out["checks"] =
          Json{{"generalized_plus", slash_report_json(check_generalized(lf.S, 1))},
               {"generalized_minus",
                slash_report_json(check_generalized(lf.S, -1))}};
    }
    return finish(std::move(out), false);
  }
}

RunResult do_courant(const FormOpts& o, const LieAlgebra& algebra) {
  require_label_options(o, true);
  LoadedForm lf = load_form(o);
  const int lambda = parse_sign("--lambda", o.lambda);
  const int ell = parse_sign("--ell", o.ell);
  SlashReport rep = run_membership(lf.side, lf.S, lf.form, lambda, ell);
  Json out{{"command", "courant"}, {"check", slash_report_json(rep)}};
  if (!rep.overall) {
    out["ok"] = false;
    return finish(std::move(out), false);
  }
  IntegrabilityReport integ = is_integrable_slash(
      algebra, lf.S, lf.side, lf.form, lambda, ell, o.plus_only);
  out["integrability"] = integrability_json(integ);
  out["ok"] = integ.integrable;
  return finish(std::move(out), integ.integrable);
}

RunResult do_bfield(const std::string& omega2_path, const std::string& s_path,
                    const std::string& j_path, std::int64_t ell_raw,
                    bool ell_given, const std::string& algebra_path) {
  MatQ omega2 = json_to_matq(load_json_file(omega2_path), "omega2");
  BlockEndo S = json_to_blockendo(load_json_file(s_path), "S");
  Json out{{"command", "bfield"}};
  bool ok = true;
  if (std::optional<LieAlgebra> g = load_algebra(algebra_path)) {
    ClosednessReport cl = d_closed_2form(*g, omega2);
    Json closed{{"closed", cl.closed}};
    if (!cl.closed)
      closed["witness"] = Json{{"i", cl.i},
                               {"j", cl.j},
                               {"k", cl.k},
                               {"value", rational_str(cl.value)}};
    out["closedness"] = std::move(closed);
    ok = ok && cl.closed;
  }
  if (!j_path.empty()) {
    if (!ell_given)
      throw parse_error("--ell is required together with --j");
    MatQ j = json_to_matq(load_json_file(j_path), "j");
    const bool preserves =
        bfield_preserves(omega2, j, parse_sign("--ell", ell_raw));
    out["preserves"] = preserves;
    ok = ok && preserves;
  } else if (ell_given) {
    throw parse_error("--ell without --j has no meaning for bfield");
  }
  out["transformed"] = json_from_blockendo(bfield(omega2, S));
  out["ok"] = ok;
  return finish(std::move(out), ok);
}

RunResult do_demo(const std::string& name, const std::string& c2_text,
                  const std::string& s2_text) {
  if (name != "heisenberg")
    throw parse_error("unknown demo '" + name + "' (built-in: heisenberg)");
  const Rational c2 = rational_from_string(c2_text);
  const Rational s2 = rational_from_string(s2_text);
  HeisenbergDemo demo = heisenberg_demo();
  BlockEndo S = demo.s_of(c2, s2);  // validates the circle point
  Json out{{"command", "demo"},
           {"name", name},
           {"c2", rational_str(c2)},
           {"s2", rational_str(s2)},
           {"trivial_parameter", demo.trivial_parameter(c2, s2)}};
  bool ok = false;
  Json body = check_one(Side::Complex, 1, 1, S, demo.j, demo.g, false, &ok);
  out.update(body);
  out["obstruction"] = obstruction_json(nontrivial_obstruction(demo.g, demo.j, S));
  out["ok"] = ok;
  return finish(std::move(out), ok);
}

RunResult do_orbit_dim(const std::string& side_text, std::int64_t lambda,
                       std::int64_t ell, std::size_t m,
                       std::optional<std::int64_t> n, bool linearized) {
  OrbitLabel label{parse_side(side_text), parse_sign("--lambda", lambda),
                   parse_sign("--ell", ell), m, n};
  validate_label(label);
  Json out{{"command", "orbit-dim"}, {"label", label_json(label)}};
  bool ok = true;
  if (linearized) {
    const std::int64_t lin = linearized_dimension(normal_form(label), label);
    out["linearized_dimension"] = lin;
    ok = lin == group_dimension(label);
    out["agree"] = ok;
  }
  out["ok"] = ok;
  return finish(std::move(out), ok);
}

RunResult do_conjugate(const std::string& side_text, std::int64_t lambda_raw,
                       std::int64_t ell_raw, std::size_t m,
                       std::optional<std::int64_t> n,
                       const std::string& member_path, bool constant_two,
                       double tolerance) {
  OrbitLabel label{parse_side(side_text), parse_sign("--lambda", lambda_raw),
                   parse_sign("--ell", ell_raw), m, n};
  validate_label(label);
  ModelMember member;
  member.side = label.side;
  member.m = m;
  member.ell = label.ell;
  member.lorentz =
      label.side == Side::Symplectic && label.lambda * label.ell == 1;
  Json doc = load_json_file(member_path);
  if (member.lorentz)
    member.L = json_to_matl(doc, "member");
  else
    member.G = json_to_matg(doc, "member");
  ConjugatorOptions options;
  options.constant_two = constant_two;
  options.tolerance = tolerance;
  ConjugatorResult res = conjugator(member, label, options);
  Json out{{"command", "conjugate"},
           {"label", label_json(label)},
           {"ok", true}};
  out.update(conjugator_json(res));
  return finish(std::move(out), true);
}

}  // namespace

RunResult run_cli(const std::vector<std::string>& args) {
  CLI::App app{"exact checker and classifier for slash structures on V + V*"};
  app.name("slashctl");
  app.require_subcommand(1);

  FormOpts check_o;
  std::string check_algebra, batch_path;
  unsigned batch_jobs = 1;
  CLI::App* check = app.add_subcommand(
      "check", "membership clauses, signature integer, integrability");
  add_side_options(check, check_o, true);
  check->add_option("--algebra", check_algebra,
                    "Lie algebra JSON file (adds the integrability check)");
  check->add_flag("--plus-only", check_o.plus_only,
                  "only the plus eigensection for integrability");
  check->add_option("--batch", batch_path,
                    "JSON array of inline check jobs (side/lambda/ell/S/j|omega)");
  check->add_option("--jobs", batch_jobs, "worker threads for --batch")
      ->check(CLI::PositiveNumber);

  FormOpts sig_o;
  CLI::App* signature = app.add_subcommand(
      "signature", "signature integer of a (1,1) / (-1,1) member");
  add_side_options(signature, sig_o, false);

  FormOpts classify_o;
  CLI::App* classify_cmd =
      app.add_subcommand("classify", "orbit labels of a structure");
  add_side_options(classify_cmd, classify_o, false);

  FormOpts courant_o;
  std::string courant_algebra;
  CLI::App* courant = app.add_subcommand(
      "courant", "Courant-bracket involutivity of the eigensections");
  add_side_options(courant, courant_o, true);
  courant->add_option("--algebra", courant_algebra, "Lie algebra JSON file")
      ->required();
  courant->add_flag("--plus-only", courant_o.plus_only,
                    "only the plus eigensection");

  std::string bf_omega2, bf_s, bf_j, bf_algebra;
  std::int64_t bf_ell = 1;
  CLI::App* bf = app.add_subcommand(
      "bfield", "B-field transform of a structure by a two-form");
  bf->add_option("--omega2", bf_omega2, "two-form Gram JSON file")->required();
  bf->add_option("--S", bf_s, "block endomorphism JSON file")->required();
  bf->add_option("--j", bf_j, "check preservation against this j");
  CLI::Option* bf_ell_opt =
      bf->add_option("--ell", bf_ell, "compatibility type for --j");
  bf->add_option("--algebra", bf_algebra,
                 "Lie algebra JSON file (adds the closedness check)");

  std::string demo_name, demo_c2 = "1", demo_s2 = "0";
  CLI::App* demo = app.add_subcommand(
      "demo", "built-in worked example, full pipeline");
  demo->add_option("name", demo_name, "demo name (heisenberg)")->required();
  demo->add_option("--c2", demo_c2, "rational cos 2t");
  demo->add_option("--s2", demo_s2, "rational sin 2t");

  std::string od_side;
  std::int64_t od_lambda = 1, od_ell = 1, od_n = 0;
  std::size_t od_m = 1;
  bool od_linearized = false;
  CLI::App* orbit_dim =
      app.add_subcommand("orbit-dim", "orbit dimension for a label");
  orbit_dim->add_option("--side", od_side, "complex | symplectic")->required();
  orbit_dim->add_option("--lambda", od_lambda, "+1 or -1")->required();
  orbit_dim->add_option("--ell", od_ell, "+1 or -1")->required();
  orbit_dim->add_option("--m", od_m, "half-dimension m >= 1")->required();
  CLI::Option* od_n_opt =
      orbit_dim->add_option("--n", od_n, "signature integer (when the label has one)");
  orbit_dim->add_flag("--linearized", od_linearized,
                      "also compute the linearized dimension at the normal form");

  std::string cj_side, cj_member;
  std::int64_t cj_lambda = 1, cj_ell = 1, cj_n = 0;
  std::size_t cj_m = 1;
  bool cj_constant_two = false;
  double cj_tolerance = 1e-9;
  CLI::App* conjugate = app.add_subcommand(
      "conjugate", "isometry taking the normal form to a member");
  conjugate->add_option("--side", cj_side, "complex | symplectic")->required();
  conjugate->add_option("--lambda", cj_lambda, "+1 or -1")->required();
  conjugate->add_option("--ell", cj_ell, "+1 or -1")->required();
  conjugate->add_option("--m", cj_m, "half-dimension m >= 1")->required();
  CLI::Option* cj_n_opt =
      conjugate->add_option("--n", cj_n, "signature integer (when the label has one)");
  conjugate->add_option("--member", cj_member, "member matrix JSON file")
      ->required();
  conjugate->add_flag("--constant-two", cj_constant_two,
                      "use the constant-2 pairing/length conventions");
  conjugate->add_option("--tolerance", cj_tolerance,
                        "residual bound for the floating backend");

  RunResult rr;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
    if (check->parsed()) {
      if (!batch_path.empty()) {
        if (!check_o.s_path.empty() || !check_o.j_path.empty() ||
            !check_o.omega_path.empty() || !check_algebra.empty())
          throw parse_error("--batch does not combine with single-input flags");
        rr = do_check_batch(batch_path, batch_jobs);
      } else {
        rr = do_check_single(check_o, load_algebra(check_algebra));
      }
    } else if (signature->parsed()) {
      rr = do_signature(sig_o);
    } else if (classify_cmd->parsed()) {
      rr = do_classify(classify_o);
    } else if (courant->parsed()) {
      rr = do_courant(courant_o, *load_algebra(courant_algebra));
    } else if (bf->parsed()) {
      rr = do_bfield(bf_omega2, bf_s, bf_j, bf_ell, bf_ell_opt->count() > 0,
                     bf_algebra);
    } else if (demo->parsed()) {
      rr = do_demo(demo_name, demo_c2, demo_s2);
    } else if (orbit_dim->parsed()) {
      rr = do_orbit_dim(od_side, od_lambda, od_ell, od_m,
                        od_n_opt->count() > 0
                            ? std::optional<std::int64_t>(od_n)
                            : std::nullopt,
                        od_linearized);
    } else if (conjugate->parsed()) {
      rr = do_conjugate(cj_side, cj_lambda, cj_ell, cj_m,
                        cj_n_opt->count() > 0
                            ? std::optional<std::int64_t>(cj_n)
                            : std::nullopt,
                        cj_member, cj_constant_two, cj_tolerance);
    }
  } catch (const CLI::CallForHelp&) {
    rr.out = app.help();
    rr.exit_code = 0;
  } catch (const CLI::ParseError& e) {
    rr.err = std::string("input error: ") + e.what() + "\n";
    rr.exit_code = 2;
  } catch (const InputError& e) {
    if (is_negative_verdict(e)) {
      Json out{{"ok", false}, {"code", e.code()}, {"clause", error_detail(e)}};
      rr.out = dump_report(out);
      rr.exit_code = 1;
    } else {
      rr.err = std::string("input error: ") + e.what() + "\n";
      rr.exit_code = 2;
    }
  }
  return rr;
}

}  // namespace slash
