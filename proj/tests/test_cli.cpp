#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "slash/cli_run.hpp"
#include "slash/json_io.hpp"
#include "slash/lie_courant.hpp"
#include "slash/orbit.hpp"

using namespace slash;

namespace {

bool contains(const std::string& s, const std::string& sub) {
  return s.find(sub) != std::string::npos;
}

// writes every fixture file once, first use
struct Fixtures {
  std::filesystem::path dir;
  HeisenbergDemo demo = heisenberg_demo();
  MatQ omega2{2, 2, {Rational(0), Rational(1), Rational(-1), Rational(0)}};
  MatQ w_good{4, 4}, w_bad{4, 4};
  ModelMember member_float;  // complex (1,1;1) off the normal form

  std::string path(const std::string& name) const {
    return (dir / name).string();
  }

  void write(const std::string& name, const Json& doc) {
    std::ofstream(path(name)) << dump_report(doc);
  }

  Fixtures() {
    dir = std::filesystem::temp_directory_path() / "slashctl-test-fixtures";
    std::filesystem::create_directories(dir);
    write("j.json", json_from_matrix(demo.j));
    write("S.json", json_from_blockendo(demo.S));
    MatQ pi(4, 4);
    pi(0, 1) = 1;
    pi(1, 0) = -1;
    write("poisson.json", json_from_blockendo(poisson_lift(pi)));
    write("heis.json",
          Json{{"dim", 4},
               {"brackets", Json::array({Json{{"i", 1},
                                              {"j", 2},
                                              {"coeffs", Json{{"3", "1"}}}}})}});
    write("omega2.json", json_from_matrix(omega2));
    write("lift2.json", json_from_blockendo(lift_tensor(omega2)));
    MatQ mb(2, 2, {Rational(1), Rational(2), Rational(2), Rational(-1)});
    w_good.set_block(0, 2, mb);
    w_good.set_block(2, 0, -mb);
    write("w.json", json_from_matrix(w_good));
    w_bad.set_block(0, 2, MatQ::identity(2));
    w_bad.set_block(2, 0, -MatQ::identity(2));
    write("w_bad.json", json_from_matrix(w_bad));
    // complex (1,-1) normal form at m = 2
    write("member_pairing.json",
          json_from_matrix(
              normal_form({Side::Complex, 1, -1, 2, std::nullopt}).G));
    // a floating-backend member: conjugate the (1,1;1) normal form by a
    // fixed non-real isometry of the bilinear form
    MatG rot(2, 2);
    rot(0, 0) = Gaussian(Rational(5, 4));
    rot(0, 1) = Gaussian(Rational(0), Rational(3, 4));
    rot(1, 0) = Gaussian(Rational(0), Rational(-3, 4));
    rot(1, 1) = Gaussian(Rational(5, 4));
    // rot stabilizes diag(i,-i), so use the n = 0 form it actually moves
    member_float =
        conjugate_member(normal_form({Side::Complex, 1, 1, 1, 0}), rot);
    write("member_float.json", json_from_matrix(member_float.G));
    write("member_quaternionic.json",
          json_from_matrix(
              normal_form({Side::Complex, -1, 1, 1, std::nullopt}).G));
    write("bad_syntax.json", Json());  // overwritten below with raw text
    std::ofstream(path("bad_syntax.json")) << "{\"algebra\": \"rational\",\n  entries: []}\n";
    write("bad_rational.json",
          Json{{"algebra", "rational"}, {"entries", {{"1/0"}}}});
  }
};

const Fixtures& fx() {
  static Fixtures f;
  return f;
}

RunResult run(std::vector<std::string> args) { return run_cli(args); }

Json out_json(const RunResult& rr) {
  REQUIRE(!rr.out.empty());
  return parse_json_text(rr.out, "cli output");
}

}  // namespace

TEST_CASE("check: membership plus signature on the built-in data") {
  RunResult rr = run({"check", "--side", "complex", "--lambda", "1", "--ell",
                      "1", "--j", fx().path("j.json"), "--S",
                      fx().path("S.json")});
  CHECK(rr.exit_code == 0);
  CHECK(rr.err.empty());
  Json out = out_json(rr);
  CHECK(out.at("command") == "check");
  CHECK(out.at("check").at("overall") == true);
  CHECK(out.at("sig") == 2);
  CHECK(out.at("signature").at("inertia").at("p") == 4);

  // byte determinism across invocations
  RunResult again = run({"check", "--side", "complex", "--lambda", "1",
                         "--ell", "1", "--j", fx().path("j.json"), "--S",
                         fx().path("S.json")});
  CHECK(again.out == rr.out);
}

TEST_CASE("check: integrability is appended when an algebra is given") {
  RunResult rr = run({"check", "--side", "complex", "--lambda", "1", "--ell",
                      "1", "--j", fx().path("j.json"), "--S",
                      fx().path("S.json"), "--algebra",
                      fx().path("heis.json")});
  CHECK(rr.exit_code == 0);
  Json out = out_json(rr);
  CHECK(out.at("integrability").at("integrable") == true);
  CHECK(out.at("integrability").at("plus_only") == false);
}

TEST_CASE("check: negative verdict names the clause and carries a witness") {
  RunResult rr = run({"check", "--side", "complex", "--lambda", "1", "--ell",
                      "1", "--j", fx().path("j.json"), "--S",
                      fx().path("poisson.json")});
  CHECK(rr.exit_code == 1);
  Json out = out_json(rr);
  CHECK(out.at("ok") == false);
  CHECK(out.at("check").at("failed_clause") == "anticommutation_with_J_ell");
  const Json& witness = out.at("check").at("witness");
  CHECK(witness.at("i").is_number());
  CHECK(witness.at("j").is_number());
  CHECK(!witness.at("value").get<std::string>().empty());
}

TEST_CASE("check: input errors exit 2 with diagnostics on stderr") {
  // missing options
  RunResult rr = run({"check", "--lambda", "1", "--ell", "1"});
  CHECK(rr.exit_code == 2);
  CHECK(contains(rr.err, "--side is required"));
  // nonexistent file
  rr = run({"check", "--side", "complex", "--lambda", "1", "--ell", "1",
            "--j", fx().path("nope.json"), "--S", fx().path("S.json")});
  CHECK(rr.exit_code == 2);
  CHECK(contains(rr.err, "cannot open"));
  // malformed JSON reports the line
  rr = run({"check", "--side", "complex", "--lambda", "1", "--ell", "1",
            "--j", fx().path("bad_syntax.json"), "--S", fx().path("S.json")});
  CHECK(rr.exit_code == 2);
  CHECK(contains(rr.err, "line"));
  // zero denominator
  rr = run({"check", "--side", "complex", "--lambda", "1", "--ell", "1",
            "--j", fx().path("bad_rational.json"), "--S",
            fx().path("S.json")});
  CHECK(rr.exit_code == 2);
  CHECK(contains(rr.err, "zero denominator"));
  // form flag mismatching the side
  rr = run({"check", "--side", "complex", "--lambda", "1", "--ell", "1",
            "--omega", fx().path("j.json"), "--S", fx().path("S.json")});
  CHECK(rr.exit_code == 2);
  CHECK(contains(rr.err, "--j is required"));
  // lambda out of range
  rr = run({"check", "--side", "complex", "--lambda", "2", "--ell", "1",
            "--j", fx().path("j.json"), "--S", fx().path("S.json")});
  CHECK(rr.exit_code == 2);
  CHECK(contains(rr.err, "+1 or -1"));
  // unknown subcommand / no subcommand
  CHECK(run({"frobnicate"}).exit_code == 2);
  CHECK(run({}).exit_code == 2);
}

TEST_CASE("check --batch: aggregated reports, threads do not change bytes") {
  Json j_doc = json_from_matrix(fx().demo.j);
  Json s_doc = json_from_blockendo(fx().demo.S);
  Json jobs = Json::array();
  jobs.push_back(Json{{"side", "complex"},
                      {"lambda", 1},
                      {"ell", 1},
                      {"j", j_doc},
                      {"S", s_doc}});
  jobs.push_back(Json{{"side", "symplectic"},
                      {"lambda", -1},
                      {"ell", 1},
                      {"omega", json_from_matrix(fx().omega2)},
                      {"S", json_from_blockendo(lift_tensor(fx().omega2))}});
  jobs.push_back(Json{{"side", "complex"},
                      {"lambda", 1},
                      {"ell", 1},
                      {"j", j_doc},
                      {"S", s_doc},
                      {"algebra", load_json_file(fx().path("heis.json"))}});
  std::ofstream(fx().path("batch.json")) << dump_report(jobs);

  RunResult seq = run({"check", "--batch", fx().path("batch.json")});
  CHECK(seq.exit_code == 0);
  Json out = out_json(seq);
  CHECK(out.at("all_ok") == true);
  REQUIRE(out.at("jobs").size() == 3);
  CHECK(out.at("jobs")[0].at("sig") == 2);
  CHECK(out.at("jobs")[1].at("sig") == 1);
  CHECK(out.at("jobs")[2].at("integrability").at("integrable") == true);

  RunResult par =
      run({"check", "--batch", fx().path("batch.json"), "--jobs", "4"});
  CHECK(par.exit_code == 0);
  CHECK(par.out == seq.out);

  // one failing job flips the aggregate verdict but not the exit contract
  jobs.push_back(Json{{"side", "complex"},
                      {"lambda", 1},
                      {"ell", 1},
                      {"j", j_doc},
                      {"S", load_json_file(fx().path("poisson.json"))}});
  std::ofstream(fx().path("batch_fail.json")) << dump_report(jobs);
  RunResult mixed = run({"check", "--batch", fx().path("batch_fail.json")});
  CHECK(mixed.exit_code == 1);
  Json mixed_out = out_json(mixed);
  CHECK(mixed_out.at("all_ok") == false);
  CHECK(mixed_out.at("jobs")[3].at("ok") == false);

  // malformed job is an input error naming the index
  jobs.push_back(Json{{"side", "complex"}});
  std::ofstream(fx().path("batch_bad.json")) << dump_report(jobs);
  RunResult bad = run({"check", "--batch", fx().path("batch_bad.json")});
  CHECK(bad.exit_code == 2);
  CHECK(contains(bad.err, "jobs[4]"));

  // batch and single-input flags do not mix
  RunResult mix = run({"check", "--batch", fx().path("batch.json"), "--S",
                       fx().path("S.json")});
  CHECK(mix.exit_code == 2);
  CHECK(contains(mix.err, "--batch"));
}

TEST_CASE("signature subcommand") {
  RunResult rr = run({"signature", "--side", "symplectic", "--omega",
                      fx().path("omega2.json"), "--S",
                      fx().path("lift2.json")});
  CHECK(rr.exit_code == 0);
  Json out = out_json(rr);
  CHECK(out.at("sig") == 1);
  CHECK(out.at("signature").at("inertia") ==
        Json({{"p", 4}, {"q", 0}, {"z", 0}}));

  // not a member: negative verdict with the reason
  rr = run({"signature", "--side", "complex", "--j", fx().path("j.json"),
            "--S", fx().path("poisson.json")});
  CHECK(rr.exit_code == 1);
  CHECK(out_json(rr).at("signature").at("ok") == false);
}

TEST_CASE("classify subcommand lists every label, first one primary") {
  RunResult rr = run({"classify", "--side", "complex", "--j",
                      fx().path("j.json"), "--S", fx().path("S.json")});
  CHECK(rr.exit_code == 0);
  Json out = out_json(rr);
  CHECK(out.at("primary") == "complex (1,1;2), m=2");
  REQUIRE(out.at("labels").size() == 2);
  CHECK(out.at("labels")[0].at("n") == 2);
  CHECK(out.at("labels")[0].at("group_dimension") == 6);
  CHECK(out.at("labels")[1].at("text") == "complex (1,-1), m=2");

  // rejection carries the clause plus full per-ell reports as witness
  rr = run({"classify", "--side", "complex", "--j", fx().path("j.json"),
            "--S", fx().path("poisson.json")});
  CHECK(rr.exit_code == 1);
  Json neg = out_json(rr);
  CHECK(neg.at("code") == "NotInAnyOrbit");
  CHECK(neg.at("clause") == "anticommutation_with_J_ell");
  CHECK(neg.at("checks").at("ell_plus").at("failed_clause") ==
        "anticommutation_with_J_ell");
  CHECK(neg.at("checks").at("ell_minus").at("overall") == false);
}

TEST_CASE("courant subcommand") {
  RunResult rr = run({"courant", "--side", "complex", "--lambda", "1",
                      "--ell", "1", "--j", fx().path("j.json"), "--S",
                      fx().path("S.json"), "--algebra",
                      fx().path("heis.json")});
  CHECK(rr.exit_code == 0);
  Json out = out_json(rr);
  CHECK(out.at("integrability").at("integrable") == true);
  CHECK(out.at("integrability").at("minus_ok") == true);

  RunResult plus = run({"courant", "--side", "complex", "--lambda", "1",
                        "--ell", "1", "--j", fx().path("j.json"), "--S",
                        fx().path("S.json"), "--algebra",
                        fx().path("heis.json"), "--plus-only"});
  CHECK(plus.exit_code == 0);
  CHECK(out_json(plus).at("integrability").at("plus_only") == true);
}

TEST_CASE("bfield subcommand: transform, preservation, closedness") {
  RunResult rr = run({"bfield", "--omega2", fx().path("w.json"), "--S",
                      fx().path("S.json"), "--j", fx().path("j.json"),
                      "--ell", "1", "--algebra", fx().path("heis.json")});
  CHECK(rr.exit_code == 0);
  Json out = out_json(rr);
  CHECK(out.at("preserves") == true);
  CHECK(out.at("closedness").at("closed") == true);
  BlockEndo transformed =
      json_to_blockendo(out.at("transformed"), "transformed");
  CHECK(transformed == bfield(fx().w_good, fx().demo.S));

  // the conjugated structure still carries the same label
  std::ofstream(fx().path("S_bfield.json"))
      << dump_report(out.at("transformed"));
  RunResult cls = run({"classify", "--side", "complex", "--j",
                       fx().path("j.json"), "--S", fx().path("S_bfield.json")});
  CHECK(cls.exit_code == 0);
  CHECK(out_json(cls).at("primary") == "complex (1,1;2), m=2");

  // wrong symmetry type: preservation verdict flips, exit 1
  REQUIRE(!bfield_preserves(fx().w_bad, fx().demo.j, 1));
  RunResult bad = run({"bfield", "--omega2", fx().path("w_bad.json"), "--S",
                       fx().path("S.json"), "--j", fx().path("j.json"),
                       "--ell", "1"});
  CHECK(bad.exit_code == 1);
  CHECK(out_json(bad).at("preserves") == false);

  // --ell without --j is meaningless
  CHECK(run({"bfield", "--omega2", fx().path("w.json"), "--S",
             fx().path("S.json"), "--ell", "1"})
            .exit_code == 2);
}

TEST_CASE("demo subcommand: full pipeline, honest obstruction report") {
  RunResult rr = run({"demo", "heisenberg", "--c2", "3/5", "--s2", "4/5"});
  CHECK(rr.exit_code == 0);
  Json out = out_json(rr);
  CHECK(out.at("sig") == 2);
  CHECK(out.at("check").at("overall") == true);
  CHECK(out.at("integrability").at("integrable") == true);
  CHECK(out.at("trivial_parameter") == false);
  // the honest anti-diagonal solve finds a valid witness at this point, so
  // the obstruction flag stays down; the constrained solve does not
  CHECK(out.at("obstruction").at("obstructed") == false);
  CHECK(out.at("obstruction").at("antidiagonal_valid") == true);
  CHECK(out.at("obstruction").at("normalized_lift_solvable") == false);

  RunResult base = run({"demo", "heisenberg", "--c2", "1", "--s2", "0"});
  CHECK(base.exit_code == 0);
  Json bout = out_json(base);
  CHECK(bout.at("trivial_parameter") == true);
  CHECK(bout.at("obstruction").at("diagonal_valid") == true);
  CHECK(bout.at("obstruction").at("normalized_lift_solvable") == false);

  CHECK(run({"demo", "heisenberg", "--c2", "1", "--s2", "1"}).exit_code == 2);
  CHECK(run({"demo", "torus"}).exit_code == 2);
}

TEST_CASE("orbit-dim subcommand") {
  RunResult rr = run({"orbit-dim", "--side", "complex", "--lambda", "1",
                      "--ell", "1", "--m", "2", "--n", "2", "--linearized"});
  CHECK(rr.exit_code == 0);
  Json out = out_json(rr);
  CHECK(out.at("label").at("group_dimension") == 6);
  CHECK(out.at("linearized_dimension") == 6);
  CHECK(out.at("agree") == true);

  RunResult sym = run({"orbit-dim", "--side", "symplectic", "--lambda", "1",
                       "--ell", "-1", "--m", "3"});
  CHECK(sym.exit_code == 0);
  CHECK(out_json(sym).at("label").at("group_dimension") == 18);

  CHECK(run({"orbit-dim", "--side", "complex", "--lambda", "-1", "--ell",
             "-1", "--m", "3"})
            .exit_code == 2);
  // n where the label has none
  CHECK(run({"orbit-dim", "--side", "complex", "--lambda", "1", "--ell",
             "-1", "--m", "2", "--n", "1"})
            .exit_code == 2);
}

TEST_CASE("conjugate subcommand: exact, floating, refusals") {
  RunResult rr = run({"conjugate", "--side", "complex", "--lambda", "1",
                      "--ell", "-1", "--m", "2", "--member",
                      fx().path("member_pairing.json")});
  CHECK(rr.exit_code == 0);
  Json out = out_json(rr);
  CHECK(out.at("backend") == "exact");
  CHECK(out.at("residual_conjugation") == 0.0);
  MatG f = json_to_matg(out.at("F"), "F");
  CHECK(f == MatG::identity(4));

  RunResult fl = run({"conjugate", "--side", "complex", "--lambda", "1",
                      "--ell", "1", "--m", "1", "--n", "0", "--member",
                      fx().path("member_float.json")});
  CHECK(fl.exit_code == 0);
  Json fout = out_json(fl);
  CHECK(fout.at("backend") == "floating");
  const double rc = fout.at("residual_conjugation").get<double>();
  const double ri = fout.at("residual_isometry").get<double>();
  CHECK(rc <= 1e-9);
  CHECK(ri <= 1e-9);
  CHECK(fout.at("F").at("algebra") == "complex-double");
  CHECK(fout.at("F").at("entries").size() == 2);

  // an impossible tolerance turns into a negative verdict
  if (rc + ri > 0.0) {
    RunResult tight =
        run({"conjugate", "--side", "complex", "--lambda", "1", "--ell", "1",
             "--m", "1", "--n", "0", "--member", fx().path("member_float.json"),
             "--tolerance", "0"});
    CHECK(tight.exit_code == 1);
    CHECK(out_json(tight).at("code") == "ToleranceExceeded");
  }

  // the constant-2 normalization stays exact on the Darboux backend
  RunResult pn = run({"conjugate", "--side", "complex", "--lambda", "1",
                      "--ell", "-1", "--m", "2", "--member",
                      fx().path("member_pairing.json"),
                      "--constant-two"});
  CHECK(pn.exit_code == 0);
  CHECK(out_json(pn).at("residual_isometry") == 0.0);

  // wrong n: a verdict, not an input error
  RunResult wrong = run({"conjugate", "--side", "complex", "--lambda", "1",
                         "--ell", "1", "--m", "1", "--n", "1", "--member",
                         fx().path("member_float.json")});
  CHECK(wrong.exit_code == 1);
  Json wout = out_json(wrong);
  CHECK(wout.at("code") == "NotInOrbit");
  CHECK(contains(wout.at("clause").get<std::string>(), "complex (1,1;0)"));

  // quaternionic labels are refused as unsupported input
  RunResult uq = run({"conjugate", "--side", "complex", "--lambda", "-1",
                      "--ell", "1", "--m", "1", "--member",
                      fx().path("member_quaternionic.json")});
  CHECK(uq.exit_code == 2);
  CHECK(contains(uq.err, "UnsupportedConjugator"));
}

TEST_CASE("json round-trips for every scalar ring") {
  CHECK(json_to_rational("-7/3", "x") == Rational(-7, 3));
  CHECK(json_to_rational(5, "x") == Rational(5));
  CHECK(json_to_gaussian(Json{{"im", "1/2"}}, "x") ==
        Gaussian(Rational(0), Rational(1, 2)));
  CHECK(json_to_lorentz(Json{{"a", "1"}, {"b", "-3"}}, "x") ==
        Lorentz(Rational(1), Rational(-3)));
  CHECK(json_to_quaternion(Json{{"w", "1"}, {"y", "2/7"}}, "x") ==
        Quaternion(Rational(1), Rational(0), Rational(2, 7), Rational(0)));

  MatQ q(2, 2, {Rational(1, 2), Rational(-3), Rational(0), Rational(7)});
  CHECK(json_to_matq(json_from_matrix(q), "q") == q);
  // bare nested arrays are rational matrices
  CHECK(json_to_matq(Json::parse("[[1, \"1/2\"], [0, -2]]"), "q") ==
        MatQ(2, 2, {Rational(1), Rational(1, 2), Rational(0), Rational(-2)}));

  MatG g(1, 2);
  g(0, 0) = Gaussian(Rational(2), Rational(-1));
  g(0, 1) = Gaussian(Rational(0), Rational(1, 3));
  CHECK(json_to_matg(json_from_matrix(g), "g") == g);
  // rational documents promote into wider rings
  CHECK(json_to_matg(json_from_matrix(q), "g").rows() == 2);

  MatL l(1, 1);
  l(0, 0) = Lorentz(Rational(1), Rational(1));
  CHECK(json_to_matl(json_from_matrix(l), "l") == l);

  MatH h(1, 1);
  h(0, 0) = Quaternion(Rational(0), Rational(-1), Rational(0), Rational(0));
  Json hj = json_from_matrix(h);
  CHECK(hj.at("algebra") == "quaternion");
  CHECK(hj.at("entries")[0][0].at("x") == "-1");

  BlockEndo rt = json_to_blockendo(json_from_blockendo(fx().demo.S), "S");
  CHECK(rt == fx().demo.S);

  LieAlgebra heis =
      json_to_lie_algebra(load_json_file(fx().path("heis.json")), "g");
  CHECK(heis.dim() == 4);
  CHECK(heis.c(0, 1, 2) == Rational(1));
  CHECK(heis.jacobi_ok());

  // structural rejects
  CHECK_THROWS_AS(json_to_matq(json_from_matrix(g), "q"), InputError);
  CHECK_THROWS_AS(json_to_matq(Json::parse("[[1], [2, 3]]"), "q"),
                  InputError);
  Json wrong_n = json_from_blockendo(fx().demo.S);
  wrong_n["n"] = 3;
  CHECK_THROWS_AS(json_to_blockendo(wrong_n, "S"), InputError);
  Json bad_bracket = load_json_file(fx().path("heis.json"));
  bad_bracket["brackets"][0]["j"] = 9;
  CHECK_THROWS_AS(json_to_lie_algebra(bad_bracket, "g"), InputError);
}

TEST_CASE("help exits zero") {
  RunResult rr = run({"--help"});
  CHECK(rr.exit_code == 0);
  CHECK(contains(rr.out, "check"));
  CHECK(contains(rr.out, "conjugate"));
}
