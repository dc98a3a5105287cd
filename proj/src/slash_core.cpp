#include "slash/slash_core.hpp"

namespace slash {

namespace {

struct Mismatch {
  bool found = false;
  std::size_t i = 0, j = 0;
  Rational value;
};

Mismatch first_nonzero(const MatQ& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) return {true, i, j, m(i, j)};
  return {};
}

void record_clause(SlashReport& rep, bool ok, const char* clause,
                   const Mismatch& mm) {
  if (ok || !rep.failed_clause.empty()) return;
  rep.failed_clause = clause;
  if (mm.found) {
    rep.witness_i = static_cast<long>(mm.i);
    rep.witness_j = static_cast<long>(mm.j);
    rep.witness_value = rational_str(mm.value);
  }
}

// b_k criterion, shared shape: F^t G F == sign * G for both rational
// components of the sesquilinear Gram.
bool criterion_holds(const MatQ& F, const MatQ& re, const MatQ& im,
                     const Rational& sign_re, const Rational& sign_im) {
  MatQ ft = F.transpose();
  return ft * re * F == sign_re * re && ft * im * F == sign_im * im;
}

}  // namespace

SlashReport check_generalized(const BlockEndo& S, int lambda) {
  if (lambda != 1 && lambda != -1) throw shape_error("lambda must be +1 or -1");
  SlashReport rep;
  rep.lambda = lambda;
  MatQ F = S.full();
  std::size_t N = F.rows();

  MatQ sq = F * F - rat(lambda) * MatQ::identity(N);
  rep.square_ok = sq.is_zero();
  record_clause(rep, rep.square_ok, "square", first_nonzero(sq));

  MatQ skew = (b_adjoint(S) + S).full();
  rep.skew_ok = skew.is_zero();
  record_clause(rep, rep.skew_ok, "b_skew", first_nonzero(skew));

  if (lambda == 1) {
    rep.split_ok = rep.square_ok &&
                   kernel_basis(F - MatQ::identity(N)).cols() == N / 2;
    record_clause(rep, rep.split_ok, "split", {});
  } else {
    rep.split_ok = true;  // no real eigenvalues when S^2 = -id
  }

  rep.compat_ok = rep.criterion_ok = true;
  rep.overall = rep.square_ok && rep.skew_ok && rep.split_ok;
  return rep;
}

SlashReport check_slash_complex(const BlockEndo& S, const MatQ& j, int lambda,
                                int ell) {
  SlashReport rep = check_generalized(S, lambda);
  rep.side = Side::Complex;
  rep.ell = ell;
  MatQ F = S.full();
  MatQ J = make_J(j, ell).full();
  MatQ P = pairing_gram(S.n);

  MatQ anti = F * J + J * F;
  rep.compat_ok = anti.is_zero();
  record_clause(rep, rep.compat_ok, "anticommutation_with_J_ell",
                first_nonzero(anti));

  // b_ell(Sx, Sy) = -lambda conj(b_ell(x, y)) on the juxtaposed basis,
  // componentwise: Re-part sign -lambda, Im-part of -i b(x, J y) flips under
  // conj, so its sign is +lambda.
  rep.criterion_ok =
      criterion_holds(F, P, P * J, rat(-lambda), rat(lambda));
  record_clause(rep, rep.criterion_ok, "form_criterion", {});

  rep.overall = rep.square_ok && rep.skew_ok && rep.split_ok &&
                rep.compat_ok && rep.criterion_ok;
  return rep;
}

SlashReport check_slash_symplectic(const BlockEndo& S, const MatQ& omega_gram,
                                   int lambda, int ell) {
  SlashReport rep = check_generalized(S, lambda);
  rep.side = Side::Symplectic;
  rep.ell = ell;
  int k = lambda * ell;
  MatQ F = S.full();
  BlockEndo I = make_I(omega_gram, k);
  MatQ If = I.full();
  MatQ P = pairing_gram(S.n);

  MatQ comm = F * If - If * F;
  rep.compat_ok = comm.is_zero();
  record_clause(rep, rep.compat_ok, "commutation_with_I_k", first_nonzero(comm));

  if (ell == 1) {
    // (I_k S)^2 = id needs square + commutation first; splitness is the rider.
    MatQ IS = If * F;
    rep.extra_split_ok = rep.square_ok && rep.compat_ok &&
                         is_split_involution(IS);
    record_clause(rep, rep.extra_split_ok, "I_k_S_split", {});
  }

  // b_k(Sx, Sy) = -lambda b_k(x, y), both components with the same sign.
  rep.criterion_ok =
      criterion_holds(F, P, P * If, rat(-lambda), rat(-lambda));
  record_clause(rep, rep.criterion_ok, "form_criterion", {});

  rep.overall = rep.square_ok && rep.skew_ok && rep.split_ok &&
                rep.compat_ok && rep.extra_split_ok && rep.criterion_ok;
  return rep;
}

MatQ beta_gram_complex(const BlockEndo& S, const MatQ& j) {
  MatQ F = S.full();
  MatQ J = make_J(j, 1).full();
  return (F * J).transpose() * pairing_gram(S.n);
}

MatQ beta_gram_symplectic(const BlockEndo& S, const MatQ& omega_gram) {
  MatQ F = S.full();
  MatQ I = make_I(omega_gram, -1).full();
  return (I * F).transpose() * pairing_gram(S.n);
}

namespace {

SignatureResult signature_from_gram(const MatQ& gram, std::int64_t divisor) {
  SignatureResult out;
  if (!is_symmetric(gram)) {
    out.message = "beta is not symmetric";
    return out;
  }
  out.inertia = congruence_signature(gram);
  if (out.inertia.z != 0) {
    out.message = "beta is degenerate";
    return out;
  }
  if (out.inertia.p % divisor != 0) {
    out.message = "positive index is not a multiple of " +
                  std::to_string(divisor);
    return out;
  }
  out.n = out.inertia.p / divisor;
  out.ok = true;
  return out;
}

}  // namespace

SignatureResult sig_complex_11(const BlockEndo& S, const MatQ& j) {
  return signature_from_gram(beta_gram_complex(S, j), 2);
}

SignatureResult sig_symplectic_m11(const BlockEndo& S, const MatQ& omega_gram) {
  return signature_from_gram(beta_gram_symplectic(S, omega_gram), 4);
}

BlockEndo lift_tensor(const MatQ& r) {
  if (r.rows() != r.cols()) throw shape_error("tensor must be square");
  std::size_t n = r.rows();
  return {r, MatQ::zero(n, n), MatQ::zero(n, n), -r.transpose()};
}

BlockEndo lift_two_form(const MatQ& omega_gram, int lambda) {
  return make_I(omega_gram, lambda);
}

InterpolantReport extract_interpolants(const BlockEndo& S, Side side,
                                       const MatQ& j_or_omega, int lambda,
                                       int ell) {
  InterpolantReport rep;
  auto conclude = [&](const std::string& name, bool v) {
    rep.conclusions.emplace_back(name, v);
  };
  const std::size_t n = S.n;
  if (S.B.is_zero() && S.C.is_zero()) {
    rep.diagonal = true;
    rep.r = S.A;
    conclude("lower_block_is_minus_transpose", S.D == -S.A.transpose());
    conclude("r_square_lambda", S.A * S.A == rat(lambda) * MatQ::identity(n));
    if (lambda == 1) conclude("r_split", is_split_involution(S.A));
    if (side == Side::Complex) {
      conclude("r_anticommutes_j",
               (S.A * j_or_omega + j_or_omega * S.A).is_zero());
    } else {
      MatQ f = flat(j_or_omega);
      conclude("r_skew_symmetric_for_omega", f * S.A == -(S.A.transpose() * f));
    }
  } else if (S.A.is_zero() && S.D.is_zero()) {
    rep.antidiagonal = true;
    MatQ q = S.C;  // flat matrix of the interpolating two-form
    rep.theta_gram = q.transpose();
    auto qinv = inverse(q);
    conclude("theta_flat_invertible", qinv.has_value());
    conclude("theta_skew", q.transpose() == -q);
    if (qinv)
      conclude("upper_block_inverse", S.B == rat(lambda) * *qinv);
    else
      conclude("upper_block_inverse", false);
    if (side == Side::Complex) {
      const MatQ& j = j_or_omega;
      MatQ jt = j.transpose();
      if (ell == 1)
        conclude("j_skew_symmetric_for_theta", q * j == -(jt * q));
      else
        conclude("j_symmetric_for_theta", q * j == jt * q);
    } else {
      MatQ f = flat(j_or_omega);
      auto finv = inverse(f);
      if (!finv) throw degenerate_form("omega is degenerate");
      MatQ A = *finv * q;
      conclude("interpolant_square_ell",
               A * A == rat(ell) * MatQ::identity(n));
      conclude("interpolant_omega_symmetric", f * A == A.transpose() * f);
      if (ell == 1) conclude("interpolant_split", is_split_involution(A));
    }
  } else {
    conclude("block_shape_diagonal_or_antidiagonal", false);
  }
  rep.ok = true;
  for (auto& [name, v] : rep.conclusions) rep.ok = rep.ok && v;
  return rep;
}

CrainicBlocks crainic_blocks(const BlockEndo& S, int lambda) {
  CrainicBlocks cb;
  cb.A = S.A;
  cb.pi_sharp = S.B;
  cb.theta_flat = S.C;
  const std::size_t n = S.n;
  auto id = [&](const std::string& name, bool v) {
    cb.identities.emplace_back(name, v);
  };
  id("lower_right_is_minus_A_transpose", S.D == -S.A.transpose());
  id("pi_sharp_skew", S.B.transpose() == -S.B);
  id("theta_flat_skew", S.C.transpose() == -S.C);
  id("square_identity",
     S.A * S.A + S.B * S.C == rat(lambda) * MatQ::identity(n));
  id("theta_A_symmetry", S.C * S.A == S.A.transpose() * S.C);
  id("pi_A_symmetry", S.B * S.A.transpose() == S.A * S.B);
  cb.ok = true;
  for (auto& [name, v] : cb.identities) cb.ok = cb.ok && v;
  return cb;
}

SymplecticSlashBlocks symplectic_slash_blocks(const BlockEndo& S,
                                              const MatQ& omega_gram,
                                              int lambda, int ell) {
  SymplecticSlashBlocks sb;
  MatQ f = flat(omega_gram);
  auto finv = inverse(f);
  if (!finv) throw degenerate_form("omega is degenerate");
  const std::size_t n = S.n;
  sb.A = S.A;
  sb.B = *finv * S.C;
  auto id = [&](const std::string& name, bool v) {
    sb.identities.emplace_back(name, v);
  };
  id("upper_right_matches", S.B == rat(lambda * ell) * (sb.B * *finv));
  id("lower_right_is_minus_A_transpose", S.D == -S.A.transpose());
  id("square_identity", rat(lambda) * (sb.A * sb.A) + rat(ell) * (sb.B * sb.B) ==
                            MatQ::identity(n));
  id("anticommutation", (sb.A * sb.B + sb.B * sb.A).is_zero());
  id("A_skew_symmetric_for_omega", f * sb.A == -(sb.A.transpose() * f));
  if (ell == 1) {
    MatQ m(2 * n, 2 * n);
    m.set_block(0, 0, sb.B);
    m.set_block(0, n, sb.A);
    m.set_block(n, 0, rat(lambda) * sb.A);
    m.set_block(n, n, sb.B);
    sb.split_presentation = m;
    id("split_presentation_split", is_split_involution(m));
    MatQ phi(2 * n, 2 * n);
    phi.set_block(0, 0, MatQ::identity(n));
    phi.set_block(n, n, f);
    MatQ I = make_I(omega_gram, lambda).full();
    auto phinv = inverse(phi);
    id("split_presentation_matches_conjugation",
       m == rat(lambda) * (*phinv * (S.full() * I) * phi));
  }
  sb.ok = true;
  for (auto& [name, v] : sb.identities) sb.ok = sb.ok && v;
  return sb;
}

BlockEndo bfield_endo(const MatQ& omega2_gram) {
  if (!is_skew(omega2_gram)) throw shape_error("B-field form must be skew");
  std::size_t n = omega2_gram.rows();
  return {MatQ::identity(n), MatQ::zero(n, n), flat(omega2_gram),
          MatQ::identity(n)};
}

BlockEndo bfield(const MatQ& omega2_gram, const BlockEndo& S) {
  BlockEndo B = bfield_endo(omega2_gram);
  BlockEndo Binv = bfield_endo(-omega2_gram);
  return B * S * Binv;
}

bool bfield_preserves(const MatQ& omega2_gram, const MatQ& j, int ell) {
  if (!is_skew(omega2_gram)) throw shape_error("B-field form must be skew");
  MatQ f = flat(omega2_gram);
  return f * j == rat(ell) * (j.transpose() * f);
}

BlockEndo poisson_lift(const MatQ& pi_gram) {
  if (!is_skew(pi_gram)) throw shape_error("bivector Gram must be skew");
  std::size_t n = pi_gram.rows();
  return {MatQ::identity(n), sharp(pi_gram), MatQ::zero(n, n),
          -MatQ::identity(n)};
}

}  // namespace slash
