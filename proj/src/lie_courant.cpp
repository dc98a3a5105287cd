#include "slash/lie_courant.hpp"

namespace slash {

LieAlgebra::LieAlgebra(std::size_t dim)
    : n_(dim), c_(dim * dim * dim, Rational(0)) {
  if (dim == 0) throw shape_error("Lie algebra dimension must be positive");
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, std::size_t k,
                             const Rational& coeff) {
  if (i >= n_ || j >= n_ || k >= n_) throw shape_error("bracket index out of range");
  if (i == j && coeff != 0) throw shape_error("[e_i, e_i] must vanish");
  c_[(i * n_ + j) * n_ + k] = coeff;
  c_[(j * n_ + i) * n_ + k] = -coeff;
}

const Rational& LieAlgebra::c(std::size_t i, std::size_t j,
                              std::size_t k) const {
  return c_[(i * n_ + j) * n_ + k];
}

namespace {

template <class T>
Mat<T> bracket_impl(const LieAlgebra& g, const Mat<T>& u, const Mat<T>& v) {
  std::size_t n = g.dim();
  if (u.rows() != n || v.rows() != n || u.cols() != 1 || v.cols() != 1)
    throw shape_error("bracket arguments must be n x 1");
  Mat<T> out = Mat<T>::zero(n, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (scalar_is_zero(u(i, 0)) || scalar_is_zero(v(j, 0))) continue;
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& cijk = g.c(i, j, k);
        if (cijk == 0) continue;
        out(k, 0) = out(k, 0) + u(i, 0) * v(j, 0) * T(cijk);
      }
    }
  return out;
}

}  // namespace

MatQ LieAlgebra::bracket(const MatQ& u, const MatQ& v) const {
  return bracket_impl(*this, u, v);
}

MatG LieAlgebra::bracket(const MatG& u, const MatG& v) const {
  return bracket_impl(*this, u, v);
}

bool LieAlgebra::jacobi_ok() const {
  for (std::size_t i = 0; i < n_; ++i) {
    MatQ ei = MatQ::zero(n_, 1);
    ei(i, 0) = 1;
    for (std::size_t j = i + 1; j < n_; ++j) {
      MatQ ej = MatQ::zero(n_, 1);
      ej(j, 0) = 1;
      for (std::size_t k = j + 1; k < n_; ++k) {
        MatQ ek = MatQ::zero(n_, 1);
        ek(k, 0) = 1;
        MatQ jac = bracket(bracket(ei, ej), ek) + bracket(bracket(ej, ek), ei) +
                   bracket(bracket(ek, ei), ej);
        if (!jac.is_zero()) return false;
      }
    }
  }
  return true;
}

LieAlgebra abelian_algebra(std::size_t dim) { return LieAlgebra(dim); }

LieAlgebra heisenberg_r4() {
  LieAlgebra g(4);
  g.set_bracket(0, 1, 2, rat(1));
  return g;
}

namespace {

template <class T, class Section>
Section courant_impl(const LieAlgebra& g, const Section& x, const Section& y) {
  std::size_t n = g.dim();
  if (x.v.rows() != n || y.v.rows() != n)
    throw shape_error("section dimension mismatch");
  Section out;
  out.v = g.bracket(x.v, y.v);
  out.c = Mat<T>::zero(n, 1);
  for (std::size_t k = 0; k < n; ++k) {
    T acc{};
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) {
        const Rational& cikl = g.c(i, k, l);
        if (cikl == 0) continue;
        acc = acc + (y.v(i, 0) * x.c(l, 0) - x.v(i, 0) * y.c(l, 0)) * T(cikl);
      }
    out.c(k, 0) = acc;
  }
  return out;
}

}  // namespace

ExtendedVec courant_bracket_li(const LieAlgebra& g, const ExtendedVec& x,
                               const ExtendedVec& y) {
  return courant_impl<Rational, ExtendedVec>(g, x, y);
}

SectionG courant_bracket_li(const LieAlgebra& g, const SectionG& x,
                            const SectionG& y) {
  return courant_impl<Gaussian, SectionG>(g, x, y);
}

ClosednessReport d_closed_2form(const LieAlgebra& g, const MatQ& theta_gram) {
  std::size_t n = g.dim();
  if (theta_gram.rows() != n || theta_gram.cols() != n)
    throw shape_error("form dimension mismatch");
  if (!is_skew(theta_gram)) throw shape_error("two-form Gram must be skew");
  auto theta = [&](const MatQ& u, const MatQ& v) {
    return (u.transpose() * theta_gram * v)(0, 0);
  };
  ClosednessReport rep;
  for (std::size_t i = 0; i < n; ++i) {
    MatQ ei = MatQ::zero(n, 1);
    ei(i, 0) = 1;
    for (std::size_t j = i + 1; j < n; ++j) {
      MatQ ej = MatQ::zero(n, 1);
      ej(j, 0) = 1;
      for (std::size_t k = j + 1; k < n; ++k) {
        MatQ ek = MatQ::zero(n, 1);
        ek(k, 0) = 1;
        Rational val = -theta(g.bracket(ei, ej), ek) +
                       theta(g.bracket(ei, ek), ej) -
                       theta(g.bracket(ej, ek), ei);
        if (val != 0) {
          rep.closed = false;
          rep.i = static_cast<long>(i);
          rep.j = static_cast<long>(j);
          rep.k = static_cast<long>(k);
          rep.value = val;
          return rep;
        }
      }
    }
  }
  rep.closed = true;
  return rep;
}

bool is_symplectic_li(const LieAlgebra& g, const MatQ& theta_gram) {
  if (!is_skew(theta_gram)) return false;
  if (!inverse(theta_gram)) return false;
  return d_closed_2form(g, theta_gram).closed;
}

bool eigensection_involutive(const LieAlgebra& g, const BlockEndo& S,
                             const Gaussian& mu) {
  std::size_t n = g.dim();
  if (S.n != n) throw shape_error("structure dimension mismatch");
  MatG basis = eigenspace(S.full(), mu).basis;
  auto section = [&](std::size_t col) {
    SectionG s;
    s.v = MatG::zero(n, 1);
    s.c = MatG::zero(n, 1);
    for (std::size_t r = 0; r < n; ++r) {
      s.v(r, 0) = basis(r, col);
      s.c(r, 0) = basis(n + r, col);
    }
    return s;
  };
  for (std::size_t a = 0; a < basis.cols(); ++a)
    for (std::size_t b = a + 1; b < basis.cols(); ++b) {
      SectionG z = courant_bracket_li(g, section(a), section(b));
      MatG zfull(2 * n, 1);
      for (std::size_t r = 0; r < n; ++r) {
        zfull(r, 0) = z.v(r, 0);
        zfull(n + r, 0) = z.c(r, 0);
      }
      if (!in_span(basis, zfull)) return false;
    }
  return true;
}

IntegrabilityReport is_integrable_slash(const LieAlgebra& g,
                                        const BlockEndo& S, Side side,
                                        const MatQ& j_or_omega, int lambda,
                                        int ell, bool plus_only) {
  IntegrabilityReport rep;
  rep.plus_only = plus_only;
  rep.algebraic = side == Side::Complex
                      ? check_slash_complex(S, j_or_omega, lambda, ell)
                      : check_slash_symplectic(S, j_or_omega, lambda, ell);
  if (!rep.algebraic.overall)
    throw InputError("NotASlashStructure",
                     "algebraic membership failed at clause " +
                         rep.algebraic.failed_clause);
  Gaussian plus = lambda == 1 ? Gaussian{rat(1), rat(0)} : Gaussian::i();
  Gaussian minus = Gaussian{rat(0), rat(0)} - plus;
  rep.plus_ok = eigensection_involutive(g, S, plus);
  bool skip_minus = plus_only && lambda == 1;
  rep.minus_ok = skip_minus ? true : eigensection_involutive(g, S, minus);
  rep.integrable = rep.plus_ok && rep.minus_ok;
  return rep;
}

HeisenbergDemo heisenberg_demo() {
  MatQ r2(2, 2, {rat(1), rat(0), rat(0), rat(-1)});
  MatQ j2(2, 2, {rat(0), rat(-1), rat(1), rat(0)});
  HeisenbergDemo d{heisenberg_r4(), MatQ::zero(4, 4), MatQ::zero(4, 4),
                   MatQ::zero(4, 4), MatQ::zero(4, 4), BlockEndo::identity(4)};
  d.j.set_block(0, 0, j2);
  d.j.set_block(2, 2, j2);
  d.R.set_block(0, 0, r2);
  d.R.set_block(2, 2, r2);
  d.T.set_block(0, 2, -MatQ::identity(2));
  d.T.set_block(2, 0, MatQ::identity(2));
  d.D.set_block(0, 2, -r2);
  d.D.set_block(2, 0, r2);
  d.S = d.s_of(rat(1), rat(0));
  return d;
}

BlockEndo HeisenbergDemo::s_of(const Rational& c2, const Rational& s2) const {
  if (c2 * c2 + s2 * s2 != 1)
    throw not_a_circle_point(rational_str(c2) + ", " + rational_str(s2));
  return {c2 * R, (-s2) * T, s2 * T, (-c2) * R};
}

bool HeisenbergDemo::trivial_parameter(const Rational& c2,
                                       const Rational& s2) const {
  if (c2 * c2 + s2 * s2 != 1)
    throw not_a_circle_point(rational_str(c2) + ", " + rational_str(s2));
  return c2 * s2 == 0;
}

namespace {

// b skew, unknowns indexed by pairs p < q; solves b rho + rho^t b = rhs
std::optional<MatQ> solve_skew_sandwich(const MatQ& rho, const MatQ& rhs) {
  std::size_t n = rho.rows();
  std::vector<std::pair<std::size_t, std::size_t>> unknowns;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) unknowns.emplace_back(p, q);
  auto coeff_b = [&](std::size_t r, std::size_t c, std::size_t u) {
    auto [p, q] = unknowns[u];
    if (r == p && c == q) return rat(1);
    if (r == q && c == p) return rat(-1);
    return rat(0);
  };
  MatQ E(n * n, unknowns.size());
  MatQ target(n * n, 1);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) {
      std::size_t row = k * n + l;
      target(row, 0) = rhs(k, l);
      for (std::size_t u = 0; u < unknowns.size(); ++u) {
        Rational acc = 0;
        for (std::size_t m = 0; m < n; ++m)
          acc += coeff_b(k, m, u) * rho(m, l) + rho(m, k) * coeff_b(m, l, u);
        E(row, u) = acc;
      }
    }
  auto sol = solve(E, target);
  if (!sol) return std::nullopt;
  MatQ b = MatQ::zero(n, n);
  for (std::size_t u = 0; u < unknowns.size(); ++u) {
    auto [p, q] = unknowns[u];
    b(p, q) = (*sol)(u, 0);
    b(q, p) = -(*sol)(u, 0);
  }
  return b;
}

bool form_valid(const LieAlgebra& g, const MatQ& flat_mat) {
  if (flat_mat.transpose() != -flat_mat) return false;
  return d_closed_2form(g, flat_mat.transpose()).closed;
}

}  // namespace

ObstructionReport nontrivial_obstruction(const LieAlgebra& g, const MatQ& j,
                                         const BlockEndo& S) {
  ObstructionReport rep;
  std::size_t n = S.n;

  // anti-diagonal target: B Q B^{-1} = [[-a^{-1}b, a^{-1}],
  //                                     [a - b a^{-1} b, b a^{-1}]]
  if (auto a = inverse(S.B)) {
    MatQ b = -(*a * S.A);
    if (S.D == b * S.B && S.C == *a - b * S.B * b) {
      rep.antidiagonal_solvable = true;
      rep.a = *a;
      rep.b = b;
      bool theta_ok = form_valid(g, *a) && *a * j == -(j.transpose() * *a);
      bool bfield_ok = form_valid(g, b) && b * j == j.transpose() * b;
      rep.antidiagonal_valid = theta_ok && bfield_ok;
      rep.normalized_lift_solvable =
          rep.antidiagonal_valid && *a * *a == -MatQ::identity(n);
      if (!rep.normalized_lift_solvable)
        rep.notes.push_back("anti-diagonal witness exists but a^2 != -id");
    } else {
      rep.notes.push_back("anti-diagonal block equations inconsistent");
    }
  } else {
    rep.notes.push_back("anti-diagonal: upper-right block not invertible");
  }

  // diagonal target: B (diag lift of rho) B^{-1} = [[rho, 0],
  //                                                 [b rho + rho^t b, -rho^t]]
  if (S.B.is_zero() && S.D == -S.A.transpose()) {
    if (auto b = solve_skew_sandwich(S.A, S.C)) {
      rep.diagonal_solvable = true;
      rep.rho = S.A;
      rep.b_diag = *b;
      bool rho_ok = S.A * S.A == MatQ::identity(n) &&
                    is_split_involution(S.A) &&
                    S.A * j == -(j * S.A) &&
                    eigensection_involutive(g, lift_tensor(S.A),
                                            Gaussian{rat(1), rat(0)}) &&
                    eigensection_involutive(g, lift_tensor(S.A),
                                            Gaussian{rat(-1), rat(0)});
      bool bfield_ok = form_valid(g, *b) && *b * j == j.transpose() * *b;
      rep.diagonal_valid = rho_ok && bfield_ok;
    } else {
      rep.notes.push_back("diagonal: no skew solution for the B-field block");
    }
  } else {
    rep.notes.push_back("diagonal: upper-right block nonzero");
  }

  rep.obstructed = !(rep.antidiagonal_solvable && rep.antidiagonal_valid) &&
                   !(rep.diagonal_solvable && rep.diagonal_valid);
  return rep;
}

namespace {

bool subalgebra_span(const LieAlgebra& g, const MatQ& basis) {
  for (std::size_t a = 0; a < basis.cols(); ++a)
    for (std::size_t b = a + 1; b < basis.cols(); ++b) {
      MatQ z = g.bracket(basis.col(a), basis.col(b));
      if (!in_span(basis, z)) return false;
    }
  return true;
}

bool nondegenerate_on(const MatQ& gram, const MatQ& basis) {
  MatQ sub = basis.transpose() * gram * basis;
  return inverse(sub).has_value();
}

template <class Report>
void finalize(Report& rep) {
  rep.ok = true;
  for (auto& [name, v] : rep.clauses)
    if (!v) {
      rep.ok = false;
      if (rep.first_failed.empty()) rep.first_failed = name;
    }
}

}  // namespace

EllSymplecticReport ell_symplectic_check(const LieAlgebra& g,
                                         const MatQ& theta_gram,
                                         const MatQ& omega_gram) {
  EllSymplecticReport rep;
  auto clause = [&](const std::string& name, bool v) {
    rep.clauses.emplace_back(name, v);
    return v;
  };
  std::size_t n = g.dim();
  bool omega_ok = clause("omega_symplectic", is_symplectic_li(g, omega_gram));
  clause("theta_skew", is_skew(theta_gram));
  clause("theta_closed",
         is_skew(theta_gram) && d_closed_2form(g, theta_gram).closed);
  if (!omega_ok || !is_skew(theta_gram)) {
    finalize(rep);
    return rep;
  }
  MatQ f = flat(omega_gram);
  rep.A = *inverse(f) * flat(theta_gram);
  const MatQ& A = rep.A;
  clause("A_square_id", A * A == MatQ::identity(n));
  clause("A_split", is_split_involution(A));
  clause("A_omega_symmetric", f * A == A.transpose() * f);
  MatQ plus = kernel_basis(A - MatQ::identity(n));
  MatQ minus = kernel_basis(A + MatQ::identity(n));
  clause("plus_eigendistribution_subalgebra", subalgebra_span(g, plus));
  clause("minus_eigendistribution_subalgebra", subalgebra_span(g, minus));
  clause("omega_nondegenerate_on_plus",
         plus.cols() > 0 && nondegenerate_on(omega_gram, plus));
  clause("omega_nondegenerate_on_minus",
         minus.cols() > 0 && nondegenerate_on(omega_gram, minus));
  finalize(rep);
  return rep;
}

EllSymplecticConverse ell_symplectic_converse(const LieAlgebra& g,
                                              const MatQ& omega_gram,
                                              const MatQ& basis_plus,
                                              const MatQ& basis_minus) {
  EllSymplecticConverse rep;
  auto clause = [&](const std::string& name, bool v) {
    rep.clauses.emplace_back(name, v);
    return v;
  };
  std::size_t n = g.dim();
  clause("omega_symplectic", is_symplectic_li(g, omega_gram));
  MatQ joint = MatQ::hstack(basis_plus, basis_minus);
  bool complementary = joint.rows() == n && joint.cols() == n &&
                       inverse(joint).has_value();
  clause("complementary", complementary);
  if (!complementary) {
    finalize(rep);
    return rep;
  }
  clause("plus_subalgebra", subalgebra_span(g, basis_plus));
  clause("minus_subalgebra", subalgebra_span(g, basis_minus));
  clause("omega_nondegenerate_on_plus",
         nondegenerate_on(omega_gram, basis_plus));
  clause("omega_nondegenerate_on_minus",
         nondegenerate_on(omega_gram, basis_minus));
  MatQ signs = MatQ::identity(n);
  for (std::size_t i = basis_plus.cols(); i < n; ++i) signs(i, i) = -1;
  rep.A = joint * signs * *inverse(joint);
  MatQ theta_flat = flat(omega_gram) * rep.A;
  rep.theta_gram = theta_flat.transpose();
  clause("theta_skew", is_skew(rep.theta_gram));
  clause("theta_closed", is_skew(rep.theta_gram) &&
                             d_closed_2form(g, rep.theta_gram).closed);
  finalize(rep);
  return rep;
}

}  // namespace slash
