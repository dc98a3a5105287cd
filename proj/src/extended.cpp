#include "slash/extended.hpp"

namespace slash {

BlockEndo BlockEndo::from_full(const MatQ& full) {
  if (full.rows() != full.cols() || full.rows() % 2)
    throw shape_error("full matrix must be 2n x 2n");
  std::size_t n = full.rows() / 2;
  return {full.block(0, 0, n, n), full.block(0, n, n, n),
          full.block(n, 0, n, n), full.block(n, n, n, n)};
}

Rational pairing_b(const ExtendedVec& x, const ExtendedVec& y) {
  if (x.v.rows() != y.v.rows()) throw shape_error("pairing dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < x.v.rows(); ++i)
    s += y.c(i, 0) * x.v(i, 0) + x.c(i, 0) * y.v(i, 0);
  return s;
}

MatQ pairing_gram(std::size_t n) {
  MatQ p(2 * n, 2 * n);
  p.set_block(0, n, MatQ::identity(n));
  p.set_block(n, 0, MatQ::identity(n));
  return p;
}

BlockEndo b_adjoint(const BlockEndo& e) {
  return {e.D.transpose(), e.B.transpose(), e.C.transpose(), e.A.transpose()};
}

BlockEndo make_J(const MatQ& j, int ell) {
  if (ell != 1 && ell != -1) throw shape_error("ell must be +1 or -1");
  if (j.rows() != j.cols()) throw not_a_complex_structure("j must be square");
  std::size_t n = j.rows();
  if (!((j * j) == -MatQ::identity(n)))
    throw not_a_complex_structure("j^2 != -id");
  MatQ jt = j.transpose();
  return {j, MatQ::zero(n, n), MatQ::zero(n, n),
          ell == 1 ? jt : MatQ(-jt)};
}

BlockEndo make_I(const MatQ& omega_gram, int k) {
  if (k != 1 && k != -1) throw shape_error("k must be +1 or -1");
  if (!is_skew(omega_gram)) throw degenerate_form("omega must be skew");
  MatQ f = flat(omega_gram);
  auto finv = inverse(f);
  if (!finv) throw degenerate_form("omega is degenerate");
  std::size_t n = f.rows();
  MatQ up = *finv;
  if (k == -1) up = -up;
  return {MatQ::zero(n, n), up, f, MatQ::zero(n, n)};
}

Gaussian sesqui_b_ell(const ExtendedVec& x, const ExtendedVec& y, const MatQ& j,
                      int ell) {
  BlockEndo J = make_J(j, ell);
  return {pairing_b(x, y), -pairing_b(x, J.apply(y))};
}

SesquiValue sesqui_b_pm(const ExtendedVec& x, const ExtendedVec& y,
                        const MatQ& omega_gram, int k) {
  BlockEndo I = make_I(omega_gram, k);
  SesquiValue out;
  out.k = k;
  if (k == -1)
    out.g = Gaussian(pairing_b(x, y), -pairing_b(x, I.apply(y)));
  else
    out.l = Lorentz(pairing_b(x, y), pairing_b(x, I.apply(y)));
  return out;
}

bool is_split_involution(const MatQ& m) {
  if (m.rows() != m.cols()) return false;
  std::size_t n = m.rows();
  if (n % 2) return false;
  if (!(m * m == MatQ::identity(n))) return false;
  MatQ plus = m - MatQ::identity(n);
  return kernel_basis(plus).cols() == n / 2;
}

}  // namespace slash
