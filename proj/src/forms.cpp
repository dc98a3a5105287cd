#include "slash/forms.hpp"

namespace slash {

namespace {

Rational imaginary_unit(const Rational&) {
  throw InputError("InternalError",
                   "symmetric pivot cannot vanish in characteristic zero");
}
Gaussian imaginary_unit(const Gaussian&) { return Gaussian::i(); }

// Shared symmetric/Hermitian congruence elimination; conjugation is the
// identity in the symmetric case.  Maintains g = p^* gram p while clearing.
template <class T>
std::pair<Mat<T>, std::vector<T>> diagonalize_sesquilinear(Mat<T> g) {
  if (g.rows() != g.cols()) throw shape_error("form Gram must be square");
  const std::size_t n = g.rows();
  Mat<T> p = Mat<T>::identity(n);

  auto add_col = [&](std::size_t dst, std::size_t src, const T& f) {
    // basis_dst += basis_src * f, i.e. column then conjugate row update.
    for (std::size_t i = 0; i < n; ++i) g(i, dst) += g(i, src) * f;
    T fc = scalar_conj(f);
    for (std::size_t j = 0; j < n; ++j) g(dst, j) += fc * g(src, j);
    for (std::size_t i = 0; i < n; ++i) p(i, dst) += p(i, src) * f;
  };
  auto swap_basis = [&](std::size_t a, std::size_t b) {
    g.swap_cols(a, b);
    g.swap_rows(a, b);
    p.swap_cols(a, b);
  };

  for (std::size_t k = 0; k < n; ++k) {
    if (scalar_is_zero(g(k, k))) {
      std::size_t d = k;
      for (std::size_t i = k + 1; i < n; ++i)
        if (!scalar_is_zero(g(i, i))) {
          d = i;
          break;
        }
      if (d != k) {
        swap_basis(k, d);
      } else {
        std::size_t bi = n, bj = n;
        for (std::size_t i = k; i < n && bi == n; ++i)
          for (std::size_t j = i + 1; j < n; ++j)
            if (!scalar_is_zero(g(i, j))) {
              bi = i;
              bj = j;
              break;
            }
        if (bi == n) break;  // remaining block vanishes entirely
        if (bi != k) swap_basis(k, bi);
        add_col(k, bj, T(1));
        if (scalar_is_zero(g(k, k))) {
          // 2 Re g(k,bj) = 0: the entry is purely imaginary, use factor i.
          add_col(k, bj, -T(1));
          add_col(k, bj, imaginary_unit(T{}));
        }
      }
    }
    if (scalar_is_zero(g(k, k))) continue;
    for (std::size_t j = k + 1; j < n; ++j) {
      if (scalar_is_zero(g(k, j))) continue;
      add_col(j, k, -(g(k, j) / g(k, k)));
    }
  }

  std::vector<T> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = g(i, i);
  return {p, diag};
}

Signature signature_of_diag(const std::vector<Rational>& diag) {
  Signature s;
  for (const Rational& d : diag) {
    if (d > 0)
      ++s.p;
    else if (d < 0)
      ++s.q;
    else
      ++s.z;
  }
  return s;
}

}  // namespace

Diagonalization congruence_diagonalize(const MatQ& gram) {
  if (!is_symmetric(gram)) throw shape_error("Gram must be symmetric");
  auto [p, d] = diagonalize_sesquilinear<Rational>(gram);
  return {p, d};
}

Signature congruence_signature(const MatQ& gram) {
  return signature_of_diag(congruence_diagonalize(gram).diag);
}

HermitianDiagonalization hermitian_diagonalize(const MatG& gram) {
  if (!is_hermitian(gram)) throw shape_error("Gram must be Hermitian");
  auto [p, d] = diagonalize_sesquilinear<Gaussian>(gram);
  std::vector<Rational> rd(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i].im != 0)
      throw InputError("InternalError", "Hermitian diagonal must be real");
    rd[i] = d[i].re;
  }
  return {p, rd};
}

Signature hermitian_signature(const MatG& gram) {
  return signature_of_diag(hermitian_diagonalize(gram).diag);
}

DarbouxBasis darboux_basis(const MatQ& gram, const Rational& constant,
                           bool require_nondegenerate) {
  if (!is_skew(gram)) throw shape_error("Gram must be skew-symmetric");
  if (constant == 0) throw InputError("BadNormalization", "pairing constant 0");
  const std::size_t n = gram.rows();
  MatQ basis = MatQ::identity(n);

  auto pairing = [&](std::size_t a, std::size_t b) {
    Rational s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (basis(i, a) == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (gram(i, j) != 0 && basis(j, b) != 0)
          s += basis(i, a) * gram(i, j) * basis(j, b);
    }
    return s;
  };

  std::vector<std::size_t> us, vs;
  std::vector<bool> used(n, false);
  for (;;) {
    std::size_t a = n, b = n;
    for (std::size_t i = 0; i < n && a == n; ++i) {
      if (used[i]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (used[j] || j == i) continue;
        if (pairing(i, j) != 0) {
          a = i;
          b = j;
          break;
        }
      }
    }
    if (a == n) break;
    Rational c0 = pairing(a, b);
    for (std::size_t i = 0; i < n; ++i)
      basis(i, b) = basis(i, b) * (constant / c0);
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || w == a || w == b) continue;
      Rational fa = pairing(w, b) / constant;
      Rational fb = pairing(w, a) / constant;
      for (std::size_t i = 0; i < n; ++i)
        basis(i, w) = basis(i, w) - fa * basis(i, a) + fb * basis(i, b);
    }
    used[a] = used[b] = true;
    us.push_back(a);
    vs.push_back(b);
  }

  DarbouxBasis out;
  out.pairs = us.size();
  if (require_nondegenerate && 2 * out.pairs != n)
    throw degenerate_form("skew form is degenerate");
  MatQ arranged(n, n);
  std::size_t col = 0;
  for (std::size_t a : us) arranged.set_block(0, col++, basis.col(a));
  for (std::size_t b : vs) arranged.set_block(0, col++, basis.col(b));
  for (std::size_t w = 0; w < n; ++w)
    if (!used[w]) arranged.set_block(0, col++, basis.col(w));
  out.basis = arranged;
  return out;
}

MatG quaternion_to_complex_hermitian(const MatH& gram) {
  const std::size_t n = gram.rows();
  if (gram.cols() != n) throw shape_error("Gram must be square");
  MatG a(n, n), b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      a(i, j) = gram(i, j).c_part();
      b(i, j) = gram(i, j).j_part();
    }
  MatG h(2 * n, 2 * n);
  h.set_block(0, 0, a);
  h.set_block(0, n, -b.conj());
  h.set_block(n, 0, b);
  h.set_block(n, n, a.conj());
  return h;
}

Signature quaternion_hermitian_signature(const MatH& gram) {
  if (!is_quaternion_hermitian(gram))
    throw shape_error("Gram must be H-Hermitian");
  Signature s = hermitian_signature(quaternion_to_complex_hermitian(gram));
  if (s.p % 2 || s.q % 2 || s.z % 2)
    throw InputError("InternalError", "H-Hermitian inertia must be even");
  return {s.p / 2, s.q / 2, s.z / 2};
}

bool is_hermitian(const MatG& m) {
  return m.rows() == m.cols() && m == m.conj_transpose();
}
bool is_symmetric(const MatQ& m) {
  return m.rows() == m.cols() && m == m.transpose();
}
bool is_skew(const MatQ& m) {
  return m.rows() == m.cols() && m == -m.transpose();
}
bool is_quaternion_hermitian(const MatH& m) {
  return m.rows() == m.cols() && m == m.conj_transpose();
}
bool is_quaternion_anti_hermitian(const MatH& m) {
  return m.rows() == m.cols() && m == -m.conj_transpose();
}

}  // namespace slash
