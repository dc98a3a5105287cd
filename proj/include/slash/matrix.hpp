#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "slash/error.hpp"
#include "slash/scalars.hpp"

namespace slash {

// Dense exact matrix over one of the scalar rings.  Row-major.
template <class T>
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t r, std::size_t c) : r_(r), c_(c), d_(r * c) {}
  Mat(std::size_t r, std::size_t c, std::initializer_list<T> init)
      : r_(r), c_(c), d_(init) {
    if (d_.size() != r * c) throw shape_error("initializer size mismatch");
  }

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Mat zero(std::size_t r, std::size_t c) { return Mat(r, c); }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  bool empty() const { return r_ == 0 || c_ == 0; }

  T& operator()(std::size_t i, std::size_t j) { return d_[i * c_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return d_[i * c_ + j];
  }

  friend Mat operator+(const Mat& a, const Mat& b) {
    a.require_same_shape(b);
    Mat m(a.r_, a.c_);
    for (std::size_t k = 0; k < a.d_.size(); ++k) m.d_[k] = a.d_[k] + b.d_[k];
    return m;
  }
  friend Mat operator-(const Mat& a, const Mat& b) {
    a.require_same_shape(b);
    Mat m(a.r_, a.c_);
    for (std::size_t k = 0; k < a.d_.size(); ++k) m.d_[k] = a.d_[k] - b.d_[k];
    return m;
  }
  friend Mat operator-(const Mat& a) {
    Mat m(a.r_, a.c_);
    for (std::size_t k = 0; k < a.d_.size(); ++k) m.d_[k] = -a.d_[k];
    return m;
  }
  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.c_ != b.r_) throw shape_error("matrix product shape mismatch");
    Mat m(a.r_, b.c_);
    for (std::size_t i = 0; i < a.r_; ++i)
      for (std::size_t k = 0; k < a.c_; ++k) {
        const T& aik = a(i, k);
        if (scalar_is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.c_; ++j) m(i, j) += aik * b(k, j);
      }
    return m;
  }
  friend Mat operator*(const T& s, const Mat& a) {
    Mat m(a.r_, a.c_);
    for (std::size_t k = 0; k < a.d_.size(); ++k) m.d_[k] = s * a.d_[k];
    return m;
  }
  friend bool operator==(const Mat& a, const Mat& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.d_ == b.d_;
  }

  bool is_zero() const {
    for (const T& v : d_)
      if (!scalar_is_zero(v)) return false;
    return true;
  }

  Mat transpose() const {
    Mat m(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }
  Mat conj() const {
    Mat m(r_, c_);
    for (std::size_t k = 0; k < d_.size(); ++k) m.d_[k] = scalar_conj(d_[k]);
    return m;
  }
  Mat conj_transpose() const { return conj().transpose(); }

  Mat block(std::size_t i0, std::size_t j0, std::size_t r, std::size_t c) const {
    if (i0 + r > r_ || j0 + c > c_) throw shape_error("block out of range");
    Mat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = (*this)(i0 + i, j0 + j);
    return m;
  }
  void set_block(std::size_t i0, std::size_t j0, const Mat& m) {
    if (i0 + m.r_ > r_ || j0 + m.c_ > c_) throw shape_error("block out of range");
    for (std::size_t i = 0; i < m.r_; ++i)
      for (std::size_t j = 0; j < m.c_; ++j) (*this)(i0 + i, j0 + j) = m(i, j);
  }
  Mat col(std::size_t j) const { return block(0, j, r_, 1); }

  static Mat hstack(const Mat& a, const Mat& b) {
    if (a.r_ != b.r_) throw shape_error("hstack row mismatch");
    Mat m(a.r_, a.c_ + b.c_);
    m.set_block(0, 0, a);
    m.set_block(0, a.c_, b);
    return m;
  }

  void swap_rows(std::size_t i, std::size_t k) {
    for (std::size_t j = 0; j < c_; ++j) std::swap((*this)(i, j), (*this)(k, j));
  }
  void swap_cols(std::size_t j, std::size_t l) {
    for (std::size_t i = 0; i < r_; ++i) std::swap((*this)(i, j), (*this)(i, l));
  }

 private:
  void require_same_shape(const Mat& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw shape_error("shape mismatch");
  }
  std::size_t r_ = 0, c_ = 0;
  std::vector<T> d_;
};

using MatQ = Mat<Rational>;
using MatG = Mat<Gaussian>;
using MatL = Mat<Lorentz>;
using MatH = Mat<Quaternion>;

// ---------------------------------------------------------------------------
// Exact elimination over a field (Rational or Gaussian).

// Reduced row echelon form in place; returns pivot column indices.
template <class T>
std::vector<std::size_t> rref_in_place(Mat<T>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && scalar_is_zero(m(sel, col))) ++sel;
    if (sel == m.rows()) continue;
    m.swap_rows(sel, row);
    T inv = T(1) / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = inv * m(row, j);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || scalar_is_zero(m(i, col))) continue;
      T f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        m(i, j) = m(i, j) - f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class T>
std::size_t rank(Mat<T> m) {
  return rref_in_place(m).size();
}

// Columns form a basis of the right kernel; empty (n x 0) when injective.
template <class T>
Mat<T> kernel_basis(Mat<T> m) {
  std::size_t n = m.cols();
  std::vector<std::size_t> pivots = rref_in_place(m);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  Mat<T> basis(n, free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::size_t f = free_cols[k];
    basis(f, k) = T(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      basis(pivots[r], k) = -m(r, f);
  }
  return basis;
}

template <class T>
std::optional<Mat<T>> inverse(const Mat<T>& a) {
  if (a.rows() != a.cols()) throw shape_error("inverse of non-square matrix");
  std::size_t n = a.rows();
  Mat<T> aug = Mat<T>::hstack(a, Mat<T>::identity(n));
  std::vector<std::size_t> pivots = rref_in_place(aug);
  std::size_t lead = 0;
  for (std::size_t p : pivots)
    if (p < n) ++lead;
  if (lead != n) return std::nullopt;
  return aug.block(0, n, n, n);
}

// Solves A X = B exactly; nullopt when inconsistent (least constrained X with
// free variables set to zero otherwise).
template <class T>
std::optional<Mat<T>> solve(const Mat<T>& a, const Mat<T>& b) {
  if (a.rows() != b.rows()) throw shape_error("solve shape mismatch");
  Mat<T> aug = Mat<T>::hstack(a, b);
  std::vector<std::size_t> pivots = rref_in_place(aug);
  for (std::size_t p : pivots)
    if (p >= a.cols()) return std::nullopt;
  Mat<T> x(a.cols(), b.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t j = 0; j < b.cols(); ++j)
      x(pivots[r], j) = aug(r, a.cols() + j);
  return x;
}

// True iff v lies in the column span of basis.
template <class T>
bool in_span(const Mat<T>& basis, const Mat<T>& v) {
  if (basis.cols() == 0) return v.is_zero();
  return rank(Mat<T>::hstack(basis, v)) == rank(basis);
}

// ---------------------------------------------------------------------------
// Promotions and realifications.

inline MatG to_gaussian(const MatQ& m) {
  MatG g(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) g(i, j) = Gaussian(m(i, j));
  return g;
}

inline MatQ re_part(const MatG& m) {
  MatQ r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).re;
  return r;
}
inline MatQ im_part(const MatG& m) {
  MatQ r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).im;
  return r;
}
inline MatG gaussian_from_parts(const MatQ& re, const MatQ& im) {
  MatG g(re.rows(), re.cols());
  for (std::size_t i = 0; i < re.rows(); ++i)
    for (std::size_t j = 0; j < re.cols(); ++j)
      g(i, j) = Gaussian(re(i, j), im(i, j));
  return g;
}

// C-linear map z -> P z on C^n as a real matrix on (x; y), z = x + i y.
inline MatQ realify_linear(const MatG& p) {
  std::size_t n = p.rows();
  MatQ m(2 * n, 2 * p.cols());
  MatQ pr = re_part(p), pi = im_part(p);
  m.set_block(0, 0, pr);
  m.set_block(0, p.cols(), -pi);
  m.set_block(n, 0, pi);
  m.set_block(n, p.cols(), pr);
  return m;
}

// Anti-linear map z -> Q conj(z) as a real matrix on (x; y).
inline MatQ realify_antilinear(const MatG& q) {
  std::size_t n = q.rows();
  MatQ m(2 * n, 2 * q.cols());
  MatQ qr = re_part(q), qi = im_part(q);
  m.set_block(0, 0, qr);
  m.set_block(0, q.cols(), qi);
  m.set_block(n, 0, qi);
  m.set_block(n, q.cols(), -qr);
  return m;
}

inline std::pair<MatQ, MatQ> lorentz_split(const MatL& m) {
  MatQ p(m.rows(), m.cols()), q(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      auto [a, b] = lorentz_split(m(i, j));
      p(i, j) = a;
      q(i, j) = b;
    }
  return {p, q};
}
inline MatL lorentz_join(const MatQ& p, const MatQ& q) {
  MatL m(p.rows(), p.cols());
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j)
      m(i, j) = lorentz_join(p(i, j), q(i, j));
  return m;
}

// ---------------------------------------------------------------------------
// Exact eigenspace for eigenvalues in {1, -1, i, -i}.  Real input is promoted
// to Q(i) for the imaginary pair; columns of the result span ker(S - mu).
struct Eigenspace {
  bool over_gaussian = false;  // false: basis has real entries only
  MatG basis;                  // n x k
};

inline Eigenspace eigenspace(const MatQ& s, const Gaussian& mu) {
  if (s.rows() != s.cols()) throw shape_error("eigenspace of non-square matrix");
  if (!(mu == Gaussian(Rational(1)) || mu == -Gaussian(Rational(1)) ||
        mu == Gaussian::i() || mu == -Gaussian::i()))
    throw InputError("UnsupportedEigenvalue", "mu must be one of 1, -1, i, -i");
  MatG m = to_gaussian(s);
  std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i) m(i, i) -= mu;
  Eigenspace e;
  e.over_gaussian = !mu.is_real();
  e.basis = kernel_basis(m);
  return e;
}

}  // namespace slash
