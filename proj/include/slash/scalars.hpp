#pragma once

#include <string>
#include <utility>

#include "slash/rational.hpp"

namespace slash {

// ---------------------------------------------------------------------------
// Gaussian rationals, Q(i) with i^2 = -1.

struct Gaussian {
  Rational re, im;

  Gaussian() = default;
  Gaussian(Rational r) : re(std::move(r)) {}
  Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  Gaussian(long r) : re(r) {}

  static Gaussian i() { return Gaussian(Rational(0), Rational(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  friend Gaussian operator+(const Gaussian& a, const Gaussian& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend Gaussian operator-(const Gaussian& a, const Gaussian& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend Gaussian operator-(const Gaussian& a) { return {-a.re, -a.im}; }
  friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Gaussian operator/(const Gaussian& a, const Gaussian& b) {
    Rational n = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  Gaussian& operator+=(const Gaussian& o) { return *this = *this + o; }
  Gaussian& operator-=(const Gaussian& o) { return *this = *this - o; }
  Gaussian& operator*=(const Gaussian& o) { return *this = *this * o; }
  Gaussian& operator/=(const Gaussian& o) { return *this = *this / o; }
  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re == b.re && a.im == b.im;
  }
};

// ---------------------------------------------------------------------------
// Lorentz rationals, Q[eps] with eps^2 = +1.  Not a field: a+b*eps is a unit
// iff a^2 != b^2.  The idempotents e = (1-eps)/2, ebar = (1+eps)/2 split the
// ring into two rational lines; lorentz_split is that ring isomorphism.

struct Lorentz {
  Rational a, b;  // a + b*eps

  Lorentz() = default;
  Lorentz(Rational a_) : a(std::move(a_)) {}
  Lorentz(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {}
  Lorentz(long v) : a(v) {}

  static Lorentz eps() { return Lorentz(Rational(0), Rational(1)); }

  bool is_zero() const { return a == 0 && b == 0; }

  friend Lorentz operator+(const Lorentz& x, const Lorentz& y) {
    return {x.a + y.a, x.b + y.b};
  }
  friend Lorentz operator-(const Lorentz& x, const Lorentz& y) {
    return {x.a - y.a, x.b - y.b};
  }
  friend Lorentz operator-(const Lorentz& x) { return {-x.a, -x.b}; }
  friend Lorentz operator*(const Lorentz& x, const Lorentz& y) {
    return {x.a * y.a + x.b * y.b, x.a * y.b + x.b * y.a};
  }
  Lorentz& operator+=(const Lorentz& o) { return *this = *this + o; }
  Lorentz& operator-=(const Lorentz& o) { return *this = *this - o; }
  Lorentz& operator*=(const Lorentz& o) { return *this = *this * o; }
  friend bool operator==(const Lorentz& x, const Lorentz& y) {
    return x.a == y.a && x.b == y.b;
  }
};

// x = p*e + q*ebar with e = (1-eps)/2, ebar = (1+eps)/2.
inline std::pair<Rational, Rational> lorentz_split(const Lorentz& x) {
  return {x.a - x.b, x.a + x.b};
}
inline Lorentz lorentz_join(const Rational& p, const Rational& q) {
  return {(p + q) / 2, (q - p) / 2};
}

// ---------------------------------------------------------------------------
// Rational quaternions, H = C + jC as a right complex space with u*j = j*conj(u).
// The Hamilton product (ij = k, jk = i, ki = j) realizes that convention.

struct Quaternion {
  Rational w, x, y, z;  // w + x*i + y*j + z*k

  Quaternion() = default;
  Quaternion(Rational w_) : w(std::move(w_)) {}
  Quaternion(Rational w_, Rational x_, Rational y_, Rational z_)
      : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}
  Quaternion(long v) : w(v) {}
  Quaternion(const Gaussian& g) : w(g.re), x(g.im) {}

  // q = alpha + j*beta with alpha, beta in Q(i).
  static Quaternion from_c_pair(const Gaussian& alpha, const Gaussian& beta) {
    return {alpha.re, alpha.im, beta.re, -beta.im};
  }
  Gaussian c_part() const { return {w, x}; }
  Gaussian j_part() const { return {y, -z}; }

  bool is_zero() const { return w == 0 && x == 0 && y == 0 && z == 0; }

  friend Quaternion operator+(const Quaternion& p, const Quaternion& q) {
    return {p.w + q.w, p.x + q.x, p.y + q.y, p.z + q.z};
  }
  friend Quaternion operator-(const Quaternion& p, const Quaternion& q) {
    return {p.w - q.w, p.x - q.x, p.y - q.y, p.z - q.z};
  }
  friend Quaternion operator-(const Quaternion& p) {
    return {-p.w, -p.x, -p.y, -p.z};
  }
  friend Quaternion operator*(const Quaternion& p, const Quaternion& q) {
    return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
            p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
            p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
            p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
  }
  Quaternion& operator+=(const Quaternion& o) { return *this = *this + o; }
  Quaternion& operator-=(const Quaternion& o) { return *this = *this - o; }
  Quaternion& operator*=(const Quaternion& o) { return *this = *this * o; }
  friend bool operator==(const Quaternion& p, const Quaternion& q) {
    return p.w == q.w && p.x == q.x && p.y == q.y && p.z == q.z;
  }
  Rational norm2() const { return w * w + x * x + y * y + z * z; }
};

// ---------------------------------------------------------------------------
// Uniform scalar operations used by the generic matrix code.

inline Rational scalar_conj(const Rational& x) { return x; }
inline Gaussian scalar_conj(const Gaussian& x) { return {x.re, -x.im}; }
inline Lorentz scalar_conj(const Lorentz& x) { return {x.a, -x.b}; }
inline Quaternion scalar_conj(const Quaternion& q) {
  return {q.w, -q.x, -q.y, -q.z};
}

inline bool scalar_is_zero(const Rational& x) { return x == 0; }
inline bool scalar_is_zero(const Gaussian& x) { return x.is_zero(); }
inline bool scalar_is_zero(const Lorentz& x) { return x.is_zero(); }
inline bool scalar_is_zero(const Quaternion& x) { return x.is_zero(); }

inline bool is_unit(const Rational& x) { return x != 0; }
inline bool is_unit(const Gaussian& x) { return !x.is_zero(); }
inline bool is_unit(const Lorentz& x) { return x.a * x.a != x.b * x.b; }
inline bool is_unit(const Quaternion& x) { return !x.is_zero(); }

inline Lorentz lorentz_inverse(const Lorentz& x) {
  Rational n = x.a * x.a - x.b * x.b;
  if (n == 0) throw InputError("NotAUnit", "lorentz scalar is a zero divisor");
  return {x.a / n, -x.b / n};
}
inline Quaternion quaternion_inverse(const Quaternion& q) {
  Rational n = q.norm2();
  if (n == 0) throw InputError("NotAUnit", "zero quaternion");
  Quaternion c = scalar_conj(q);
  return {c.w / n, c.x / n, c.y / n, c.z / n};
}

}  // namespace slash
