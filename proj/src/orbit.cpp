#include "slash/orbit.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

namespace slash {

namespace {

Gaussian gscalar(long v) { return Gaussian(Rational(v)); }

// Gram of B_- on C^{2m}, complex side: diag(I_m, -I_m).
MatG split_gram(std::size_t m) {
  MatG q = MatG::identity(2 * m);
  for (std::size_t i = m; i < 2 * m; ++i) q(i, i) = gscalar(-1);
  return q;
}

// Gram [[0,I],[I,0]] over Q(i), symplectic side.
MatG pairing_gram_g(std::size_t m) {
  MatG p(2 * m, 2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    p(i, m + i) = gscalar(1);
    p(m + i, i) = gscalar(1);
  }
  return p;
}

int involution_sign(const MatG& square, const char* clause) {
  const std::size_t n = square.rows();
  if (square == MatG::identity(n)) return 1;
  if (square == -MatG::identity(n)) return -1;
  throw not_in_any_orbit(clause);
}

int involution_sign(const MatQ& square, const char* clause) {
  const std::size_t n = square.rows();
  if (square == MatQ::identity(n)) return 1;
  if (square == -MatQ::identity(n)) return -1;
  throw not_in_any_orbit(clause);
}

// Real Gram of Re B on the (x; y) realification.
MatQ real_form_gram(Side side, std::size_t m, int ell, bool lorentz) {
  const std::size_t d = 2 * m;
  MatQ g(2 * d, 2 * d);
  if (side == Side::Complex && ell == -1) {
    // Re(conj(u)^t Q v) = x^t Q x' + y^t Q y'
    MatQ q = re_part(split_gram(m));
    g.set_block(0, 0, q);
    g.set_block(d, d, q);
  } else if (side == Side::Complex) {
    // Re(u^t v) = x^t x' - y^t y'
    g.set_block(0, 0, MatQ::identity(d));
    g.set_block(d, d, -MatQ::identity(d));
  } else if (!lorentz) {
    // Re(conj(u)^t P v) = x^t P x' + y^t P y'
    MatQ p = pairing_gram(m);
    g.set_block(0, 0, p);
    g.set_block(d, d, p);
  } else {
    // scalar part of conj(Z)^t Z' on L^{2m}: (y^t x' + x^t y') / 2, scale-free
    g.set_block(0, d, MatQ::identity(d));
    g.set_block(d, 0, MatQ::identity(d));
  }
  return g;
}

std::int64_t signature_integer(const MatQ& gram, std::int64_t divisor,
                               const char* clause) {
  if (!is_symmetric(gram)) throw not_in_any_orbit(clause);
  Signature sig = congruence_signature(gram);
  if (sig.z != 0 || sig.p % divisor != 0) throw not_in_any_orbit(clause);
  return sig.p / divisor;
}

void require_model_shape(const ModelMember& s) {
  if (s.m == 0) throw shape_error("model member needs m >= 1");
  const std::size_t d = 2 * s.m;
  const bool gaussian = !(s.side == Side::Symplectic && s.lorentz);
  if (gaussian && (s.G.rows() != d || s.G.cols() != d))
    throw shape_error("model member matrix must be 2m x 2m");
  if (!gaussian && (s.L.rows() != d || s.L.cols() != d))
    throw shape_error("model member matrix must be 2m x 2m");
  if (s.side == Side::Complex && s.ell != 1 && s.ell != -1)
    throw invalid_label("ell must be +1 or -1");
}

}  // namespace

std::string label_str(const OrbitLabel& label) {
  std::ostringstream os;
  os << (label.side == Side::Complex ? "complex" : "symplectic") << " ("
     << label.lambda << "," << label.ell;
  if (label.n) os << ";" << *label.n;
  os << "), m=" << label.m;
  return os.str();
}

void validate_label(const OrbitLabel& label) {
  if (label.m == 0) throw invalid_label("m must be positive");
  if (label.lambda != 1 && label.lambda != -1)
    throw invalid_label("lambda must be +1 or -1");
  if (label.ell != 1 && label.ell != -1)
    throw invalid_label("ell must be +1 or -1");
  const bool needs_n =
      (label.side == Side::Complex && label.lambda == 1 && label.ell == 1) ||
      (label.side == Side::Symplectic && label.lambda == -1 && label.ell == 1);
  if (needs_n && !label.n)
    throw invalid_label("label " + label_str(label) +
                        " carries a signature integer n");
  if (!needs_n && label.n)
    throw invalid_label("label " + label_str(label) +
                        " does not carry a signature integer");
  if (needs_n) {
    const std::int64_t hi = static_cast<std::int64_t>(
        label.side == Side::Complex ? 2 * label.m : label.m);
    if (*label.n < 0 || *label.n > hi)
      throw invalid_label("n out of range for " + label_str(label));
  }
  if (label.side == Side::Complex && label.lambda == -1 && label.ell == -1 &&
      label.m % 2 != 0)
    throw invalid_label("complex (-1,-1) requires even m");
}

ModelMember normal_form(const OrbitLabel& label) {
  validate_label(label);
  const std::size_t m = label.m, d = 2 * m;
  ModelMember s;
  s.side = label.side;
  s.m = m;
  s.ell = label.ell;
  if (label.side == Side::Complex) {
    MatG n(d, d);
    if (label.lambda == 1 && label.ell == -1) {
      // S(z,w) = (conj w, conj z)
      n = pairing_gram_g(m);
    } else if (label.lambda == 1 && label.ell == 1) {
      // S = i on the first n coordinates, -i on the rest
      for (std::size_t i = 0; i < d; ++i)
        n(i, i) = (static_cast<std::int64_t>(i) < *label.n) ? Gaussian::i()
                                                            : -Gaussian::i();
    } else if (label.lambda == -1 && label.ell == 1) {
      // S(z,w) = (-conj w, conj z)
      for (std::size_t i = 0; i < m; ++i) {
        n(i, m + i) = gscalar(-1);
        n(m + i, i) = gscalar(1);
      }
    } else {
      // m = 2k; the k-fold pair rotation on each of the z and w blocks
      const std::size_t k = m / 2;
      for (std::size_t b = 0; b < 2; ++b)
        for (std::size_t i = 0; i < k; ++i) {
          n(b * m + i, b * m + k + i) = gscalar(-1);
          n(b * m + k + i, b * m + i) = gscalar(1);
        }
    }
    s.G = n;
    return s;
  }
  if (label.lambda * label.ell == -1) {
    MatG n(d, d);
    if (label.lambda == 1) {
      // S(z,w) = (z,-w)
      for (std::size_t i = 0; i < d; ++i)
        n(i, i) = (i < m) ? gscalar(1) : gscalar(-1);
    } else {
      // S(z,w) = (Mw, Mz), M = diag(-i I_n, i I_{m-n})
      for (std::size_t i = 0; i < m; ++i) {
        Gaussian mu = (static_cast<std::int64_t>(i) < *label.n)
                          ? -Gaussian::i()
                          : Gaussian::i();
        n(i, m + i) = mu;
        n(m + i, i) = mu;
      }
    }
    s.G = n;
    return s;
  }
  s.lorentz = true;
  MatQ f(d, d), g(d, d);
  if (label.lambda == 1) {
    // S(xe + y ebar) = (rx)e - (ry)ebar with r = diag(I_m, -I_m)
    for (std::size_t i = 0; i < d; ++i) {
      f(i, i) = (i < m) ? Rational(1) : Rational(-1);
      g(i, i) = -f(i, i);
    }
  } else {
    // S(xe + y ebar) = (jx)e + (jy)ebar
    for (std::size_t i = 0; i < m; ++i) {
      f(i, m + i) = Rational(-1);
      f(m + i, i) = Rational(1);
    }
    g = f;
  }
  s.L = lorentz_join(f, g);
  return s;
}

OrbitLabel classify_model(const ModelMember& s) {
  require_model_shape(s);
  const std::size_t m = s.m, d = 2 * m;
  OrbitLabel label;
  label.side = s.side;
  label.m = m;
  if (s.side == Side::Complex) {
    const MatG& g = s.G;
    label.ell = s.ell;
    label.lambda =
        involution_sign(g * g.conj(), "square: S^2 is not +-identity");
    if (s.ell == -1) {
      MatG q = split_gram(m);
      if (!(g.conj_transpose() * q * g == gscalar(-label.lambda) * q))
        throw not_in_any_orbit(
            "form criterion: B_-(S.,S.) = -lambda conj B_- fails");
    } else {
      if (!(g.transpose() * g == gscalar(-label.lambda) * MatG::identity(d)))
        throw not_in_any_orbit(
            "form criterion: B_+(S.,S.) = -lambda conj B_+ fails");
    }
    // splitness for lambda = +1 is automatic: i maps the fixed set of an
    // anti-linear involution isomorphically onto the anti-fixed set
    if (label.lambda == 1 && label.ell == 1) {
      MatQ sr = realify_antilinear(g);
      MatQ jr = realify_linear(Gaussian::i() * MatG::identity(d));
      MatQ gram = (sr * jr).transpose() * real_form_gram(s.side, m, 1, false);
      label.n = signature_integer(gram, 2, "signature: Re B_+(S(i.),.)");
    }
    return label;
  }
  if (!s.lorentz) {
    const MatG& g = s.G;
    label.lambda = involution_sign(g * g, "square: S^2 is not +-identity");
    label.ell = -label.lambda;
    MatG p = pairing_gram_g(m);
    if (!(g.conj_transpose() * p * g == gscalar(-label.lambda) * p))
      throw not_in_any_orbit(
          "form criterion: B_-(S.,S.) = -lambda B_- fails");
    if (label.lambda == 1) {
      if (kernel_basis(g - MatG::identity(d)).cols() != m)
        throw not_in_any_orbit("split: dim ker(S - 1) != half");
    } else {
      // ell = +1 rider: iS is a split involution
      MatG is = Gaussian::i() * g;
      if (kernel_basis(is - MatG::identity(d)).cols() != m)
        throw not_in_any_orbit("i_s_split: dim ker(iS - 1) != half");
      MatQ gram = realify_linear(is).transpose() *
                  real_form_gram(s.side, m, 1, false);
      label.n = signature_integer(gram, 4, "signature: Re B_-(iS.,.)");
    }
    return label;
  }
  auto [f, g] = lorentz_split(s.L);
  const int lf = involution_sign(f * f, "square: S^2 is not +-identity");
  const int lg = involution_sign(g * g, "square: S^2 is not +-identity");
  if (lf != lg) throw not_in_any_orbit("square: S^2 is not +-identity");
  label.lambda = lf;
  label.ell = lf;
  if (!(g.transpose() * f == Rational(-label.lambda) * MatQ::identity(d)))
    throw not_in_any_orbit("form criterion: B_+(S.,S.) = -lambda B_+ fails");
  if (label.lambda == 1) {
    const std::size_t kf = kernel_basis(f - MatQ::identity(d)).cols();
    const std::size_t kg = kernel_basis(g - MatQ::identity(d)).cols();
    if (kf + kg != d) throw not_in_any_orbit("split: dim ker(S - 1) != half");
    if ((d - kf) + kg != d)
      throw not_in_any_orbit("eps_s_split: dim ker(eps S - 1) != half");
  }
  return label;
}

ModelMember conjugate_member(const ModelMember& s, const MatG& mat) {
  require_model_shape(s);
  if (s.side == Side::Symplectic && s.lorentz)
    throw shape_error("Lorentz members take the rational overload");
  auto inv = inverse(mat);
  if (!inv) throw degenerate_form("conjugating matrix is singular");
  ModelMember out = s;
  out.G = (s.side == Side::Complex) ? mat * s.G * inv->conj()
                                    : mat * s.G * *inv;
  return out;
}

ModelMember conjugate_member(const ModelMember& s, const MatQ& a) {
  require_model_shape(s);
  if (!(s.side == Side::Symplectic && s.lorentz))
    throw shape_error("rational conjugation applies to the Lorentz model");
  auto inv = inverse(a);
  if (!inv) throw degenerate_form("conjugating matrix is singular");
  auto [f, g] = lorentz_split(s.L);
  MatQ at = a.transpose();
  ModelMember out = s;
  out.L = lorentz_join(a * f * *inv, *inverse(at) * g * at);
  return out;
}

namespace {

std::vector<OrbitLabel> classify_both(const BlockEndo& s, Side side,
                                      const MatQ& j_or_omega, bool all) {
  if (s.n % 2 != 0)
    throw not_in_any_orbit("square: dim V must be even for a model label");
  const std::size_t m = s.n / 2;
  MatQ sq = (s * s).full();
  int lambda;
  if (sq == MatQ::identity(2 * s.n))
    lambda = 1;
  else if (sq == -MatQ::identity(2 * s.n))
    lambda = -1;
  else
    throw not_in_any_orbit("square: S^2 is not +-identity");
  std::vector<OrbitLabel> out;
  std::string first_fail;
  for (int ell : {1, -1}) {
    SlashReport rep = (side == Side::Complex)
                          ? check_slash_complex(s, j_or_omega, lambda, ell)
                          : check_slash_symplectic(s, j_or_omega, lambda, ell);
    if (!rep.overall) {
      if (first_fail.empty()) first_fail = rep.failed_clause;
      continue;
    }
    OrbitLabel label;
    label.side = side;
    label.lambda = lambda;
    label.ell = ell;
    label.m = m;
    if (side == Side::Complex && lambda == 1 && ell == 1) {
      SignatureResult sig = sig_complex_11(s, j_or_omega);
      if (!sig.ok) throw not_in_any_orbit(sig.message);
      label.n = sig.n;
    }
    if (side == Side::Symplectic && lambda == -1 && ell == 1) {
      SignatureResult sig = sig_symplectic_m11(s, j_or_omega);
      if (!sig.ok) throw not_in_any_orbit(sig.message);
      label.n = sig.n;
    }
    out.push_back(label);
    if (!all) break;
  }
  if (out.empty()) throw not_in_any_orbit(first_fail);
  return out;
}

}  // namespace

OrbitLabel classify(const BlockEndo& s, Side side, const MatQ& j_or_omega) {
  return classify_both(s, side, j_or_omega, false).front();
}

std::vector<OrbitLabel> classify_all(const BlockEndo& s, Side side,
                                     const MatQ& j_or_omega) {
  return classify_both(s, side, j_or_omega, true);
}

std::int64_t group_dimension(const OrbitLabel& label) {
  validate_label(label);
  const std::int64_t m = static_cast<std::int64_t>(label.m);
  if (label.side == Side::Complex) {
    // acting group: U(m,m) when ell = -1 (real dim 4m^2), O(2m,C) as a real
    // group when ell = +1 (real dim 2m(2m-1))
    const std::int64_t dim_g =
        (label.ell == -1) ? 4 * m * m : 2 * m * (2 * m - 1);
    std::int64_t dim_h;
    if (label.ell == 1) {
      // stabilizers O(n, 2m-n) resp. SO*(2m), both of real dim m(2m-1)
      dim_h = m * (2 * m - 1);
    } else {
      // stabilizers Sp(m,R) resp. Sp(k,k) with m = 2k, both m(2m+1)
      dim_h = m * (2 * m + 1);
    }
    return dim_g - dim_h;
  }
  // acting group: Gl(2m,R) when lambda ell = +1, U(m,m) when -1; dim 4m^2.
  // stabilizers: Gl(m,R)^2, Gl(m,C), U(n,m-n) x U(m-n,n), Gl(m,C): dim 2m^2.
  return 4 * m * m - 2 * m * m;
}

std::int64_t linearized_dimension(const ModelMember& s,
                                  const OrbitLabel& label) {
  validate_label(label);
  if (!(classify_model(s) == label))
    throw not_in_orbit("member does not classify as " + label_str(label));
  const std::size_t m = label.m, d = 2 * m, d4 = 2 * d;
  MatQ sr, scalar_action;
  int commute_sign;  // X K + sign K X = 0
  if (label.side == Side::Complex) {
    sr = realify_antilinear(s.G);
    scalar_action = realify_linear(Gaussian::i() * MatG::identity(d));
    commute_sign = 1;  // tangent vectors stay anti-linear
  } else if (!s.lorentz) {
    sr = realify_linear(s.G);
    scalar_action = realify_linear(Gaussian::i() * MatG::identity(d));
    commute_sign = -1;
  } else {
    auto [f, g] = lorentz_split(s.L);
    sr = MatQ(d4, d4);
    sr.set_block(0, 0, f);
    sr.set_block(d, d, g);
    scalar_action = MatQ(d4, d4);
    for (std::size_t i = 0; i < d; ++i) {
      scalar_action(i, i) = Rational(-1);
      scalar_action(d + i, d + i) = Rational(1);
    }
    commute_sign = -1;
  }
  const MatQ gb = real_form_gram(label.side, m, label.ell, s.lorentz);
  const std::size_t nv = d4 * d4;
  MatQ sys(3 * nv, nv);
  auto var = [d4](std::size_t i, std::size_t j) { return i * d4 + j; };
  std::size_t row = 0;
  // X S + S X = 0
  for (std::size_t r = 0; r < d4; ++r)
    for (std::size_t c = 0; c < d4; ++c, ++row)
      for (std::size_t k = 0; k < d4; ++k) {
        sys(row, var(r, k)) += sr(k, c);
        sys(row, var(k, c)) += sr(r, k);
      }
  // X^t Gb + Gb X = 0
  for (std::size_t r = 0; r < d4; ++r)
    for (std::size_t c = 0; c < d4; ++c, ++row)
      for (std::size_t k = 0; k < d4; ++k) {
        sys(row, var(k, r)) += gb(k, c);
        sys(row, var(k, c)) += gb(r, k);
      }
  // X K + sign K X = 0
  for (std::size_t r = 0; r < d4; ++r)
    for (std::size_t c = 0; c < d4; ++c, ++row)
      for (std::size_t k = 0; k < d4; ++k) {
        sys(row, var(r, k)) += scalar_action(k, c);
        sys(row, var(k, c)) += Rational(commute_sign) * scalar_action(r, k);
      }
  return static_cast<std::int64_t>(nv - rank(std::move(sys)));
}

// ---------------------------------------------------------------------------
// Conjugators.

namespace {

using CD = std::complex<double>;

double rat_d(const Rational& r) { return r.convert_to<double>(); }
CD gauss_d(const Gaussian& g) { return {rat_d(g.re), rat_d(g.im)}; }

std::vector<CD> cd_from_gaussian(const MatG& g) {
  std::vector<CD> out(g.rows() * g.cols());
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j)
      out[i * g.cols() + j] = gauss_d(g(i, j));
  return out;
}

std::vector<CD> cd_mul(std::size_t n, const std::vector<CD>& a,
                       const std::vector<CD>& b) {
  std::vector<CD> out(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      CD f = a[i * n + k];
      if (f == CD{}) continue;
      for (std::size_t j = 0; j < n; ++j) out[i * n + j] += f * b[k * n + j];
    }
  return out;
}

std::vector<CD> cd_inverse(std::size_t n, std::vector<CD> a) {
  std::vector<CD> inv(n * n);
  for (std::size_t i = 0; i < n; ++i) inv[i * n + i] = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r * n + col]) > std::abs(a[piv * n + col])) piv = r;
    if (std::abs(a[piv * n + col]) < 1e-14)
      throw degenerate_form("floating conjugator hit a singular basis matrix");
    if (piv != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a[piv * n + j], a[col * n + j]);
        std::swap(inv[piv * n + j], inv[col * n + j]);
      }
    CD p = a[col * n + col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col * n + j] /= p;
      inv[col * n + j] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      CD f = a[r * n + col];
      if (f == CD{}) continue;
      for (std::size_t j = 0; j < n; ++j) {
        a[r * n + j] -= f * a[col * n + j];
        inv[r * n + j] -= f * inv[col * n + j];
      }
    }
  }
  return inv;
}

std::vector<CD> cd_conj(std::vector<CD> a) {
  for (CD& v : a) v = std::conj(v);
  return a;
}

std::vector<CD> cd_transpose(std::size_t n, const std::vector<CD>& a) {
  std::vector<CD> out(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[j * n + i] = a[i * n + j];
  return out;
}

double cd_max_diff(const std::vector<CD>& a, const std::vector<CD>& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k)
    m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

// Columns of a rational kernel basis of the realification, reassembled as
// Gaussian vectors x + iy.
MatG complex_columns(const MatQ& stacked) {
  const std::size_t n = stacked.rows() / 2;
  MatG out(n, stacked.cols());
  for (std::size_t j = 0; j < stacked.cols(); ++j)
    for (std::size_t i = 0; i < n; ++i)
      out(i, j) = Gaussian(stacked(i, j), stacked(n + i, j));
  return out;
}

Gaussian form_value(const MatG& gram, const MatG& u, const MatG& v,
                    bool sesquilinear) {
  MatG left = sesquilinear ? u.conj_transpose() : u.transpose();
  return (left * gram * v)(0, 0);
}

ConjugatorResult exact_result(MatG f, std::size_t dim) {
  ConjugatorResult res;
  res.backend = ConjugatorBackend::Exact;
  res.F_exact = std::move(f);
  res.dim = dim;
  return res;
}

// Complex (1,-1): Darboux basis of theta = -i B_- on the fixed set, matched
// against the standard fixed set {(z, conj z)}.
ConjugatorResult conjugate_complex_1m1(const ModelMember& t,
                                       const ConjugatorOptions& opt) {
  const std::size_t m = t.m, d = 2 * m;
  const MatG q = split_gram(m);
  MatQ fixed = kernel_basis(realify_antilinear(t.G) - MatQ::identity(2 * d));
  MatG w = complex_columns(fixed);
  MatQ theta(d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      Gaussian v = -Gaussian::i() * form_value(q, w.col(a), w.col(b), true);
      if (!(v.im == 0)) throw not_in_orbit("fixed-set form is not -i-real");
      theta(a, b) = v.re;
    }
  const Rational c = opt.constant_two ? Rational(2) : Rational(1);
  DarbouxBasis db = darboux_basis(theta, c, true);
  MatG wb = w * to_gaussian(db.basis);
  // standard fixed set: (e_s, e_s) paired with (i c/2 e_t, -i c/2 e_t)
  MatG vb(d, d);
  const Gaussian ih = Gaussian(Rational(0), c / 2);
  for (std::size_t s = 0; s < m; ++s) {
    vb(s, s) = gscalar(1);
    vb(m + s, s) = gscalar(1);
    vb(s, m + s) = ih;
    vb(m + s, m + s) = -ih;
  }
  auto vinv = inverse(vb);
  MatG f = wb * *vinv;
  OrbitLabel lab{Side::Complex, 1, -1, m, std::nullopt};
  if (!(f.conj_transpose() * q * f == q) ||
      !(conjugate_member(normal_form(lab), f).G == t.G))
    throw not_in_orbit("exact conjugator failed re-verification");
  return exact_result(std::move(f), d);
}

// Symplectic (1,-1): eigenbasis of S with the B_--dual basis on the minus
// side.
ConjugatorResult conjugate_symplectic_1m1(const ModelMember& t) {
  const std::size_t m = t.m, d = 2 * m;
  const MatG p = pairing_gram_g(m);
  MatG plus = kernel_basis(t.G - MatG::identity(d));
  MatG minus = kernel_basis(t.G + MatG::identity(d));
  auto cross = inverse(plus.conj_transpose() * p * minus);
  if (!cross) throw not_in_orbit("eigenspace pairing is degenerate");
  MatG f = MatG::hstack(plus, minus * *cross);
  OrbitLabel lab{Side::Symplectic, 1, -1, m, std::nullopt};
  if (!(f.conj_transpose() * p * f == p) ||
      !(conjugate_member(normal_form(lab), f).G == t.G))
    throw not_in_orbit("exact conjugator failed re-verification");
  return exact_result(std::move(f), d);
}

// Lorentz backends: F = c e + (c^t)^{-1} ebar conjugates and is automatically
// a B_+-isometry.
ConjugatorResult conjugate_lorentz(const ModelMember& t,
                                   const OrbitLabel& label) {
  const std::size_t m = t.m, d = 2 * m;
  auto [f, g] = lorentz_split(t.L);
  MatQ c;
  if (label.lambda == 1) {
    MatQ cp = kernel_basis(f - MatQ::identity(d));
    MatQ cm = kernel_basis(f + MatQ::identity(d));
    if (cp.cols() != m || cm.cols() != m)
      throw not_in_orbit("eigenspaces of the e-part are not split");
    c = MatQ::hstack(cp, cm);
  } else {
    // greedy complex-structure basis v_1..v_m, f v_1..f v_m
    MatQ picked(d, 0);
    for (std::size_t k = 0; k < d && picked.cols() < m; ++k) {
      MatQ cand(d, 1);
      cand(k, 0) = Rational(1);
      if (!in_span(MatQ::hstack(picked, f * picked), cand))
        picked = MatQ::hstack(picked, cand);
    }
    if (picked.cols() != m)
      throw not_in_orbit("no complex-structure basis for the e-part");
    c = MatQ::hstack(picked, f * picked);
  }
  auto cinv = inverse(c);
  if (!cinv) throw not_in_orbit("basis matrix is singular");
  MatQ ct = c.transpose();
  MatQ ctinv = *inverse(ct);
  auto [nf, ng] = lorentz_split(normal_form(label).L);
  if (!(c * nf * *cinv == f) || !(ctinv * ng * ct == g))
    throw not_in_orbit("exact conjugator failed re-verification");
  ConjugatorResult res;
  res.backend = ConjugatorBackend::Exact;
  res.F_lorentz = lorentz_join(c, ctinv);
  res.dim = d;
  return res;
}

ConjugatorResult floating_result(std::size_t dim, std::vector<CD> f,
                                 double rconj, double riso,
                                 const ConjugatorOptions& opt) {
  if (rconj > opt.tolerance || riso > opt.tolerance) {
    std::ostringstream os;
    os << "residuals " << rconj << " / " << riso << " exceed tolerance "
       << opt.tolerance;
    throw tolerance_exceeded(os.str());
  }
  ConjugatorResult res;
  res.backend = ConjugatorBackend::Floating;
  res.F_float = std::move(f);
  res.dim = dim;
  res.residual_conjugation = rconj;
  res.residual_isometry = riso;
  return res;
}

// Complex (1,1;n): rational congruence diagonalization of h = -i B_+ on the
// fixed set; only the final length normalization needs square roots.
ConjugatorResult conjugate_complex_11(const ModelMember& t,
                                      const OrbitLabel& label,
                                      const ConjugatorOptions& opt) {
  const std::size_t m = t.m, d = 2 * m;
  const std::int64_t n = *label.n;
  MatQ fixed = kernel_basis(realify_antilinear(t.G) - MatQ::identity(2 * d));
  MatG w = complex_columns(fixed);
  MatG eye = MatG::identity(d);
  MatQ h(d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      Gaussian v = -Gaussian::i() * form_value(eye, w.col(a), w.col(b), false);
      if (!(v.im == 0)) throw not_in_orbit("fixed-set form is not -i-real");
      h(a, b) = v.re;
    }
  Diagonalization dg = congruence_diagonalize(h);
  std::vector<std::size_t> order;
  for (std::size_t s = 0; s < d; ++s)
    if (dg.diag[s] > 0) order.push_back(s);
  if (static_cast<std::int64_t>(order.size()) != n)
    throw not_in_orbit("fixed-set form signature disagrees with the label");
  for (std::size_t s = 0; s < d; ++s)
    if (dg.diag[s] < 0) order.push_back(s);
  if (order.size() != d)
    throw not_in_orbit("fixed-set form is degenerate");
  const double target = opt.constant_two ? 2.0 : 1.0;
  MatG wd = w * to_gaussian(dg.basis);
  std::vector<CD> fcols(d * d);
  for (std::size_t s = 0; s < d; ++s) {
    const std::size_t src = order[s];
    const double scale_w =
        std::sqrt(target / std::abs(rat_d(dg.diag[src])));
    // standard fixed vectors (1+i) e_s (h = +2) resp. (1-i) e_s (h = -2)
    const CD unit = (static_cast<std::int64_t>(s) < n) ? CD(1.0, 1.0)
                                                       : CD(1.0, -1.0);
    const CD vs = unit * std::sqrt(target / 2.0);
    for (std::size_t i = 0; i < d; ++i)
      fcols[i * d + s] = gauss_d(wd(i, src)) * scale_w / vs;
  }
  // residuals: bilinear orthogonality F^t F = 1 and F N conj(F)^{-1} = G
  std::vector<CD> ident(d * d);
  for (std::size_t i = 0; i < d; ++i) ident[i * d + i] = 1.0;
  const double riso =
      cd_max_diff(cd_mul(d, cd_transpose(d, fcols), fcols), ident);
  std::vector<CD> nstd = cd_from_gaussian(normal_form(label).G);
  std::vector<CD> lhs =
      cd_mul(d, cd_mul(d, fcols, nstd), cd_conj(cd_inverse(d, fcols)));
  const double rconj = cd_max_diff(lhs, cd_from_gaussian(t.G));
  return floating_result(d, std::move(fcols), rconj, riso, opt);
}

// Symplectic (-1,1;n): Hermitian diagonalization of B_- on the +-i
// eigenspaces of S, matched against the graphs (u, +-Du).
ConjugatorResult conjugate_symplectic_m11(const ModelMember& t,
                                          const OrbitLabel& label,
                                          const ConjugatorOptions& opt) {
  const std::size_t m = t.m, d = 2 * m;
  const std::int64_t n = *label.n;
  const MatG p = pairing_gram_g(m);
  const double target = opt.constant_two ? 2.0 : 1.0;
  std::vector<CD> fcols(d * d);
  for (int delta : {1, -1}) {
    MatG basis = kernel_basis(Gaussian::i() * t.G -
                              Gaussian(Rational(delta)) * MatG::identity(d));
    if (basis.cols() != m) throw not_in_orbit("iS eigenspaces are not split");
    HermitianDiagonalization hd =
        hermitian_diagonalize(basis.conj_transpose() * p * basis);
    // delta = +1 lists the n positive directions first, delta = -1 the n
    // negative ones (matching the norms 2 delta D_ss of the standard graphs)
    std::vector<std::size_t> order;
    for (std::size_t s = 0; s < m; ++s)
      if ((delta == 1 && hd.diag[s] > 0) || (delta == -1 && hd.diag[s] < 0))
        order.push_back(s);
    if (static_cast<std::int64_t>(order.size()) != n)
      throw not_in_orbit("eigenspace form signature disagrees with the label");
    for (std::size_t s = 0; s < m; ++s)
      if ((delta == 1 && hd.diag[s] < 0) || (delta == -1 && hd.diag[s] > 0))
        order.push_back(s);
    if (order.size() != m) throw not_in_orbit("eigenspace form is degenerate");
    MatG wd = basis * hd.basis;
    const std::size_t col0 = (delta == 1) ? 0 : m;
    for (std::size_t s = 0; s < m; ++s) {
      const std::size_t src = order[s];
      const double scale_w =
          std::sqrt(target / std::abs(rat_d(hd.diag[src]))) /
          std::sqrt(target / 2.0);
      // the psi-side scaling sqrt(target/2) cancels into the w column
      for (std::size_t i = 0; i < d; ++i)
        fcols[i * d + col0 + s] += gauss_d(wd(i, src)) * scale_w;
    }
  }
  // multiply by Psi^{-1} = (1/2) [[I, D],[I, -D]], D = diag(I_n, -I_{m-n})
  std::vector<CD> psi_inv(d * d);
  for (std::size_t s = 0; s < m; ++s) {
    const double ds = (static_cast<std::int64_t>(s) < n) ? 1.0 : -1.0;
    psi_inv[s * d + s] = 0.5;
    psi_inv[s * d + m + s] = 0.5 * ds;
    psi_inv[(m + s) * d + s] = 0.5;
    psi_inv[(m + s) * d + m + s] = -0.5 * ds;
  }
  std::vector<CD> f = cd_mul(d, fcols, psi_inv);
  std::vector<CD> pd = cd_from_gaussian(p);
  const double riso = cd_max_diff(
      cd_mul(d, cd_mul(d, cd_transpose(d, cd_conj(f)), pd), f), pd);
  std::vector<CD> nstd = cd_from_gaussian(normal_form(label).G);
  std::vector<CD> lhs = cd_mul(d, cd_mul(d, f, nstd), cd_inverse(d, f));
  const double rconj = cd_max_diff(lhs, cd_from_gaussian(t.G));
  return floating_result(d, std::move(f), rconj, riso, opt);
}

}  // namespace

ConjugatorResult conjugator(const ModelMember& t, const OrbitLabel& label,
                            const ConjugatorOptions& options) {
  validate_label(label);
  OrbitLabel found = classify_model(t);
  if (!(found == label))
    throw not_in_orbit("member classifies as " + label_str(found) +
                       ", not " + label_str(label));
  if (label.side == Side::Complex && label.lambda == -1)
    throw unsupported_conjugator(
        "complex lambda = -1 needs quaternionic orthonormalization");
  const std::size_t d = 2 * label.m;
  ModelMember std_form = normal_form(label);
  if (label.side == Side::Symplectic && t.lorentz) {
    if (t.L == std_form.L) {
      ConjugatorResult res;
      res.backend = ConjugatorBackend::Exact;
      res.F_lorentz = lorentz_join(MatQ::identity(d), MatQ::identity(d));
      res.dim = d;
      return res;
    }
    return conjugate_lorentz(t, label);
  }
  if (t.G == std_form.G) return exact_result(MatG::identity(d), d);
  if (label.side == Side::Complex) {
    if (label.ell == -1) return conjugate_complex_1m1(t, options);
    return conjugate_complex_11(t, label, options);
  }
  if (label.lambda == 1) return conjugate_symplectic_1m1(t);
  return conjugate_symplectic_m11(t, label, options);
}

MatH quaternion_form(const ModelMember& s) {
  require_model_shape(s);
  if (s.side != Side::Complex || !(s.G * s.G.conj() == -MatG::identity(2 * s.m)))
    throw invalid_label(
        "the quaternion form is attached to complex members with S^2 = -1");
  const std::size_t m = s.m, d = 2 * m;
  MatG picked(d, 0);
  for (std::size_t k = 0; k < d && picked.cols() < m; ++k) {
    MatG cand(d, 1);
    cand(k, 0) = gscalar(1);
    MatG span = MatG::hstack(picked, s.G * picked.conj());
    if (!in_span(span, cand)) picked = MatG::hstack(picked, cand);
  }
  if (picked.cols() != m)
    throw not_in_orbit("no quaternionic basis found");
  MatH c(m, m);
  if (s.ell == -1) {
    const MatG q = split_gram(m);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        MatG sb = s.G * picked.col(b).conj();
        Gaussian alpha = form_value(q, picked.col(a), picked.col(b), true);
        Gaussian beta = -form_value(q, picked.col(a), sb, true);
        // alpha + beta j = alpha + j conj(beta)
        c(a, b) = Quaternion::from_c_pair(alpha, scalar_conj(beta));
      }
  } else {
    const MatG eye = MatG::identity(d);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        MatG sa = s.G * picked.col(a).conj();
        Gaussian alpha = form_value(eye, sa, picked.col(b), false);
        Gaussian beta = -form_value(eye, picked.col(a), picked.col(b), false);
        c(a, b) = Quaternion::from_c_pair(alpha, beta);
      }
  }
  return c;
}

// ---------------------------------------------------------------------------
// Rational-point isometry generators.

namespace {

std::size_t pick(std::mt19937_64& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}

Gaussian unit_scalar(std::mt19937_64& rng) {
  switch (pick(rng, 4)) {
    case 0: return gscalar(1);
    case 1: return gscalar(-1);
    case 2: return Gaussian::i();
    default: return -Gaussian::i();
  }
}

void embed2(MatG& f, std::size_t a, std::size_t b, const Gaussian& aa,
            const Gaussian& ab, const Gaussian& ba, const Gaussian& bb) {
  f(a, a) = aa;
  f(a, b) = ab;
  f(b, a) = ba;
  f(b, b) = bb;
}

}  // namespace

MatG random_isometry_split_hermitian(std::size_t m, std::mt19937_64& rng) {
  const std::size_t d = 2 * m;
  MatG out = MatG::identity(d);
  const Rational c53(5, 3), s43(4, 3), c35(3, 5), s45(4, 5);
  for (int step = 0; step < 8; ++step) {
    MatG f = MatG::identity(d);
    std::size_t kind = pick(rng, m >= 2 ? 3 : 2);
    if (m < 2 && kind == 1) kind = 2;
    if (kind == 0) {
      for (std::size_t i = 0; i < d; ++i) f(i, i) = unit_scalar(rng);
    } else if (kind == 1) {
      // unitary rotation inside one definiteness block
      const std::size_t base = pick(rng, 2) * m;
      std::size_t a = pick(rng, m), b = pick(rng, m - 1);
      if (b >= a) ++b;
      if (pick(rng, 2) == 0)
        embed2(f, base + a, base + b, Gaussian(c35), Gaussian(s45),
               Gaussian(-s45), Gaussian(c35));
      else
        embed2(f, base + a, base + b, Gaussian(c35), Gaussian(Rational(0), s45),
               Gaussian(Rational(0), s45), Gaussian(c35));
    } else {
      // hyperbolic rotation across the blocks
      const std::size_t a = pick(rng, m), b = m + pick(rng, m);
      if (pick(rng, 2) == 0)
        embed2(f, a, b, Gaussian(c53), Gaussian(s43), Gaussian(s43),
               Gaussian(c53));
      else
        embed2(f, a, b, Gaussian(c53), Gaussian(Rational(0), s43),
               Gaussian(Rational(0), -s43), Gaussian(c53));
    }
    out = f * out;
  }
  return out;
}

MatG random_isometry_pairing_hermitian(std::size_t m, std::mt19937_64& rng) {
  const std::size_t d = 2 * m;
  MatG out = MatG::identity(d);
  for (int step = 0; step < 6; ++step) {
    MatG f = MatG::identity(d);
    switch (pick(rng, 3)) {
      case 0: {
        // diag(A, (A^*)^{-1}) for invertible A
        MatG a(m, m);
        std::optional<MatG> ainv;
        do {
          for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
              a(i, j) = Gaussian(Rational(static_cast<long>(rng() % 5) - 2),
                                 Rational(static_cast<long>(rng() % 3) - 1));
          ainv = inverse(a);
        } while (!ainv);
        f.set_block(0, 0, a);
        f.set_block(m, m, ainv->conj_transpose());
        break;
      }
      case 1: {
        // swap the two isotropic blocks
        f = MatG(d, d);
        for (std::size_t i = 0; i < m; ++i) {
          f(i, m + i) = gscalar(1);
          f(m + i, i) = gscalar(1);
        }
        break;
      }
      default: {
        // shear [[I, B],[0, I]] with B anti-Hermitian
        MatG cmat(m, m);
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t j = 0; j < m; ++j)
            cmat(i, j) = Gaussian(Rational(static_cast<long>(rng() % 5) - 2),
                                  Rational(static_cast<long>(rng() % 3) - 1));
        f.set_block(0, m, cmat - cmat.conj_transpose());
        break;
      }
    }
    out = f * out;
  }
  return out;
}

MatG random_complex_orthogonal(std::size_t n, std::mt19937_64& rng) {
  MatG out = MatG::identity(n);
  const Rational c35(3, 5), s45(4, 5), c54(5, 4), s34(3, 4);
  for (int step = 0; step < 8; ++step) {
    MatG f = MatG::identity(n);
    std::size_t kind = pick(rng, n >= 2 ? 3 : 1);
    if (kind == 0) {
      // signed coordinate swap
      if (n >= 2) {
        std::size_t a = pick(rng, n), b = pick(rng, n - 1);
        if (b >= a) ++b;
        f(a, a) = f(b, b) = gscalar(0);
        f(a, b) = gscalar(1);
        f(b, a) = gscalar(pick(rng, 2) == 0 ? 1 : -1);
      } else {
        f(0, 0) = gscalar(-1);
      }
    } else {
      std::size_t a = pick(rng, n), b = pick(rng, n - 1);
      if (b >= a) ++b;
      if (kind == 1)
        embed2(f, a, b, Gaussian(c35), Gaussian(s45), Gaussian(-s45),
               Gaussian(c35));
      else
        // complex rotation with a^2 + b^2 = 1, a = 5/4, b = 3i/4
        embed2(f, a, b, Gaussian(c54), Gaussian(Rational(0), s34),
               Gaussian(Rational(0), -s34), Gaussian(c54));
    }
    out = f * out;
  }
  return out;
}

MatQ random_rational_invertible(std::size_t n, std::mt19937_64& rng) {
  MatQ out = MatQ::identity(n);
  const Rational choices[5] = {Rational(1), Rational(-1), Rational(2),
                               Rational(-2), Rational(1, 2)};
  for (int step = 0; step < 6; ++step) {
    MatQ f = MatQ::identity(n);
    switch (pick(rng, n >= 2 ? 3 : 2)) {
      case 0:
        for (std::size_t i = 0; i < n; ++i) f(i, i) = choices[pick(rng, 5)];
        break;
      case 1:
        if (n >= 2) {
          std::size_t a = pick(rng, n), b = pick(rng, n - 1);
          if (b >= a) ++b;
          f(a, b) = choices[pick(rng, 5)];
          break;
        }
        [[fallthrough]];
      default: {
        std::size_t a = pick(rng, n), b = pick(rng, n);
        f.swap_rows(a, b);
        break;
      }
    }
    out = f * out;
  }
  return out;
}

}  // namespace slash
