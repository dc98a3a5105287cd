#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "slash/forms.hpp"
#include "slash/slash_core.hpp"

namespace slash {

// Names one orbit of the isometry/linear group action: (side, lambda, ell, m)
// plus the signature integer n carried by the two families that are not a
// single orbit (complex (1,1;n), n in 0..2m; symplectic (-1,1;n), n in 0..m).
// Complex (-1,-1) requires m even.
struct OrbitLabel {
  Side side = Side::Complex;
  int lambda = 1;
  int ell = 1;
  std::size_t m = 1;
  std::optional<std::int64_t> n;
  friend bool operator==(const OrbitLabel&, const OrbitLabel&) = default;
};

std::string label_str(const OrbitLabel& label);
void validate_label(const OrbitLabel& label);  // throws InvalidLabel

// A structure written in the model coordinates where its symmetry group is a
// classical matrix group.
//
// Complex side: anti-linear S(Z) = G conj(Z) on C^{2m}.  The invariant form
// is B_-(Z,Z') = conj(Z)^t diag(I_m, -I_m) Z' for ell = -1 and the bilinear
// B_+(Z,Z') = Z^t Z' for ell = +1.
//
// Symplectic side, lambda*ell = -1: C-linear S(Z) = G Z on C^{2m}, invariant
// Hermitian form B_-(Z,Z') = conj(Z)^t [[0,I],[I,0]] Z'.
//
// Symplectic side, lambda*ell = +1 (lorentz = true): L-linear S(Z) = L Z on
// L^{2m} over the split extension L = R[eps], eps^2 = 1, with the form
// B_+(Z,Z') = conj(Z)^t Z' (eps-conjugation).
struct ModelMember {
  Side side = Side::Complex;
  std::size_t m = 1;
  int ell = -1;          // complex side only: which B_ell the member respects
  bool lorentz = false;  // symplectic side: lambda*ell = +1 model
  MatG G;                // all Gaussian models
  MatL L;                // Lorentz model
};

// The standard representative of the orbit; passes classify_model.
ModelMember normal_form(const OrbitLabel& label);

// Full membership check in model coordinates; throws NotInAnyOrbit naming the
// first violated condition.  The signature integer n is computed from the
// symmetric form Re B_+(S(i.),.) (complex (1,1), inertia (2n, 4m-2n)) resp.
// Re B_-(iS.,.) (symplectic (-1,1), inertia (4n, 4m-4n)).
OrbitLabel classify_model(const ModelMember& S);

// Conjugation S |-> M S M^{-1} as transformations: anti-linear members map to
// M G conj(M)^{-1}, linear ones to M G M^{-1}.  The Lorentz overload applies
// A-hat = A e + (A^t)^{-1} e-bar, the form of a general B_+-isometry.
ModelMember conjugate_member(const ModelMember& S, const MatG& M);
ModelMember conjugate_member(const ModelMember& S, const MatQ& A);

// Classification of a slash structure on V + V*.  lambda is read off S^2;
// when both compatibility relations hold (e.g. S = J_+ itself against a
// degenerate-free j) the ell = +1 label is reported first.  classify_all
// lists every matching label.  Throws NotInAnyOrbit with the first violated
// membership clause.
OrbitLabel classify(const BlockEndo& S, Side side, const MatQ& j_or_omega);
std::vector<OrbitLabel> classify_all(const BlockEndo& S, Side side,
                                     const MatQ& j_or_omega);

// Real dimension of the orbit as a homogeneous space: dim of the acting
// group minus dim of the stabilizer of the normal form, from closed-form
// dimension formulas for the classical groups involved.
std::int64_t group_dimension(const OrbitLabel& label);

// Independent oracle: exact rational nullity of the linearization of the
// defining equations at S, over the realification of the model.  Unknown X
// (4m x 4m real) subject to X S + S X = 0, X skew for the invariant form,
// and X commuting with the scalar action (i resp. eps) while respecting the
// (anti-)linearity type of S.  Equals group_dimension wherever the equations
// cut the orbit out transversally.
std::int64_t linearized_dimension(const ModelMember& S,
                                  const OrbitLabel& label);

enum class ConjugatorBackend { Exact, Floating };

struct ConjugatorOptions {
  // Normalize pairing/length constants to 2 instead of 1 (the convention in
  // which theta(X_s, Y_t) = 2 delta_st and h(v_s, v_s) = +-2).
  bool constant_two = false;
  // Floating backend only: max-abs residual bound for post-hoc verification.
  double tolerance = 1e-9;
};

// F with T = F . (normal form) . F^{-1} and F an isometry of the model form.
// Exact backends store F in F_exact/F_lorentz and both residuals are exactly
// zero; the floating backend stores a row-major 2m x 2m complex array and
// certifies residuals <= tolerance.
struct ConjugatorResult {
  ConjugatorBackend backend = ConjugatorBackend::Exact;
  MatG F_exact;
  MatL F_lorentz;
  std::vector<std::complex<double>> F_float;
  std::size_t dim = 0;  // F is dim x dim
  double residual_conjugation = 0.0;
  double residual_isometry = 0.0;
};

// Backends: EXACT for complex (1,-1) (rational Darboux basis of the fixed
// set), symplectic (1,-1) (dual basis of the two eigenspaces), symplectic
// (1,1) and (-1,-1) (split e/e-bar conjugation); FLOATING for complex
// (1,1;n) and symplectic (-1,1;n), where orthonormalization forces square
// roots.  Complex (-1,*) has no conjugator backend (quaternionic
// orthonormalization needs nested radicals): UnsupportedConjugator.
// Throws NotInOrbit when classify_model(T) != label.
ConjugatorResult conjugator(const ModelMember& T, const OrbitLabel& label,
                            const ConjugatorOptions& options = {});

// The H-valued form attached to the quaternionic complex classes, evaluated
// on an H-basis extracted from the member (E, E j = S E pairs):
// lambda = -1, ell = -1:  C(Z,Z') = B_-(Z,Z') - B_-(Z,SZ') j   (H-Hermitian,
//   split signature), and lambda = -1, ell = +1:
// C(Z,Z') = B_+(SZ,Z') - j B_+(Z,Z')   (H-anti-Hermitian).
MatH quaternion_form(const ModelMember& S);

// Rational-point generators for the stabilizer groups of the model forms,
// used to stress classification invariance.  Products of elementary
// isometries with exactly invertible entries.
MatG random_isometry_split_hermitian(std::size_t m, std::mt19937_64& rng);
MatG random_isometry_pairing_hermitian(std::size_t m, std::mt19937_64& rng);
MatG random_complex_orthogonal(std::size_t n, std::mt19937_64& rng);
MatQ random_rational_invertible(std::size_t n, std::mt19937_64& rng);

}  // namespace slash
