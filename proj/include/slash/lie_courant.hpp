#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "slash/slash_core.hpp"

namespace slash {

// Lie algebra by structure constants: [e_i, e_j] = sum_k c(i,j,k) e_k.
// set_bracket maintains antisymmetry; Jacobi is checked on demand.
class LieAlgebra {
 public:
  explicit LieAlgebra(std::size_t dim);
  std::size_t dim() const { return n_; }
  void set_bracket(std::size_t i, std::size_t j, std::size_t k,
                   const Rational& coeff);
  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const;
  MatQ bracket(const MatQ& u, const MatQ& v) const;  // column vectors
  MatG bracket(const MatG& u, const MatG& v) const;
  bool jacobi_ok() const;

 private:
  std::size_t n_;
  std::vector<Rational> c_;
};

LieAlgebra abelian_algebra(std::size_t dim);
// Heisenberg x R: [e1, e2] = e3, e4 central.
LieAlgebra heisenberg_r4();

// Courant bracket of left-invariant sections u + sigma, v + tau:
// vector part [u, v]; covector part w -> -tau([u, w]) + sigma([v, w]).
ExtendedVec courant_bracket_li(const LieAlgebra& g, const ExtendedVec& x,
                               const ExtendedVec& y);

// complexified sections, for eigenspaces over the Gaussian rationals
struct SectionG {
  MatG v, c;
};
SectionG courant_bracket_li(const LieAlgebra& g, const SectionG& x,
                            const SectionG& y);

// Chevalley-Eilenberg differential of a left-invariant two-form:
// d theta(x,y,z) = -theta([x,y],z) + theta([x,z],y) - theta([y,z],x)
struct ClosednessReport {
  bool closed = false;
  long i = -1, j = -1, k = -1;  // witness triple when not closed
  Rational value;
};
ClosednessReport d_closed_2form(const LieAlgebra& g, const MatQ& theta_gram);
bool is_symplectic_li(const LieAlgebra& g, const MatQ& theta_gram);

// mu in {1, -1, i, -i}; brackets all pairs from an exact eigenspace basis
// and tests membership by rank
bool eigensection_involutive(const LieAlgebra& g, const BlockEndo& S,
                             const Gaussian& mu);

struct IntegrabilityReport {
  SlashReport algebraic;
  bool plus_ok = false;   // +1 (lambda = 1) or +i (lambda = -1) eigensection
  bool minus_ok = false;  // mirror eigensection; true when skipped
  bool plus_only = false;
  bool integrable = false;
};
// throws NotASlashStructure when the algebraic membership checks fail
IntegrabilityReport is_integrable_slash(const LieAlgebra& g,
                                        const BlockEndo& S, Side side,
                                        const MatQ& j_or_omega, int lambda,
                                        int ell, bool plus_only);

// Heisenberg x R worked example: j, the para-complex tensor R, the rotation
// generator D with R D = D R = T, and the family
// S(c2, s2) = [[c2 R, -s2 T],[s2 T, -c2 R]] over rational circle points
// (c2, s2) standing for (cos 2t, sin 2t).
struct HeisenbergDemo {
  LieAlgebra g;
  MatQ j, R, T, D;
  BlockEndo S;  // the base member s_of(1, 0)
  BlockEndo s_of(const Rational& c2, const Rational& s2) const;
  // family triviality boundary: sin 4t = 2 c2 s2 = 0
  bool trivial_parameter(const Rational& c2, const Rational& s2) const;
};
HeisenbergDemo heisenberg_demo();

// Attempts to present S as a B-field conjugate of an anti-diagonal lift
// (S = B Q_theta B^{-1}) and, separately, of a diagonal lift.  A found
// solution is re-validated: witness forms skew and closed, lift compatible
// with j, lift integrable.  normalized_lift_solvable reports the
// anti-diagonal solve with the extra normalization a^2 = -id; its
// solvability boundary coincides with the family's triviality boundary.
struct ObstructionReport {
  bool antidiagonal_solvable = false;
  MatQ a, b;  // flat matrices of the witness forms
  bool antidiagonal_valid = false;
  bool diagonal_solvable = false;
  MatQ rho, b_diag;
  bool diagonal_valid = false;
  bool normalized_lift_solvable = false;
  bool obstructed = false;  // no valid decomposition of either shape
  std::vector<std::string> notes;
};
ObstructionReport nontrivial_obstruction(const LieAlgebra& g, const MatQ& j,
                                         const BlockEndo& S);

// Interpolation tensor A = flat(omega)^{-1} flat(theta) between two
// symplectic forms: split omega-symmetric involution with involutive
// eigendistributions on which omega stays nondegenerate.
struct EllSymplecticReport {
  std::vector<std::pair<std::string, bool>> clauses;
  std::string first_failed;
  bool ok = false;
  MatQ A;
};
EllSymplecticReport ell_symplectic_check(const LieAlgebra& g,
                                         const MatQ& theta_gram,
                                         const MatQ& omega_gram);

// Converse direction: reconstruct theta from two complementary subalgebras.
// Skewness of the result is a genuine clause; it fails when the planes are
// not omega-orthogonal.
struct EllSymplecticConverse {
  std::vector<std::pair<std::string, bool>> clauses;
  std::string first_failed;
  bool ok = false;
  MatQ A;
  MatQ theta_gram;
};
EllSymplecticConverse ell_symplectic_converse(const LieAlgebra& g,
                                              const MatQ& omega_gram,
                                              const MatQ& basis_plus,
                                              const MatQ& basis_minus);

}  // namespace slash
