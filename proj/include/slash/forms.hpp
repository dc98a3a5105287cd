#pragma once

#include <cstdint>

#include "slash/matrix.hpp"

namespace slash {

// Inertia of a (possibly degenerate) form: p positive, q negative, z null.
struct Signature {
  std::int64_t p = 0, q = 0, z = 0;
  friend bool operator==(const Signature& a, const Signature& b) {
    return a.p == b.p && a.q == b.q && a.z == b.z;
  }
};

// Two-form matrices handed around are Gram matrices, entry (i,j) = w(e_i,e_j).
// flat(W) is the matrix of the musical map V -> V*, u |-> w(u, .), under the
// dual-basis convention where the matrix of j* is j^t.
inline MatQ flat(const MatQ& gram) { return gram.transpose(); }
// Bivector Gram on the dual basis; sharp is the induced map V* -> V.
inline MatQ sharp(const MatQ& gram) { return gram.transpose(); }

// Symmetric rational form: basis change P (invertible) with P^t G P diagonal.
struct Diagonalization {
  MatQ basis;            // columns are the new basis
  std::vector<Rational> diag;
};
Diagonalization congruence_diagonalize(const MatQ& gram);
Signature congruence_signature(const MatQ& gram);

// Hermitian form over Q(i), conjugate-linear in the first slot, Gram H = H*.
// Basis change P with P* H P real diagonal.
struct HermitianDiagonalization {
  MatG basis;
  std::vector<Rational> diag;
};
HermitianDiagonalization hermitian_diagonalize(const MatG& gram);
Signature hermitian_signature(const MatG& gram);

// Skew rational form: exact basis with Gram  [[0, c I],[-c I, 0]] (+) 0.
// Throws DegenerateForm only if require_nondegenerate.
struct DarbouxBasis {
  MatQ basis;        // columns: u_1..u_k, v_1..v_k, kernel
  std::size_t pairs = 0;
};
DarbouxBasis darboux_basis(const MatQ& gram, const Rational& constant,
                           bool require_nondegenerate = false);

// Quaternion-Hermitian Gram (C = C*) on H^n, written q = alpha + j beta:
// the underlying C-Hermitian Gram on C^{2n} in the basis (E_s, E_s j) is
// [[A, -conj(B)],[B, conj(A)]]; an H-signature (p,q) shows up as (2p,2q).
MatG quaternion_to_complex_hermitian(const MatH& gram);
Signature quaternion_hermitian_signature(const MatH& gram);

bool is_hermitian(const MatG& m);
bool is_symmetric(const MatQ& m);
bool is_skew(const MatQ& m);
// conj(C(x,y)) = C(y,x) entrywise.
bool is_quaternion_hermitian(const MatH& m);
// conj(C(x,y)) = -C(y,x) entrywise.
bool is_quaternion_anti_hermitian(const MatH& m);

}  // namespace slash
