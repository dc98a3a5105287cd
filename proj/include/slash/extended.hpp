#pragma once

#include "slash/forms.hpp"
#include "slash/matrix.hpp"

namespace slash {

// Element u + sigma of E = V + V*; both stored as columns of length n.
struct ExtendedVec {
  MatQ v;  // n x 1 vector part
  MatQ c;  // n x 1 covector part (coordinates in the dual basis)

  static ExtendedVec zero(std::size_t n) {
    return {MatQ::zero(n, 1), MatQ::zero(n, 1)};
  }
  static ExtendedVec basis_vector(std::size_t n, std::size_t i) {
    ExtendedVec e = zero(n);
    e.v(i, 0) = 1;
    return e;
  }
  static ExtendedVec basis_covector(std::size_t n, std::size_t i) {
    ExtendedVec e = zero(n);
    e.c(i, 0) = 1;
    return e;
  }
};

// Endomorphism of E in block form (u, sigma) -> (A u + B sigma, C u + D sigma).
struct BlockEndo {
  std::size_t n = 0;
  MatQ A, B, C, D;

  BlockEndo() = default;
  BlockEndo(MatQ a, MatQ b, MatQ c, MatQ d)
      : n(a.rows()), A(std::move(a)), B(std::move(b)), C(std::move(c)),
        D(std::move(d)) {
    if (A.cols() != n || B.rows() != n || B.cols() != n || C.rows() != n ||
        C.cols() != n || D.rows() != n || D.cols() != n)
      throw shape_error("block endomorphism needs four n x n blocks");
  }

  static BlockEndo identity(std::size_t n) {
    return {MatQ::identity(n), MatQ::zero(n, n), MatQ::zero(n, n),
            MatQ::identity(n)};
  }
  static BlockEndo from_full(const MatQ& full);

  MatQ full() const {
    MatQ m(2 * n, 2 * n);
    m.set_block(0, 0, A);
    m.set_block(0, n, B);
    m.set_block(n, 0, C);
    m.set_block(n, n, D);
    return m;
  }
  ExtendedVec apply(const ExtendedVec& x) const {
    return {A * x.v + B * x.c, C * x.v + D * x.c};
  }
  friend BlockEndo operator*(const BlockEndo& e, const BlockEndo& f) {
    return {e.A * f.A + e.B * f.C, e.A * f.B + e.B * f.D,
            e.C * f.A + e.D * f.C, e.C * f.B + e.D * f.D};
  }
  friend BlockEndo operator+(const BlockEndo& e, const BlockEndo& f) {
    return {e.A + f.A, e.B + f.B, e.C + f.C, e.D + f.D};
  }
  friend BlockEndo operator-(const BlockEndo& e) { return {-e.A, -e.B, -e.C, -e.D}; }
  friend bool operator==(const BlockEndo& e, const BlockEndo& f) {
    return e.A == f.A && e.B == f.B && e.C == f.C && e.D == f.D;
  }
};

// b(u + sigma, v + tau) = tau(u) + sigma(v); neutral of split inertia (n,n,0).
Rational pairing_b(const ExtendedVec& x, const ExtendedVec& y);
MatQ pairing_gram(std::size_t n);  // [[0, I],[I, 0]]

// Unique E* with b(E x, y) = b(x, E* y); blockwise (A,B;C,D)* = (D^t,B^t;C^t,A^t).
BlockEndo b_adjoint(const BlockEndo& e);

// J_ell = diag(j, ell j^t); requires j^2 = -id.  b(J_ell x, y) = ell b(x, J_ell y).
BlockEndo make_J(const MatQ& j, int ell);

// I_k = [[0, k (w_flat)^{-1}],[w_flat, 0]] for a symplectic Gram w; I_k^2 = k id.
BlockEndo make_I(const MatQ& omega_gram, int k);

// b_ell(x, y) = b(x, y) - i b(x, J_ell y); C-sesquilinear refinement of b.
Gaussian sesqui_b_ell(const ExtendedVec& x, const ExtendedVec& y, const MatQ& j,
                      int ell);

// k = -1: b(x,y) - i b(x, I_- y) in Q(i);  k = +1: b(x,y) + eps b(x, I_+ y) in L.
struct SesquiValue {
  int k = -1;
  Gaussian g;  // valid when k == -1
  Lorentz l;   // valid when k == +1
};
SesquiValue sesqui_b_pm(const ExtendedVec& x, const ExtendedVec& y,
                        const MatQ& omega_gram, int k);

// m^2 = id and the two eigenspaces have equal dimension.
bool is_split_involution(const MatQ& m);

}  // namespace slash
