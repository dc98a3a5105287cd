#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "slash/slash_core.hpp"

using namespace slash;

namespace {

std::mt19937_64 rng(90210);

Rational rnd_rat() {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  return Rational(num(rng), den(rng));
}

MatQ rnd_mat(std::size_t n) {
  MatQ m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rnd_rat();
  return m;
}

MatQ rnd_invertible(std::size_t n) {
  for (;;) {
    MatQ m = rnd_mat(n);
    if (inverse(m)) return m;
  }
}

MatQ rnd_skew(std::size_t n) {
  MatQ m = MatQ::zero(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = rnd_rat();
      m(j, i) = -m(i, j);
    }
  return m;
}

// invertible element of the commutant of diag(j2, ..., j2): every 2x2
// block is a realified complex scalar [[p, -q],[q, p]]
MatQ rnd_j_commuting(std::size_t n) {
  for (;;) {
    MatQ full(n, n);
    for (std::size_t bi = 0; bi < n / 2; ++bi)
      for (std::size_t bj = 0; bj < n / 2; ++bj) {
        Rational p = rnd_rat(), q = rnd_rat();
        full(2 * bi, 2 * bj) = p;
        full(2 * bi, 2 * bj + 1) = -q;
        full(2 * bi + 1, 2 * bj) = q;
        full(2 * bi + 1, 2 * bj + 1) = p;
      }
    if (inverse(full)) return full;
  }
}

const MatQ j2(2, 2, {rat(0), rat(-1), rat(1), rat(0)});
const MatQ refl2(2, 2, {rat(1), rat(0), rat(0), rat(-1)});
const MatQ omega2(2, 2, {rat(0), rat(1), rat(-1), rat(0)});  // e^1 ^ e^2

// Nilpotent-algebra example data: V = R^4, j = diag(j2, j2),
// S(c2, s2) = [[c2 R, -s2 T],[s2 T, -c2 R]].
MatQ heis_j() {
  MatQ j = MatQ::zero(4, 4);
  j.set_block(0, 0, j2);
  j.set_block(2, 2, j2);
  return j;
}

MatQ heis_R() {
  MatQ m = MatQ::zero(4, 4);
  m.set_block(0, 0, refl2);
  m.set_block(2, 2, refl2);
  return m;
}

MatQ heis_T() {
  MatQ m = MatQ::zero(4, 4);
  m.set_block(0, 2, -MatQ::identity(2));
  m.set_block(2, 0, MatQ::identity(2));
  return m;
}

BlockEndo heis_S(const Rational& c2, const Rational& s2) {
  MatQ R = heis_R(), T = heis_T();
  return {c2 * R, (-s2) * T, s2 * T, (-c2) * R};
}

// omega = e^1^e^3 + e^2^e^4 on R^4
MatQ darboux4() {
  MatQ g = MatQ::zero(4, 4);
  g.set_block(0, 2, MatQ::identity(2));
  g.set_block(2, 0, -MatQ::identity(2));
  return g;
}

BlockEndo antidiag_member(const MatQ& theta_flat, int lambda) {
  std::size_t n = theta_flat.rows();
  MatQ inv = *inverse(theta_flat);
  return {MatQ::zero(n, n), rat(lambda) * inv, theta_flat, MatQ::zero(n, n)};
}

}  // namespace

TEST_CASE("lifts are generalized structures") {
  BlockEndo refl = lift_tensor(refl2);
  SlashReport rep = check_generalized(refl, 1);
  CHECK(rep.overall);
  CHECK(rep.split_ok);

  BlockEndo rot = lift_tensor(j2);
  CHECK(check_generalized(rot, -1).overall);

  for (int lam : {1, -1}) {
    SlashReport r2 = check_generalized(lift_two_form(omega2, lam), lam);
    CHECK(r2.overall);
  }

  BlockEndo pl = poisson_lift(omega2);
  SlashReport rp = check_generalized(pl, 1);
  CHECK(rp.overall);

  CHECK(!check_generalized(lift_tensor(j2), 1).square_ok);
  CHECK(check_generalized(lift_tensor(j2), 1).failed_clause == "square");
  CHECK_THROWS_AS(check_generalized(refl, 2), InputError);
}

TEST_CASE("reflection lift is a complex member for both ell") {
  BlockEndo S = lift_tensor(refl2);
  for (int ell : {1, -1}) {
    SlashReport rep = check_slash_complex(S, j2, 1, ell);
    CHECK(rep.overall);
    CHECK(rep.failed_clause.empty());
  }
  SignatureResult sig = sig_complex_11(S, j2);
  CHECK(sig.ok);
  CHECK(sig.inertia == Signature{2, 2, 0});
  CHECK(sig.n == 1);
}

TEST_CASE("rotation lift fails anticommutation with a pointed witness") {
  BlockEndo S = lift_tensor(j2);  // this is J_{+1} itself
  SlashReport rep = check_slash_complex(S, j2, -1, 1);
  CHECK(rep.square_ok);
  CHECK(rep.skew_ok);
  CHECK(!rep.compat_ok);
  CHECK(!rep.overall);
  CHECK(rep.failed_clause == "anticommutation_with_J_ell");
  CHECK(rep.witness_i == 0);
  CHECK(rep.witness_j == 0);
  CHECK(rep.witness_value == "-2");
}

TEST_CASE("frozen nilpotent-algebra family member at (3/5, 4/5)") {
  BlockEndo S = heis_S(Rational(3, 5), Rational(4, 5));
  SlashReport rep = check_slash_complex(S, heis_j(), 1, 1);
  CHECK(rep.square_ok);
  CHECK(rep.skew_ok);
  CHECK(rep.split_ok);
  CHECK(rep.compat_ok);
  CHECK(rep.criterion_ok);
  CHECK(rep.overall);

  // endpoints of the family are members too
  CHECK(check_slash_complex(heis_S(rat(1), rat(0)), heis_j(), 1, 1).overall);
  CHECK(check_slash_complex(heis_S(rat(0), rat(1)), heis_j(), 1, 1).overall);

  // off the circle the square clause breaks
  SlashReport bad = check_slash_complex(heis_S(rat(1), rat(1)), heis_j(), 1, 1);
  CHECK(!bad.square_ok);
  CHECK(bad.failed_clause == "square");

  SignatureResult sig = sig_complex_11(S, heis_j());
  CHECK(sig.ok);
  CHECK(sig.inertia == Signature{4, 4, 0});
  CHECK(sig.n == 2);
}

TEST_CASE("complex criterion is equivalent to b-skewness given square and compatibility") {
  MatQ j = heis_j();
  BlockEndo S0 = heis_S(Rational(3, 5), Rational(4, 5));
  int skew_seen = 0, nonskew_seen = 0;
  for (int t = 0; t < 100; ++t) {
    // diag(A, D) with A, D in the commutant commutes with J_ell, so
    // conjugation preserves square and anticommutation; it preserves
    // b-skewness only when D = (A^t)^{-1}.
    MatQ A = rnd_j_commuting(4);
    MatQ D = (t % 2 == 0) ? *inverse(A.transpose()) : rnd_j_commuting(4);
    BlockEndo M(A, MatQ::zero(4, 4), MatQ::zero(4, 4), D);
    BlockEndo Minv = BlockEndo::from_full(*inverse(M.full()));
    BlockEndo S = M * S0 * Minv;
    SlashReport rep = check_slash_complex(S, j, 1, 1);
    CHECK(rep.square_ok);
    CHECK(rep.compat_ok);
    CHECK(rep.criterion_ok == rep.skew_ok);
    CHECK(rep.overall == rep.skew_ok);
    (rep.skew_ok ? skew_seen : nonskew_seen)++;
  }
  CHECK(skew_seen >= 40);
  CHECK(nonskew_seen >= 40);
}

TEST_CASE("pseudo-Kaehler lift is a symplectic (-1,1) member") {
  MatQ r(2, 2, {rat(0), rat(1), rat(-1), rat(0)});
  BlockEndo S = lift_tensor(r);
  SlashReport rep = check_slash_symplectic(S, omega2, -1, 1);
  CHECK(rep.square_ok);
  CHECK(rep.skew_ok);
  CHECK(rep.compat_ok);
  CHECK(rep.extra_split_ok);
  CHECK(rep.criterion_ok);
  CHECK(rep.overall);

  SignatureResult sig = sig_symplectic_m11(S, omega2);
  CHECK(sig.ok);
  CHECK(sig.inertia == Signature{4, 0, 0});
  CHECK(sig.n == 1);

  // opposite orientation is also a member, with inverted inertia
  SignatureResult flip = sig_symplectic_m11(lift_tensor(-r), omega2);
  CHECK(flip.ok);
  CHECK(flip.inertia == Signature{0, 4, 0});
  CHECK(flip.n == 0);
}

TEST_CASE("symplectic criterion is equivalent to b-skewness given square and commutation") {
  // dimension 4: on R^2 every diag(A, f A f^{-1}) is conformal, so
  // skewness would never break
  MatQ G = darboux4();
  MatQ f = flat(G);
  MatQ Aint(4, 4);
  Aint(0, 0) = 1;
  Aint(1, 1) = -1;
  Aint(2, 2) = 1;
  Aint(3, 3) = -1;
  BlockEndo S0 = antidiag_member(f * Aint, 1);

  auto rnd_symplectic = [&] {
    MatQ A = MatQ::identity(4);
    for (int g = 0; g < 3; ++g) {
      MatQ N(2, 2);
      N(0, 0) = rnd_rat();
      N(1, 1) = rnd_rat();
      N(0, 1) = N(1, 0) = rnd_rat();
      MatQ gen = MatQ::identity(4);
      switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
        case 0:
          gen.set_block(0, 2, N);
          break;
        case 1:
          gen.set_block(2, 0, N);
          break;
        default: {
          MatQ C = rnd_invertible(2);
          gen.set_block(0, 0, C);
          gen.set_block(2, 2, *inverse(C.transpose()));
        }
      }
      A = A * gen;
    }
    return A;
  };

  int skew_seen = 0, nonskew_seen = 0;
  for (int t = 0; t < 100; ++t) {
    // diag(A, f A f^{-1}) commutes with I_k for any invertible A; it is a
    // b-isometry exactly when A is symplectic.
    MatQ A = (t % 2 == 0) ? rnd_symplectic() : rnd_invertible(4);
    MatQ D = f * A * *inverse(f);
    BlockEndo M(A, MatQ::zero(4, 4), MatQ::zero(4, 4), D);
    BlockEndo S = M * S0 * BlockEndo::from_full(*inverse(M.full()));
    SlashReport rep = check_slash_symplectic(S, G, 1, 1);
    CHECK(rep.square_ok);
    CHECK(rep.compat_ok);
    CHECK(rep.criterion_ok == rep.skew_ok);
    (rep.skew_ok ? skew_seen : nonskew_seen)++;
  }
  CHECK(skew_seen >= 40);
  CHECK(nonskew_seen >= 40);
}

TEST_CASE("anti-diagonal symplectic members on R^4") {
  MatQ G = darboux4();
  MatQ f = flat(G);

  // interpolant diag(1,-1,1,-1): split involution, omega-symmetric
  MatQ Aint(4, 4);
  Aint(0, 0) = 1;
  Aint(1, 1) = -1;
  Aint(2, 2) = 1;
  Aint(3, 3) = -1;
  BlockEndo S1 = antidiag_member(f * Aint, 1);
  SlashReport r1 = check_slash_symplectic(S1, G, 1, 1);
  CHECK(r1.overall);

  // interpolant with square -id: q = diag(j2, -j2)
  MatQ q = MatQ::zero(4, 4);
  q.set_block(0, 0, j2);
  q.set_block(2, 2, -j2);
  BlockEndo S2 = antidiag_member(q, -1);
  SlashReport r2 = check_slash_symplectic(S2, G, -1, -1);
  CHECK(r2.overall);

  // swapping ell flips the commutation verdict
  CHECK(!check_slash_symplectic(S1, G, 1, -1).compat_ok);
  CHECK(!check_slash_symplectic(S2, G, -1, 1).compat_ok);
}

TEST_CASE("interpolant extraction: diagonal cases") {
  MatQ r(2, 2, {rat(0), rat(1), rat(-1), rat(0)});
  InterpolantReport rep =
      extract_interpolants(lift_tensor(r), Side::Symplectic, omega2, -1, 1);
  CHECK(rep.diagonal);
  CHECK(!rep.antidiagonal);
  CHECK(rep.r == r);
  CHECK(rep.ok);

  InterpolantReport repc =
      extract_interpolants(lift_tensor(refl2), Side::Complex, j2, 1, 1);
  CHECK(repc.diagonal);
  CHECK(repc.r == refl2);
  CHECK(repc.ok);

  // r = j commutes with j instead of anticommuting
  InterpolantReport bad =
      extract_interpolants(lift_tensor(j2), Side::Complex, j2, -1, 1);
  CHECK(bad.diagonal);
  CHECK(!bad.ok);
  bool found = false;
  for (auto& [name, v] : bad.conclusions)
    if (name == "r_anticommutes_j") {
      found = true;
      CHECK(!v);
    }
  CHECK(found);
}

TEST_CASE("interpolant extraction: anti-diagonal cases") {
  // complex side on R^2, theta = e^1 ^ e^2
  BlockEndo S = antidiag_member(flat(omega2), 1);
  InterpolantReport rep = extract_interpolants(S, Side::Complex, j2, 1, 1);
  CHECK(rep.antidiagonal);
  CHECK(rep.theta_gram == omega2);
  CHECK(rep.ok);
  CHECK(check_slash_complex(S, j2, 1, 1).overall);
  SignatureResult sig = sig_complex_11(S, j2);
  CHECK(sig.ok);
  CHECK(sig.inertia == Signature{0, 4, 0});
  CHECK(sig.n == 0);

  // same theta against ell = -1 breaks the symmetry-type conclusion
  InterpolantReport bad = extract_interpolants(S, Side::Complex, j2, 1, -1);
  CHECK(!bad.ok);

  // symplectic side on R^4
  MatQ G = darboux4();
  MatQ Aint(4, 4);
  Aint(0, 0) = 1;
  Aint(1, 1) = -1;
  Aint(2, 2) = 1;
  Aint(3, 3) = -1;
  BlockEndo S1 = antidiag_member(flat(G) * Aint, 1);
  InterpolantReport rs = extract_interpolants(S1, Side::Symplectic, G, 1, 1);
  CHECK(rs.antidiagonal);
  CHECK(rs.ok);

  // mixed-block member is neither shape
  InterpolantReport mixed = extract_interpolants(
      heis_S(Rational(3, 5), Rational(4, 5)), Side::Complex, heis_j(), 1, 1);
  CHECK(!mixed.diagonal);
  CHECK(!mixed.antidiagonal);
  CHECK(!mixed.ok);
}

TEST_CASE("block identities characterize generalized structures") {
  // frozen: the two-form lift splits as A = 0, pi_sharp = -flat^{-1},
  // theta_flat = flat
  BlockEndo I = lift_two_form(omega2, -1);
  CrainicBlocks cb = crainic_blocks(I, -1);
  CHECK(cb.ok);
  CHECK(cb.A.is_zero());
  CHECK(cb.pi_sharp == -*inverse(flat(omega2)));
  CHECK(cb.theta_flat == flat(omega2));

  for (int t = 0; t < 100; ++t) {
    int lam = (t % 2 == 0) ? 1 : -1;
    BlockEndo S = (t % 3 == 0)
                      ? BlockEndo(rnd_mat(3), rnd_skew(3), rnd_skew(3),
                                  -rnd_mat(3).transpose())
                      : BlockEndo(rnd_mat(3), rnd_mat(3), rnd_mat(3),
                                  rnd_mat(3));
    // fix D to match A for a slice of the samples so skewness holds
    if (t % 3 == 0) S.D = -S.A.transpose();
    SlashReport rep = check_generalized(S, lam);
    CrainicBlocks blocks = crainic_blocks(S, lam);
    CHECK(blocks.ok == (rep.square_ok && rep.skew_ok));
  }
}

TEST_CASE("symplectic block presentation") {
  MatQ r(2, 2, {rat(0), rat(1), rat(-1), rat(0)});
  BlockEndo S = lift_tensor(r);
  SymplecticSlashBlocks sb = symplectic_slash_blocks(S, omega2, -1, 1);
  CHECK(sb.ok);
  CHECK(sb.A == r);
  CHECK(sb.B.is_zero());
  MatQ M(4, 4);
  M.set_block(0, 2, r);
  M.set_block(2, 0, -r);
  CHECK(sb.split_presentation == M);

  MatQ G = darboux4();
  MatQ Aint(4, 4);
  Aint(0, 0) = 1;
  Aint(1, 1) = -1;
  Aint(2, 2) = 1;
  Aint(3, 3) = -1;
  BlockEndo S1 = antidiag_member(flat(G) * Aint, 1);
  SymplecticSlashBlocks sb1 = symplectic_slash_blocks(S1, G, 1, 1);
  CHECK(sb1.ok);
  CHECK(sb1.A.is_zero());
  CHECK(sb1.B == Aint);

  // a non-member leaves at least one identity false
  BlockEndo junk(rnd_mat(2), rnd_mat(2), rnd_mat(2), rnd_mat(2));
  SymplecticSlashBlocks sbj = symplectic_slash_blocks(junk, omega2, -1, 1);
  CHECK(!sbj.ok);
}

TEST_CASE("signature invariance under commuting isometries") {
  MatQ j = heis_j();
  BlockEndo S0 = heis_S(Rational(3, 5), Rational(4, 5));
  for (int t = 0; t < 20; ++t) {
    MatQ A = rnd_j_commuting(4);
    BlockEndo M(A, MatQ::zero(4, 4), MatQ::zero(4, 4), *inverse(A.transpose()));
    BlockEndo S = M * S0 * BlockEndo::from_full(*inverse(M.full()));
    CHECK(check_slash_complex(S, j, 1, 1).overall);
    SignatureResult sig = sig_complex_11(S, j);
    CHECK(sig.ok);
    CHECK(sig.inertia == Signature{4, 4, 0});
    CHECK(sig.n == 2);
  }

  MatQ r(2, 2, {rat(0), rat(1), rat(-1), rat(0)});
  BlockEndo T0 = lift_tensor(r);
  MatQ f = flat(omega2);
  for (int t = 0; t < 20; ++t) {
    MatQ A = rnd_invertible(2);
    Rational a = A(0, 0);
    if (a == 0) continue;
    A(1, 1) = (rat(1) + A(0, 1) * A(1, 0)) / a;  // det 1: symplectic on R^2
    BlockEndo M(A, MatQ::zero(2, 2), MatQ::zero(2, 2), *inverse(A.transpose()));
    BlockEndo S = M * T0 * BlockEndo::from_full(*inverse(M.full()));
    CHECK(check_slash_symplectic(S, omega2, -1, 1).overall);
    SignatureResult sig = sig_symplectic_m11(S, omega2);
    CHECK(sig.ok);
    CHECK(sig.n == 1);
  }
}

TEST_CASE("signature failure modes") {
  SignatureResult bad = sig_complex_11(poisson_lift(omega2), j2);
  CHECK(!bad.ok);
  CHECK(bad.message == "beta is not symmetric");

  BlockEndo zero(MatQ::zero(2, 2), MatQ::zero(2, 2), MatQ::zero(2, 2),
                 MatQ::zero(2, 2));
  SignatureResult degen = sig_complex_11(zero, j2);
  CHECK(!degen.ok);
  CHECK(degen.message == "beta is degenerate");

  // synthesize F from a target beta with odd positive index:
  // beta = (F J)^t P  =>  F = P beta^t J^{-1}, J^{-1} = -J
  MatQ J = make_J(j2, 1).full();
  MatQ P = pairing_gram(2);
  MatQ beta = MatQ::zero(4, 4);
  beta(0, 0) = 1;
  beta(1, 1) = -1;
  beta(2, 2) = -1;
  beta(3, 3) = -1;
  BlockEndo F = BlockEndo::from_full(P * beta.transpose() * (-J));
  SignatureResult odd = sig_complex_11(F, j2);
  CHECK(!odd.ok);
  CHECK(odd.message == "positive index is not a multiple of 2");

  // symplectic analogue with positive index 2, not a multiple of 4
  MatQ I = make_I(omega2, -1).full();
  MatQ beta2 = MatQ::zero(4, 4);
  beta2(0, 0) = 1;
  beta2(1, 1) = 1;
  beta2(2, 2) = -1;
  beta2(3, 3) = -1;
  BlockEndo F2 = BlockEndo::from_full(*inverse(I) * P * beta2.transpose());
  SignatureResult m4 = sig_symplectic_m11(F2, omega2);
  CHECK(!m4.ok);
  CHECK(m4.message == "positive index is not a multiple of 4");
}

TEST_CASE("B-field transforms") {
  for (int t = 0; t < 20; ++t) {
    MatQ w = rnd_skew(4);
    BlockEndo B = bfield_endo(w);
    CHECK(b_adjoint(B) == bfield_endo(-w));
    CHECK((B * bfield_endo(-w)).full() == MatQ::identity(8));
  }

  // any B-field preserves the side-independent clauses
  BlockEndo S0 = heis_S(Rational(3, 5), Rational(4, 5));
  for (int t = 0; t < 20; ++t) {
    MatQ w = rnd_skew(4);
    CHECK(check_generalized(bfield(w, S0), 1).overall);
  }

  // preserving condition on R^4 with j = diag(j2, j2), ell = +1:
  // flat(w) = [[0, m],[-m, 0]] with m symmetric of the shape [[p,q],[q,-p]]
  MatQ j = heis_j();
  for (int t = 0; t < 20; ++t) {
    Rational p = rnd_rat(), q = rnd_rat();
    MatQ m(2, 2, {p, q, q, -p});
    MatQ fw = MatQ::zero(4, 4);
    fw.set_block(0, 2, m);
    fw.set_block(2, 0, -m);
    MatQ w = fw.transpose();  // gram of the two-form
    CHECK(bfield_preserves(w, j, 1));
    CHECK(check_slash_complex(bfield(w, S0), j, 1, 1).overall);
  }

  // a violating two-form breaks exactly the compatibility clause
  MatQ fw = MatQ::zero(4, 4);
  fw.set_block(0, 2, j2);
  fw.set_block(2, 0, -j2.transpose());
  MatQ wbad = fw.transpose();
  CHECK(!bfield_preserves(wbad, j, 1));
  SlashReport rep = check_slash_complex(bfield(wbad, S0), j, 1, 1);
  CHECK(rep.square_ok);
  CHECK(rep.skew_ok);
  CHECK(!rep.compat_ok);
  CHECK(rep.failed_clause == "anticommutation_with_J_ell");

  // on R^2 every B-field satisfies the ell = -1 stabilizer condition and
  // no nonzero one satisfies it for ell = +1 (a particular member may
  // still survive: the reflection lift is fixed by all of them)
  BlockEndo refl = lift_tensor(refl2);
  for (int t = 0; t < 20; ++t) {
    MatQ w = rnd_skew(2);
    CHECK(bfield_preserves(w, j2, -1));
    CHECK(check_slash_complex(bfield(w, refl), j2, 1, -1).overall);
    CHECK(bfield(w, refl) == refl);
    if (!w.is_zero()) CHECK(!bfield_preserves(w, j2, 1));
  }

  CHECK_THROWS_AS(bfield_endo(MatQ::identity(2)), InputError);
}

TEST_CASE("bivector lift is never compatible") {
  BlockEndo P = poisson_lift(omega2);
  CHECK(check_generalized(P, 1).overall);
  for (int ell : {1, -1}) {
    SlashReport rep = check_slash_complex(P, j2, 1, ell);
    CHECK(!rep.overall);
    CHECK(rep.failed_clause == "anticommutation_with_J_ell");
    CHECK(rep.witness_i == 0);
    CHECK(rep.witness_j == 1);
    CHECK(rep.witness_value == "-2");
  }
  CHECK_THROWS_AS(poisson_lift(MatQ::identity(2)), InputError);
}
