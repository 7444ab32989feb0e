#include <doctest.h>

#include "assoc2/cohom2.hpp"
#include "assoc2/fixtures.hpp"
#include "assoc2/random.hpp"
#include "oracles.hpp"

using namespace assoc2;

namespace {

// Associative algebras and bimodules of dimension <= 3 used for Hochschild tests.
std::vector<std::pair<AssocAlgebra, Bimodule>> hochschild_fixtures() {
  std::vector<std::pair<AssocAlgebra, Bimodule>> out;
  AssocAlgebra e(1);
  e.mul(0, 0, 0) = 1;
  out.push_back({e, regular_bimodule(e)});
  // upper triangular 2x2 matrices: e11, e12, e22
  AssocAlgebra t(3);
  t.mul(0, 0, 0) = 1;
  t.mul(0, 1, 1) = 1;
  t.mul(1, 2, 1) = 1;
  t.mul(2, 2, 2) = 1;
  out.push_back({t, regular_bimodule(t)});
  // dual numbers Q[s]/s^2 acting on Q^2 with s as a nilpotent shift
  AssocAlgebra dn(2);
  dn.mul(0, 0, 0) = 1;
  dn.mul(0, 1, 1) = dn.mul(1, 0, 1) = 1;
  Bimodule m(2, 2);
  for (std::size_t i = 0; i < 2; ++i) m.left(0, i, i) = m.right(i, 0, i) = 1;
  m.left(1, 0, 1) = 1;
  m.right(0, 1, 1) = 1;
  out.push_back({dn, m});
  return out;
}

}  // namespace

TEST_CASE("associativity and bimodule checker examples") {
  AssocAlgebra e(1);
  e.mul(0, 0, 0) = 1;
  CHECK(check_associative(e).pass());
  CHECK(check_associative(AssocAlgebra(1)).pass());
  AssocAlgebra bad(2);
  bad.mul(0, 0, 1) = 1;
  bad.mul(0, 1, 0) = 1;
  Report r = check_associative(bad);
  REQUIRE(r.failed("assoc"));
  CHECK(r.violations[0].tuple == Index{0, 0, 0});
  CHECK(r.violations[0].lhs == QVec{0, 0});
  CHECK(r.violations[0].rhs == QVec{1, 0});

  CHECK(check_bimodule(e, regular_bimodule(e)).pass());
  CHECK(check_bimodule(e, Bimodule(1, 3)).pass());
  Bimodule m(1, 1);
  m.left(0, 0, 0) = 1;
  m.right(0, 0, 0) = 2;
  Report b = check_bimodule(e, m);
  CHECK_FALSE(b.failed("middle"));
  CHECK(b.failed("right"));
}

TEST_CASE("Hochschild coboundary examples and d d = 0") {
  AssocAlgebra e(1);
  e.mul(0, 0, 0) = 1;
  HochschildCochain id{1, identity_map<Rational>(1)};
  HochschildCochain df = hochschild_coboundary(e, regular_bimodule(e), id);
  CHECK(df.values(0, 0, 0) == 1);
  CHECK(hochschild_coboundary(e, regular_bimodule(e), df).values.is_zero());
  CHECK_THROWS_AS(hochschild_coboundary(e, regular_bimodule(e), {0, Tensor<Rational>({1})}),
                  ShapeError);

  Rng rng(3);
  for (const auto& [a, m] : hochschild_fixtures()) {
    REQUIRE(check_associative(a).pass());
    REQUIRE(check_bimodule(a, m).pass());
    for (int t = 0; t < 100; ++t) {
      std::size_t k = 1 + t % 2;
      Shape s(k, a.dim);
      s.push_back(m.dim);
      HochschildCochain f{k, random_tensor(s, rng)};
      CHECK(hochschild_coboundary(a, m, hochschild_coboundary(a, m, f)).values.is_zero());
    }
  }
}

TEST_CASE("2-algebra checker on the fixtures") {
  for (auto g : {fix_z(), fix_u(), fix_d(), fix_l()}) CHECK(check_algebra(g).pass());
  TwoTermAlgebra g = fix_u();
  g.l3(0, 0, 0, 0) = 1;
  Report r = check_algebra(g);
  CHECK(r.failed("f"));
}

TEST_CASE("single-constant mutations of the unit fixture") {
  // Hand verdicts. d f = +-e keeps (a)-(f) true (f(f) = +-e is a crossed
  // module), and dropping e.f or f.e to 0 leaves a one-sided module, so those
  // four mutations are genuine 2-algebras.
  struct Case {
    Tensor<Rational> TwoTermAlgebra::*field;
    int delta;
    bool passes;
  };
  const Case cases[] = {
      {&TwoTermAlgebra::d, 1, true},       {&TwoTermAlgebra::d, -1, true},
      {&TwoTermAlgebra::l2_00, 1, false},  {&TwoTermAlgebra::l2_00, -1, false},
      {&TwoTermAlgebra::l2_01, 1, false},  {&TwoTermAlgebra::l2_01, -1, true},
      {&TwoTermAlgebra::l2_10, 1, false},  {&TwoTermAlgebra::l2_10, -1, true},
      {&TwoTermAlgebra::l3, 1, false},     {&TwoTermAlgebra::l3, -1, false},
  };
  for (const auto& c : cases) {
    TwoTermAlgebra g = fix_u();
    (g.*c.field).data()[0] += c.delta;
    CHECK(check_algebra(g).pass() == c.passes);
  }
  TwoTermAlgebra g = fix_u();
  g.d(0, 0) = 1;
  CHECK(check_crossed_module(from_strict(g)).pass());
}

TEST_CASE("random algebras pass and their adjoints are representations") {
  Rng rng(4);
  for (int t = 0; t < 20; ++t) {
    TwoTermAlgebra g = random_algebra(rng);
    REQUIRE(check_algebra(g).pass());
    Representation2 ad = adjoint_representation(g);
    CHECK(check_representation(g, ad).pass());
    CHECK(ad.left0_v0 == g.l2_00);
    CHECK(ad.left0_v1 == g.l2_01);
    CHECK(ad.right0_v0 == g.l2_00);
    CHECK(ad.right0_v1 == g.l2_10);
    CHECK(ad.left1 == g.l2_10);
    CHECK(ad.right1 == g.l2_01);
    CHECK(ad.tri_l == g.l3);
    CHECK(ad.tri_m == g.l3);
    CHECK(ad.tri_r == g.l3);
    CoboundaryMatrices m = assemble_matrices(g, ad);
    CHECK((m.d2 * m.d1).is_zero());
    Representation2 tr = trivial_representation(g, Complex2(1, 1));
    CoboundaryMatrices mt = assemble_matrices(g, tr);
    CHECK((mt.d2 * mt.d1).is_zero());
  }
}

TEST_CASE("homomorphism checker and composition") {
  CHECK(check_homomorphism(fix_u(), fix_u(), identity_homomorphism(fix_u())).pass());
  TwoTermAlgebra zero(0, 0);
  Homomorphism2 to_zero{Tensor<Rational>({1, 0}), Tensor<Rational>({1, 0}),
                        Tensor<Rational>({1, 1, 0})};
  CHECK(check_homomorphism(fix_u(), zero, to_zero).pass());
  Homomorphism2 h = identity_homomorphism(fix_d());
  h.F1(0, 0) = 2;
  CHECK(check_homomorphism(fix_d(), fix_d(), h).failed("i"));

  Rng rng(6);
  for (int t = 0; t < 10; ++t) {
    TwoTermAlgebra g = random_algebra(rng);
    Homomorphism2 f1 = random_isomorphism(g, rng);
    TwoTermAlgebra g1 = transport(g, f1);
    Homomorphism2 f2 = random_isomorphism(g1, rng);
    TwoTermAlgebra g2 = transport(g1, f2);
    Homomorphism2 f3 = random_isomorphism(g2, rng);
    TwoTermAlgebra g3 = transport(g2, f3);
    REQUIRE(check_algebra(g1).pass());
    REQUIRE(check_homomorphism(g, g1, f1).pass());
    Homomorphism2 c = compose_homomorphisms(f2, f1);
    CHECK(check_homomorphism(g, g2, c).pass());
    CHECK(compose_homomorphisms(f3, c) == compose_homomorphisms(compose_homomorphisms(f3, f2), f1));
    CHECK(compose_homomorphisms(f1, identity_homomorphism(g)) == f1);
    CHECK(compose_homomorphisms(identity_homomorphism(g1), f1) == f1);
    CHECK(check_homomorphism(g, g3, compose_homomorphisms(f3, c)).pass());
  }
}

TEST_CASE("homotopy derivations") {
  auto id = [](const TwoTermAlgebra& g) {
    return HomotopyDerivation{identity_map<Rational>(g.n0), identity_map<Rational>(g.n1),
                              Tensor<Rational>({g.n0, g.n0, g.n1})};
  };
  auto zero = [](const TwoTermAlgebra& g) {
    return HomotopyDerivation{Tensor<Rational>({g.n0, g.n0}), Tensor<Rational>({g.n1, g.n1}),
                              Tensor<Rational>({g.n0, g.n0, g.n1})};
  };
  for (auto g : {fix_z(), fix_u(), fix_d(), fix_l()}) CHECK(check_derivation(g, zero(g)).pass());
  CHECK(check_derivation(fix_u(), id(fix_u())).failed("a"));
  CHECK(check_derivation(fix_z(), id(fix_z())).pass());

  // D is a derivation exactly when (D0, D1, -D2) is an adjoint 1-cocycle
  Rng rng(7);
  for (int t = 0; t < 10; ++t) {
    TwoTermAlgebra g = random_algebra(rng);
    Representation2 ad = adjoint_representation(g);
    Subspace z1 = kernel_basis(assemble_matrices(g, ad).d1);
    for (int k = 0; k < 4; ++k) {
      QVec v(cochain1_dim(ad));
      if (k < 2)
        for (const auto& b : z1.basis) v += random_rational(rng, 0.7) * b;
      else
        for (auto& c : v) c = random_rational(rng, 0.3);
      Cochain1 c = unflatten_cochain1(ad, v);
      HomotopyDerivation der{c.phi, c.phi1, scaled(Rational(-1), c.chi)};
      CHECK(check_derivation(g, der).pass() == is_cocycle1(g, ad, c));
    }
  }
}

TEST_CASE("End(V) is a strict 2-algebra") {
  Complex2 v0(1, 1);
  EndAlgebra e0 = build_end_algebra(v0);
  CHECK(e0.algebra.n0 == 2);
  CHECK(e0.algebra.n1 == 1);
  CHECK(e0.algebra.d.is_zero());
  Complex2 v1(1, 1);
  v1.partial(0, 0) = 1;
  EndAlgebra e1 = build_end_algebra(v1);
  REQUIRE(e1.algebra.n0 == 1);
  CHECK(e1.algebra.n1 == 1);
  // delta(A) is the pair (dA, Ad) = (1, 1), nonzero
  const auto& [X0, X1] = e1.degree0[0];
  CHECK(e1.algebra.d(0, 0) * X0(0, 0) == 1);
  CHECK(e1.algebra.d(0, 0) * X1(0, 0) == 1);

  Rng rng(8);
  for (int t = 0; t < 10; ++t) {
    Complex2 v(1 + t % 3, 1 + (t / 3) % 2);
    v.partial = random_tensor({v.v1, v.v0}, rng);
    EndAlgebra e = build_end_algebra(v);
    CHECK(check_algebra(e.algebra).pass());
    CHECK(e.algebra.l3.is_zero());
  }
}

TEST_CASE("representation checker examples") {
  for (auto g : {fix_z(), fix_u(), fix_d(), fix_l()}) {
    CHECK(check_representation(g, trivial_representation(g, Complex2(2, 1))).pass());
    CHECK(check_representation(g, adjoint_representation(g)).pass());
  }
  Representation2 ad = adjoint_representation(fix_u());
  CHECK(ad.left0_v0(0, 0, 0) == 1);
  CHECK(ad.left1(0, 0, 0) == 1);
  CHECK(ad.tri_l.is_zero());
  CHECK(adjoint_representation(fix_z()).left0_v0.is_zero());
  Representation2 dd = adjoint_representation(fix_d());
  CHECK(dd.partial(0, 0) == 1);

  Representation2 scaled_left = ad;
  scaled_left.left0_v0(0, 0, 0) = 2;
  CHECK(check_representation(fix_u(), scaled_left).failed("R01"));
}

TEST_CASE("cohomology matches the brute-force oracle") {
  Rng rng(9);
  std::vector<TwoTermAlgebra> gs = {fix_z(), fix_u(), fix_d(), fix_l()};
  for (int t = 0; t < 3; ++t) gs.push_back(random_algebra(rng));
  for (const auto& g : gs) {
    for (const auto& r : {adjoint_representation(g), trivial_representation(g, Complex2(1, 1))}) {
      SecondCohomology h = second_cohomology(g, r);
      CHECK(h.dimZ2 == oracle::z2_dim(g, r));
      CHECK(h.dimB2 == oracle::b2_dim(g, r));
      for (const auto& v : h.representatives)
        CHECK(is_zero(d2_residual(g, r, unflatten_cochain2(r, v))));
      CoboundaryMatrices m = assemble_matrices(g, r);
      const std::size_t n0 = g.n0, n1 = g.n1, m0 = r.m0, m1 = r.m1;
      CHECK(m.d1.rows() == n1 * m0 + n0 * n0 * m0 + 2 * n0 * n1 * m1 + n0 * n0 * n0 * m1);
      for (int k = 0; k < 5; ++k) {
        QVec v(cochain1_dim(r));
        for (auto& c : v) c = random_rational(rng, 0.5);
        CHECK(flatten(d1_apply(g, r, unflatten_cochain1(r, v))) == m.d1 * v);
      }
    }
  }
}

TEST_CASE("coboundary and 1-cocycle examples") {
  TwoTermAlgebra g = fix_u();
  Representation2 ad = adjoint_representation(g);
  Cochain1 id = zero_cochain1(ad);
  id.phi(0, 0) = 1;
  id.phi1(0, 0) = 1;
  Cochain2 c = d1_apply(g, ad, id);
  CHECK(is_zero(d2_residual(g, ad, c)));
  auto pre = is_coboundary(g, ad, c);
  REQUIRE(pre);
  CHECK(d1_apply(g, ad, *pre) == c);
  CHECK_FALSE(is_cocycle1(g, ad, id));
  CHECK(is_cocycle1(g, ad, zero_cochain1(ad)));

  TwoTermAlgebra z = fix_z();
  Representation2 tr = trivial_representation(z, Complex2(1, 1));
  Cochain2 p = zero_cochain2(tr);
  p.psi(0, 0) = 1;
  CHECK_FALSE(is_coboundary(z, tr, p));
  CHECK(is_cocycle1(z, tr, id));
}
