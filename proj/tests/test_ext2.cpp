#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "assoc2/ext2.hpp"
#include "assoc2/fixtures.hpp"
#include "assoc2/random.hpp"

using namespace assoc2;

namespace {

Resplit random_resplit(const Extension2& e, Rng& rng) {
  Resplit r;
  r.perm0.resize(e.total.n0);
  r.perm1.resize(e.total.n1);
  std::iota(r.perm0.begin(), r.perm0.end(), 0);
  std::iota(r.perm1.begin(), r.perm1.end(), 0);
  std::shuffle(r.perm0.begin(), r.perm0.end(), rng);
  std::shuffle(r.perm1.begin(), r.perm1.end(), rng);
  const std::size_t n0 = e.base.n0, n1 = e.base.n1, m0 = e.sub0.size(), m1 = e.sub1.size();
  r.s0 = random_tensor({n0, m0}, rng);
  r.s1 = random_tensor({n1, m1}, rng);
  r.t0 = random_tensor({n0, m0}, rng);
  r.t1 = random_tensor({n1, m1}, rng);
  return r;
}

}  // namespace

TEST_CASE("build then extract is the identity") {
  Rng rng(11);
  for (auto g : {fix_z(), fix_u(), fix_d(), fix_l()}) {
    for (auto r : {adjoint_representation(g), trivial_representation(g, Complex2(1, 1))}) {
      for (int k = 0; k < 5; ++k) {
        Cochain2 c = random_cocycle(g, r, rng);
        Extension2 e = build_extension(g, r, c);
        CHECK(validate_extension(e).pass());
        CHECK(extract_representation(e) == r);
        CHECK(extract_cocycle(e) == c);
      }
    }
  }
}

TEST_CASE("non-canonical splittings give cocycles and the same representation") {
  Rng rng(12);
  for (auto g : {fix_u(), fix_d(), fix_l()}) {
    auto r = adjoint_representation(g);
    for (int k = 0; k < 5; ++k) {
      Extension2 e = build_extension(g, r, random_cocycle(g, r, rng));
      Extension2 e2 = resplit(e, random_resplit(e, rng));
      REQUIRE(validate_extension(e2).pass());
      CHECK(extract_representation(e2) == r);
      Cochain2 c2 = extract_cocycle(e2);
      CHECK(is_zero(d2_residual(g, r, c2)));
      auto eq = check_equivalence(e, e2);
      CHECK(eq.equivalent);
    }
  }
}

TEST_CASE("cohomologous cocycles give equivalent extensions") {
  Rng rng(13);
  auto g = fix_u();
  auto r = adjoint_representation(g);
  for (int k = 0; k < 5; ++k) {
    Cochain2 c = random_cocycle(g, r, rng);
    Cochain2 b = random_perturbation(g, r, PerturbationKind::Coboundary, rng);
    auto res = check_equivalence(build_extension(g, r, c), build_extension(g, r, c + b));
    REQUIRE(res.equivalent);
    CHECK(check_homomorphism(build_extension(g, r, c).total, build_extension(g, r, c + b).total,
                             *res.map)
              .pass());
  }
}

TEST_CASE("distinct classes over the zero fixture are inequivalent") {
  auto g = fix_z();
  auto r = trivial_representation(g, Complex2(1, 1));
  Cochain2 c = zero_cochain2(r);
  c.psi(0, 0) = 1;
  auto res = check_equivalence(build_extension(g, r, zero_cochain2(r)), build_extension(g, r, c));
  CHECK_FALSE(res.equivalent);
  REQUIRE(res.certificate);
  CHECK(dot(*res.certificate, flatten(zero_cochain2(r) - c)) != 0);
}

TEST_CASE("build rejects non-cocycles") {
  auto g = fix_u();
  auto r = adjoint_representation(g);
  Cochain2 c = zero_cochain2(r);
  c.omega(0, 0, 0) = 1;
  CHECK_THROWS_AS(build_extension(g, r, c), PreconditionError);
}
