#include <doctest.h>

#include "assoc2/deform2.hpp"
#include "assoc2/fixtures.hpp"
#include "assoc2/random.hpp"

using namespace assoc2;

namespace {

std::vector<TwoTermAlgebra> fixtures() { return {fix_z(), fix_u(), fix_d(), fix_l()}; }

Cochain1 as_cochain1(const NijenhuisCandidate& n) {
  Cochain1 c;
  c.phi = n.N0;
  c.phi1 = n.N1;
  c.chi = n.N2;
  return c;
}

}  // namespace

TEST_CASE("specialize") {
  auto g = fix_u();
  PolyStructure p = zero_deformation(g);
  p.first_order.omega(0, 0, 0) = 1;
  CHECK(specialize(p, 0) == g);
  auto s = specialize(p, 1);
  CHECK(s.l2_00(0, 0, 0) == 2);
  CHECK(s.l2_01 == g.l2_01);

  PolyStructure z = zero_deformation(fix_z());
  z.first_order.psi(0, 0) = 3;
  z.first_order.theta(0, 0, 0, 0) = -1;
  CHECK(specialize(z, 1) == as_structure(z.first_order, 1, 1));
}

TEST_CASE("generation verdict agrees with sampling and with the direct routes") {
  Rng rng(21);
  std::vector<TwoTermAlgebra> algebras = fixtures();
  for (int i = 0; i < 2; ++i) algebras.push_back(random_algebra(rng));
  int generated = 0;
  for (const auto& g : algebras) {
    auto r = adjoint_representation(g);
    for (int k = 0; k < 50; ++k) {
      PolyStructure p{g, random_perturbation(g, r, PerturbationKind(k % 4), rng), std::nullopt};
      auto v = check_generates(p);
      CHECK(v.cocycle_ok == v.residual_zero);
      CHECK(v.standalone_ok == v.structure_passes);
      bool sampled = v.sampled[0] && v.sampled[1] && v.sampled[2];
      CHECK(v.generates() == sampled);
      if (k % 4 == 1) CHECK(v.cocycle_ok);
      generated += v.generates();
    }
  }
  CHECK(generated > 0);
}

TEST_CASE("zero perturbation generates; non-cocycle on the unit fixture does not") {
  CHECK(check_generates(zero_deformation(fix_u())).generates());
  PolyStructure p = zero_deformation(fix_u());
  p.first_order.omega(0, 0, 0) = 1;
  auto v = check_generates(p);
  CHECK_FALSE(v.cocycle_ok);
  CHECK_FALSE(v.generates());
}

TEST_CASE("identity, zero and scalar Nijenhuis operators") {
  for (const auto& g : fixtures()) {
    CHECK(check_nijenhuis(g, identity_candidate(g)).pass());
    CHECK(check_nijenhuis(g, zero_candidate(g)).pass());
    auto n = identity_candidate(g);
    n.N0 = scaled(Rational(-3, 2), n.N0);
    n.N1 = scaled(Rational(-3, 2), n.N1);
    CHECK(check_nijenhuis(g, n).pass());
  }
  auto g = fix_d();
  auto n = identity_candidate(g);
  n.N1(0, 0) = 2;
  auto r = check_nijenhuis(g, n);
  CHECK(r.failed("i"));
}

TEST_CASE("identity on the unit fixture doubles the products") {
  auto g = fix_u();
  auto p = nijenhuis_deformation(g, identity_candidate(g));
  CHECK(p.first_order.omega(0, 0, 0) == 1);
  CHECK(p.first_order.mu(0, 0, 0) == 1);
  CHECK(p.first_order.nu(0, 0, 0) == 1);
  CHECK(is_zero(p.first_order.psi.data()));
  auto s = specialize(p, 1);
  CHECK(s.l2_00(0, 0, 0) == 2);
  CHECK(check_algebra(s).pass());
}

TEST_CASE("trivializing map for a non-Nijenhuis deformation") {
  auto g = fix_u();
  CHECK(check_trivializing(g, zero_deformation(g), zero_candidate(g)).pass());
  PolyStructure p = zero_deformation(g);
  p.first_order.omega(0, 0, 0) = 1;
  auto r = check_trivializing(g, p, zero_candidate(g));
  CHECK(r.failed("deform1[l^1]"));
}

TEST_CASE("every passing Nijenhuis candidate induces a trivial deformation") {
  Rng rng(22);
  std::vector<TwoTermAlgebra> algebras = fixtures();
  for (int i = 0; i < 4; ++i) algebras.push_back(random_algebra(rng));
  int passing = 0;
  for (const auto& g : algebras) {
    std::vector<NijenhuisCandidate> cands = {identity_candidate(g), zero_candidate(g)};
    for (int k = 0; k < 40; ++k) {
      NijenhuisCandidate n = zero_candidate(g);
      n.N0 = random_tensor(n.N0.shape(), rng, 0.3);
      n.N1 = random_tensor(n.N1.shape(), rng, 0.3);
      if (k % 2) n.N2 = random_tensor(n.N2.shape(), rng, 0.2);
      cands.push_back(n);
    }
    for (const auto& n : cands) {
      if (!check_nijenhuis(g, n).pass()) continue;
      ++passing;
      auto p = nijenhuis_deformation(g, n);
      CHECK(check_trivializing(g, p, n).pass());
      for (int t = 1; t <= 4; ++t) CHECK(check_algebra(specialize(p, t)).pass());
      auto r = adjoint_representation(g);
      CHECK(is_zero(d2_residual(g, r, p.first_order)));
      CHECK(p.first_order == d1_apply(g, r, as_cochain1(n)));
    }
  }
  CHECK(passing > static_cast<int>(2 * algebras.size()));
}
