#pragma once

#include <array>
#include <optional>

#include "assoc2/cohom2.hpp"

namespace assoc2 {

// base + lambda * first_order + lambda^2 * theta2 (theta2 only in l3).
// first_order has the adjoint shape: psi {n1,n0}, omega {n0,n0,n0},
// mu {n0,n1,n1}, nu {n1,n0,n1}, theta {n0,n0,n0,n1}.
struct PolyStructure {
  TwoTermAlgebra base;
  Cochain2 first_order;
  std::optional<Tensor<Rational>> theta2;
};

PolyStructure zero_deformation(const TwoTermAlgebra& g);
PolyAlgebra to_poly(const PolyStructure& p);
TwoTermAlgebra specialize(const PolyStructure& p, const Rational& lambda);
// The cochain read as a 2-algebra structure on the same complex.
TwoTermAlgebra as_structure(const Cochain2& c, std::size_t n0, std::size_t n1);

struct GeneratesVerdict {
  bool cocycle_ok = false;     // no lambda^1 coefficient fails
  bool standalone_ok = false;  // no lambda^2 coefficient fails
  Report coefficients;         // check_algebra split as cond[l^k]
  // Independent routes, kept for cross-checking.
  bool residual_zero = false;    // d2_residual in the adjoint vanishes
  bool structure_passes = false; // check_algebra(as_structure(c))
  std::array<bool, 3> sampled{};  // specialize at 1, 2, 3 passes

  bool generates() const { return cocycle_ok && standalone_ok; }
};

GeneratesVerdict check_generates(const PolyStructure& p);

// N0 {n0,n0}, N1 {n1,n1}, N2 {n0,n0,n1}.
struct NijenhuisCandidate {
  Tensor<Rational> N0, N1, N2;
};

NijenhuisCandidate zero_candidate(const TwoTermAlgebra& g);
NijenhuisCandidate identity_candidate(const TwoTermAlgebra& g);

// Conditions i..v: N0 psi = 0, N0 omega = N0x.N0y, N1 mu = N0x.N1a + N2(x, psi a),
// N1 nu = N1a.N0x + N2(psi a, x), N1 theta2 = l3(N0x, N0y, N0z).
Report check_nijenhuis(const TwoTermAlgebra& g, const NijenhuisCandidate& n);

// (psi, omega, mu, nu, theta1) and theta2 built from N; requires check_nijenhuis.
PolyStructure nijenhuis_deformation(const TwoTermAlgebra& g, const NijenhuisCandidate& n);

// T = (id + l N0, id + l N1, l N2) from the deformed algebra to g, checked
// coefficientwise; labels deform0, deform1, deform2, deform22, deform3 with [l^k].
Report check_trivializing(const TwoTermAlgebra& g, const PolyStructure& p,
                          const NijenhuisCandidate& n);

}  // namespace assoc2
