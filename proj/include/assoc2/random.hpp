#pragma once

#include <random>

#include "assoc2/ext2.hpp"
#include "assoc2/xmod.hpp"

namespace assoc2 {

using Rng = std::mt19937_64;

// Small rationals; zero with probability 1 - density.
Rational random_rational(Rng& rng, double density = 1.0);
Tensor<Rational> random_tensor(const Shape& s, Rng& rng, double density = 0.5);
Matrix random_invertible(std::size_t n, Rng& rng);
// Invertible F0, F1 and arbitrary F2 on g's complex.
Homomorphism2 random_isomorphism(const TwoTermAlgebra& g, Rng& rng);

// A random element of Z2(g, r), as a combination of a kernel basis.
Cochain2 random_cocycle(const TwoTermAlgebra& g, const Representation2& r, Rng& rng);

// A 2-algebra satisfying all axioms: a random abelian extension of one of
// the small fixtures, transported along a random isomorphism.
TwoTermAlgebra random_algebra(Rng& rng);

// Cochain drawn from: zero, a coboundary, a cocycle, or a sparse random one.
enum class PerturbationKind { Zero, Coboundary, Cocycle, Sparse };
Cochain2 random_perturbation(const TwoTermAlgebra& g, const Representation2& r,
                             PerturbationKind kind, Rng& rng);

XCochain2 random_xcocycle(const CrossedModule& x, const XModRepresentation& r, Rng& rng);
// Random extension of a small crossed module by its adjoint, conjugated by
// random invertible maps on p and h.
CrossedModule random_crossed_module(Rng& rng);
XCochain2 random_xperturbation(const CrossedModule& x, PerturbationKind kind, Rng& rng);

}  // namespace assoc2
