#pragma once

#include <optional>
#include <string>
#include <vector>

#include "assoc2/cohom2.hpp"

namespace assoc2 {

// Abelian extension 0 -> h -> total -> base -> 0. The subspace h sits at the
// coordinate positions sub0 (degree 0) and sub1 (degree 1) of total.
// proj0 {N0,n0}, proj1 {N1,n1} are the projection p; sigma0 {n0,N0},
// sigma1 {n1,N1} a linear section.
struct Extension2 {
  TwoTermAlgebra total, base;
  std::vector<std::size_t> sub0, sub1;
  Tensor<Rational> proj0, proj1, sigma0, sigma1;
};

// Conditions total.*, hom.*, exact, section, abelian.
Report validate_extension(const Extension2& e);

Representation2 extract_representation(const Extension2& e);
Cochain2 extract_cocycle(const Extension2& e);

// Structure on base (+) V with base indices first; requires c in Z2.
Extension2 build_extension(const TwoTermAlgebra& g, const Representation2& r, const Cochain2& c);

struct EquivalenceResult {
  bool equivalent = false;
  std::string reason;
  Cochain2 c1, c2;
  std::optional<Cochain1> lambda;     // d1 lambda = c1 - c2
  std::optional<Homomorphism2> map;   // e1.total -> e2.total
  std::optional<QVec> certificate;    // y with y^T d1 = 0, y.(c1 - c2) != 0
};

EquivalenceResult check_equivalence(const Extension2& e1, const Extension2& e2);

// Same extension seen through a permutation of the total coordinates
// (perm0[i], perm1[i] = new position of old coordinate i), a shear
// alpha -> alpha + i(s(p alpha)) with s0 {n0,m0}, s1 {n1,m1}, and a new
// section sigma + i t with t0 {n0,m0}, t1 {n1,m1}.
struct Resplit {
  std::vector<std::size_t> perm0, perm1;
  Tensor<Rational> s0, s1, t0, t1;
};

Extension2 resplit(const Extension2& e, const Resplit& r);

}  // namespace assoc2
