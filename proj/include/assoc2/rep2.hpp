#pragma once

#include "assoc2/algebra2.hpp"

namespace assoc2 {

// Representation of a 2-algebra (dims n0, n1) on a complex V1 -> V0
// (dims m0, m1). Shapes:
//   partial {m1,m0}; left0_v0 {n0,m0,m0} x>u; left0_v1 {n0,m1,m1} x>m;
//   right0_v0 {m0,n0,m0} u<x; right0_v1 {m1,n0,m1} m<x;
//   left1 {n1,m0,m1} a>u; right1 {m0,n1,m1} u<a;
//   tri_l {n0,n0,m0,m1} (x,y)>u; tri_m {n0,m0,n0,m1} x>u<y;
//   tri_r {m0,n0,n0,m1} u<(x,y).
struct Representation2 {
  std::size_t n0 = 0, n1 = 0, m0 = 0, m1 = 0;
  Tensor<Rational> partial, left0_v0, left0_v1, right0_v0, right0_v1, left1, right1, tri_l,
      tri_m, tri_r;

  Representation2() = default;
  Representation2(std::size_t g0, std::size_t g1, std::size_t v0, std::size_t v1);

  void validate() const;
  Complex2 complex() const;
  friend bool operator==(const Representation2&, const Representation2&) = default;
};

// Axioms R01..R16 and the chain-map compatibilities RC1..RC6.
Report check_representation(const TwoTermAlgebra& g, const Representation2& r);

Representation2 adjoint_representation(const TwoTermAlgebra& g);

// All actions zero on the given complex.
Representation2 trivial_representation(const TwoTermAlgebra& g, const Complex2& v);

}  // namespace assoc2
