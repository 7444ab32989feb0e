#pragma once

#include <cstddef>
#include <vector>

#include "assoc2/matrix.hpp"
#include "assoc2/report.hpp"
#include "assoc2/tensor.hpp"

namespace assoc2 {

// Associative algebra by structure constants: mul(i,j,k) = coefficient of
// e_k in e_i e_j.
template <class K>
struct AssocAlgebraT {
  std::size_t dim = 0;
  Tensor<K> mul;

  AssocAlgebraT() = default;
  explicit AssocAlgebraT(std::size_t n) : dim(n), mul({n, n, n}) {}
  friend bool operator==(const AssocAlgebraT&, const AssocAlgebraT&) = default;
};

// Bimodule M over an algebra of dimension a: left {a,m,m}, right {m,a,m}.
template <class K>
struct BimoduleT {
  std::size_t dim = 0;
  Tensor<K> left, right;

  BimoduleT() = default;
  BimoduleT(std::size_t a, std::size_t m) : dim(m), left({a, m, m}), right({m, a, m}) {}
  friend bool operator==(const BimoduleT&, const BimoduleT&) = default;
};

using AssocAlgebra = AssocAlgebraT<Rational>;
using Bimodule = BimoduleT<Rational>;

template <class K>
CheckReport<K> check_associative(const AssocAlgebraT<K>& a);
template <class K>
CheckReport<K> check_bimodule(const AssocAlgebraT<K>& a, const BimoduleT<K>& m);

Bimodule regular_bimodule(const AssocAlgebra& a);

// Hochschild n-cochain: values has shape {dim A (n times), dim M}.
struct HochschildCochain {
  std::size_t arity = 0;
  Tensor<Rational> values;
};

HochschildCochain hochschild_coboundary(const AssocAlgebra& a, const Bimodule& m,
                                        const HochschildCochain& f);

// Two-term complex V1 -> V0; partial has shape {v1, v0}.
struct Complex2 {
  std::size_t v0 = 0, v1 = 0;
  Tensor<Rational> partial;

  Complex2() = default;
  Complex2(std::size_t a0, std::size_t a1) : v0(a0), v1(a1), partial({a1, a0}) {}
  friend bool operator==(const Complex2&, const Complex2&) = default;
};

// Associative 2-algebra g1 -> g0 with d {n1,n0}, l2_00 {n0,n0,n0},
// l2_01 {n0,n1,n1}, l2_10 {n1,n0,n1}, l3 {n0,n0,n0,n1}.
template <class K>
struct Alg2T {
  std::size_t n0 = 0, n1 = 0;
  Tensor<K> d, l2_00, l2_01, l2_10, l3;

  Alg2T() = default;
  Alg2T(std::size_t a0, std::size_t a1)
      : n0(a0), n1(a1), d({a1, a0}), l2_00({a0, a0, a0}), l2_01({a0, a1, a1}),
        l2_10({a1, a0, a1}), l3({a0, a0, a0, a1}) {}

  void validate() const {
    expect_shape(d, {n1, n0}, "d");
    expect_shape(l2_00, {n0, n0, n0}, "l2_00");
    expect_shape(l2_01, {n0, n1, n1}, "l2_01");
    expect_shape(l2_10, {n1, n0, n1}, "l2_10");
    expect_shape(l3, {n0, n0, n0, n1}, "l3");
  }
  Complex2 complex() const;
  friend bool operator==(const Alg2T&, const Alg2T&) = default;
};

using TwoTermAlgebra = Alg2T<Rational>;
using PolyAlgebra = Alg2T<Poly>;

template <>
inline Complex2 Alg2T<Rational>::complex() const {
  Complex2 c(n0, n1);
  c.partial = d;
  return c;
}

// F0 {n0,n0'}, F1 {n1,n1'}, F2 {n0,n0,n1'}.
template <class K>
struct Hom2T {
  Tensor<K> F0, F1, F2;
  friend bool operator==(const Hom2T&, const Hom2T&) = default;
};

using Homomorphism2 = Hom2T<Rational>;

template <class K>
Alg2T<K> lift(const TwoTermAlgebra& g) {
  Alg2T<K> r(g.n0, g.n1);
  r.d = convert<K>(g.d);
  r.l2_00 = convert<K>(g.l2_00);
  r.l2_01 = convert<K>(g.l2_01);
  r.l2_10 = convert<K>(g.l2_10);
  r.l3 = convert<K>(g.l3);
  return r;
}

// Conditions a, b, c, d, e1, e2, e3, f on all basis tuples.
template <class K>
CheckReport<K> check_algebra(const Alg2T<K>& g);

// Conditions i, ii, iii1, iii2, iv on all basis tuples.
template <class K>
CheckReport<K> check_homomorphism(const Alg2T<K>& src, const Alg2T<K>& tgt, const Hom2T<K>& h);

Homomorphism2 identity_homomorphism(const TwoTermAlgebra& g);
// (g after f): (G0F0, G1F1, G2(F0 x F0) + G1 F2).
Homomorphism2 compose_homomorphisms(const Homomorphism2& g, const Homomorphism2& f);

// The unique structure on the complex of g making (F0, F1, F2) a
// homomorphism g -> result. F0, F1 must be invertible (PreconditionError).
TwoTermAlgebra transport(const TwoTermAlgebra& g, const Homomorphism2& f);

struct HomotopyDerivation {
  Tensor<Rational> D0, D1, D2;
};

// Conditions chain, a, b, c, d.
Report check_derivation(const TwoTermAlgebra& g, const HomotopyDerivation& der);

// Strict 2-algebra End(V). Degree-0 basis elements are pairs (X0, X1) of
// matrices with X0 d = d X1; degree-1 basis is the matrix units of Hom(V0,V1).
struct EndAlgebra {
  TwoTermAlgebra algebra;
  std::vector<std::pair<Matrix, Matrix>> degree0;
  std::vector<Matrix> degree1;
};

EndAlgebra build_end_algebra(const Complex2& v);

// Throws PreconditionError listing the failing conditions.
void require_pass(const Report& r, const std::string& what);

}  // namespace assoc2
