#pragma once

#include <array>
#include <optional>
#include <string>

#include "assoc2/ext2.hpp"

namespace assoc2 {

// Crossed module (h, p, f): p associative, h a p-bimodule, f {h,p}.
template <class K>
struct CrossedModuleT {
  AssocAlgebraT<K> p;
  BimoduleT<K> h;
  Tensor<K> f;

  CrossedModuleT() = default;
  CrossedModuleT(std::size_t np, std::size_t nh) : p(np), h(np, nh), f({nh, np}) {}
  friend bool operator==(const CrossedModuleT&, const CrossedModuleT&) = default;
};

using CrossedModule = CrossedModuleT<Rational>;

// Labels assoc, bimodule_left, bimodule_middle, bimodule_right, equiv_l
// f(x.a) = x.f(a), equiv_r f(a.x) = f(a).x, peiffer f(a).b = a.f(b).
template <class K>
CheckReport<K> check_crossed_module(const CrossedModuleT<K>& x);

TwoTermAlgebra to_strict(const CrossedModule& x);
// Requires l3 = 0 (PreconditionError otherwise).
CrossedModule from_strict(const TwoTermAlgebra& g);

// Representation (V, W, phi) with phi {v,w}, tr_l {h,w,v} (a>w) and
// tr_r {w,h,v} (w<a); V and W are p-bimodules.
struct XModRepresentation {
  Bimodule V, W;
  Tensor<Rational> phi, tr_l, tr_r;

  XModRepresentation() = default;
  XModRepresentation(std::size_t np, std::size_t nh, std::size_t nv, std::size_t nw)
      : V(np, nv), W(np, nw), phi({nv, nw}), tr_l({nh, nw, nv}), tr_r({nw, nh, nv}) {}
  friend bool operator==(const XModRepresentation&, const XModRepresentation&) = default;
};

// Labels V.left/middle/right, W.left/middle/right, equiv_l, equiv_r,
// phi_tr_l phi(a>w) = f(a).w, phi_tr_r phi(w<a) = w.f(a),
// mixed_l f(a).v = a>phi(v), mixed_r phi(v)<a = v.f(a), and
// c11 x.(w<a) = (x.w)<a, c12 w<(x.a) = (w.x)<a, c13 a>(w.x) = (a>w).x,
// c14 a>(x.w) = (a.x)>w, c15 x.(a>w) = (x.a)>w, c16 w<(a.x) = (w<a).x.
Report check_xmod_representation(const CrossedModule& x, const XModRepresentation& r);

XModRepresentation xmod_adjoint(const CrossedModule& x);
XModRepresentation xrep_from_strict(const Representation2& r);
Representation2 xrep_to_strict(const CrossedModule& x, const XModRepresentation& r);

CrossedModule semidirect_product(const CrossedModule& x, const XModRepresentation& r);

// N0 {p,w}, N1 {h,v}.
struct XCochain1 {
  Tensor<Rational> N0, N1;
  friend bool operator==(const XCochain1&, const XCochain1&) = default;
};

// psi {h,w}, omega {p,p,w}, mu {p,h,v}, nu {h,p,v}.
struct XCochain2 {
  Tensor<Rational> psi, omega, mu, nu;

  XCochain2() = default;
  XCochain2(std::size_t np, std::size_t nh, std::size_t nv, std::size_t nw)
      : psi({nh, nw}), omega({np, np, nw}), mu({np, nh, nv}), nu({nh, np, nv}) {}
  friend bool operator==(const XCochain2&, const XCochain2&) = default;
};

XCochain1 zero_xcochain1(const CrossedModule& x, const XModRepresentation& r);
XCochain2 zero_xcochain2(const CrossedModule& x, const XModRepresentation& r);
QVec flatten(const XCochain1& c);
QVec flatten(const XCochain2& c);
XCochain1 unflatten_xcochain1(const CrossedModule& x, const XModRepresentation& r, const QVec& v);
XCochain2 unflatten_xcochain2(const CrossedModule& x, const XModRepresentation& r, const QVec& v);
XCochain2 operator+(const XCochain2& a, const XCochain2& b);
XCochain2 operator-(const XCochain2& a, const XCochain2& b);
Cochain2 to_strict(const XCochain2& c, std::size_t np);
XCochain2 from_strict(const Cochain2& c);

XCochain2 xmod_d1(const CrossedModule& x, const XModRepresentation& r, const XCochain1& c);
// Families xc01..xc07, each row-major over (tuple..., output).
std::vector<ResidualBlock> xmod_d2_blocks(const CrossedModule& x, const XModRepresentation& r);
QVec xmod_d2_residual(const CrossedModule& x, const XModRepresentation& r, const XCochain2& c);
CoboundaryMatrices xmod_matrices(const CrossedModule& x, const XModRepresentation& r);
SecondCohomology xmod_h2(const CrossedModule& x, const XModRepresentation& r);

// Deformation f + l psi, p-product + l omega, actions + l mu, + l nu.
CrossedModuleT<Poly> xmod_deform(const CrossedModule& x, const XCochain2& c);
CrossedModule xmod_specialize(const CrossedModule& x, const XCochain2& c, const Rational& t);
// (h, p, psi) with product omega and actions mu, nu.
CrossedModule xmod_as_structure(const XCochain2& c);

struct XGeneratesVerdict {
  bool cocycle_ok = false;
  bool standalone_ok = false;
  Report coefficients;
  bool residual_zero = false;
  bool structure_passes = false;
  std::array<bool, 3> sampled{};

  bool generates() const { return cocycle_ok && standalone_ok; }
};

// c has the adjoint shape (v = h, w = p).
XGeneratesVerdict xmod_check_generates(const CrossedModule& x, const XCochain2& c);

// N0 {p,p}, N1 {h,h}. Conditions i fN1 = N0f, ii N0(x._N y) = N0x.N0y,
// iii N1(x._N a) = N0x.N1a, iv N1(a._N x) = N1a.N0x.
Report xmod_check_nijenhuis(const CrossedModule& x, const XCochain1& n);
XCochain2 xmod_nijenhuis_deformation(const CrossedModule& x, const XCochain1& n);

// Strict homomorphism (T0 on p, T1 on h): labels hom_f, hom_p, hom_l, hom_r.
template <class K>
CheckReport<K> check_xmod_homomorphism(const CrossedModuleT<K>& src, const CrossedModuleT<K>& tgt,
                                       const Tensor<K>& T0, const Tensor<K>& T1);

// T = (id + l N0, id + l N1) from the deformation by c to x, coefficientwise.
Report xmod_check_trivializing(const CrossedModule& x, const XCochain2& c, const XCochain1& n);

// Abelian extension of crossed modules. W sits at sub_p in total.p, V at
// sub_h in total.h; proj_p {P,p}, proj_h {H,h}, sigma_p {p,P}, sigma_h {h,H}.
struct XModExtension {
  CrossedModule total, base;
  std::vector<std::size_t> sub_p, sub_h;
  Tensor<Rational> proj_p, proj_h, sigma_p, sigma_h;
};

Extension2 to_strict(const XModExtension& e);
Report validate_xmod_extension(const XModExtension& e);
XModRepresentation xmod_extract_representation(const XModExtension& e);
XCochain2 xmod_extract_cocycle(const XModExtension& e);
XModExtension xmod_build_extension(const CrossedModule& x, const XModRepresentation& r,
                                   const XCochain2& c);

struct XEquivalenceResult {
  bool equivalent = false;
  std::string reason;
  XCochain2 c1, c2;
  std::optional<XCochain1> lambda;
  std::optional<std::pair<Tensor<Rational>, Tensor<Rational>>> map;  // (F0 on p, F1 on h)
  std::optional<QVec> certificate;
};

XEquivalenceResult xmod_check_equivalence(const XModExtension& e1, const XModExtension& e2);

}  // namespace assoc2
