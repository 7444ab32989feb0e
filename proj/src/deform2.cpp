#include "assoc2/deform2.hpp"

#include <map>

namespace assoc2 {

namespace {

void check_shapes(const PolyStructure& p) {
  p.base.validate();
  const std::size_t n0 = p.base.n0, n1 = p.base.n1;
  const Cochain2& c = p.first_order;
  expect_shape(c.psi, {n1, n0}, "psi");
  expect_shape(c.omega, {n0, n0, n0}, "omega");
  expect_shape(c.mu, {n0, n1, n1}, "mu");
  expect_shape(c.nu, {n1, n0, n1}, "nu");
  expect_shape(c.theta, {n0, n0, n0, n1}, "theta");
  if (p.theta2) expect_shape(*p.theta2, {n0, n0, n0, n1}, "theta2");
}

void check_shapes(const TwoTermAlgebra& g, const NijenhuisCandidate& n) {
  expect_shape(n.N0, {g.n0, g.n0}, "N0");
  expect_shape(n.N1, {g.n1, g.n1}, "N1");
  expect_shape(n.N2, {g.n0, g.n0, g.n1}, "N2");
}

Tensor<Poly> plus_lambda(const Tensor<Rational>& base, const Tensor<Rational>& t, std::size_t k) {
  return convert<Poly>(base) + scaled(Poly::monomial(1, k), convert<Poly>(t));
}

// The five pieces of the deformation induced by N.
struct NijenhuisMaps {
  Cochain2 first;
  Tensor<Rational> theta2;
};

NijenhuisMaps nijenhuis_maps(const TwoTermAlgebra& g, const NijenhuisCandidate& n) {
  const std::size_t n0 = g.n0, n1 = g.n1;
  using V = QVec;
  auto dd = [&](const V& a) { return act(g.d, a); };
  auto m00 = [&](const V& x, const V& y) { return act(g.l2_00, x, y); };
  auto m01 = [&](const V& x, const V& a) { return act(g.l2_01, x, a); };
  auto m10 = [&](const V& a, const V& x) { return act(g.l2_10, a, x); };
  auto L3 = [&](const V& x, const V& y, const V& z) { return act(g.l3, x, y, z); };
  auto N0 = [&](const V& x) { return act(n.N0, x); };
  auto N1 = [&](const V& a) { return act(n.N1, a); };
  auto N2 = [&](const V& x, const V& y) { return act(n.N2, x, y); };
  auto x_ = [&](std::size_t i) { return basis<Rational>(n0, i); };
  auto a_ = [&](std::size_t i) { return basis<Rational>(n1, i); };

  NijenhuisMaps out{Cochain2(n0, n1, n0, n1), Tensor<Rational>({n0, n0, n0, n1})};
  Cochain2& c = out.first;
  for_each_index({n1}, [&](const Index& t) {
    auto a = a_(t[0]);
    set_fiber(c.psi, t, dd(N1(a)) - N0(dd(a)));
  });
  for_each_index({n0, n0}, [&](const Index& t) {
    auto x = x_(t[0]), y = x_(t[1]);
    set_fiber(c.omega, t, m00(N0(x), y) + m00(x, N0(y)) - N0(m00(x, y)) + dd(N2(x, y)));
  });
  for_each_index({n0, n1}, [&](const Index& t) {
    auto x = x_(t[0]), a = a_(t[1]);
    set_fiber(c.mu, t, m01(N0(x), a) + m01(x, N1(a)) - N1(m01(x, a)) + N2(x, dd(a)));
  });
  for_each_index({n1, n0}, [&](const Index& t) {
    auto a = a_(t[0]), x = x_(t[1]);
    set_fiber(c.nu, t, m10(N1(a), x) + m10(a, N0(x)) - N1(m10(a, x)) + N2(dd(a), x));
  });
  auto omega = [&](const V& x, const V& y) { return act(c.omega, x, y); };
  for_each_index({n0, n0, n0}, [&](const Index& t) {
    auto x = x_(t[0]), y = x_(t[1]), z = x_(t[2]);
    V th1 = L3(N0(x), y, z) + L3(x, N0(y), z) + L3(x, y, N0(z)) - N1(L3(x, y, z)) +
            N2(m00(x, y), z) - N2(x, m00(y, z)) + m10(N2(x, y), z) - m01(x, N2(y, z));
    set_fiber(c.theta, t, th1);
    V th2 = L3(N0(x), N0(y), z) + L3(N0(x), y, N0(z)) + L3(x, N0(y), N0(z)) - N1(th1) +
            N2(omega(x, y), z) - N2(x, omega(y, z)) + m10(N2(x, y), N0(z)) -
            m01(N0(x), N2(y, z));
    set_fiber(out.theta2, t, th2);
  });
  return out;
}

}  // namespace

PolyStructure zero_deformation(const TwoTermAlgebra& g) {
  return {g, Cochain2(g.n0, g.n1, g.n0, g.n1), std::nullopt};
}

PolyAlgebra to_poly(const PolyStructure& p) {
  check_shapes(p);
  const TwoTermAlgebra& g = p.base;
  const Cochain2& c = p.first_order;
  PolyAlgebra a(g.n0, g.n1);
  a.d = plus_lambda(g.d, c.psi, 1);
  a.l2_00 = plus_lambda(g.l2_00, c.omega, 1);
  a.l2_01 = plus_lambda(g.l2_01, c.mu, 1);
  a.l2_10 = plus_lambda(g.l2_10, c.nu, 1);
  a.l3 = plus_lambda(g.l3, c.theta, 1);
  if (p.theta2) a.l3 = a.l3 + scaled(Poly::monomial(1, 2), convert<Poly>(*p.theta2));
  return a;
}

TwoTermAlgebra specialize(const PolyStructure& p, const Rational& t) {
  check_shapes(p);
  const TwoTermAlgebra& g = p.base;
  const Cochain2& c = p.first_order;
  TwoTermAlgebra a(g.n0, g.n1);
  a.d = g.d + scaled(t, c.psi);
  a.l2_00 = g.l2_00 + scaled(t, c.omega);
  a.l2_01 = g.l2_01 + scaled(t, c.mu);
  a.l2_10 = g.l2_10 + scaled(t, c.nu);
  a.l3 = g.l3 + scaled(t, c.theta);
  if (p.theta2) a.l3 = a.l3 + scaled(Rational(t * t), *p.theta2);
  return a;
}

TwoTermAlgebra as_structure(const Cochain2& c, std::size_t n0, std::size_t n1) {
  TwoTermAlgebra a(n0, n1);
  a.d = c.psi;
  a.l2_00 = c.omega;
  a.l2_01 = c.mu;
  a.l2_10 = c.nu;
  a.l3 = c.theta;
  a.validate();
  return a;
}

GeneratesVerdict check_generates(const PolyStructure& p) {
  check_shapes(p);
  if (p.theta2) throw PreconditionError("check_generates: second-order term must be absent");
  require_pass(check_algebra(p.base), "base algebra");
  GeneratesVerdict v;
  v.coefficients = coefficient_report(check_algebra(to_poly(p)), 2);
  bool base_ok = true;
  for (const auto& x : v.coefficients.violations) {
    const std::string& c = x.condition;
    if (c.ends_with("[l^0]")) base_ok = false;
  }
  if (!base_ok) throw std::logic_error("check_generates: lambda^0 coefficient fails");
  v.cocycle_ok = v.standalone_ok = true;
  for (const auto& x : v.coefficients.violations) {
    if (x.condition.ends_with("[l^1]")) v.cocycle_ok = false;
    if (x.condition.ends_with("[l^2]")) v.standalone_ok = false;
  }
  const TwoTermAlgebra& g = p.base;
  v.residual_zero = is_zero(d2_residual(g, adjoint_representation(g), p.first_order));
  v.structure_passes = check_algebra(as_structure(p.first_order, g.n0, g.n1)).pass();
  for (int t = 1; t <= 3; ++t) v.sampled[t - 1] = check_algebra(specialize(p, t)).pass();
  return v;
}

NijenhuisCandidate zero_candidate(const TwoTermAlgebra& g) {
  return {Tensor<Rational>({g.n0, g.n0}), Tensor<Rational>({g.n1, g.n1}),
          Tensor<Rational>({g.n0, g.n0, g.n1})};
}

NijenhuisCandidate identity_candidate(const TwoTermAlgebra& g) {
  NijenhuisCandidate n = zero_candidate(g);
  n.N0 = identity_map<Rational>(g.n0);
  n.N1 = identity_map<Rational>(g.n1);
  return n;
}

Report check_nijenhuis(const TwoTermAlgebra& g, const NijenhuisCandidate& n) {
  g.validate();
  check_shapes(g, n);
  require_pass(check_algebra(g), "algebra");
  const std::size_t n0 = g.n0, n1 = g.n1;
  NijenhuisMaps m = nijenhuis_maps(g, n);
  const Cochain2& c = m.first;
  using V = QVec;
  auto N0 = [&](const V& x) { return act(n.N0, x); };
  auto N1 = [&](const V& a) { return act(n.N1, a); };
  auto N2 = [&](const V& x, const V& y) { return act(n.N2, x, y); };
  auto psi = [&](const V& a) { return act(c.psi, a); };
  auto x_ = [&](std::size_t i) { return basis<Rational>(n0, i); };
  auto a_ = [&](std::size_t i) { return basis<Rational>(n1, i); };

  Report r;
  r.begin("i");
  for_each_index({n1}, [&](const Index& t) { r.expect(t, N0(psi(a_(t[0]))), V(n0)); });
  r.begin("ii");
  for_each_index({n0, n0}, [&](const Index& t) {
    auto x = x_(t[0]), y = x_(t[1]);
    r.expect(t, N0(act(c.omega, x, y)), act(g.l2_00, N0(x), N0(y)));
  });
  r.begin("iii");
  for_each_index({n0, n1}, [&](const Index& t) {
    auto x = x_(t[0]), a = a_(t[1]);
    r.expect(t, N1(act(c.mu, x, a)), act(g.l2_01, N0(x), N1(a)) + N2(x, psi(a)));
  });
  r.begin("iv");
  for_each_index({n1, n0}, [&](const Index& t) {
    auto a = a_(t[0]), x = x_(t[1]);
    r.expect(t, N1(act(c.nu, a, x)), act(g.l2_10, N1(a), N0(x)) + N2(psi(a), x));
  });
  r.begin("v");
  for_each_index({n0, n0, n0}, [&](const Index& t) {
    auto x = x_(t[0]), y = x_(t[1]), z = x_(t[2]);
    r.expect(t, N1(act(m.theta2, x, y, z)), act(g.l3, N0(x), N0(y), N0(z)));
  });
  return r;
}

PolyStructure nijenhuis_deformation(const TwoTermAlgebra& g, const NijenhuisCandidate& n) {
  require_pass(check_nijenhuis(g, n), "Nijenhuis operator");
  NijenhuisMaps m = nijenhuis_maps(g, n);
  return {g, m.first, m.theta2};
}

Report check_trivializing(const TwoTermAlgebra& g, const PolyStructure& p,
                          const NijenhuisCandidate& n) {
  check_shapes(p);
  check_shapes(g, n);
  if (!(p.base == g)) throw PreconditionError("check_trivializing: deformation base differs");
  Hom2T<Poly> T;
  const Poly l = Poly::lambda();
  T.F0 = convert<Poly>(identity_map<Rational>(g.n0)) + scaled(l, convert<Poly>(n.N0));
  T.F1 = convert<Poly>(identity_map<Rational>(g.n1)) + scaled(l, convert<Poly>(n.N1));
  T.F2 = scaled(l, convert<Poly>(n.N2));
  CheckReport<Poly> raw = check_homomorphism(to_poly(p), lift<Poly>(g), T);
  static const std::map<std::string, std::string> names = {
      {"i", "deform0"}, {"ii", "deform1"}, {"iii1", "deform2"}, {"iii2", "deform22"},
      {"iv", "deform3"}};
  for (auto& c : raw.conditions) c = names.at(c);
  for (auto& v : raw.violations) v.condition = names.at(v.condition);
  return coefficient_report(raw, 3);
}

}  // namespace assoc2
