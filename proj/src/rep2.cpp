#include "assoc2/rep2.hpp"

namespace assoc2 {

Representation2::Representation2(std::size_t g0, std::size_t g1, std::size_t v0, std::size_t v1)
    : n0(g0), n1(g1), m0(v0), m1(v1), partial({v1, v0}), left0_v0({g0, v0, v0}),
      left0_v1({g0, v1, v1}), right0_v0({v0, g0, v0}), right0_v1({v1, g0, v1}),
      left1({g1, v0, v1}), right1({v0, g1, v1}), tri_l({g0, g0, v0, v1}),
      tri_m({g0, v0, g0, v1}), tri_r({v0, g0, g0, v1}) {}

void Representation2::validate() const {
  expect_shape(partial, {m1, m0}, "partial");
  expect_shape(left0_v0, {n0, m0, m0}, "left0_v0");
  expect_shape(left0_v1, {n0, m1, m1}, "left0_v1");
  expect_shape(right0_v0, {m0, n0, m0}, "right0_v0");
  expect_shape(right0_v1, {m1, n0, m1}, "right0_v1");
  expect_shape(left1, {n1, m0, m1}, "left1");
  expect_shape(right1, {m0, n1, m1}, "right1");
  expect_shape(tri_l, {n0, n0, m0, m1}, "tri_l");
  expect_shape(tri_m, {n0, m0, n0, m1}, "tri_m");
  expect_shape(tri_r, {m0, n0, n0, m1}, "tri_r");
}

Complex2 Representation2::complex() const {
  Complex2 c(m0, m1);
  c.partial = partial;
  return c;
}

Report check_representation(const TwoTermAlgebra& g, const Representation2& rep) {
  g.validate();
  rep.validate();
  if (rep.n0 != g.n0 || rep.n1 != g.n1) throw ShapeError("representation: algebra dims differ");
  const std::size_t n0 = g.n0, n1 = g.n1, m0 = rep.m0, m1 = rep.m1;
  using V = QVec;
  auto dg = [&](const V& a) { return act(g.d, a); };
  auto m00 = [&](const V& x, const V& y) { return act(g.l2_00, x, y); };
  auto m01 = [&](const V& x, const V& a) { return act(g.l2_01, x, a); };
  auto m10 = [&](const V& a, const V& x) { return act(g.l2_10, a, x); };
  auto L3 = [&](const V& x, const V& y, const V& z) { return act(g.l3, x, y, z); };
  auto P = [&](const V& m) { return act(rep.partial, m); };
  auto L0u = [&](const V& x, const V& u) { return act(rep.left0_v0, x, u); };
  auto L0m = [&](const V& x, const V& m) { return act(rep.left0_v1, x, m); };
  auto R0u = [&](const V& u, const V& x) { return act(rep.right0_v0, u, x); };
  auto R0m = [&](const V& m, const V& x) { return act(rep.right0_v1, m, x); };
  auto L1 = [&](const V& a, const V& u) { return act(rep.left1, a, u); };
  auto R1 = [&](const V& u, const V& a) { return act(rep.right1, u, a); };
  auto TL = [&](const V& x, const V& y, const V& u) { return act(rep.tri_l, x, y, u); };
  auto TM = [&](const V& x, const V& u, const V& y) { return act(rep.tri_m, x, u, y); };
  auto TR = [&](const V& u, const V& x, const V& y) { return act(rep.tri_r, u, x, y); };
  auto x_ = [&](std::size_t i) { return basis<Rational>(n0, i); };
  auto a_ = [&](std::size_t i) { return basis<Rational>(n1, i); };
  auto u_ = [&](std::size_t i) { return basis<Rational>(m0, i); };
  auto m_ = [&](std::size_t i) { return basis<Rational>(m1, i); };

  Report r;
  r.begin("R01");
  for_each_index({n0, n0, m0}, [&](const Index& t) {
    auto x = x_(t[0]), y = x_(t[1]), u = u_(t[2]);
    r.expect(t, L0u(m00(x, y), u) - L0u(x, L0u(y, u)), P(TL(x, y, u)));
  });
  r.begin("R02");
  for_each_index({n0, n0, m1}, [&](const Index& t) {
    auto x = x_(t[0]), y = x_(t[1]), m = m_(t[2]);
    r.expect(t, L0m(m00(x, y), m) - L0m(x, L0m(y, m)), TL(x, y, P(m)));
  });
  r.begin("R03");
  for_each_index({n0, n1, m0}, [&](const Index& t) {
    auto x = x_(t[0]), a = a_(t[1]), u = u_(t[2]);
    r.expect(t, L1(m01(x, a), u) - L0m(x, L1(a, u)), TL(x, dg(a), u));
  });
  r.begin("R04");
  for_each_index({n1, n0, m0}, [&](const Index& t) {
    auto a = a_(t[0]), x = x_(t[1]), u = u_(t[2]);
    r.expect(t, L1(m10(a, x), u) - L1(a, L0u(x, u)), TL(dg(a), x, u));
  });
  r.begin("R05");
  for_each_index({n0, m0, n0}, [&](const Index& t) {
    auto x = x_(t[0]), u = u_(t[1]), y = x_(t[2]);
    r.expect(t, R0u(L0u(x, u), y) - L0u(x, R0u(u, y)), P(TM(x, u, y)));
  });
  r.begin("R06");
  for_each_index({n0, m1, n0}, [&](const Index& t) {
    auto x = x_(t[0]), m = m_(t[1]), y = x_(t[2]);
    r.expect(t, R0m(L0m(x, m), y) - L0m(x, R0m(m, y)), TM(x, P(m), y));
  });
  r.begin("R07");
  for_each_index({n0, m0, n1}, [&](const Index& t) {
    auto x = x_(t[0]), u = u_(t[1]), a = a_(t[2]);
    r.expect(t, R1(L0u(x, u), a) - L0m(x, R1(u, a)), TM(x, u, dg(a)));
  });
  r.begin("R08");
  for_each_index({n1, m0, n0}, [&](const Index& t) {
    auto a = a_(t[0]), u = u_(t[1]), y = x_(t[2]);
    r.expect(t, R0m(L1(a, u), y) - L1(a, R0u(u, y)), TM(dg(a), u, y));
  });
  r.begin("R09");
  for_each_index({m0, n0, n0}, [&](const Index& t) {
    auto u = u_(t[0]), x = x_(t[1]), y = x_(t[2]);
    r.expect(t, R0u(R0u(u, x), y) - R0u(u, m00(x, y)), P(TR(u, x, y)));
  });
  r.begin("R10");
  for_each_index({m1, n0, n0}, [&](const Index& t) {
    auto m = m_(t[0]), x = x_(t[1]), y = x_(t[2]);
    r.expect(t, R0m(R0m(m, x), y) - R0m(m, m00(x, y)), TR(P(m), x, y));
  });
  r.begin("R11");
  for_each_index({m0, n0, n1}, [&](const Index& t) {
    auto u = u_(t[0]), x = x_(t[1]), a = a_(t[2]);
    r.expect(t, R1(R0u(u, x), a) - R1(u, m01(x, a)), TR(u, x, dg(a)));
  });
  r.begin("R12");
  for_each_index({m0, n1, n0}, [&](const Index& t) {
    auto u = u_(t[0]), a = a_(t[1]), x = x_(t[2]);
    r.expect(t, R0m(R1(u, a), x) - R1(u, m10(a, x)), TR(u, dg(a), x));
  });
  r.begin("R13");
  for_each_index({n0, m0, n0, n0}, [&](const Index& t) {
    auto x = x_(t[0]), u = u_(t[1]), y = x_(t[2]), z = x_(t[3]);
    r.expect(t, L0m(x, TR(u, y, z)) + R0m(TM(x, u, y), z),
             TR(L0u(x, u), y, z) - TM(x, R0u(u, y), z) + TM(x, u, m00(y, z)));
  });
  r.begin("R14");
  for_each_index({n0, n0, m0, n0}, [&](const Index& t) {
    auto x = x_(t[0]), y = x_(t[1]), u = u_(t[2]), z = x_(t[3]);
    r.expect(t, L0m(x, TM(y, u, z)) + R0m(TL(x, y, u), z),
             TM(m00(x, y), u, z) - TM(x, L0u(y, u), z) + TL(x, y, R0u(u, z)));
  });
  r.begin("R15");
  for_each_index({n0, n0, n0, m0}, [&](const Index& t) {
    auto x = x_(t[0]), y = x_(t[1]), z = x_(t[2]), u = u_(t[3]);
    r.expect(t, L0m(x, TL(y, z, u)) + L1(L3(x, y, z), u),
             TL(m00(x, y), z, u) - TL(x, m00(y, z), u) + TL(x, y, L0u(z, u)));
  });
  r.begin("R16");
  for_each_index({m0, n0, n0, n0}, [&](const Index& t) {
    auto u = u_(t[0]), x = x_(t[1]), y = x_(t[2]), z = x_(t[3]);
    r.expect(t, R1(u, L3(x, y, z)) + R0m(TR(u, x, y), z),
             TR(R0u(u, x), y, z) - TR(u, m00(x, y), z) + TR(u, x, m00(y, z)));
  });
  r.begin("RC1");
  for_each_index({n0, m1}, [&](const Index& t) {
    auto x = x_(t[0]), m = m_(t[1]);
    r.expect(t, P(L0m(x, m)), L0u(x, P(m)));
  });
  r.begin("RC2");
  for_each_index({m1, n0}, [&](const Index& t) {
    auto m = m_(t[0]), x = x_(t[1]);
    r.expect(t, P(R0m(m, x)), R0u(P(m), x));
  });
  r.begin("RC3");
  for_each_index({n1, m0}, [&](const Index& t) {
    auto a = a_(t[0]), u = u_(t[1]);
    r.expect(t, P(L1(a, u)), L0u(dg(a), u));
  });
  r.begin("RC4");
  for_each_index({m0, n1}, [&](const Index& t) {
    auto u = u_(t[0]), a = a_(t[1]);
    r.expect(t, P(R1(u, a)), R0u(u, dg(a)));
  });
  r.begin("RC5");
  for_each_index({n1, m1}, [&](const Index& t) {
    auto a = a_(t[0]), m = m_(t[1]);
    r.expect(t, L0m(dg(a), m), L1(a, P(m)));
  });
  r.begin("RC6");
  for_each_index({m1, n1}, [&](const Index& t) {
    auto m = m_(t[0]), a = a_(t[1]);
    r.expect(t, R0m(m, dg(a)), R1(P(m), a));
  });
  return r;
}

Representation2 adjoint_representation(const TwoTermAlgebra& g) {
  g.validate();
  Representation2 r(g.n0, g.n1, g.n0, g.n1);
  r.partial = g.d;
  r.left0_v0 = g.l2_00;
  r.left0_v1 = g.l2_01;
  r.right0_v0 = g.l2_00;
  r.right0_v1 = g.l2_10;
  r.left1 = g.l2_10;
  r.right1 = g.l2_01;
  r.tri_l = g.l3;
  r.tri_m = g.l3;
  r.tri_r = g.l3;
  return r;
}

Representation2 trivial_representation(const TwoTermAlgebra& g, const Complex2& v) {
  expect_shape(v.partial, {v.v1, v.v0}, "partial");
  Representation2 r(g.n0, g.n1, v.v0, v.v1);
  r.partial = v.partial;
  return r;
}

}  // namespace assoc2
