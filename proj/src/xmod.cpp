#include "assoc2/xmod.hpp"

#include "assoc2/deform2.hpp"

namespace assoc2 {

namespace {

void check_shapes(const CrossedModule& x) {
  const std::size_t np = x.p.dim, nh = x.h.dim;
  expect_shape(x.p.mul, {np, np, np}, "p.mul");
  expect_shape(x.h.left, {np, nh, nh}, "h.left");
  expect_shape(x.h.right, {nh, np, nh}, "h.right");
  expect_shape(x.f, {nh, np}, "f");
}

void check_shapes(const CrossedModule& x, const XModRepresentation& r) {
  check_shapes(x);
  const std::size_t np = x.p.dim, nh = x.h.dim, nv = r.V.dim, nw = r.W.dim;
  expect_shape(r.V.left, {np, nv, nv}, "V.left");
  expect_shape(r.V.right, {nv, np, nv}, "V.right");
  expect_shape(r.W.left, {np, nw, nw}, "W.left");
  expect_shape(r.W.right, {nw, np, nw}, "W.right");
  expect_shape(r.phi, {nv, nw}, "phi");
  expect_shape(r.tr_l, {nh, nw, nv}, "tr_l");
  expect_shape(r.tr_r, {nw, nh, nv}, "tr_r");
}

void check_shapes(const CrossedModule& x, const XModRepresentation& r, const XCochain2& c) {
  const std::size_t np = x.p.dim, nh = x.h.dim, nv = r.V.dim, nw = r.W.dim;
  expect_shape(c.psi, {nh, nw}, "psi");
  expect_shape(c.omega, {np, np, nw}, "omega");
  expect_shape(c.mu, {np, nh, nv}, "mu");
  expect_shape(c.nu, {nh, np, nv}, "nu");
}

void append(QVec& v, const Tensor<Rational>& t) { v.insert(v.end(), t.data().begin(), t.data().end()); }

void take(Tensor<Rational>& t, const QVec& v, std::size_t& pos) {
  if (pos + t.size() > v.size()) throw ShapeError("unflatten: vector too short");
  std::copy(v.begin() + pos, v.begin() + pos + t.size(), t.data().begin());
  pos += t.size();
}

void require_xmod(const CrossedModule& x) { require_pass(check_crossed_module(x), "crossed module"); }

void require_xmod(const CrossedModule& x, const XModRepresentation& r) {
  require_xmod(x);
  require_pass(check_xmod_representation(x, r), "crossed-module representation");
}

QVec sub_coords(const QVec& v, const std::vector<std::size_t>& sub) {
  QVec out;
  for (auto s : sub) out.push_back(v[s]);
  return out;
}

QVec embed(std::size_t n, const QVec& u, const std::vector<std::size_t>& sub) {
  QVec out(n);
  for (std::size_t i = 0; i < sub.size(); ++i) out[sub[i]] = u[i];
  return out;
}

}  // namespace

template <class K>
CheckReport<K> check_crossed_module(const CrossedModuleT<K>& x) {
  const std::size_t np = x.p.dim, nh = x.h.dim;
  expect_shape(x.f, {nh, np}, "f");
  CheckReport<K> r = check_associative(x.p);
  r.merge(check_bimodule(x.p, x.h), "bimodule_");
  auto f = [&](const Vec<K>& a) { return act(x.f, a); };
  auto L = [&](const Vec<K>& p, const Vec<K>& a) { return act(x.h.left, p, a); };
  auto R = [&](const Vec<K>& a, const Vec<K>& p) { return act(x.h.right, a, p); };
  auto m = [&](const Vec<K>& p, const Vec<K>& q) { return act(x.p.mul, p, q); };
  auto e_p = [&](std::size_t i) { return basis<K>(np, i); };
  auto e_h = [&](std::size_t i) { return basis<K>(nh, i); };
  r.begin("equiv_l");
  for_each_index({np, nh}, [&](const Index& t) {
    auto p = e_p(t[0]), a = e_h(t[1]);
    r.expect(t, f(L(p, a)), m(p, f(a)));
  });
  r.begin("equiv_r");
  for_each_index({nh, np}, [&](const Index& t) {
    auto a = e_h(t[0]), p = e_p(t[1]);
    r.expect(t, f(R(a, p)), m(f(a), p));
  });
  r.begin("peiffer");
  for_each_index({nh, nh}, [&](const Index& t) {
    auto a = e_h(t[0]), b = e_h(t[1]);
    r.expect(t, L(f(a), b), R(a, f(b)));
  });
  return r;
}

template CheckReport<Rational> check_crossed_module(const CrossedModuleT<Rational>&);
template CheckReport<Poly> check_crossed_module(const CrossedModuleT<Poly>&);

TwoTermAlgebra to_strict(const CrossedModule& x) {
  check_shapes(x);
  TwoTermAlgebra g(x.p.dim, x.h.dim);
  g.d = x.f;
  g.l2_00 = x.p.mul;
  g.l2_01 = x.h.left;
  g.l2_10 = x.h.right;
  return g;
}

CrossedModule from_strict(const TwoTermAlgebra& g) {
  g.validate();
  if (!g.l3.is_zero()) throw PreconditionError("from_strict: l3 is nonzero (not strict)");
  CrossedModule x(g.n0, g.n1);
  x.f = g.d;
  x.p.mul = g.l2_00;
  x.h.left = g.l2_01;
  x.h.right = g.l2_10;
  return x;
}

Report check_xmod_representation(const CrossedModule& x, const XModRepresentation& rep) {
  check_shapes(x, rep);
  const std::size_t np = x.p.dim, nh = x.h.dim, nv = rep.V.dim, nw = rep.W.dim;
  Report r;
  r.merge(check_bimodule(x.p, rep.V), "V.");
  r.merge(check_bimodule(x.p, rep.W), "W.");
  using V_ = QVec;
  auto f = [&](const V_& a) { return act(x.f, a); };
  auto phi = [&](const V_& v) { return act(rep.phi, v); };
  auto pa = [&](const V_& p, const V_& a) { return act(x.h.left, p, a); };
  auto ap = [&](const V_& a, const V_& p) { return act(x.h.right, a, p); };
  auto pv = [&](const V_& p, const V_& v) { return act(rep.V.left, p, v); };
  auto vp = [&](const V_& v, const V_& p) { return act(rep.V.right, v, p); };
  auto pw = [&](const V_& p, const V_& w) { return act(rep.W.left, p, w); };
  auto wp = [&](const V_& w, const V_& p) { return act(rep.W.right, w, p); };
  auto aw = [&](const V_& a, const V_& w) { return act(rep.tr_l, a, w); };
  auto wa = [&](const V_& w, const V_& a) { return act(rep.tr_r, w, a); };
  auto e_p = [&](std::size_t i) { return basis<Rational>(np, i); };
  auto e_h = [&](std::size_t i) { return basis<Rational>(nh, i); };
  auto e_v = [&](std::size_t i) { return basis<Rational>(nv, i); };
  auto e_w = [&](std::size_t i) { return basis<Rational>(nw, i); };

  r.begin("equiv_l");
  for_each_index({np, nv}, [&](const Index& t) {
    auto p = e_p(t[0]), v = e_v(t[1]);
    r.expect(t, phi(pv(p, v)), pw(p, phi(v)));
  });
  r.begin("equiv_r");
  for_each_index({nv, np}, [&](const Index& t) {
    auto v = e_v(t[0]), p = e_p(t[1]);
    r.expect(t, phi(vp(v, p)), wp(phi(v), p));
  });
  r.begin("phi_tr_l");
  for_each_index({nh, nw}, [&](const Index& t) {
    auto a = e_h(t[0]), w = e_w(t[1]);
    r.expect(t, phi(aw(a, w)), pw(f(a), w));
  });
  r.begin("phi_tr_r");
  for_each_index({nw, nh}, [&](const Index& t) {
    auto w = e_w(t[0]), a = e_h(t[1]);
    r.expect(t, phi(wa(w, a)), wp(w, f(a)));
  });
  r.begin("mixed_l");
  for_each_index({nh, nv}, [&](const Index& t) {
    auto a = e_h(t[0]), v = e_v(t[1]);
    r.expect(t, pv(f(a), v), aw(a, phi(v)));
  });
  r.begin("mixed_r");
  for_each_index({nv, nh}, [&](const Index& t) {
    auto v = e_v(t[0]), a = e_h(t[1]);
    r.expect(t, wa(phi(v), a), vp(v, f(a)));
  });
  r.begin("c11");
  for_each_index({np, nw, nh}, [&](const Index& t) {
    auto p = e_p(t[0]), w = e_w(t[1]), a = e_h(t[2]);
    r.expect(t, pv(p, wa(w, a)), wa(pw(p, w), a));
  });
  r.begin("c12");
  for_each_index({nw, np, nh}, [&](const Index& t) {
    auto w = e_w(t[0]), p = e_p(t[1]), a = e_h(t[2]);
    r.expect(t, wa(w, pa(p, a)), wa(wp(w, p), a));
  });
  r.begin("c13");
  for_each_index({nh, nw, np}, [&](const Index& t) {
    auto a = e_h(t[0]), w = e_w(t[1]), p = e_p(t[2]);
    r.expect(t, aw(a, wp(w, p)), vp(aw(a, w), p));
  });
  r.begin("c14");
  for_each_index({nh, np, nw}, [&](const Index& t) {
    auto a = e_h(t[0]), p = e_p(t[1]), w = e_w(t[2]);
    r.expect(t, aw(a, pw(p, w)), aw(ap(a, p), w));
  });
  r.begin("c15");
  for_each_index({np, nh, nw}, [&](const Index& t) {
    auto p = e_p(t[0]), a = e_h(t[1]), w = e_w(t[2]);
    r.expect(t, pv(p, aw(a, w)), aw(pa(p, a), w));
  });
  r.begin("c16");
  for_each_index({nw, nh, np}, [&](const Index& t) {
    auto w = e_w(t[0]), a = e_h(t[1]), p = e_p(t[2]);
    r.expect(t, wa(w, ap(a, p)), vp(wa(w, a), p));
  });
  return r;
}

XModRepresentation xmod_adjoint(const CrossedModule& x) {
  check_shapes(x);
  XModRepresentation r(x.p.dim, x.h.dim, x.h.dim, x.p.dim);
  r.V = x.h;
  r.W = regular_bimodule(x.p);
  r.phi = x.f;
  r.tr_l = x.h.right;  // a>x = a.x
  r.tr_r = x.h.left;   // x<a = x.a
  return r;
}

Representation2 xrep_to_strict(const CrossedModule& x, const XModRepresentation& r) {
  check_shapes(x, r);
  Representation2 s(x.p.dim, x.h.dim, r.W.dim, r.V.dim);
  s.partial = r.phi;
  s.left0_v0 = r.W.left;
  s.left0_v1 = r.V.left;
  s.right0_v0 = r.W.right;
  s.right0_v1 = r.V.right;
  s.left1 = r.tr_l;
  s.right1 = r.tr_r;
  return s;
}

XModRepresentation xrep_from_strict(const Representation2& s) {
  s.validate();
  if (!s.tri_l.is_zero() || !s.tri_m.is_zero() || !s.tri_r.is_zero())
    throw PreconditionError("xrep_from_strict: trilinear actions are nonzero");
  XModRepresentation r(s.n0, s.n1, s.m1, s.m0);
  r.phi = s.partial;
  r.W.left = s.left0_v0;
  r.V.left = s.left0_v1;
  r.W.right = s.right0_v0;
  r.V.right = s.right0_v1;
  r.tr_l = s.left1;
  r.tr_r = s.right1;
  return r;
}

CrossedModule semidirect_product(const CrossedModule& x, const XModRepresentation& r) {
  require_xmod(x, r);
  const std::size_t np = x.p.dim, nh = x.h.dim, nv = r.V.dim, nw = r.W.dim;
  const std::size_t P = np + nw, H = nh + nv;
  CrossedModule s(P, H);
  // p-part first, then W (resp. h then V)
  for (std::size_t i = 0; i < P; ++i)
    for (std::size_t j = 0; j < P; ++j) {
      const bool wi = i >= np, wj = j >= np;
      QVec v(P);
      if (!wi && !wj) {
        QVec m = act(x.p.mul, basis<Rational>(np, i), basis<Rational>(np, j));
        std::copy(m.begin(), m.end(), v.begin());
      } else if (!wi && wj) {
        QVec m = act(r.W.left, basis<Rational>(np, i), basis<Rational>(nw, j - np));
        std::copy(m.begin(), m.end(), v.begin() + np);
      } else if (wi && !wj) {
        QVec m = act(r.W.right, basis<Rational>(nw, i - np), basis<Rational>(np, j));
        std::copy(m.begin(), m.end(), v.begin() + np);
      }
      set_fiber(s.p.mul, {i, j}, v);
    }
  for (std::size_t i = 0; i < P; ++i)
    for (std::size_t j = 0; j < H; ++j) {
      const bool wi = i >= np, vj = j >= nh;
      QVec v(H);
      if (!wi && !vj) {
        QVec m = act(x.h.left, basis<Rational>(np, i), basis<Rational>(nh, j));
        std::copy(m.begin(), m.end(), v.begin());
      } else if (!wi && vj) {
        QVec m = act(r.V.left, basis<Rational>(np, i), basis<Rational>(nv, j - nh));
        std::copy(m.begin(), m.end(), v.begin() + nh);
      } else if (wi && !vj) {
        QVec m = act(r.tr_r, basis<Rational>(nw, i - np), basis<Rational>(nh, j));
        std::copy(m.begin(), m.end(), v.begin() + nh);
      }
      set_fiber(s.h.left, {i, j}, v);
      // right action (a + v).(x + w)
      QVec u(H);
      const bool vi = j >= nh, wj = i >= np;
      if (!vi && !wj) {
        QVec m = act(x.h.right, basis<Rational>(nh, j), basis<Rational>(np, i));
        std::copy(m.begin(), m.end(), u.begin());
      } else if (vi && !wj) {
        QVec m = act(r.V.right, basis<Rational>(nv, j - nh), basis<Rational>(np, i));
        std::copy(m.begin(), m.end(), u.begin() + nh);
      } else if (!vi && wj) {
        QVec m = act(r.tr_l, basis<Rational>(nh, j), basis<Rational>(nw, i - np));
        std::copy(m.begin(), m.end(), u.begin() + nh);
      }
      set_fiber(s.h.right, {j, i}, u);
    }
  for (std::size_t j = 0; j < H; ++j) {
    QVec v(P);
    if (j < nh) {
      QVec m = act(x.f, basis<Rational>(nh, j));
      std::copy(m.begin(), m.end(), v.begin());
    } else {
      QVec m = act(r.phi, basis<Rational>(nv, j - nh));
      std::copy(m.begin(), m.end(), v.begin() + np);
    }
    set_fiber(s.f, {j}, v);
  }
  return s;
}

XCochain1 zero_xcochain1(const CrossedModule& x, const XModRepresentation& r) {
  return {Tensor<Rational>({x.p.dim, r.W.dim}), Tensor<Rational>({x.h.dim, r.V.dim})};
}

XCochain2 zero_xcochain2(const CrossedModule& x, const XModRepresentation& r) {
  return XCochain2(x.p.dim, x.h.dim, r.V.dim, r.W.dim);
}

QVec flatten(const XCochain1& c) {
  QVec v;
  append(v, c.N0);
  append(v, c.N1);
  return v;
}

QVec flatten(const XCochain2& c) {
  QVec v;
  append(v, c.psi);
  append(v, c.omega);
  append(v, c.mu);
  append(v, c.nu);
  return v;
}

XCochain1 unflatten_xcochain1(const CrossedModule& x, const XModRepresentation& r, const QVec& v) {
  XCochain1 c = zero_xcochain1(x, r);
  std::size_t pos = 0;
  take(c.N0, v, pos);
  take(c.N1, v, pos);
  if (pos != v.size()) throw ShapeError("unflatten: vector too long");
  return c;
}

XCochain2 unflatten_xcochain2(const CrossedModule& x, const XModRepresentation& r, const QVec& v) {
  XCochain2 c = zero_xcochain2(x, r);
  std::size_t pos = 0;
  take(c.psi, v, pos);
  take(c.omega, v, pos);
  take(c.mu, v, pos);
  take(c.nu, v, pos);
  if (pos != v.size()) throw ShapeError("unflatten: vector too long");
  return c;
}

XCochain2 operator+(const XCochain2& a, const XCochain2& b) {
  XCochain2 c;
  c.psi = a.psi + b.psi;
  c.omega = a.omega + b.omega;
  c.mu = a.mu + b.mu;
  c.nu = a.nu + b.nu;
  return c;
}

XCochain2 operator-(const XCochain2& a, const XCochain2& b) {
  XCochain2 c;
  c.psi = a.psi - b.psi;
  c.omega = a.omega - b.omega;
  c.mu = a.mu - b.mu;
  c.nu = a.nu - b.nu;
  return c;
}

Cochain2 to_strict(const XCochain2& c, std::size_t np) {
  Cochain2 s;
  s.psi = c.psi;
  s.omega = c.omega;
  s.mu = c.mu;
  s.nu = c.nu;
  s.theta = Tensor<Rational>({np, np, np, c.mu.dim(2)});
  return s;
}

XCochain2 from_strict(const Cochain2& c) {
  if (!c.theta.is_zero()) throw PreconditionError("from_strict: theta is nonzero");
  XCochain2 x;
  x.psi = c.psi;
  x.omega = c.omega;
  x.mu = c.mu;
  x.nu = c.nu;
  return x;
}

XCochain2 xmod_d1(const CrossedModule& x, const XModRepresentation& rep, const XCochain1& c) {
  check_shapes(x, rep);
  const std::size_t np = x.p.dim, nh = x.h.dim, nv = rep.V.dim, nw = rep.W.dim;
  expect_shape(c.N0, {np, nw}, "N0");
  expect_shape(c.N1, {nh, nv}, "N1");
  using V = QVec;
  auto N0 = [&](const V& p) { return act(c.N0, p); };
  auto N1 = [&](const V& a) { return act(c.N1, a); };
  auto e_p = [&](std::size_t i) { return basis<Rational>(np, i); };
  auto e_h = [&](std::size_t i) { return basis<Rational>(nh, i); };
  XCochain2 out = zero_xcochain2(x, rep);
  for_each_index({nh}, [&](const Index& t) {
    auto a = e_h(t[0]);
    set_fiber(out.psi, t, act(rep.phi, N1(a)) - N0(act(x.f, a)));
  });
  for_each_index({np, np}, [&](const Index& t) {
    auto p = e_p(t[0]), q = e_p(t[1]);
    set_fiber(out.omega, t,
              act(rep.W.left, p, N0(q)) + act(rep.W.right, N0(p), q) - N0(act(x.p.mul, p, q)));
  });
  for_each_index({np, nh}, [&](const Index& t) {
    auto p = e_p(t[0]), a = e_h(t[1]);
    set_fiber(out.mu, t,
              act(rep.V.left, p, N1(a)) + act(rep.tr_r, N0(p), a) - N1(act(x.h.left, p, a)));
  });
  for_each_index({nh, np}, [&](const Index& t) {
    auto a = e_h(t[0]), p = e_p(t[1]);
    set_fiber(out.nu, t,
              act(rep.tr_l, a, N0(p)) + act(rep.V.right, N1(a), p) - N1(act(x.h.right, a, p)));
  });
  return out;
}

std::vector<ResidualBlock> xmod_d2_blocks(const CrossedModule& x, const XModRepresentation& r) {
  const std::size_t np = x.p.dim, nh = x.h.dim, nv = r.V.dim, nw = r.W.dim;
  return {{"xc01", {np, nh, nw}},     {"xc02", {nh, np, nw}},     {"xc03", {nh, nh, nv}},
          {"xc04", {np, np, np, nw}}, {"xc05", {np, np, nh, nv}}, {"xc06", {np, nh, np, nv}},
          {"xc07", {nh, np, np, nv}}};
}

QVec xmod_d2_residual(const CrossedModule& x, const XModRepresentation& rep, const XCochain2& c) {
  check_shapes(x, rep);
  check_shapes(x, rep, c);
  const std::size_t np = x.p.dim, nh = x.h.dim;
  using V = QVec;
  auto f = [&](const V& a) { return act(x.f, a); };
  auto m = [&](const V& p, const V& q) { return act(x.p.mul, p, q); };
  auto pa = [&](const V& p, const V& a) { return act(x.h.left, p, a); };
  auto ap = [&](const V& a, const V& p) { return act(x.h.right, a, p); };
  auto pv = [&](const V& p, const V& v) { return act(rep.V.left, p, v); };
  auto vp = [&](const V& v, const V& p) { return act(rep.V.right, v, p); };
  auto pw = [&](const V& p, const V& w) { return act(rep.W.left, p, w); };
  auto wp = [&](const V& w, const V& p) { return act(rep.W.right, w, p); };
  auto aw = [&](const V& a, const V& w) { return act(rep.tr_l, a, w); };
  auto wa = [&](const V& w, const V& a) { return act(rep.tr_r, w, a); };
  auto phi = [&](const V& v) { return act(rep.phi, v); };
  auto psi = [&](const V& a) { return act(c.psi, a); };
  auto omega = [&](const V& p, const V& q) { return act(c.omega, p, q); };
  auto mu = [&](const V& p, const V& a) { return act(c.mu, p, a); };
  auto nu = [&](const V& a, const V& p) { return act(c.nu, a, p); };
  auto e_p = [&](std::size_t i) { return basis<Rational>(np, i); };
  auto e_h = [&](std::size_t i) { return basis<Rational>(nh, i); };

  QVec out;
  auto emit = [&](const V& v) { out.insert(out.end(), v.begin(), v.end()); };
  for_each_index({np, nh}, [&](const Index& t) {
    auto p = e_p(t[0]), a = e_h(t[1]);
    emit(pw(p, psi(a)) - psi(pa(p, a)) + omega(p, f(a)) - phi(mu(p, a)));
  });
  for_each_index({nh, np}, [&](const Index& t) {
    auto a = e_h(t[0]), p = e_p(t[1]);
    emit(wp(psi(a), p) - psi(ap(a, p)) + omega(f(a), p) - phi(nu(a, p)));
  });
  for_each_index({nh, nh}, [&](const Index& t) {
    auto a = e_h(t[0]), b = e_h(t[1]);
    emit(aw(a, psi(b)) + nu(a, f(b)) - wa(psi(a), b) - mu(f(a), b));
  });
  for_each_index({np, np, np}, [&](const Index& t) {
    auto p = e_p(t[0]), q = e_p(t[1]), s = e_p(t[2]);
    emit(wp(omega(p, q), s) - pw(p, omega(q, s)) + omega(m(p, q), s) - omega(p, m(q, s)));
  });
  for_each_index({np, np, nh}, [&](const Index& t) {
    auto p = e_p(t[0]), q = e_p(t[1]), a = e_h(t[2]);
    emit(wa(omega(p, q), a) - pv(p, mu(q, a)) + mu(m(p, q), a) - mu(p, pa(q, a)));
  });
  for_each_index({np, nh, np}, [&](const Index& t) {
    auto p = e_p(t[0]), a = e_h(t[1]), q = e_p(t[2]);
    emit(vp(mu(p, a), q) - pv(p, nu(a, q)) + nu(pa(p, a), q) - mu(p, ap(a, q)));
  });
  for_each_index({nh, np, np}, [&](const Index& t) {
    auto a = e_h(t[0]), p = e_p(t[1]), q = e_p(t[2]);
    emit(vp(nu(a, p), q) - aw(a, omega(p, q)) + nu(ap(a, p), q) - nu(a, m(p, q)));
  });
  return out;
}

CoboundaryMatrices xmod_matrices(const CrossedModule& x, const XModRepresentation& r) {
  const std::size_t c1 = flatten(zero_xcochain1(x, r)).size();
  const std::size_t c2 = flatten(zero_xcochain2(x, r)).size();
  std::vector<QVec> cols1, cols2;
  for (std::size_t i = 0; i < c1; ++i)
    cols1.push_back(flatten(xmod_d1(x, r, unflatten_xcochain1(x, r, basis<Rational>(c1, i)))));
  for (std::size_t i = 0; i < c2; ++i)
    cols2.push_back(xmod_d2_residual(x, r, unflatten_xcochain2(x, r, basis<Rational>(c2, i))));
  std::size_t rows2 = 0;
  for (const auto& b : xmod_d2_blocks(x, r)) {
    std::size_t n = 1;
    for (auto s : b.shape) n *= s;
    rows2 += n;
  }
  return {Matrix::from_columns(c2, cols1), Matrix::from_columns(rows2, cols2)};
}

SecondCohomology xmod_h2(const CrossedModule& x, const XModRepresentation& r) {
  require_xmod(x, r);
  CoboundaryMatrices m = xmod_matrices(x, r);
  SecondCohomology h;
  h.Z2 = kernel_basis(m.d2);
  h.B2 = image_basis(m.d1);
  h.dimZ2 = h.Z2.dim();
  h.dimB2 = h.B2.dim();
  h.dimH2 = h.dimZ2 - h.dimB2;
  h.representatives = complement_basis(h.Z2, h.B2);
  if (h.representatives.size() != h.dimH2) throw std::logic_error("B2 is not contained in Z2");
  return h;
}

CrossedModuleT<Poly> xmod_deform(const CrossedModule& x, const XCochain2& c) {
  check_shapes(x);
  check_shapes(x, xmod_adjoint(x), c);
  const Poly l = Poly::lambda();
  CrossedModuleT<Poly> d(x.p.dim, x.h.dim);
  d.f = convert<Poly>(x.f) + scaled(l, convert<Poly>(c.psi));
  d.p.mul = convert<Poly>(x.p.mul) + scaled(l, convert<Poly>(c.omega));
  d.h.left = convert<Poly>(x.h.left) + scaled(l, convert<Poly>(c.mu));
  d.h.right = convert<Poly>(x.h.right) + scaled(l, convert<Poly>(c.nu));
  return d;
}

CrossedModule xmod_specialize(const CrossedModule& x, const XCochain2& c, const Rational& t) {
  check_shapes(x);
  check_shapes(x, xmod_adjoint(x), c);
  CrossedModule s = x;
  s.f = x.f + scaled(t, c.psi);
  s.p.mul = x.p.mul + scaled(t, c.omega);
  s.h.left = x.h.left + scaled(t, c.mu);
  s.h.right = x.h.right + scaled(t, c.nu);
  return s;
}

CrossedModule xmod_as_structure(const XCochain2& c) {
  const std::size_t np = c.omega.dim(0), nh = c.psi.dim(0);
  CrossedModule s(np, nh);
  s.f = c.psi;
  s.p.mul = c.omega;
  s.h.left = c.mu;
  s.h.right = c.nu;
  check_shapes(s);
  return s;
}

XGeneratesVerdict xmod_check_generates(const CrossedModule& x, const XCochain2& c) {
  require_xmod(x);
  XGeneratesVerdict v;
  v.coefficients = coefficient_report(check_crossed_module(xmod_deform(x, c)), 2);
  v.cocycle_ok = v.standalone_ok = true;
  for (const auto& e : v.coefficients.violations) {
    if (e.condition.ends_with("[l^0]")) throw std::logic_error("xmod_check_generates: base fails");
    if (e.condition.ends_with("[l^1]")) v.cocycle_ok = false;
    if (e.condition.ends_with("[l^2]")) v.standalone_ok = false;
  }
  v.residual_zero = is_zero(xmod_d2_residual(x, xmod_adjoint(x), c));
  v.structure_passes = check_crossed_module(xmod_as_structure(c)).pass();
  for (int t = 1; t <= 3; ++t)
    v.sampled[t - 1] = check_crossed_module(xmod_specialize(x, c, t)).pass();
  return v;
}

Report xmod_check_nijenhuis(const CrossedModule& x, const XCochain1& n) {
  check_shapes(x);
  const std::size_t np = x.p.dim, nh = x.h.dim;
  expect_shape(n.N0, {np, np}, "N0");
  expect_shape(n.N1, {nh, nh}, "N1");
  require_xmod(x);
  XCochain2 c = xmod_d1(x, xmod_adjoint(x), n);
  using V = QVec;
  auto N0 = [&](const V& p) { return act(n.N0, p); };
  auto N1 = [&](const V& a) { return act(n.N1, a); };
  auto e_p = [&](std::size_t i) { return basis<Rational>(np, i); };
  auto e_h = [&](std::size_t i) { return basis<Rational>(nh, i); };
  Report r;
  r.begin("i");
  for_each_index({nh}, [&](const Index& t) {
    auto a = e_h(t[0]);
    r.expect(t, act(x.f, N1(a)), N0(act(x.f, a)));
  });
  r.begin("ii");
  for_each_index({np, np}, [&](const Index& t) {
    auto p = e_p(t[0]), q = e_p(t[1]);
    r.expect(t, N0(act(c.omega, p, q)), act(x.p.mul, N0(p), N0(q)));
  });
  r.begin("iii");
  for_each_index({np, nh}, [&](const Index& t) {
    auto p = e_p(t[0]), a = e_h(t[1]);
    r.expect(t, N1(act(c.mu, p, a)), act(x.h.left, N0(p), N1(a)));
  });
  r.begin("iv");
  for_each_index({nh, np}, [&](const Index& t) {
    auto a = e_h(t[0]), p = e_p(t[1]);
    r.expect(t, N1(act(c.nu, a, p)), act(x.h.right, N1(a), N0(p)));
  });
  return r;
}

XCochain2 xmod_nijenhuis_deformation(const CrossedModule& x, const XCochain1& n) {
  require_pass(xmod_check_nijenhuis(x, n), "Nijenhuis operator");
  return xmod_d1(x, xmod_adjoint(x), n);
}

template <class K>
CheckReport<K> check_xmod_homomorphism(const CrossedModuleT<K>& src, const CrossedModuleT<K>& tgt,
                                       const Tensor<K>& T0, const Tensor<K>& T1) {
  const std::size_t np = src.p.dim, nh = src.h.dim;
  expect_shape(T0, {np, tgt.p.dim}, "T0");
  expect_shape(T1, {nh, tgt.h.dim}, "T1");
  auto F0 = [&](const Vec<K>& p) { return act(T0, p); };
  auto F1 = [&](const Vec<K>& a) { return act(T1, a); };
  auto e_p = [&](std::size_t i) { return basis<K>(np, i); };
  auto e_h = [&](std::size_t i) { return basis<K>(nh, i); };
  CheckReport<K> r;
  r.begin("hom_f");
  for_each_index({nh}, [&](const Index& t) {
    auto a = e_h(t[0]);
    r.expect(t, F0(act(src.f, a)), act(tgt.f, F1(a)));
  });
  r.begin("hom_p");
  for_each_index({np, np}, [&](const Index& t) {
    auto p = e_p(t[0]), q = e_p(t[1]);
    r.expect(t, F0(act(src.p.mul, p, q)), act(tgt.p.mul, F0(p), F0(q)));
  });
  r.begin("hom_l");
  for_each_index({np, nh}, [&](const Index& t) {
    auto p = e_p(t[0]), a = e_h(t[1]);
    r.expect(t, F1(act(src.h.left, p, a)), act(tgt.h.left, F0(p), F1(a)));
  });
  r.begin("hom_r");
  for_each_index({nh, np}, [&](const Index& t) {
    auto a = e_h(t[0]), p = e_p(t[1]);
    r.expect(t, F1(act(src.h.right, a, p)), act(tgt.h.right, F1(a), F0(p)));
  });
  return r;
}

template CheckReport<Rational> check_xmod_homomorphism(const CrossedModuleT<Rational>&,
                                                       const CrossedModuleT<Rational>&,
                                                       const Tensor<Rational>&,
                                                       const Tensor<Rational>&);
template CheckReport<Poly> check_xmod_homomorphism(const CrossedModuleT<Poly>&,
                                                   const CrossedModuleT<Poly>&,
                                                   const Tensor<Poly>&, const Tensor<Poly>&);

Report xmod_check_trivializing(const CrossedModule& x, const XCochain2& c, const XCochain1& n) {
  check_shapes(x);
  expect_shape(n.N0, {x.p.dim, x.p.dim}, "N0");
  expect_shape(n.N1, {x.h.dim, x.h.dim}, "N1");
  CrossedModuleT<Poly> target(x.p.dim, x.h.dim);
  target.f = convert<Poly>(x.f);
  target.p.mul = convert<Poly>(x.p.mul);
  target.h.left = convert<Poly>(x.h.left);
  target.h.right = convert<Poly>(x.h.right);
  const Poly l = Poly::lambda();
  auto T0 = convert<Poly>(identity_map<Rational>(x.p.dim)) + scaled(l, convert<Poly>(n.N0));
  auto T1 = convert<Poly>(identity_map<Rational>(x.h.dim)) + scaled(l, convert<Poly>(n.N1));
  return coefficient_report(check_xmod_homomorphism(xmod_deform(x, c), target, T0, T1), 2);
}

Extension2 to_strict(const XModExtension& e) {
  Extension2 s;
  s.total = to_strict(e.total);
  s.base = to_strict(e.base);
  s.sub0 = e.sub_p;
  s.sub1 = e.sub_h;
  s.proj0 = e.proj_p;
  s.proj1 = e.proj_h;
  s.sigma0 = e.sigma_p;
  s.sigma1 = e.sigma_h;
  return s;
}

Report validate_xmod_extension(const XModExtension& e) {
  Report r;
  r.merge(check_crossed_module(e.total), "total.");
  r.merge(check_crossed_module(e.base), "base.");
  Report s = validate_extension(to_strict(e));
  // the strict total/base checks duplicate the crossed-module ones
  Report rest;
  for (const auto& c : s.conditions)
    if (!c.starts_with("total.") && !c.starts_with("base.")) rest.conditions.push_back(c);
  for (const auto& v : s.violations)
    if (!v.condition.starts_with("total.") && !v.condition.starts_with("base."))
      rest.violations.push_back(v);
  r.merge(rest);
  return r;
}

XModRepresentation xmod_extract_representation(const XModExtension& e) {
  require_pass(validate_xmod_extension(e), "crossed-module extension");
  return xrep_from_strict(extract_representation(to_strict(e)));
}

XCochain2 xmod_extract_cocycle(const XModExtension& e) {
  require_pass(validate_xmod_extension(e), "crossed-module extension");
  return from_strict(extract_cocycle(to_strict(e)));
}

XModExtension xmod_build_extension(const CrossedModule& x, const XModRepresentation& r,
                                   const XCochain2& c) {
  require_xmod(x, r);
  check_shapes(x, r, c);
  if (!is_zero(xmod_d2_residual(x, r, c)))
    throw PreconditionError("xmod_build_extension: cochain is not a 2-cocycle");
  Extension2 s = build_extension(to_strict(x), xrep_to_strict(x, r), to_strict(c, x.p.dim));
  XModExtension e;
  e.total = from_strict(s.total);
  e.base = x;
  e.sub_p = s.sub0;
  e.sub_h = s.sub1;
  e.proj_p = s.proj0;
  e.proj_h = s.proj1;
  e.sigma_p = s.sigma0;
  e.sigma_h = s.sigma1;
  return e;
}

XEquivalenceResult xmod_check_equivalence(const XModExtension& e1, const XModExtension& e2) {
  if (!(e1.base == e2.base))
    throw PreconditionError("xmod_check_equivalence: base crossed modules differ");
  XModRepresentation r1 = xmod_extract_representation(e1), r2 = xmod_extract_representation(e2);
  if (!(r1 == r2))
    throw PreconditionError("xmod_check_equivalence: induced representations differ");
  const CrossedModule& x = e1.base;
  XEquivalenceResult res;
  res.c1 = xmod_extract_cocycle(e1);
  res.c2 = xmod_extract_cocycle(e2);
  CoboundaryMatrices m = xmod_matrices(x, r1);
  QVec delta = flatten(res.c1 - res.c2);
  auto sol = solve(m.d1, delta);
  if (!sol) {
    res.reason = "difference of cocycles is not a coboundary";
    res.certificate = left_null_certificate(m.d1, delta);
    return res;
  }
  res.lambda = unflatten_xcochain1(x, r1, *sol);
  const XCochain1& lam = *res.lambda;
  const std::size_t P = e1.total.p.dim, H = e1.total.h.dim;
  if (P != e2.total.p.dim || H != e2.total.h.dim)
    throw std::logic_error("xmod_check_equivalence: dimension mismatch");
  Tensor<Rational> F0({P, P}), F1({H, H});
  for (std::size_t i = 0; i < P; ++i) {
    QVec al = basis<Rational>(P, i);
    QVec p = act(e1.proj_p, al);
    QVec w = sub_coords(al - act(e1.sigma_p, p), e1.sub_p);
    set_fiber(F0, {i}, act(e2.sigma_p, p) + embed(P, act(lam.N0, p) + w, e2.sub_p));
  }
  for (std::size_t i = 0; i < H; ++i) {
    QVec al = basis<Rational>(H, i);
    QVec a = act(e1.proj_h, al);
    QVec v = sub_coords(al - act(e1.sigma_h, a), e1.sub_h);
    set_fiber(F1, {i}, act(e2.sigma_h, a) + embed(H, act(lam.N1, a) + v, e2.sub_h));
  }
  Report v = check_xmod_homomorphism(e1.total, e2.total, F0, F1);
  for (std::size_t s = 0; s < e1.sub_p.size(); ++s)
    if (act(F0, basis<Rational>(P, e1.sub_p[s])) != basis<Rational>(P, e2.sub_p[s]))
      v.violations.push_back({"restricts", {0, s}, {}, {}});
  for (std::size_t s = 0; s < e1.sub_h.size(); ++s)
    if (act(F1, basis<Rational>(H, e1.sub_h[s])) != basis<Rational>(H, e2.sub_h[s]))
      v.violations.push_back({"restricts", {1, s}, {}, {}});
  if (!(compose(e2.proj_p, F0) == e1.proj_p) || !(compose(e2.proj_h, F1) == e1.proj_h))
    v.violations.push_back({"covers", {}, {}, {}});
  if (!v.pass()) throw std::logic_error("xmod_check_equivalence: constructed map fails verification");
  res.map = std::pair{F0, F1};
  res.equivalent = true;
  return res;
}

}  // namespace assoc2
