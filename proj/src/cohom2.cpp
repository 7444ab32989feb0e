#include "assoc2/cohom2.hpp"

namespace assoc2 {

namespace {

void append(QVec& v, const Tensor<Rational>& t) { v.insert(v.end(), t.data().begin(), t.data().end()); }

void take(Tensor<Rational>& t, const QVec& v, std::size_t& pos) {
  if (pos + t.size() > v.size()) throw ShapeError("unflatten: vector too short");
  std::copy(v.begin() + pos, v.begin() + pos + t.size(), t.data().begin());
  pos += t.size();
}

void check_shapes(const Representation2& r, const Cochain1& c) {
  expect_shape(c.phi, {r.n0, r.m0}, "phi");
  expect_shape(c.phi1, {r.n1, r.m1}, "phi1");
  expect_shape(c.chi, {r.n0, r.n0, r.m1}, "chi");
}

void check_shapes(const Representation2& r, const Cochain2& c) {
  expect_shape(c.psi, {r.n1, r.m0}, "psi");
  expect_shape(c.omega, {r.n0, r.n0, r.m0}, "omega");
  expect_shape(c.mu, {r.n0, r.n1, r.m1}, "mu");
  expect_shape(c.nu, {r.n1, r.n0, r.m1}, "nu");
  expect_shape(c.theta, {r.n0, r.n0, r.n0, r.m1}, "theta");
}

}  // namespace

Cochain1 zero_cochain1(const Representation2& r) { return Cochain1(r.n0, r.n1, r.m0, r.m1); }
Cochain2 zero_cochain2(const Representation2& r) { return Cochain2(r.n0, r.n1, r.m0, r.m1); }

QVec flatten(const Cochain1& c) {
  QVec v;
  append(v, c.phi);
  append(v, c.phi1);
  append(v, c.chi);
  return v;
}

QVec flatten(const Cochain2& c) {
  QVec v;
  append(v, c.psi);
  append(v, c.omega);
  append(v, c.mu);
  append(v, c.nu);
  append(v, c.theta);
  return v;
}

Cochain1 unflatten_cochain1(const Representation2& r, const QVec& v) {
  Cochain1 c = zero_cochain1(r);
  std::size_t pos = 0;
  take(c.phi, v, pos);
  take(c.phi1, v, pos);
  take(c.chi, v, pos);
  if (pos != v.size()) throw ShapeError("unflatten: vector too long");
  return c;
}

Cochain2 unflatten_cochain2(const Representation2& r, const QVec& v) {
  Cochain2 c = zero_cochain2(r);
  std::size_t pos = 0;
  take(c.psi, v, pos);
  take(c.omega, v, pos);
  take(c.mu, v, pos);
  take(c.nu, v, pos);
  take(c.theta, v, pos);
  if (pos != v.size()) throw ShapeError("unflatten: vector too long");
  return c;
}

Cochain2 operator+(const Cochain2& a, const Cochain2& b) {
  Cochain2 c;
  c.psi = a.psi + b.psi;
  c.omega = a.omega + b.omega;
  c.mu = a.mu + b.mu;
  c.nu = a.nu + b.nu;
  c.theta = a.theta + b.theta;
  return c;
}

Cochain2 operator-(const Cochain2& a, const Cochain2& b) {
  Cochain2 c;
  c.psi = a.psi - b.psi;
  c.omega = a.omega - b.omega;
  c.mu = a.mu - b.mu;
  c.nu = a.nu - b.nu;
  c.theta = a.theta - b.theta;
  return c;
}

std::size_t cochain1_dim(const Representation2& r) {
  return r.n0 * r.m0 + r.n1 * r.m1 + r.n0 * r.n0 * r.m1;
}

std::size_t cochain2_dim(const Representation2& r) {
  return r.n1 * r.m0 + r.n0 * r.n0 * r.m0 + 2 * r.n0 * r.n1 * r.m1 + r.n0 * r.n0 * r.n0 * r.m1;
}

Cochain2 d1_apply(const TwoTermAlgebra& g, const Representation2& rep, const Cochain1& c) {
  check_shapes(rep, c);
  const std::size_t n0 = g.n0, n1 = g.n1;
  using V = QVec;
  auto dg = [&](const V& a) { return act(g.d, a); };
  auto m00 = [&](const V& x, const V& y) { return act(g.l2_00, x, y); };
  auto m01 = [&](const V& x, const V& a) { return act(g.l2_01, x, a); };
  auto m10 = [&](const V& a, const V& x) { return act(g.l2_10, a, x); };
  auto P = [&](const V& m) { return act(rep.partial, m); };
  auto phi = [&](const V& x) { return act(c.phi, x); };
  auto phi1 = [&](const V& a) { return act(c.phi1, a); };
  auto chi = [&](const V& x, const V& y) { return act(c.chi, x, y); };
  auto x_ = [&](std::size_t i) { return basis<Rational>(n0, i); };
  auto a_ = [&](std::size_t i) { return basis<Rational>(n1, i); };

  Cochain2 out = zero_cochain2(rep);
  for_each_index({n1}, [&](const Index& t) {
    auto a = a_(t[0]);
    set_fiber(out.psi, t, P(phi1(a)) - phi(dg(a)));
  });
  for_each_index({n0, n0}, [&](const Index& t) {
    auto x = x_(t[0]), y = x_(t[1]);
    set_fiber(out.omega, t,
          act(rep.left0_v0, x, phi(y)) + act(rep.right0_v0, phi(x), y) - phi(m00(x, y)) +
              P(chi(x, y)));
  });
  for_each_index({n0, n1}, [&](const Index& t) {
    auto x = x_(t[0]), a = a_(t[1]);
    set_fiber(out.mu, t,
          act(rep.left0_v1, x, phi1(a)) + act(rep.right1, phi(x), a) - phi1(m01(x, a)) +
              chi(x, dg(a)));
  });
  for_each_index({n1, n0}, [&](const Index& t) {
    auto a = a_(t[0]), x = x_(t[1]);
    set_fiber(out.nu, t,
          act(rep.left1, a, phi(x)) + act(rep.right0_v1, phi1(a), x) - phi1(m10(a, x)) +
              chi(dg(a), x));
  });
  for_each_index({n0, n0, n0}, [&](const Index& t) {
    auto x = x_(t[0]), y = x_(t[1]), z = x_(t[2]);
    set_fiber(out.theta, t,
          act(rep.right0_v1, chi(x, y), z) - act(rep.left0_v1, x, chi(y, z)) +
              chi(m00(x, y), z) - chi(x, m00(y, z)) - phi1(act(g.l3, x, y, z)) +
              act(rep.tri_l, x, y, phi(z)) + act(rep.tri_m, x, phi(y), z) +
              act(rep.tri_r, phi(x), y, z));
  });
  return out;
}

std::vector<ResidualBlock> d2_blocks(const Representation2& r) {
  const std::size_t n0 = r.n0, n1 = r.n1, m0 = r.m0, m1 = r.m1;
  return {{"coc01", {n0, n1, m0}},         {"coc02", {n1, n0, m0}},
          {"coc03", {n1, n1, m1}},         {"coc04", {n0, n0, n0, m0}},
          {"coc05", {n0, n0, n1, m1}},     {"coc06", {n0, n1, n0, m1}},
          {"coc07", {n1, n0, n0, m1}},     {"coc08", {n0, n0, n0, n0, m1}}};
}

QVec d2_residual(const TwoTermAlgebra& g, const Representation2& rep, const Cochain2& c) {
  check_shapes(rep, c);
  const std::size_t n0 = g.n0, n1 = g.n1;
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
  auto psi = [&](const V& a) { return act(c.psi, a); };
  auto omega = [&](const V& x, const V& y) { return act(c.omega, x, y); };
  auto mu = [&](const V& x, const V& a) { return act(c.mu, x, a); };
  auto nu = [&](const V& a, const V& x) { return act(c.nu, a, x); };
  auto theta = [&](const V& x, const V& y, const V& z) { return act(c.theta, x, y, z); };
  auto x_ = [&](std::size_t i) { return basis<Rational>(n0, i); };
  auto a_ = [&](std::size_t i) { return basis<Rational>(n1, i); };

  QVec out;
  auto emit = [&](const V& v) { out.insert(out.end(), v.begin(), v.end()); };
  for_each_index({n0, n1}, [&](const Index& t) {
    auto x = x_(t[0]), a = a_(t[1]);
    emit(L0u(x, psi(a)) - psi(m01(x, a)) + omega(x, dg(a)) - P(mu(x, a)));
  });
  for_each_index({n1, n0}, [&](const Index& t) {
    auto a = a_(t[0]), x = x_(t[1]);
    emit(R0u(psi(a), x) - psi(m10(a, x)) + omega(dg(a), x) - P(nu(a, x)));
  });
  for_each_index({n1, n1}, [&](const Index& t) {
    auto a = a_(t[0]), b = a_(t[1]);
    emit(L1(a, psi(b)) + nu(a, dg(b)) - R1(psi(a), b) - mu(dg(a), b));
  });
  for_each_index({n0, n0, n0}, [&](const Index& t) {
    auto x = x_(t[0]), y = x_(t[1]), z = x_(t[2]);
    emit(R0u(omega(x, y), z) - L0u(x, omega(y, z)) + omega(m00(x, y), z) - omega(x, m00(y, z)) -
         P(theta(x, y, z)) - psi(L3(x, y, z)));
  });
  for_each_index({n0, n0, n1}, [&](const Index& t) {
    auto x = x_(t[0]), y = x_(t[1]), a = a_(t[2]);
    emit(R1(omega(x, y), a) - L0m(x, mu(y, a)) + mu(m00(x, y), a) - mu(x, m01(y, a)) -
         theta(x, y, dg(a)) - TL(x, y, psi(a)));
  });
  for_each_index({n0, n1, n0}, [&](const Index& t) {
    auto x = x_(t[0]), a = a_(t[1]), y = x_(t[2]);
    emit(R0m(mu(x, a), y) - L0m(x, nu(a, y)) + nu(m01(x, a), y) - mu(x, m10(a, y)) -
         theta(x, dg(a), y) - TM(x, psi(a), y));
  });
  for_each_index({n1, n0, n0}, [&](const Index& t) {
    auto a = a_(t[0]), x = x_(t[1]), y = x_(t[2]);
    emit(R0m(nu(a, x), y) - L1(a, omega(x, y)) + nu(m10(a, x), y) - nu(a, m00(x, y)) -
         theta(dg(a), x, y) - TR(psi(a), x, y));
  });
  for_each_index({n0, n0, n0, n0}, [&](const Index& t) {
    auto x = x_(t[0]), y = x_(t[1]), z = x_(t[2]), w = x_(t[3]);
    V lhs = L0m(x, theta(y, z, w)) + R0m(theta(x, y, z), w) - theta(m00(x, y), z, w) +
            theta(x, m00(y, z), w) - theta(x, y, m00(z, w));
    V rhs = -mu(x, L3(y, z, w)) - nu(L3(x, y, z), w) + TR(omega(x, y), z, w) -
            TM(x, omega(y, z), w) + TL(x, y, omega(z, w));
    emit(lhs - rhs);
  });
  return out;
}

CoboundaryMatrices assemble_matrices(const TwoTermAlgebra& g, const Representation2& r) {
  const std::size_t c1 = cochain1_dim(r), c2 = cochain2_dim(r);
  std::vector<QVec> cols1, cols2;
  for (std::size_t i = 0; i < c1; ++i)
    cols1.push_back(flatten(d1_apply(g, r, unflatten_cochain1(r, basis<Rational>(c1, i)))));
  for (std::size_t i = 0; i < c2; ++i)
    cols2.push_back(d2_residual(g, r, unflatten_cochain2(r, basis<Rational>(c2, i))));
  std::size_t rows2 = 0;
  for (const auto& b : d2_blocks(r)) {
    std::size_t n = 1;
    for (auto s : b.shape) n *= s;
    rows2 += n;
  }
  return {Matrix::from_columns(c2, cols1), Matrix::from_columns(rows2, cols2)};
}

void require_valid(const TwoTermAlgebra& g, const Representation2& r) {
  require_pass(check_algebra(g), "algebra");
  require_pass(check_representation(g, r), "representation");
}

SecondCohomology second_cohomology(const TwoTermAlgebra& g, const Representation2& r) {
  require_valid(g, r);
  CoboundaryMatrices m = assemble_matrices(g, r);
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

std::optional<Cochain1> is_coboundary(const TwoTermAlgebra& g, const Representation2& r,
                                      const Cochain2& c) {
  require_valid(g, r);
  check_shapes(r, c);
  CoboundaryMatrices m = assemble_matrices(g, r);
  auto x = solve(m.d1, flatten(c));
  if (!x) return std::nullopt;
  return unflatten_cochain1(r, *x);
}

bool is_cocycle1(const TwoTermAlgebra& g, const Representation2& r, const Cochain1& c) {
  require_valid(g, r);
  return is_zero(flatten(d1_apply(g, r, c)));
}

}  // namespace assoc2
