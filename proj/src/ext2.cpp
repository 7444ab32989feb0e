#include "assoc2/ext2.hpp"

#include <set>

namespace assoc2 {

namespace {

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

void check_shapes(const Extension2& e) {
  e.total.validate();
  e.base.validate();
  const std::size_t N0 = e.total.n0, N1 = e.total.n1, n0 = e.base.n0, n1 = e.base.n1;
  expect_shape(e.proj0, {N0, n0}, "proj0");
  expect_shape(e.proj1, {N1, n1}, "proj1");
  expect_shape(e.sigma0, {n0, N0}, "sigma0");
  expect_shape(e.sigma1, {n1, N1}, "sigma1");
  auto check_sub = [](const std::vector<std::size_t>& sub, std::size_t N, const char* name) {
    std::set<std::size_t> seen;
    for (auto s : sub)
      if (s >= N || !seen.insert(s).second)
        throw ShapeError(std::string("extension: bad subspace index list ") + name);
  };
  check_sub(e.sub0, N0, "h0");
  check_sub(e.sub1, N1, "h1");
}

Homomorphism2 projection(const Extension2& e) {
  Homomorphism2 p;
  p.F0 = e.proj0;
  p.F1 = e.proj1;
  p.F2 = Tensor<Rational>({e.total.n0, e.total.n0, e.base.n1});
  return p;
}

}  // namespace

Report validate_extension(const Extension2& e) {
  check_shapes(e);
  const TwoTermAlgebra& t = e.total;
  const std::size_t N0 = t.n0, N1 = t.n1, n0 = e.base.n0, n1 = e.base.n1;
  Report r;
  r.merge(check_algebra(t), "total.");
  r.merge(check_algebra(e.base), "base.");
  r.merge(check_homomorphism(t, e.base, projection(e)), "hom.");

  // exact: p onto, ker p = span of the sub coordinates
  r.begin("exact");
  auto exact_part = [&](const Tensor<Rational>& proj, const std::vector<std::size_t>& sub,
                        std::size_t N, std::size_t n, std::size_t degree) {
    Matrix m = to_matrix(proj);
    if (rank(m) != n) r.expect({degree}, {Rational(rank(m))}, {Rational(n)});
    if (N != n + sub.size()) r.expect({degree}, {Rational(N)}, {Rational(n + sub.size())});
    for (auto s : sub) {
      QVec col = m.column(s);
      r.expect({degree, s}, col, QVec(n));
    }
  };
  exact_part(e.proj0, e.sub0, N0, n0, 0);
  exact_part(e.proj1, e.sub1, N1, n1, 1);

  r.begin("section");
  for (std::size_t i = 0; i < n0; ++i) {
    auto x = basis<Rational>(n0, i);
    r.expect({0, i}, act(e.proj0, act(e.sigma0, x)), x);
  }
  for (std::size_t i = 0; i < n1; ++i) {
    auto a = basis<Rational>(n1, i);
    r.expect({1, i}, act(e.proj1, act(e.sigma1, a)), a);
  }

  // abelian: products and l3 vanish when two arguments lie in h
  r.begin("abelian");
  auto u0 = [&](std::size_t s) { return basis<Rational>(N0, s); };
  auto u1 = [&](std::size_t s) { return basis<Rational>(N1, s); };
  for (auto s : e.sub0)
    for (auto q : e.sub0) r.expect({s, q}, act(t.l2_00, u0(s), u0(q)), QVec(N0));
  for (auto s : e.sub0)
    for (auto q : e.sub1) {
      r.expect({s, q}, act(t.l2_01, u0(s), u1(q)), QVec(N1));
      r.expect({q, s}, act(t.l2_10, u1(q), u0(s)), QVec(N1));
    }
  for_each_index({N0, N0, N0}, [&](const Index& idx) {
    std::size_t in_h = 0;
    for (auto i : idx) in_h += std::count(e.sub0.begin(), e.sub0.end(), i);
    if (in_h >= 2) r.expect(idx, act(t.l3, u0(idx[0]), u0(idx[1]), u0(idx[2])), QVec(N1));
  });
  return r;
}

Representation2 extract_representation(const Extension2& e) {
  require_pass(validate_extension(e), "extension");
  const TwoTermAlgebra& t = e.total;
  const std::size_t N0 = t.n0, N1 = t.n1, n0 = e.base.n0, n1 = e.base.n1;
  const std::size_t m0 = e.sub0.size(), m1 = e.sub1.size();
  Representation2 r(n0, n1, m0, m1);
  auto sx = [&](std::size_t i) { return act(e.sigma0, basis<Rational>(n0, i)); };
  auto sa = [&](std::size_t i) { return act(e.sigma1, basis<Rational>(n1, i)); };
  auto iu = [&](std::size_t i) { return basis<Rational>(N0, e.sub0[i]); };
  auto im = [&](std::size_t i) { return basis<Rational>(N1, e.sub1[i]); };
  auto h0 = [&](const QVec& v) { return sub_coords(v, e.sub0); };
  auto h1 = [&](const QVec& v) { return sub_coords(v, e.sub1); };

  for_each_index({m1}, [&](const Index& k) { set_fiber(r.partial, k, h0(act(t.d, im(k[0])))); });
  for_each_index({n0, m0}, [&](const Index& k) {
    set_fiber(r.left0_v0, k, h0(act(t.l2_00, sx(k[0]), iu(k[1]))));
  });
  for_each_index({n0, m1}, [&](const Index& k) {
    set_fiber(r.left0_v1, k, h1(act(t.l2_01, sx(k[0]), im(k[1]))));
  });
  for_each_index({m0, n0}, [&](const Index& k) {
    set_fiber(r.right0_v0, k, h0(act(t.l2_00, iu(k[0]), sx(k[1]))));
  });
  for_each_index({m1, n0}, [&](const Index& k) {
    set_fiber(r.right0_v1, k, h1(act(t.l2_10, im(k[0]), sx(k[1]))));
  });
  for_each_index({n1, m0}, [&](const Index& k) {
    set_fiber(r.left1, k, h1(act(t.l2_10, sa(k[0]), iu(k[1]))));
  });
  for_each_index({m0, n1}, [&](const Index& k) {
    set_fiber(r.right1, k, h1(act(t.l2_01, iu(k[0]), sa(k[1]))));
  });
  for_each_index({n0, n0, m0}, [&](const Index& k) {
    set_fiber(r.tri_l, k, h1(act(t.l3, sx(k[0]), sx(k[1]), iu(k[2]))));
  });
  for_each_index({n0, m0, n0}, [&](const Index& k) {
    set_fiber(r.tri_m, k, h1(act(t.l3, sx(k[0]), iu(k[1]), sx(k[2]))));
  });
  for_each_index({m0, n0, n0}, [&](const Index& k) {
    set_fiber(r.tri_r, k, h1(act(t.l3, iu(k[0]), sx(k[1]), sx(k[2]))));
  });
  return r;
}

Cochain2 extract_cocycle(const Extension2& e) {
  require_pass(validate_extension(e), "extension");
  const TwoTermAlgebra& t = e.total;
  const TwoTermAlgebra& g = e.base;
  const std::size_t n0 = g.n0, n1 = g.n1;
  Cochain2 c(n0, n1, e.sub0.size(), e.sub1.size());
  auto s0 = [&](const QVec& x) { return act(e.sigma0, x); };
  auto s1 = [&](const QVec& a) { return act(e.sigma1, a); };
  auto h0 = [&](const QVec& v) { return sub_coords(v, e.sub0); };
  auto h1 = [&](const QVec& v) { return sub_coords(v, e.sub1); };
  auto x_ = [&](std::size_t i) { return basis<Rational>(n0, i); };
  auto a_ = [&](std::size_t i) { return basis<Rational>(n1, i); };

  for_each_index({n1}, [&](const Index& k) {
    auto a = a_(k[0]);
    set_fiber(c.psi, k, h0(act(t.d, s1(a)) - s0(act(g.d, a))));
  });
  for_each_index({n0, n0}, [&](const Index& k) {
    auto x = x_(k[0]), y = x_(k[1]);
    set_fiber(c.omega, k, h0(act(t.l2_00, s0(x), s0(y)) - s0(act(g.l2_00, x, y))));
  });
  for_each_index({n0, n1}, [&](const Index& k) {
    auto x = x_(k[0]), a = a_(k[1]);
    set_fiber(c.mu, k, h1(act(t.l2_01, s0(x), s1(a)) - s1(act(g.l2_01, x, a))));
  });
  for_each_index({n1, n0}, [&](const Index& k) {
    auto a = a_(k[0]), x = x_(k[1]);
    set_fiber(c.nu, k, h1(act(t.l2_10, s1(a), s0(x)) - s1(act(g.l2_10, a, x))));
  });
  for_each_index({n0, n0, n0}, [&](const Index& k) {
    auto x = x_(k[0]), y = x_(k[1]), z = x_(k[2]);
    set_fiber(c.theta, k, h1(act(t.l3, s0(x), s0(y), s0(z)) - s1(act(g.l3, x, y, z))));
  });
  return c;
}

Extension2 build_extension(const TwoTermAlgebra& g, const Representation2& r, const Cochain2& c) {
  require_valid(g, r);
  if (!is_zero(d2_residual(g, r, c)))
    throw PreconditionError("build_extension: cochain is not a 2-cocycle");
  const std::size_t n0 = g.n0, n1 = g.n1, m0 = r.m0, m1 = r.m1;
  const std::size_t N0 = n0 + m0, N1 = n1 + m1;
  Extension2 e;
  e.base = g;
  TwoTermAlgebra& t = e.total = TwoTermAlgebra(N0, N1);
  for (std::size_t i = 0; i < m0; ++i) e.sub0.push_back(n0 + i);
  for (std::size_t i = 0; i < m1; ++i) e.sub1.push_back(n1 + i);

  // Split a total basis index into (is_h, local index).
  auto part0 = [&](std::size_t i) { return std::pair{i >= n0, i >= n0 ? i - n0 : i}; };
  auto part1 = [&](std::size_t i) { return std::pair{i >= n1, i >= n1 ? i - n1 : i}; };
  auto x_ = [&](std::size_t i) { return basis<Rational>(n0, i); };
  auto a_ = [&](std::size_t i) { return basis<Rational>(n1, i); };
  auto u_ = [&](std::size_t i) { return basis<Rational>(m0, i); };
  auto w_ = [&](std::size_t i) { return basis<Rational>(m1, i); };
  // g-part and h-part of a total vector
  auto join0 = [&](const QVec& gp, const QVec& hp) {
    QVec v = gp;
    v.insert(v.end(), hp.begin(), hp.end());
    return v;
  };
  auto join1 = join0;
  auto h0 = [&](const QVec& hp) { return join0(QVec(n0), hp); };
  auto h1 = [&](const QVec& hp) { return join1(QVec(n1), hp); };

  for_each_index({N1}, [&](const Index& k) {
    auto [isv, i] = part1(k[0]);
    set_fiber(t.d, k, isv ? h0(act(r.partial, w_(i)))
                          : join0(act(g.d, a_(i)), act(c.psi, a_(i))));
  });
  for_each_index({N0, N0}, [&](const Index& k) {
    auto [hu, i] = part0(k[0]);
    auto [hv, j] = part0(k[1]);
    QVec v(N0);
    if (!hu && !hv) v = join0(act(g.l2_00, x_(i), x_(j)), act(c.omega, x_(i), x_(j)));
    else if (!hu) v = h0(act(r.left0_v0, x_(i), u_(j)));
    else if (!hv) v = h0(act(r.right0_v0, u_(i), x_(j)));
    set_fiber(t.l2_00, k, v);
  });
  for_each_index({N0, N1}, [&](const Index& k) {
    auto [hu, i] = part0(k[0]);
    auto [hm, j] = part1(k[1]);
    QVec v(N1);
    if (!hu && !hm) v = join1(act(g.l2_01, x_(i), a_(j)), act(c.mu, x_(i), a_(j)));
    else if (!hu) v = h1(act(r.left0_v1, x_(i), w_(j)));
    else if (!hm) v = h1(act(r.right1, u_(i), a_(j)));
    set_fiber(t.l2_01, k, v);
  });
  for_each_index({N1, N0}, [&](const Index& k) {
    auto [hm, i] = part1(k[0]);
    auto [hu, j] = part0(k[1]);
    QVec v(N1);
    if (!hm && !hu) v = join1(act(g.l2_10, a_(i), x_(j)), act(c.nu, a_(i), x_(j)));
    else if (!hm) v = h1(act(r.left1, a_(i), u_(j)));
    else if (!hu) v = h1(act(r.right0_v1, w_(i), x_(j)));
    set_fiber(t.l2_10, k, v);
  });
  for_each_index({N0, N0, N0}, [&](const Index& k) {
    auto [ha, i] = part0(k[0]);
    auto [hb, j] = part0(k[1]);
    auto [hc, l] = part0(k[2]);
    QVec v(N1);
    if (!ha && !hb && !hc)
      v = join1(act(g.l3, x_(i), x_(j), x_(l)), act(c.theta, x_(i), x_(j), x_(l)));
    else if (!ha && !hb && hc) v = h1(act(r.tri_l, x_(i), x_(j), u_(l)));
    else if (!ha && hb && !hc) v = h1(act(r.tri_m, x_(i), u_(j), x_(l)));
    else if (ha && !hb && !hc) v = h1(act(r.tri_r, u_(i), x_(j), x_(l)));
    set_fiber(t.l3, k, v);
  });

  e.proj0 = Tensor<Rational>({N0, n0});
  e.proj1 = Tensor<Rational>({N1, n1});
  e.sigma0 = Tensor<Rational>({n0, N0});
  e.sigma1 = Tensor<Rational>({n1, N1});
  for (std::size_t i = 0; i < n0; ++i) e.proj0(i, i) = e.sigma0(i, i) = 1;
  for (std::size_t i = 0; i < n1; ++i) e.proj1(i, i) = e.sigma1(i, i) = 1;
  return e;
}

EquivalenceResult check_equivalence(const Extension2& e1, const Extension2& e2) {
  EquivalenceResult res;
  if (!(e1.base == e2.base)) throw PreconditionError("check_equivalence: base algebras differ");
  Representation2 r1 = extract_representation(e1), r2 = extract_representation(e2);
  if (!(r1 == r2))
    throw PreconditionError("check_equivalence: induced representations differ");
  const TwoTermAlgebra& g = e1.base;
  res.c1 = extract_cocycle(e1);
  res.c2 = extract_cocycle(e2);
  CoboundaryMatrices m = assemble_matrices(g, r1);
  QVec delta = flatten(res.c1 - res.c2);
  auto sol = solve(m.d1, delta);
  if (!sol) {
    res.reason = "difference of cocycles is not a coboundary";
    res.certificate = left_null_certificate(m.d1, delta);
    return res;
  }
  res.lambda = unflatten_cochain1(r1, *sol);
  const Cochain1& lam = *res.lambda;

  const std::size_t N0 = e1.total.n0, N1 = e1.total.n1;
  const std::size_t M0 = e2.total.n0, M1 = e2.total.n1;
  if (N0 != M0 || N1 != M1) throw std::logic_error("check_equivalence: dimension mismatch");
  Homomorphism2 F;
  F.F0 = Tensor<Rational>({N0, M0});
  F.F1 = Tensor<Rational>({N1, M1});
  F.F2 = Tensor<Rational>({N0, N0, M1});
  for (std::size_t i = 0; i < N0; ++i) {
    QVec al = basis<Rational>(N0, i);
    QVec x = act(e1.proj0, al);
    QVec u = sub_coords(al - act(e1.sigma0, x), e1.sub0);
    set_fiber(F.F0, {i}, act(e2.sigma0, x) + embed(M0, act(lam.phi, x) + u, e2.sub0));
  }
  for (std::size_t i = 0; i < N1; ++i) {
    QVec al = basis<Rational>(N1, i);
    QVec a = act(e1.proj1, al);
    QVec w = sub_coords(al - act(e1.sigma1, a), e1.sub1);
    set_fiber(F.F1, {i}, act(e2.sigma1, a) + embed(M1, act(lam.phi1, a) + w, e2.sub1));
  }
  for_each_index({N0, N0}, [&](const Index& k) {
    QVec x = act(e1.proj0, basis<Rational>(N0, k[0]));
    QVec y = act(e1.proj0, basis<Rational>(N0, k[1]));
    set_fiber(F.F2, k, embed(M1, act(lam.chi, x, y), e2.sub1));
  });
  res.map = F;

  Report v = check_homomorphism(e1.total, e2.total, F);
  for (std::size_t s = 0; s < e1.sub0.size(); ++s)
    if (act(F.F0, basis<Rational>(N0, e1.sub0[s])) != basis<Rational>(M0, e2.sub0[s]))
      v.violations.push_back({"restricts", {0, s}, {}, {}});
  for (std::size_t s = 0; s < e1.sub1.size(); ++s)
    if (act(F.F1, basis<Rational>(N1, e1.sub1[s])) != basis<Rational>(M1, e2.sub1[s]))
      v.violations.push_back({"restricts", {1, s}, {}, {}});
  for (auto s : e1.sub0)
    for (std::size_t j = 0; j < N0; ++j)
      if (!is_zero(act(F.F2, basis<Rational>(N0, s), basis<Rational>(N0, j))))
        v.violations.push_back({"f2_kernel", {s, j}, {}, {}});
  if (!(compose(e2.proj0, F.F0) == e1.proj0) || !(compose(e2.proj1, F.F1) == e1.proj1))
    v.violations.push_back({"covers", {}, {}, {}});
  if (!v.pass()) throw std::logic_error("check_equivalence: constructed map fails verification");
  res.equivalent = true;
  return res;
}

Extension2 resplit(const Extension2& e, const Resplit& r) {
  check_shapes(e);
  const std::size_t N0 = e.total.n0, N1 = e.total.n1, n0 = e.base.n0, n1 = e.base.n1;
  const std::size_t m0 = e.sub0.size(), m1 = e.sub1.size();
  expect_shape(r.s0, {n0, m0}, "s0");
  expect_shape(r.s1, {n1, m1}, "s1");
  expect_shape(r.t0, {n0, m0}, "t0");
  expect_shape(r.t1, {n1, m1}, "t1");
  auto is_perm = [](const std::vector<std::size_t>& p, std::size_t n) {
    std::vector<bool> seen(n, false);
    if (p.size() != n) return false;
    for (auto i : p) {
      if (i >= n || seen[i]) return false;
      seen[i] = true;
    }
    return true;
  };
  if (!is_perm(r.perm0, N0) || !is_perm(r.perm1, N1))
    throw ShapeError("resplit: perm0/perm1 must be permutations");

  // T = P (id + i s p), a strict isomorphism total -> new total
  Tensor<Rational> T0({N0, N0}), T1({N1, N1});
  for (std::size_t i = 0; i < N0; ++i) {
    QVec al = basis<Rational>(N0, i);
    QVec v = al + embed(N0, act(r.s0, act(e.proj0, al)), e.sub0);
    QVec out(N0);
    for (std::size_t j = 0; j < N0; ++j) out[r.perm0[j]] = v[j];
    set_fiber(T0, {i}, out);
  }
  for (std::size_t i = 0; i < N1; ++i) {
    QVec al = basis<Rational>(N1, i);
    QVec v = al + embed(N1, act(r.s1, act(e.proj1, al)), e.sub1);
    QVec out(N1);
    for (std::size_t j = 0; j < N1; ++j) out[r.perm1[j]] = v[j];
    set_fiber(T1, {i}, out);
  }
  Homomorphism2 T{T0, T1, Tensor<Rational>({N0, N0, N1})};
  Extension2 out;
  out.base = e.base;
  out.total = transport(e.total, T);
  for (auto s : e.sub0) out.sub0.push_back(r.perm0[s]);
  for (auto s : e.sub1) out.sub1.push_back(r.perm1[s]);
  auto Tinv0 = to_map(*inverse(to_matrix(T0)));
  auto Tinv1 = to_map(*inverse(to_matrix(T1)));
  out.proj0 = compose(e.proj0, Tinv0);
  out.proj1 = compose(e.proj1, Tinv1);
  Tensor<Rational> sig0({n0, N0}), sig1({n1, N1});
  for (std::size_t i = 0; i < n0; ++i) {
    QVec x = basis<Rational>(n0, i);
    set_fiber(sig0, {i}, act(e.sigma0, x) + embed(N0, act(r.t0, x), e.sub0));
  }
  for (std::size_t i = 0; i < n1; ++i) {
    QVec a = basis<Rational>(n1, i);
    set_fiber(sig1, {i}, act(e.sigma1, a) + embed(N1, act(r.t1, a), e.sub1));
  }
  out.sigma0 = compose(T0, sig0);
  out.sigma1 = compose(T1, sig1);
  return out;
}

}  // namespace assoc2
