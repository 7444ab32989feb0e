#include "assoc2/algebra2.hpp"

#include <sstream>

namespace assoc2 {

template <class K>
CheckReport<K> check_associative(const AssocAlgebraT<K>& a) {
  expect_shape(a.mul, {a.dim, a.dim, a.dim}, "mul");
  CheckReport<K> r;
  const std::size_t n = a.dim;
  auto m = [&](const Vec<K>& x, const Vec<K>& y) { return act(a.mul, x, y); };
  r.begin("assoc");
  for_each_index({n, n, n}, [&](const Index& t) {
    auto x = basis<K>(n, t[0]), y = basis<K>(n, t[1]), z = basis<K>(n, t[2]);
    r.expect(t, m(m(x, y), z), m(x, m(y, z)));
  });
  return r;
}

template <class K>
CheckReport<K> check_bimodule(const AssocAlgebraT<K>& a, const BimoduleT<K>& mod) {
  const std::size_t n = a.dim, d = mod.dim;
  expect_shape(a.mul, {n, n, n}, "mul");
  expect_shape(mod.left, {n, d, d}, "left");
  expect_shape(mod.right, {d, n, d}, "right");
  auto m = [&](const Vec<K>& x, const Vec<K>& y) { return act(a.mul, x, y); };
  auto L = [&](const Vec<K>& x, const Vec<K>& v) { return act(mod.left, x, v); };
  auto R = [&](const Vec<K>& v, const Vec<K>& x) { return act(mod.right, v, x); };
  CheckReport<K> r;
  r.begin("left");
  for_each_index({n, n, d}, [&](const Index& t) {
    auto x = basis<K>(n, t[0]), y = basis<K>(n, t[1]), v = basis<K>(d, t[2]);
    r.expect(t, L(m(x, y), v), L(x, L(y, v)));
  });
  r.begin("middle");
  for_each_index({n, d, n}, [&](const Index& t) {
    auto x = basis<K>(n, t[0]), v = basis<K>(d, t[1]), y = basis<K>(n, t[2]);
    r.expect(t, L(x, R(v, y)), R(L(x, v), y));
  });
  r.begin("right");
  for_each_index({d, n, n}, [&](const Index& t) {
    auto v = basis<K>(d, t[0]), x = basis<K>(n, t[1]), y = basis<K>(n, t[2]);
    r.expect(t, R(v, m(x, y)), R(R(v, x), y));
  });
  return r;
}

template CheckReport<Rational> check_associative(const AssocAlgebraT<Rational>&);
template CheckReport<Poly> check_associative(const AssocAlgebraT<Poly>&);
template CheckReport<Rational> check_bimodule(const AssocAlgebraT<Rational>&,
                                              const BimoduleT<Rational>&);
template CheckReport<Poly> check_bimodule(const AssocAlgebraT<Poly>&, const BimoduleT<Poly>&);

Bimodule regular_bimodule(const AssocAlgebra& a) {
  Bimodule m(a.dim, a.dim);
  m.left = a.mul;
  m.right = a.mul;
  return m;
}

HochschildCochain hochschild_coboundary(const AssocAlgebra& a, const Bimodule& m,
                                        const HochschildCochain& f) {
  const std::size_t n = a.dim, k = f.arity;
  if (k == 0) throw ShapeError("hochschild_coboundary: arity 0 is not supported");
  Shape fs(k, n);
  fs.push_back(m.dim);
  expect_shape(f.values, fs, "cochain");
  expect_shape(m.left, {n, m.dim, m.dim}, "left");
  expect_shape(m.right, {m.dim, n, m.dim}, "right");

  Shape out_shape(k + 1, n);
  out_shape.push_back(m.dim);
  HochschildCochain df{k + 1, Tensor<Rational>(out_shape)};
  auto eval = [&](const std::vector<QVec>& args) {
    std::vector<const QVec*> ptrs;
    for (const auto& v : args) ptrs.push_back(&v);
    return apply_list(f.values, ptrs);
  };
  for_each_index(Shape(k + 1, n), [&](const Index& t) {
    std::vector<QVec> x;
    for (auto i : t) x.push_back(basis<Rational>(n, i));
    QVec acc = act(m.left, x[0], eval(std::vector<QVec>(x.begin() + 1, x.end())));
    QVec last = act(m.right, eval(std::vector<QVec>(x.begin(), x.end() - 1)), x[k]);
    acc = (k % 2 == 0) ? acc - last : acc + last;  // (-1)^(k+1)
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<QVec> args;
      for (std::size_t j = 0; j < i; ++j) args.push_back(x[j]);
      args.push_back(act(a.mul, x[i], x[i + 1]));
      for (std::size_t j = i + 2; j <= k; ++j) args.push_back(x[j]);
      QVec term = eval(args);
      acc = (i % 2 == 0) ? acc - term : acc + term;  // (-1)^(i+1), i zero-based
    }
    for (std::size_t o = 0; o < m.dim; ++o) {
      Index full = t;
      full.push_back(o);
      df.values.at(full) = acc[o];
    }
  });
  return df;
}

template <class K>
CheckReport<K> check_algebra(const Alg2T<K>& g) {
  g.validate();
  const std::size_t n0 = g.n0, n1 = g.n1;
  auto dd = [&](const Vec<K>& a) { return act(g.d, a); };
  auto m00 = [&](const Vec<K>& x, const Vec<K>& y) { return act(g.l2_00, x, y); };
  auto m01 = [&](const Vec<K>& x, const Vec<K>& a) { return act(g.l2_01, x, a); };
  auto m10 = [&](const Vec<K>& a, const Vec<K>& x) { return act(g.l2_10, a, x); };
  auto L3 = [&](const Vec<K>& x, const Vec<K>& y, const Vec<K>& z) { return act(g.l3, x, y, z); };
  auto e0 = [&](std::size_t i) { return basis<K>(n0, i); };
  auto e1 = [&](std::size_t i) { return basis<K>(n1, i); };

  CheckReport<K> r;
  r.begin("a");
  for_each_index({n0, n1}, [&](const Index& t) {
    auto x = e0(t[0]), a = e1(t[1]);
    r.expect(t, dd(m01(x, a)), m00(x, dd(a)));
  });
  r.begin("b");
  for_each_index({n1, n0}, [&](const Index& t) {
    auto a = e1(t[0]), x = e0(t[1]);
    r.expect(t, dd(m10(a, x)), m00(dd(a), x));
  });
  r.begin("c");
  for_each_index({n1, n1}, [&](const Index& t) {
    auto a = e1(t[0]), b = e1(t[1]);
    r.expect(t, m01(dd(a), b), m10(a, dd(b)));
  });
  r.begin("d");
  for_each_index({n0, n0, n0}, [&](const Index& t) {
    auto x = e0(t[0]), y = e0(t[1]), z = e0(t[2]);
    r.expect(t, dd(L3(x, y, z)), m00(m00(x, y), z) - m00(x, m00(y, z)));
  });
  r.begin("e1");
  for_each_index({n0, n0, n1}, [&](const Index& t) {
    auto x = e0(t[0]), y = e0(t[1]), a = e1(t[2]);
    r.expect(t, L3(x, y, dd(a)), m01(m00(x, y), a) - m01(x, m01(y, a)));
  });
  r.begin("e2");
  for_each_index({n0, n1, n0}, [&](const Index& t) {
    auto x = e0(t[0]), a = e1(t[1]), y = e0(t[2]);
    r.expect(t, L3(x, dd(a), y), m10(m01(x, a), y) - m01(x, m10(a, y)));
  });
  r.begin("e3");
  for_each_index({n1, n0, n0}, [&](const Index& t) {
    auto a = e1(t[0]), x = e0(t[1]), y = e0(t[2]);
    r.expect(t, L3(dd(a), x, y), m10(m10(a, x), y) - m10(a, m00(x, y)));
  });
  r.begin("f");
  for_each_index({n0, n0, n0, n0}, [&](const Index& t) {
    auto x = e0(t[0]), y = e0(t[1]), z = e0(t[2]), w = e0(t[3]);
    r.expect(t, m01(x, L3(y, z, w)) + m10(L3(x, y, z), w),
             L3(m00(x, y), z, w) - L3(x, m00(y, z), w) + L3(x, y, m00(z, w)));
  });
  return r;
}

template CheckReport<Rational> check_algebra(const Alg2T<Rational>&);
template CheckReport<Poly> check_algebra(const Alg2T<Poly>&);

template <class K>
CheckReport<K> check_homomorphism(const Alg2T<K>& s, const Alg2T<K>& tg, const Hom2T<K>& h) {
  s.validate();
  tg.validate();
  expect_shape(h.F0, {s.n0, tg.n0}, "F0");
  expect_shape(h.F1, {s.n1, tg.n1}, "F1");
  expect_shape(h.F2, {s.n0, s.n0, tg.n1}, "F2");
  const std::size_t n0 = s.n0, n1 = s.n1;
  auto F0 = [&](const Vec<K>& x) { return act(h.F0, x); };
  auto F1 = [&](const Vec<K>& a) { return act(h.F1, a); };
  auto F2 = [&](const Vec<K>& x, const Vec<K>& y) { return act(h.F2, x, y); };
  auto e0 = [&](std::size_t i) { return basis<K>(n0, i); };
  auto e1 = [&](std::size_t i) { return basis<K>(n1, i); };

  CheckReport<K> r;
  r.begin("i");
  for_each_index({n1}, [&](const Index& t) {
    auto a = e1(t[0]);
    r.expect(t, F0(act(s.d, a)), act(tg.d, F1(a)));
  });
  r.begin("ii");
  for_each_index({n0, n0}, [&](const Index& t) {
    auto x = e0(t[0]), y = e0(t[1]);
    r.expect(t, F0(act(s.l2_00, x, y)) - act(tg.l2_00, F0(x), F0(y)), act(tg.d, F2(x, y)));
  });
  r.begin("iii1");
  for_each_index({n0, n1}, [&](const Index& t) {
    auto x = e0(t[0]), a = e1(t[1]);
    r.expect(t, F1(act(s.l2_01, x, a)) - act(tg.l2_01, F0(x), F1(a)), F2(x, act(s.d, a)));
  });
  r.begin("iii2");
  for_each_index({n1, n0}, [&](const Index& t) {
    auto a = e1(t[0]), x = e0(t[1]);
    r.expect(t, F1(act(s.l2_10, a, x)) - act(tg.l2_10, F1(a), F0(x)), F2(act(s.d, a), x));
  });
  r.begin("iv");
  for_each_index({n0, n0, n0}, [&](const Index& t) {
    auto x = e0(t[0]), y = e0(t[1]), z = e0(t[2]);
    r.expect(t, F1(act(s.l3, x, y, z)) - act(tg.l3, F0(x), F0(y), F0(z)),
             F2(act(s.l2_00, x, y), z) - F2(x, act(s.l2_00, y, z)) +
                 act(tg.l2_10, F2(x, y), F0(z)) - act(tg.l2_01, F0(x), F2(y, z)));
  });
  return r;
}

template CheckReport<Rational> check_homomorphism(const Alg2T<Rational>&, const Alg2T<Rational>&,
                                                  const Hom2T<Rational>&);
template CheckReport<Poly> check_homomorphism(const Alg2T<Poly>&, const Alg2T<Poly>&,
                                              const Hom2T<Poly>&);

Homomorphism2 identity_homomorphism(const TwoTermAlgebra& g) {
  return {identity_map<Rational>(g.n0), identity_map<Rational>(g.n1),
          Tensor<Rational>({g.n0, g.n0, g.n1})};
}

Homomorphism2 compose_homomorphisms(const Homomorphism2& g, const Homomorphism2& f) {
  if (f.F0.rank() != 2 || g.F0.rank() != 2 || f.F0.dim(1) != g.F0.dim(0) ||
      f.F1.dim(1) != g.F1.dim(0))
    throw ShapeError("compose_homomorphisms: chain mismatch");
  Homomorphism2 r;
  r.F0 = compose(g.F0, f.F0);
  r.F1 = compose(g.F1, f.F1);
  const std::size_t n = f.F0.dim(0), out = g.F1.dim(1);
  r.F2 = Tensor<Rational>({n, n, out});
  for_each_index({n, n}, [&](const Index& t) {
    auto x = basis<Rational>(n, t[0]), y = basis<Rational>(n, t[1]);
    QVec v = act(g.F2, act(f.F0, x), act(f.F0, y)) + act(g.F1, act(f.F2, x, y));
    for (std::size_t o = 0; o < out; ++o) r.F2(t[0], t[1], o) = v[o];
  });
  return r;
}

Report check_derivation(const TwoTermAlgebra& g, const HomotopyDerivation& der) {
  g.validate();
  const std::size_t n0 = g.n0, n1 = g.n1;
  expect_shape(der.D0, {n0, n0}, "D0");
  expect_shape(der.D1, {n1, n1}, "D1");
  expect_shape(der.D2, {n0, n0, n1}, "D2");
  auto dd = [&](const QVec& a) { return act(g.d, a); };
  auto m00 = [&](const QVec& x, const QVec& y) { return act(g.l2_00, x, y); };
  auto m01 = [&](const QVec& x, const QVec& a) { return act(g.l2_01, x, a); };
  auto m10 = [&](const QVec& a, const QVec& x) { return act(g.l2_10, a, x); };
  auto L3 = [&](const QVec& x, const QVec& y, const QVec& z) { return act(g.l3, x, y, z); };
  auto D0 = [&](const QVec& x) { return act(der.D0, x); };
  auto D1 = [&](const QVec& a) { return act(der.D1, a); };
  auto D2 = [&](const QVec& x, const QVec& y) { return act(der.D2, x, y); };
  auto e0 = [&](std::size_t i) { return basis<Rational>(n0, i); };
  auto e1 = [&](std::size_t i) { return basis<Rational>(n1, i); };

  Report r;
  r.begin("chain");
  for_each_index({n1}, [&](const Index& t) {
    auto a = e1(t[0]);
    r.expect(t, D0(dd(a)), dd(D1(a)));
  });
  r.begin("a");
  for_each_index({n0, n0}, [&](const Index& t) {
    auto x = e0(t[0]), y = e0(t[1]);
    r.expect(t, m00(D0(x), y) + m00(x, D0(y)) - D0(m00(x, y)), dd(D2(x, y)));
  });
  r.begin("b");
  for_each_index({n0, n1}, [&](const Index& t) {
    auto x = e0(t[0]), m = e1(t[1]);
    r.expect(t, m01(D0(x), m) + m01(x, D1(m)) - D1(m01(x, m)), D2(x, dd(m)));
  });
  r.begin("c");
  for_each_index({n1, n0}, [&](const Index& t) {
    auto m = e1(t[0]), x = e0(t[1]);
    r.expect(t, m10(D1(m), x) + m10(m, D0(x)) - D1(m10(m, x)), D2(dd(m), x));
  });
  r.begin("d");
  for_each_index({n0, n0, n0}, [&](const Index& t) {
    auto x = e0(t[0]), y = e0(t[1]), z = e0(t[2]);
    r.expect(t, L3(D0(x), y, z) + L3(x, D0(y), z) + L3(x, y, D0(z)) - D1(L3(x, y, z)),
             D2(m00(x, y), z) - D2(x, m00(y, z)) + m10(D2(x, y), z) - m01(x, D2(y, z)));
  });
  return r;
}

namespace {

// Column-stacked coordinates of a pair (X0, X1).
QVec flatten_pair(const Matrix& x0, const Matrix& x1) {
  QVec v(x0.entries());
  v.insert(v.end(), x1.entries().begin(), x1.entries().end());
  return v;
}

std::pair<Matrix, Matrix> unflatten_pair(const QVec& v, std::size_t m0, std::size_t m1) {
  Matrix x0(m0, m0), x1(m1, m1);
  for (std::size_t i = 0; i < m0 * m0; ++i) x0(i / m0, i % m0) = v[i];
  for (std::size_t i = 0; i < m1 * m1; ++i) x1(i / m1, i % m1) = v[m0 * m0 + i];
  return {x0, x1};
}

}  // namespace

EndAlgebra build_end_algebra(const Complex2& v) {
  const std::size_t m0 = v.v0, m1 = v.v1;
  expect_shape(v.partial, {m1, m0}, "partial");
  const Matrix P = to_matrix(v.partial);  // m0 x m1

  // X0 P - P X1 = 0, unknowns (X0, X1) flattened row-major.
  const std::size_t nx = m0 * m0 + m1 * m1;
  Matrix cond(m0 * m1, nx);
  for (std::size_t i = 0; i < m0; ++i)
    for (std::size_t j = 0; j < m1; ++j) {
      std::size_t row = i * m1 + j;
      for (std::size_t k = 0; k < m0; ++k) cond(row, i * m0 + k) += P(k, j);
      for (std::size_t k = 0; k < m1; ++k) cond(row, m0 * m0 + k * m1 + j) -= P(i, k);
    }
  Subspace ker = kernel_basis(cond);
  const std::size_t n0 = ker.dim(), n1 = m1 * m0;

  EndAlgebra e;
  for (const auto& b : ker.basis) e.degree0.push_back(unflatten_pair(b, m0, m1));
  for (std::size_t r = 0; r < m1; ++r)
    for (std::size_t c = 0; c < m0; ++c) {
      Matrix a(m1, m0);
      a(r, c) = 1;
      e.degree1.push_back(a);
    }
  Matrix kb = Matrix::from_columns(nx, ker.basis);
  auto coords0 = [&](const Matrix& x0, const Matrix& x1) {
    auto c = solve(kb, flatten_pair(x0, x1));
    if (!c) throw std::logic_error("build_end_algebra: element outside End^0");
    return *c;
  };
  auto coords1 = [&](const Matrix& a) { return QVec(a.entries()); };

  TwoTermAlgebra& g = e.algebra;
  g = TwoTermAlgebra(n0, n1);
  for (std::size_t a = 0; a < n1; ++a) {
    const Matrix& A = e.degree1[a];
    QVec c = coords0(P * A, A * P);
    for (std::size_t k = 0; k < n0; ++k) g.d(a, k) = c[k];
  }
  for (std::size_t i = 0; i < n0; ++i) {
    const auto& [X0, X1] = e.degree0[i];
    for (std::size_t j = 0; j < n0; ++j) {
      const auto& [Y0, Y1] = e.degree0[j];
      QVec c = coords0(X0 * Y0, X1 * Y1);
      for (std::size_t k = 0; k < n0; ++k) g.l2_00(i, j, k) = c[k];
    }
    for (std::size_t a = 0; a < n1; ++a) {
      QVec l = coords1(X1 * e.degree1[a]);
      QVec r = coords1(e.degree1[a] * X0);
      for (std::size_t k = 0; k < n1; ++k) {
        g.l2_01(i, a, k) = l[k];
        g.l2_10(a, i, k) = r[k];
      }
    }
  }
  return e;
}

void require_pass(const Report& r, const std::string& what) {
  if (r.pass()) return;
  std::ostringstream os;
  os << what << " fails:";
  std::string last;
  for (const auto& v : r.violations)
    if (v.condition != last) {
      os << " " << v.condition;
      last = v.condition;
    }
  throw PreconditionError(os.str());
}

}  // namespace assoc2

namespace assoc2 {

TwoTermAlgebra transport(const TwoTermAlgebra& g, const Homomorphism2& f) {
  g.validate();
  const std::size_t n0 = g.n0, n1 = g.n1;
  expect_shape(f.F0, {n0, n0}, "F0");
  expect_shape(f.F1, {n1, n1}, "F1");
  expect_shape(f.F2, {n0, n0, n1}, "F2");
  auto inv0 = inverse(to_matrix(f.F0));
  auto inv1 = inverse(to_matrix(f.F1));
  if (!inv0 || !inv1) throw PreconditionError("transport: F0 and F1 must be invertible");
  const Tensor<Rational> G0 = to_map(*inv0), G1 = to_map(*inv1);

  auto F0 = [&](const QVec& x) { return act(f.F0, x); };
  auto F1 = [&](const QVec& a) { return act(f.F1, a); };
  auto F2 = [&](const QVec& x, const QVec& y) { return act(f.F2, x, y); };
  auto e0 = [&](std::size_t i) { return basis<Rational>(n0, i); };
  auto e1 = [&](std::size_t i) { return basis<Rational>(n1, i); };

  TwoTermAlgebra h(n0, n1);
  h.d = compose(compose(f.F0, g.d), G1);
  for_each_index({n0, n0}, [&](const Index& t) {
    auto x = act(G0, e0(t[0])), y = act(G0, e0(t[1]));
    set_fiber(h.l2_00, t, F0(act(g.l2_00, x, y)) - act(h.d, F2(x, y)));
  });
  for_each_index({n0, n1}, [&](const Index& t) {
    auto x = act(G0, e0(t[0])), a = act(G1, e1(t[1]));
    set_fiber(h.l2_01, t, F1(act(g.l2_01, x, a)) - F2(x, act(g.d, a)));
  });
  for_each_index({n1, n0}, [&](const Index& t) {
    auto a = act(G1, e1(t[0])), x = act(G0, e0(t[1]));
    set_fiber(h.l2_10, t, F1(act(g.l2_10, a, x)) - F2(act(g.d, a), x));
  });
  for_each_index({n0, n0, n0}, [&](const Index& t) {
    auto x = act(G0, e0(t[0])), y = act(G0, e0(t[1])), z = act(G0, e0(t[2]));
    QVec rhs = F2(act(g.l2_00, x, y), z) - F2(x, act(g.l2_00, y, z)) +
               act(h.l2_10, F2(x, y), F0(z)) - act(h.l2_01, F0(x), F2(y, z));
    set_fiber(h.l3, t, F1(act(g.l3, x, y, z)) - rhs);
  });
  return h;
}

}  // namespace assoc2
