#include "assoc2/random.hpp"

#include "assoc2/fixtures.hpp"

namespace assoc2 {

Rational random_rational(Rng& rng, double density) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  if (u(rng) >= density) return Rational(0);
  std::uniform_int_distribution<int> num(-3, 3), den(1, 2);
  int p = num(rng);
  if (p == 0) p = 1;
  return Rational(p, den(rng));
}

Tensor<Rational> random_tensor(const Shape& s, Rng& rng, double density) {
  Tensor<Rational> t(s);
  for (auto& v : t.data()) v = random_rational(rng, density);
  return t;
}

Matrix random_invertible(std::size_t n, Rng& rng) {
  // unit lower triangular times upper triangular with nonzero diagonal
  Matrix l = Matrix::identity(n), u(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (j < i) l(i, j) = random_rational(rng, 0.5);
      if (j > i) u(i, j) = random_rational(rng, 0.5);
      if (j == i) u(i, j) = random_rational(rng, 1.0);
    }
  return l * u;
}

Homomorphism2 random_isomorphism(const TwoTermAlgebra& g, Rng& rng) {
  Homomorphism2 f;
  f.F0 = to_map(random_invertible(g.n0, rng));
  f.F1 = to_map(random_invertible(g.n1, rng));
  f.F2 = random_tensor({g.n0, g.n0, g.n1}, rng, 0.4);
  return f;
}

Cochain2 random_cocycle(const TwoTermAlgebra& g, const Representation2& r, Rng& rng) {
  Subspace z = kernel_basis(assemble_matrices(g, r).d2);
  QVec v(cochain2_dim(r));
  for (const auto& b : z.basis) v += random_rational(rng, 0.7) * b;
  return unflatten_cochain2(r, v);
}

TwoTermAlgebra random_algebra(Rng& rng) {
  std::uniform_int_distribution<int> pick(0, 3), coin(0, 1);
  TwoTermAlgebra bases[] = {fix_z(), fix_u(), fix_d(), fix_l()};
  TwoTermAlgebra g = bases[pick(rng)];
  Representation2 r = coin(rng) ? adjoint_representation(g)
                                : trivial_representation(g, Complex2(1, 1));
  Extension2 e = build_extension(g, r, random_cocycle(g, r, rng));
  return transport(e.total, random_isomorphism(e.total, rng));
}

Cochain2 random_perturbation(const TwoTermAlgebra& g, const Representation2& r,
                             PerturbationKind kind, Rng& rng) {
  switch (kind) {
    case PerturbationKind::Zero:
      return zero_cochain2(r);
    case PerturbationKind::Coboundary: {
      Cochain1 c = zero_cochain1(r);
      c.phi = random_tensor(c.phi.shape(), rng);
      c.phi1 = random_tensor(c.phi1.shape(), rng);
      c.chi = random_tensor(c.chi.shape(), rng);
      return d1_apply(g, r, c);
    }
    case PerturbationKind::Cocycle:
      return random_cocycle(g, r, rng);
    case PerturbationKind::Sparse:
      break;
  }
  return unflatten_cochain2(r, [&] {
    QVec v(cochain2_dim(r));
    for (auto& x : v) x = random_rational(rng, 0.2);
    return v;
  }());
}

XCochain2 random_xcocycle(const CrossedModule& x, const XModRepresentation& r, Rng& rng) {
  Subspace z = kernel_basis(xmod_matrices(x, r).d2);
  QVec v(flatten(zero_xcochain2(x, r)).size());
  for (const auto& b : z.basis) v += random_rational(rng, 0.7) * b;
  return unflatten_xcochain2(x, r, v);
}

CrossedModule random_crossed_module(Rng& rng) {
  std::uniform_int_distribution<int> coin(0, 1);
  CrossedModule b = coin(rng) ? fix_x() : fix_x_ff();
  XModRepresentation r = xmod_adjoint(b);
  CrossedModule t = xmod_build_extension(b, r, random_xcocycle(b, r, rng)).total;
  TwoTermAlgebra g = to_strict(t);
  Homomorphism2 f = identity_homomorphism(g);
  f.F0 = to_map(random_invertible(g.n0, rng));
  f.F1 = to_map(random_invertible(g.n1, rng));
  return from_strict(transport(g, f));
}

XCochain2 random_xperturbation(const CrossedModule& x, PerturbationKind kind, Rng& rng) {
  XModRepresentation r = xmod_adjoint(x);
  switch (kind) {
    case PerturbationKind::Zero:
      return zero_xcochain2(x, r);
    case PerturbationKind::Coboundary: {
      XCochain1 c = zero_xcochain1(x, r);
      c.N0 = random_tensor(c.N0.shape(), rng);
      c.N1 = random_tensor(c.N1.shape(), rng);
      return xmod_d1(x, r, c);
    }
    case PerturbationKind::Cocycle:
      return random_xcocycle(x, r, rng);
    case PerturbationKind::Sparse:
      break;
  }
  QVec v(flatten(zero_xcochain2(x, r)).size());
  for (auto& e : v) e = random_rational(rng, 0.2);
  return unflatten_xcochain2(x, r, v);
}

}  // namespace assoc2
