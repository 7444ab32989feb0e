#pragma once

#include <optional>
#include <string>
#include <vector>

#include "assoc2/rep2.hpp"

namespace assoc2 {

// phi {n0,m0}, phi1 {n1,m1}, chi {n0,n0,m1}.
struct Cochain1 {
  Tensor<Rational> phi, phi1, chi;

  Cochain1() = default;
  Cochain1(std::size_t n0, std::size_t n1, std::size_t m0, std::size_t m1)
      : phi({n0, m0}), phi1({n1, m1}), chi({n0, n0, m1}) {}
  friend bool operator==(const Cochain1&, const Cochain1&) = default;
};

// psi {n1,m0}, omega {n0,n0,m0}, mu {n0,n1,m1}, nu {n1,n0,m1},
// theta {n0,n0,n0,m1}.
struct Cochain2 {
  Tensor<Rational> psi, omega, mu, nu, theta;

  Cochain2() = default;
  Cochain2(std::size_t n0, std::size_t n1, std::size_t m0, std::size_t m1)
      : psi({n1, m0}), omega({n0, n0, m0}), mu({n0, n1, m1}), nu({n1, n0, m1}),
        theta({n0, n0, n0, m1}) {}
  friend bool operator==(const Cochain2&, const Cochain2&) = default;
};

Cochain1 zero_cochain1(const Representation2& r);
Cochain2 zero_cochain2(const Representation2& r);

// Flattening: components concatenated in declaration order, each row-major
// over (inputs..., output).
QVec flatten(const Cochain1& c);
QVec flatten(const Cochain2& c);
Cochain1 unflatten_cochain1(const Representation2& r, const QVec& v);
Cochain2 unflatten_cochain2(const Representation2& r, const QVec& v);
Cochain2 operator+(const Cochain2& a, const Cochain2& b);
Cochain2 operator-(const Cochain2& a, const Cochain2& b);

std::size_t cochain1_dim(const Representation2& r);
std::size_t cochain2_dim(const Representation2& r);

Cochain2 d1_apply(const TwoTermAlgebra& g, const Representation2& r, const Cochain1& c);

// Residual families coc01..coc08, each row-major over (tuple..., output).
struct ResidualBlock {
  std::string family;
  Shape shape;
};
std::vector<ResidualBlock> d2_blocks(const Representation2& r);
QVec d2_residual(const TwoTermAlgebra& g, const Representation2& r, const Cochain2& c);

struct CoboundaryMatrices {
  Matrix d1, d2;
};

CoboundaryMatrices assemble_matrices(const TwoTermAlgebra& g, const Representation2& r);

struct SecondCohomology {
  std::size_t dimZ2 = 0, dimB2 = 0, dimH2 = 0;
  Subspace Z2, B2;
  std::vector<QVec> representatives;  // complete B2 to Z2
};

SecondCohomology second_cohomology(const TwoTermAlgebra& g, const Representation2& r);

std::optional<Cochain1> is_coboundary(const TwoTermAlgebra& g, const Representation2& r,
                                      const Cochain2& c);
bool is_cocycle1(const TwoTermAlgebra& g, const Representation2& r, const Cochain1& c);

// Checks both inputs, throwing PreconditionError on failure.
void require_valid(const TwoTermAlgebra& g, const Representation2& r);

}  // namespace assoc2
