#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "assoc2/rational.hpp"
#include "assoc2/tensor.hpp"

namespace assoc2 {

using QVec = Vec<Rational>;

// Dense rational matrix, row-major; acts on column vectors.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_columns(std::size_t rows, const std::vector<QVec>& cols);
  static Matrix from_rows(std::size_t cols, const std::vector<QVec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  const std::vector<Rational>& entries() const { return a_; }

  QVec column(std::size_t c) const;
  QVec row(std::size_t r) const;
  Matrix transpose() const;
  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
QVec operator*(const Matrix& a, const QVec& x);
Matrix hstack(const Matrix& a, const Matrix& b);

struct Subspace {
  std::size_t ambient_dim = 0;
  std::vector<QVec> basis;
  std::size_t dim() const { return basis.size(); }
};

struct Rref {
  Matrix r;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

// Reduced row echelon form by exact Gauss-Jordan elimination.
Rref rref(Matrix m);

std::size_t rank(const Matrix& m);
Subspace kernel_basis(const Matrix& m);
// Basis of the column space (the pivot columns of m).
Subspace image_basis(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
std::optional<QVec> solve(const Matrix& m, const QVec& b);
bool in_span(const Subspace& s, const QVec& v);
// Vectors of `big` that extend a basis of `small` (contained in big) to one of big.
std::vector<QVec> complement_basis(const Subspace& big, const Subspace& small);
// A y with y^T m = 0 and y.b != 0; exists exactly when m x = b has no solution.
std::optional<QVec> left_null_certificate(const Matrix& m, const QVec& b);

Rational dot(const QVec& a, const QVec& b);

// Matrix of a linear map stored as a rank-2 tensor {in, out}, and back.
Matrix to_matrix(const Tensor<Rational>& map);
Tensor<Rational> to_map(const Matrix& m);

}  // namespace assoc2
