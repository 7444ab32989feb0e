#include "assoc2/matrix.hpp"

#include "assoc2/errors.hpp"

namespace assoc2 {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeError("ragged matrix literal");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<QVec>& cols) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw ShapeError("from_columns: column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<QVec>& rows) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ShapeError("from_rows: row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

QVec Matrix::column(std::size_t c) const {
  QVec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

QVec Matrix::row(std::size_t r) const {
  return QVec(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_);
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw ShapeError("matrix product: inner dimensions differ");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) c(i, j) += x * b(k, j);
    }
  return c;
}

QVec operator*(const Matrix& a, const QVec& x) {
  if (a.cols() != x.size()) throw ShapeError("matrix-vector product: length mismatch");
  QVec y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (!x[k].is_zero() && !a(i, k).is_zero()) y[i] += a(i, k) * x[k];
  return y;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw ShapeError("hstack: row counts differ");
  Matrix m(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) m(r, a.cols() + c) = b(r, c);
  }
  return m;
}

Rref rref(Matrix m) {
  Rref out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
    Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      Rational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.r = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Subspace kernel_basis(const Matrix& m) {
  Rref e = rref(m);
  Subspace k{m.cols(), {}};
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    QVec v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.r(i, f);
    k.basis.push_back(std::move(v));
  }
  return k;
}

Subspace image_basis(const Matrix& m) {
  Rref e = rref(m);
  Subspace s{m.rows(), {}};
  for (auto p : e.pivots) s.basis.push_back(m.column(p));
  return s;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("inverse: square matrix expected");
  const std::size_t n = m.rows();
  if (n == 0) return Matrix();
  Rref e = rref(hstack(m, Matrix::identity(n)));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.r(r, n + c);
  return inv;
}

std::optional<QVec> solve(const Matrix& m, const QVec& b) {
  if (b.size() != m.rows()) throw ShapeError("solve: right-hand side length mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  Rref e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  QVec x(m.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.r(i, m.cols());
  if (m * x != b) throw std::logic_error("solve: re-multiplication check failed");
  return x;
}

bool in_span(const Subspace& s, const QVec& v) {
  if (v.size() != s.ambient_dim) throw ShapeError("in_span: vector length mismatch");
  Matrix a = Matrix::from_columns(s.ambient_dim, s.basis);
  std::vector<QVec> cols = s.basis;
  cols.push_back(v);
  return rank(Matrix::from_columns(s.ambient_dim, cols)) == rank(a);
}

std::vector<QVec> complement_basis(const Subspace& big, const Subspace& small) {
  if (big.ambient_dim != small.ambient_dim) throw ShapeError("complement_basis: ambient mismatch");
  std::vector<QVec> cols = small.basis;
  std::size_t r = rank(Matrix::from_columns(big.ambient_dim, cols));
  std::vector<QVec> extra;
  for (const auto& v : big.basis) {
    cols.push_back(v);
    std::size_t r2 = rank(Matrix::from_columns(big.ambient_dim, cols));
    if (r2 > r) {
      extra.push_back(v);
      r = r2;
    } else {
      cols.pop_back();
    }
  }
  return extra;
}

Rational dot(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw ShapeError("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

std::optional<QVec> left_null_certificate(const Matrix& m, const QVec& b) {
  if (b.size() != m.rows()) throw ShapeError("certificate: length mismatch");
  for (const auto& y : kernel_basis(m.transpose()).basis)
    if (!dot(y, b).is_zero()) return y;
  return std::nullopt;
}

Matrix to_matrix(const Tensor<Rational>& map) {
  if (map.rank() != 2) throw ShapeError("to_matrix: rank-2 tensor expected");
  Matrix m(map.dim(1), map.dim(0));
  for (std::size_t i = 0; i < map.dim(0); ++i)
    for (std::size_t j = 0; j < map.dim(1); ++j) m(j, i) = map(i, j);
  return m;
}

Tensor<Rational> to_map(const Matrix& m) {
  Tensor<Rational> t({m.cols(), m.rows()});
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) t(c, r) = m(r, c);
  return t;
}

}  // namespace assoc2
