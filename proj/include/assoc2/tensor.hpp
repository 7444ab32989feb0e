#pragma once

#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <vector>

#include "assoc2/errors.hpp"
#include "assoc2/poly.hpp"
#include "assoc2/rational.hpp"

namespace assoc2 {

using Shape = std::vector<std::size_t>;
using Index = std::vector<std::size_t>;

template <class K>
using Vec = std::vector<K>;

// Dense multilinear map. Input indices come first, the output index last;
// data is row-major, so a map A -> B is stored with shape {dim A, dim B}.
template <class K>
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(Shape shape) : shape_(std::move(shape)) {
    std::size_t n = 1;
    for (auto s : shape_) n *= s;
    data_.assign(n, K(0));
  }

  const Shape& shape() const { return shape_; }
  std::size_t rank() const { return shape_.size(); }
  std::size_t dim(std::size_t i) const { return shape_.at(i); }
  std::size_t size() const { return data_.size(); }
  std::size_t out_dim() const { return shape_.empty() ? 0 : shape_.back(); }

  std::vector<K>& data() { return data_; }
  const std::vector<K>& data() const { return data_; }

  std::size_t offset(const Index& idx) const {
    if (idx.size() != shape_.size()) throw ShapeError("tensor index arity mismatch");
    std::size_t off = 0;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (idx[i] >= shape_[i]) throw ShapeError("tensor index out of range");
      off = off * shape_[i] + idx[i];
    }
    return off;
  }

  K& at(const Index& idx) { return data_[offset(idx)]; }
  const K& at(const Index& idx) const { return data_[offset(idx)]; }

  template <class... I>
  K& operator()(I... i) {
    return data_[offset(Index{static_cast<std::size_t>(i)...})];
  }
  template <class... I>
  const K& operator()(I... i) const {
    return data_[offset(Index{static_cast<std::size_t>(i)...})];
  }

  bool is_zero() const {
    for (const auto& v : data_)
      if (!assoc2::is_zero(v)) return false;
    return true;
  }

  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.shape_ == b.shape_ && a.data_ == b.data_;
  }

 private:
  Shape shape_;
  std::vector<K> data_;
};

inline std::string shape_str(const Shape& s) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << "}";
  return os.str();
}

template <class K>
void expect_shape(const Tensor<K>& t, const Shape& s, const char* name) {
  if (t.shape() != s)
    throw ShapeError(std::string(name) + ": expected shape " + shape_str(s) + ", got " +
                     shape_str(t.shape()));
}

template <class K>
Vec<K> basis(std::size_t n, std::size_t i) {
  Vec<K> v(n, K(0));
  v.at(i) = K(1);
  return v;
}

template <class K>
bool is_zero(const Vec<K>& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

template <class K>
Vec<K>& operator+=(Vec<K>& a, const Vec<K>& b) {
  if (a.size() != b.size()) throw ShapeError("vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

template <class K>
Vec<K>& operator-=(Vec<K>& a, const Vec<K>& b) {
  if (a.size() != b.size()) throw ShapeError("vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

template <class K>
Vec<K> operator+(Vec<K> a, const Vec<K>& b) {
  return a += b;
}

template <class K>
Vec<K> operator-(Vec<K> a, const Vec<K>& b) {
  return a -= b;
}

template <class K>
Vec<K> operator-(Vec<K> a) {
  for (auto& x : a) x = -x;
  return a;
}

template <class K>
Vec<K> operator*(const K& s, Vec<K> a) {
  for (auto& x : a) x *= s;
  return a;
}

namespace detail {

template <class K>
void contract(const Tensor<K>& t, const std::vector<const Vec<K>*>& vs, std::size_t level,
              std::size_t off, const K& coeff, Vec<K>& out) {
  if (level == vs.size()) {
    const std::size_t n = out.size();
    const K* row = t.data().data() + off * n;
    for (std::size_t j = 0; j < n; ++j)
      if (!is_zero(row[j])) out[j] += coeff * row[j];
    return;
  }
  const Vec<K>& v = *vs[level];
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (is_zero(v[i])) continue;
    if (level == 0)
      contract(t, vs, 1, i, v[i], out);
    else
      contract(t, vs, level + 1, off * t.dim(level) + i, K(coeff * v[i]), out);
  }
}

}  // namespace detail

// Evaluates the multilinear map t on the given vectors (one per input slot).
template <class K>
Vec<K> apply_list(const Tensor<K>& t, const std::vector<const Vec<K>*>& vs) {
  if (vs.size() + 1 != t.rank()) throw ShapeError("apply: wrong number of arguments");
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (vs[i]->size() != t.dim(i)) throw ShapeError("apply: argument length mismatch");
  Vec<K> out(t.out_dim(), K(0));
  if (vs.empty()) return out;
  detail::contract(t, vs, 0, 0, K(1), out);
  return out;
}

template <class K, class... V>
Vec<K> act(const Tensor<K>& t, const V&... vs) {
  return apply_list<K>(t, std::vector<const Vec<K>*>{&vs...});
}

// Writes v into t at (tuple..., *).
template <class K>
void set_fiber(Tensor<K>& t, const Index& tuple, const Vec<K>& v) {
  Index full = tuple;
  full.push_back(0);
  for (std::size_t o = 0; o < v.size(); ++o) {
    full.back() = o;
    t.at(full) = v[o];
  }
}

template <class K>
Tensor<K> identity_map(std::size_t n) {
  Tensor<K> t({n, n});
  for (std::size_t i = 0; i < n; ++i) t(i, i) = K(1);
  return t;
}

template <class To, class From>
Tensor<To> convert(const Tensor<From>& t) {
  Tensor<To> r(t.shape());
  for (std::size_t i = 0; i < t.size(); ++i) r.data()[i] = To(t.data()[i]);
  return r;
}

template <class K>
Tensor<K> scaled(const K& s, Tensor<K> t) {
  for (auto& x : t.data()) x *= s;
  return t;
}

template <class K>
Tensor<K> operator+(Tensor<K> a, const Tensor<K>& b) {
  if (a.shape() != b.shape()) throw ShapeError("tensor shape mismatch in +");
  for (std::size_t i = 0; i < a.size(); ++i) a.data()[i] += b.data()[i];
  return a;
}

template <class K>
Tensor<K> operator-(Tensor<K> a, const Tensor<K>& b) {
  if (a.shape() != b.shape()) throw ShapeError("tensor shape mismatch in -");
  for (std::size_t i = 0; i < a.size(); ++i) a.data()[i] -= b.data()[i];
  return a;
}

// Composition of linear maps stored input-first: (g after f).
template <class K>
Tensor<K> compose(const Tensor<K>& g, const Tensor<K>& f) {
  if (f.rank() != 2 || g.rank() != 2 || f.dim(1) != g.dim(0))
    throw ShapeError("compose: incompatible maps");
  Tensor<K> r({f.dim(0), g.dim(1)});
  for (std::size_t i = 0; i < f.dim(0); ++i)
    for (std::size_t j = 0; j < f.dim(1); ++j) {
      if (is_zero(f(i, j))) continue;
      for (std::size_t k = 0; k < g.dim(1); ++k) r(i, k) += f(i, j) * g(j, k);
    }
  return r;
}

// Calls fn(idx) for every index tuple in the box dims[0] x ... x dims[r-1].
template <class Fn>
void for_each_index(const Shape& dims, Fn&& fn) {
  for (auto d : dims)
    if (d == 0) return;
  Index idx(dims.size(), 0);
  while (true) {
    fn(static_cast<const Index&>(idx));
    std::size_t k = dims.size();
    while (k > 0) {
      --k;
      if (++idx[k] < dims[k]) break;
      idx[k] = 0;
      if (k == 0) return;
    }
    if (dims.empty()) return;
  }
}

}  // namespace assoc2
