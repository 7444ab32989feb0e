#include "assoc2/poly.hpp"

#include <algorithm>

namespace assoc2 {

Poly::Poly(const Rational& c) {
  if (!c.is_zero()) c_.push_back(c);
}

Poly Poly::lambda() { return monomial(Rational(1), 1); }

Poly Poly::monomial(const Rational& c, std::size_t k) {
  Poly p;
  if (c.is_zero()) return p;
  p.c_.assign(k + 1, Rational(0));
  p.c_[k] = c;
  return p;
}

Rational Poly::coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

Rational Poly::eval(const Rational& t) const {
  Rational r(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t + *it;
  return r;
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    const Rational& c = p.coeffs()[k];
    if (c.is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + to_string(c) + ")";
    if (k == 1) s += "*l";
    if (k > 1) s += "*l^" + std::to_string(k);
  }
  return s;
}

}  // namespace assoc2
