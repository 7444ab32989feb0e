#pragma once

#include <string>
#include <vector>

#include "assoc2/poly.hpp"
#include "assoc2/tensor.hpp"

namespace assoc2 {

template <class K>
struct Violation {
  std::string condition;
  Index tuple;
  Vec<K> lhs, rhs;
};

// Outcome of an axiom check: the evaluated condition labels in order and
// every failing basis tuple with both sides.
template <class K>
struct CheckReport {
  std::vector<std::string> conditions;
  std::vector<Violation<K>> violations;

  bool pass() const { return violations.empty(); }

  std::size_t count(const std::string& cond) const {
    std::size_t n = 0;
    for (const auto& v : violations) n += v.condition == cond;
    return n;
  }
  bool failed(const std::string& cond) const { return count(cond) > 0; }

  void begin(const std::string& cond) { conditions.push_back(cond); }
  void expect(const Index& tuple, Vec<K> lhs, Vec<K> rhs) {
    if (lhs != rhs) violations.push_back({conditions.back(), tuple, std::move(lhs), std::move(rhs)});
  }
  void merge(const CheckReport& o, const std::string& prefix = "") {
    for (const auto& c : o.conditions) conditions.push_back(prefix + c);
    for (auto v : o.violations) {
      v.condition = prefix + v.condition;
      violations.push_back(std::move(v));
    }
  }
};

using Report = CheckReport<Rational>;

// Splits a polynomial report by powers of lambda. Condition "c" becomes
// "c[l^k]" for k = 0..max_degree; sides are the k-th coefficients.
Report coefficient_report(const CheckReport<Poly>& r, std::size_t max_degree);

// Evaluates a polynomial report at a value of lambda.
Report specialize_report(const CheckReport<Poly>& r, const Rational& t);

}  // namespace assoc2
