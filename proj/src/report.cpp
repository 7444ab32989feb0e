#include "assoc2/report.hpp"

namespace assoc2 {

namespace {

std::string power_label(const std::string& cond, std::size_t k) {
  return cond + "[l^" + std::to_string(k) + "]";
}

Vec<Rational> coefficients(const Vec<Poly>& v, std::size_t k) {
  Vec<Rational> r;
  r.reserve(v.size());
  for (const auto& p : v) r.push_back(p.coeff(k));
  return r;
}

}  // namespace

Report coefficient_report(const CheckReport<Poly>& r, std::size_t max_degree) {
  Report out;
  for (const auto& c : r.conditions)
    for (std::size_t k = 0; k <= max_degree; ++k) out.conditions.push_back(power_label(c, k));
  for (const auto& v : r.violations) {
    std::size_t top = max_degree;
    for (const auto* side : {&v.lhs, &v.rhs})
      for (const auto& p : *side)
        if (p.degree() > static_cast<int>(top)) top = static_cast<std::size_t>(p.degree());
    for (std::size_t k = 0; k <= top; ++k) {
      auto l = coefficients(v.lhs, k), rr = coefficients(v.rhs, k);
      if (l != rr) out.violations.push_back({power_label(v.condition, k), v.tuple, l, rr});
    }
  }
  return out;
}

Report specialize_report(const CheckReport<Poly>& r, const Rational& t) {
  Report out;
  out.conditions = r.conditions;
  for (const auto& v : r.violations) {
    Vec<Rational> l, rr;
    for (const auto& p : v.lhs) l.push_back(p.eval(t));
    for (const auto& p : v.rhs) rr.push_back(p.eval(t));
    if (l != rr) out.violations.push_back({v.condition, v.tuple, l, rr});
  }
  return out;
}

}  // namespace assoc2
