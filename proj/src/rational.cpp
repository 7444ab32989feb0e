#include "assoc2/rational.hpp"

#include <cctype>

#include "assoc2/errors.hpp"

namespace assoc2 {

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& s) {
  std::string body = s;
  bool neg = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    neg = body[0] == '-';
    body.erase(0, 1);
  }
  auto slash = body.find('/');
  std::string num = body.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) throw InputError("invalid rational \"" + s + "\"");
  Integer n(num), d(den);
  if (d == 0) throw InputError("zero denominator in \"" + s + "\"");
  Rational q(n, d);
  return neg ? Rational(-q) : q;
}

}  // namespace assoc2
