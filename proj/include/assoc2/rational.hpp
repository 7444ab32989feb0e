#pragma once

#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace assoc2 {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

inline bool is_zero(const Rational& q) { return q.is_zero(); }

// "p/q", or "p" when q = 1.
std::string to_string(const Rational& q);

// Accepts [-+]digits or [-+]digits/digits with a nonzero denominator.
Rational parse_rational(const std::string& s);

}  // namespace assoc2
