#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace superlocal {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

inline Rational make_rational(long long num, long long den = 1) { return Rational(num, den); }

/// Smallest integer not below q.
BigInt ceil(const Rational& q);

/// Exact "p/q" form, always with an explicit denominator ("3/1").
std::string to_string(const Rational& q);

/// Accepts "p/q", an integer, or a finite decimal such as "0.35".
Rational parse_rational(std::string_view text);

}  // namespace superlocal
