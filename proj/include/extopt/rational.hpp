#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace extopt {

using Rational = mpq_class;
using BigInt = mpz_class;

// Accepts "p", "p/q", and plain decimals such as "2.2" or "-0.125";
// decimals are converted exactly (2.2 -> 11/5). Throws InputError.
Rational parse_rational(std::string_view text);

// Canonical "p/q" form; integers print without a denominator.
std::string to_string(const Rational& value);

std::int64_t floor_to_int(const Rational& value);
std::int64_t ceil_to_int(const Rational& value);

// num / den in lowest terms. Requires den != 0.
inline Rational fraction(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline double to_double(const Rational& value) { return value.get_d(); }

// Best rational approximation with denominator <= max_denominator
// (continued-fraction convergents and semiconvergents).
Rational rationalize(double value, std::int64_t max_denominator);

inline Rational positive_part(const Rational& value) {
  return value > 0 ? value : Rational(0);
}

}  // namespace extopt
