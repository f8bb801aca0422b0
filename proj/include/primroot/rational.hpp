#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace primroot {

// Exact rationals are GMP mpq values; gmpxx keeps them canonical (lowest
// terms, positive denominator), which is the representation contract here.
using Rational = mpq_class;

inline double to_double(const Rational& x) { return x.get_d(); }

mpz_class pow_mpz(const mpz_class& base, std::uint64_t exp);

// Fixed-point decimal string with `digits` fractional digits, ties to even.
std::string decimal_string(const Rational& x, unsigned digits);

// Decimal expansion truncated toward zero at `digits` fractional digits
// (every emitted digit is a true digit of x); used for certified prefixes.
std::string truncated_decimal_string(const Rational& x, unsigned digits);

// Longest common prefix of the truncated decimal expansions of lo and hi;
// the shared digits are guaranteed digits of any value in [lo, hi].
std::string common_decimal_prefix(const Rational& lo, const Rational& hi, unsigned digits);

}  // namespace primroot
