#pragma once

#include <cstdint>
#include <string>

#include "primroot/prime_engine.hpp"
#include "primroot/rational.hpp"

namespace primroot {

// Exact rational bracket for c(p) produced at truncation depth J:
//   R * (P_J - p^{-J}/(p-1))  <=  c(p)  <=  R * P_J
// with R the totient ratio of p-1 and P_J the depth-J matrix Euler product.
struct CertifiedInterval {
  Rational lower;
  Rational upper;
  std::uint64_t p = 0;
  std::uint32_t depth_J = 0;
  std::uint32_t digits_D = 0;

  Rational width() const { return upper - lower; }
  // exact bound the construction guarantees: p^{-J}/(2(p-1)) for odd p,
  // 2^{-J} for the p = 2 special case where the ratio factor is 1
  Rational width_bound() const;
  Rational midpoint() const { return (lower + upper) / 2; }
};

// phi(n)/n = prod (1 - 1/r) over the distinct primes r of n; exact
Rational totient_ratio(const Factorization& fact);

// J = ceil(D log 10 / log p)
std::uint32_t choose_depth(std::uint64_t p, std::uint32_t digits);

inline constexpr std::uint64_t kDefaultBitBudget = std::uint64_t{1} << 20;

// P_J(p) = prod_{j=1..J} (1 - p^{-j}), exact.  The unreduced denominator is
// p^{J(J+1)/2}; requests whose intermediate size would exceed `bit_budget`
// bits raise a capacity error.
Rational truncated_matrix_product(std::uint64_t p, std::uint32_t J,
                                  std::uint64_t bit_budget = kDefaultBitBudget);

// Certified evaluation of c(p) to D correct decimal digits.  `fact` must be
// a factorization of p-1 (domain error otherwise).  For p = 2 the odd-prime
// set is empty, the ratio is 1 and the bracket covers the product alone.
CertifiedInterval certify_c(std::uint64_t p, const Factorization& fact, std::uint32_t digits,
                            std::uint64_t bit_budget = kDefaultBitBudget);

// c_n(p) = totient_ratio(p-1) * P_n(p), exact
Rational c_fixed_dimension(std::uint64_t p, const Factorization& fact, std::uint32_t n,
                           std::uint64_t bit_budget = kDefaultBitBudget);

struct RenderedInterval {
  std::string prefix;  // digits certain for every value in the bracket
  std::string lower;
  std::string upper;
};

std::string render_decimal(const Rational& x, unsigned digits);
RenderedInterval render_decimal(const CertifiedInterval& iv, unsigned digits);

}  // namespace primroot
