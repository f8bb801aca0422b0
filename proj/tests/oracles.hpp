#pragma once

// Independent test oracles.  These deliberately avoid the library code paths
// they are used to check: naive enumeration, naive trial division, direct
// term-by-term rational products.

#include <cstdint>
#include <map>
#include <vector>

#include <gmpxx.h>

namespace oracles {

// naive sieve of Eratosthenes
inline std::vector<std::uint64_t> naive_primes(std::uint64_t limit) {
  std::vector<bool> comp(limit + 1, false);
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (!comp[i]) {
      out.push_back(i);
      for (std::uint64_t j = i * i; j <= limit; j += i) comp[j] = true;
    }
  }
  return out;
}

// naive trial-division factorization
inline std::map<std::uint64_t, std::uint32_t> naive_factorize(std::uint64_t n) {
  std::map<std::uint64_t, std::uint32_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    while (n % d == 0) {
      ++out[d];
      n /= d;
    }
  }
  if (n > 1) ++out[n];
  return out;
}

inline bool naive_is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// prod_{j=1..J} (1 - p^{-j}) accumulated factor by factor
inline mpq_class product_term_by_term(std::uint64_t p, std::uint32_t J) {
  mpq_class prod = 1;
  mpz_class pw = 1;
  for (std::uint32_t j = 1; j <= J; ++j) {
    pw *= static_cast<unsigned long>(p);
    mpq_class term(mpz_class(pw - 1), pw);
    term.canonicalize();
    prod *= term;
  }
  return prod;
}

// phi(n)/n by naive factorization
inline mpq_class naive_totient_ratio(std::uint64_t n) {
  mpq_class r = 1;
  for (const auto& [p, e] : naive_factorize(n)) {
    (void)e;
    r *= mpq_class(static_cast<unsigned long>(p - 1), static_cast<unsigned long>(p));
  }
  return r;
}

}  // namespace oracles
