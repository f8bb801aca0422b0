#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace primroot {

struct PrimePower {
  std::uint64_t prime;
  std::uint32_t exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// n = prod prime^exponent, primes strictly increasing.
struct Factorization {
  std::uint64_t n = 1;
  std::vector<PrimePower> factors;

  std::size_t omega() const { return factors.size(); }
  std::uint64_t recompose() const;
  // recomposes to n, primes strictly increasing and each prime
  bool verified() const;
};

// All primes <= limit, ascending.  Values are stored as 32-bit integers; the
// supported limit of 1e8 keeps every prime (and every gap) in range.
struct PrimeTable {
  std::uint64_t limit = 0;
  std::vector<std::uint32_t> primes;

  std::size_t count() const { return primes.size(); }
  // number of primes <= x, for x <= limit
  std::size_t count_upto(std::uint64_t x) const;
};

inline constexpr std::uint64_t kSieveLimitCap = 100'000'000;
inline constexpr std::size_t kDefaultSegmentEntries = std::size_t{1} << 20;

PrimeTable sieve_primes(std::uint64_t limit,
                        std::size_t segment_entries = kDefaultSegmentEntries);

// Deterministic for every n < 2^64 (fixed Miller--Rabin witness set).
bool is_prime(std::uint64_t n);

// Trial division by sieved primes up to 1e6, then Brent's cycle-finding
// method on the remaining cofactors, every prime certified by is_prime.
Factorization factorize(std::uint64_t n);

// Trial division against `base`; requires base.limit^2 >= n so that any
// surviving cofactor is prime.  Used by the bulk scans.
Factorization factorize_with_table(std::uint64_t n, const PrimeTable& base);

// N_k = product of the first k primes
mpz_class primorial(std::uint32_t k);

// m(x) = max{k >= 1 : N_k <= x}; requires x >= 2
std::uint32_t primorial_index(std::uint64_t x);

// smallest prime p ≡ residue (mod modulus) with p <= search_cap
std::optional<std::uint64_t> least_prime_in_progression(std::uint64_t modulus,
                                                        std::uint64_t residue,
                                                        std::uint64_t search_cap);

// 1 -> 3, 2 -> 5, ...; the N-th odd prime (= the (N+1)-th prime)
std::uint64_t nth_odd_prime(std::uint32_t n);

}  // namespace primroot
