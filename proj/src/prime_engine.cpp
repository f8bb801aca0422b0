#include "primroot/prime_engine.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "primroot/errors.hpp"

namespace primroot {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

// Simple sieve used for base primes and small requests.
std::vector<std::uint32_t> eratosthenes(std::uint32_t limit) {
  std::vector<bool> comp(limit + 1, false);
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 2; i <= limit; ++i) {
    if (!comp[i]) {
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t(i) * i; j <= limit; j += i) comp[j] = true;
    }
  }
  return out;
}

}  // namespace

std::uint64_t Factorization::recompose() const {
  u128 prod = 1;
  for (const auto& [prime, exponent] : factors) {
    for (std::uint32_t e = 0; e < exponent; ++e) {
      prod *= prime;
      if (prod > ~u64{0}) throw DomainError("factorization recomposition overflows 64 bits");
    }
  }
  return static_cast<u64>(prod);
}

bool Factorization::verified() const {
  u64 prev = 0;
  for (const auto& [prime, exponent] : factors) {
    if (prime <= prev || exponent == 0 || !is_prime(prime)) return false;
    prev = prime;
  }
  return recompose() == n;
}

std::size_t PrimeTable::count_upto(std::uint64_t x) const {
  if (x > limit) throw DomainError("count_upto beyond sieved limit");
  return static_cast<std::size_t>(
      std::upper_bound(primes.begin(), primes.end(), x) - primes.begin());
}

PrimeTable sieve_primes(std::uint64_t limit, std::size_t segment_entries) {
  if (limit < 2) throw DomainError("sieve_primes: limit must be >= 2");
  if (limit > kSieveLimitCap)
    throw CapacityError("sieve_primes: limit above supported 1e8");
  if (segment_entries < 64) segment_entries = 64;

  PrimeTable table;
  table.limit = limit;

  const auto root = static_cast<std::uint32_t>(std::sqrt(static_cast<double>(limit))) + 1;
  const std::vector<std::uint32_t> base = eratosthenes(root);

  table.primes.push_back(2);
  // odd-only segments over [3, limit]
  const u64 span = limit >= 3 ? limit - 3 + 1 : 0;
  const u64 nseg = span == 0 ? 0 : (span + segment_entries - 1) / segment_entries;
  std::vector<std::vector<std::uint32_t>> seg_out(nseg);

#pragma omp parallel for schedule(dynamic)
  for (long long s = 0; s < static_cast<long long>(nseg); ++s) {
    const u64 lo = 3 + static_cast<u64>(s) * segment_entries;
    const u64 hi = std::min<u64>(lo + segment_entries - 1, limit);
    const u64 first = lo | 1;  // first odd candidate in the segment
    if (first > hi) continue;
    const std::size_t nodd = static_cast<std::size_t>((hi - first) / 2 + 1);
    std::vector<bool> comp(nodd, false);
    for (std::uint32_t p : base) {
      if (p == 2) continue;
      const u64 p2 = u64(p) * p;
      if (p2 > hi) break;
      u64 start = std::max<u64>(p2, ((first + p - 1) / p) * p);
      if ((start & 1) == 0) start += p;
      for (u64 m = start; m <= hi; m += 2 * u64(p)) comp[(m - first) / 2] = true;
    }
    auto& out = seg_out[static_cast<std::size_t>(s)];
    for (std::size_t i = 0; i < nodd; ++i) {
      if (!comp[i]) out.push_back(static_cast<std::uint32_t>(first + 2 * i));
    }
  }
  for (auto& part : seg_out) {
    table.primes.insert(table.primes.end(), part.begin(), part.end());
    part.clear();
    part.shrink_to_fit();
  }
  return table;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  if (n < 41 * 41) return true;
  const int r = std::countr_zero(n - 1);
  const u64 d = (n - 1) >> r;
  // witness set deterministic for all n < 2^64
  for (u64 a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
    u64 x = powmod(a % n, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

namespace {

constexpr u64 kTrialDivisionLimit = 1'000'000;

const PrimeTable& trial_division_table() {
  static const PrimeTable table = sieve_primes(kTrialDivisionLimit);
  return table;
}

// Brent's variant of the rho cycle method with batched gcds.  The parameter
// sequence c = 1, 2, 3, ... is fixed, so the outcome is deterministic.
u64 brent_rho(u64 n) {
  for (u64 c = 1;; ++c) {
    u64 x = 2, y = 2, q = 1, g = 1, ys = 0, r = 1;
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    const u64 batch = 128;
    while (g == 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      for (u64 k = 0; k < r && g == 1; k += batch) {
        ys = y;
        const u64 steps = std::min(batch, r - k);
        for (u64 i = 0; i < steps; ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
      r <<= 1;
    }
    if (g == n) {
      g = 1;
      while (g == 1) {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      }
    }
    if (g != n) return g;
  }
}

void split_cofactor(u64 m, std::vector<u64>& primes_out) {
  if (m == 1) return;
  if (is_prime(m)) {
    primes_out.push_back(m);
    return;
  }
  const u64 d = brent_rho(m);
  split_cofactor(d, primes_out);
  split_cofactor(m / d, primes_out);
}

}  // namespace

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw DomainError("factorize: n must be >= 1");
  Factorization f;
  f.n = n;
  if (n == 1) return f;
  u64 m = n;
  for (std::uint32_t q : trial_division_table().primes) {
    if (u64(q) * q > m) break;
    if (m % q == 0) {
      std::uint32_t e = 0;
      while (m % q == 0) {
        m /= q;
        ++e;
      }
      f.factors.push_back({q, e});
    }
  }
  if (m > 1) {
    if (is_prime(m)) {
      f.factors.push_back({m, 1});
    } else {
      std::vector<u64> rest;
      split_cofactor(m, rest);
      std::sort(rest.begin(), rest.end());
      for (std::size_t i = 0; i < rest.size();) {
        std::size_t j = i;
        while (j < rest.size() && rest[j] == rest[i]) ++j;
        f.factors.push_back({rest[i], static_cast<std::uint32_t>(j - i)});
        i = j;
      }
    }
  }
  std::sort(f.factors.begin(), f.factors.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
  return f;
}

Factorization factorize_with_table(std::uint64_t n, const PrimeTable& base) {
  if (n == 0) throw DomainError("factorize: n must be >= 1");
  Factorization f;
  f.n = n;
  u64 m = n;
  for (std::uint32_t q : base.primes) {
    if (u64(q) * q > m) break;
    if (m % q == 0) {
      std::uint32_t e = 0;
      while (m % q == 0) {
        m /= q;
        ++e;
      }
      f.factors.push_back({q, e});
    }
  }
  if (m > 1) {
    if (m > base.limit * base.limit)
      throw DomainError("factorize_with_table: table too small for input");
    f.factors.push_back({m, 1});
  }
  return f;
}

mpz_class primorial(std::uint32_t k) {
  if (k == 0) throw DomainError("primorial: k must be >= 1");
  std::uint64_t bound = 13;
  if (k >= 6) {
    const double kd = k;
    bound = static_cast<std::uint64_t>(kd * (std::log(kd) + std::log(std::log(kd)))) + 16;
  }
  PrimeTable t = sieve_primes(bound);
  while (t.primes.size() < k) {
    bound *= 2;
    t = sieve_primes(bound);
  }
  mpz_class prod = 1;
  for (std::uint32_t i = 0; i < k; ++i) prod *= t.primes[i];
  return prod;
}

std::uint32_t primorial_index(std::uint64_t x) {
  if (x < 2) throw DomainError("primorial_index: x must be >= 2");
  // N_16 > 2^64, so at most 15 primes can contribute
  static const std::uint32_t first[] = {2,  3,  5,  7,  11, 13, 17, 19,
                                        23, 29, 31, 37, 41, 43, 47, 53};
  u128 prod = 1;
  std::uint32_t k = 0;
  for (std::uint32_t p : first) {
    prod *= p;
    if (prod > x) break;
    ++k;
  }
  return k;
}

std::optional<std::uint64_t> least_prime_in_progression(std::uint64_t modulus,
                                                        std::uint64_t residue,
                                                        std::uint64_t search_cap) {
  if (modulus == 0) throw DomainError("least_prime_in_progression: modulus must be positive");
  const u64 r = residue % modulus;
  if (std::gcd(r, modulus) != 1)
    throw DomainError("least_prime_in_progression: residue not coprime to modulus");
  if (search_cap < modulus)
    throw DomainError("least_prime_in_progression: search_cap must be >= modulus");
  u64 candidate = r == 0 ? modulus : r;
  if (candidate < 2) candidate += modulus;
  while (candidate <= search_cap) {
    if (is_prime(candidate)) return candidate;
    if (candidate > search_cap - modulus) break;
    candidate += modulus;
  }
  return std::nullopt;
}

std::uint64_t nth_odd_prime(std::uint32_t n) {
  if (n == 0) throw DomainError("nth_odd_prime: n must be >= 1");
  const std::uint32_t rank = n + 1;  // rank among all primes
  std::uint64_t bound = 31;
  if (rank >= 6) {
    const double rd = rank;
    bound = static_cast<std::uint64_t>(rd * (std::log(rd) + std::log(std::log(rd)))) + 16;
  }
  PrimeTable t = sieve_primes(bound);
  while (t.primes.size() < rank) {
    bound *= 2;
    t = sieve_primes(bound);
  }
  return t.primes[rank - 1];
}

}  // namespace primroot
