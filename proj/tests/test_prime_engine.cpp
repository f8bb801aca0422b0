#include <doctest.h>

#include <cstdlib>
#include <filesystem>

#include "oracles.hpp"
#include "primroot/errors.hpp"
#include "primroot/prime_cache.hpp"
#include "primroot/prime_engine.hpp"

using namespace primroot;

TEST_CASE("sieve_primes small and known counts") {
  const PrimeTable t10 = sieve_primes(10);
  CHECK(t10.primes == std::vector<std::uint32_t>{2, 3, 5, 7});

  const PrimeTable t = sieve_primes(1'000'000);
  CHECK(t.count() == 78498);
  CHECK(t.primes.front() == 2);
  CHECK(t.count_upto(10) == 4);
  CHECK(t.count_upto(2) == 1);

  CHECK_THROWS_AS(sieve_primes(1), DomainError);
  CHECK_THROWS_AS(sieve_primes(kSieveLimitCap + 1), CapacityError);
}

TEST_CASE("sieve agrees with is_prime up to 1e5") {
  const PrimeTable t = sieve_primes(100'000);
  std::size_t idx = 0;
  for (std::uint64_t n = 0; n <= 100'000; ++n) {
    const bool sieved = idx < t.primes.size() && t.primes[idx] == n;
    CHECK(is_prime(n) == sieved);
    if (sieved) ++idx;
  }
  CHECK(idx == t.primes.size());
}

TEST_CASE("sieve segment size does not change the result") {
  const PrimeTable a = sieve_primes(300'000);
  const PrimeTable b = sieve_primes(300'000, 1 << 10);
  CHECK(a.primes == b.primes);
  // odd segment sizes make some segments start on an even number
  for (std::uint64_t limit : {68ull, 133ull, 10'000ull}) {
    const PrimeTable c = sieve_primes(limit, 65);
    const PrimeTable d = sieve_primes(limit);
    CHECK(c.primes == d.primes);
  }
}

TEST_CASE("is_prime fixed points from the survey moduli") {
  CHECK(is_prime(18446744069414584321ull));  // 2^64 - 2^32 + 1
  CHECK(is_prime(3329));
  CHECK(is_prime(8380417));
  CHECK(is_prime(2013265921));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2));
  // strong-pseudoprime traps for weaker witness sets
  CHECK_FALSE(is_prime(3215031751ull));            // spsp(2,3,5,7)
  CHECK_FALSE(is_prime(3825123056546413051ull));   // spsp to first 9 prime bases
  CHECK_FALSE(is_prime(341550071728321ull));       // spsp(2..17)
  CHECK(is_prime(18446744073709551557ull));        // largest 64-bit prime
}

TEST_CASE("factorize matches spec examples") {
  const Factorization f = factorize(3328);
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0] == PrimePower{2, 8});
  CHECK(f.factors[1] == PrimePower{13, 1});
  CHECK(f.omega() == 2);

  CHECK(factorize(1).factors.empty());

  const Factorization g = factorize(8380416);
  CHECK(g.omega() == 4);
  CHECK(g.verified());
  // oracle: trial division
  const auto naive = oracles::naive_factorize(8380416);
  REQUIRE(naive.size() == g.factors.size());
  std::size_t i = 0;
  for (const auto& [p, e] : naive) {
    CHECK(g.factors[i].prime == p);
    CHECK(g.factors[i].exponent == e);
    ++i;
  }
}

TEST_CASE("factorize recomposes for all n <= 1e5") {
  for (std::uint64_t n = 1; n <= 100'000; ++n) {
    const Factorization f = factorize(n);
    CHECK(f.recompose() == n);
    std::uint64_t prev = 0;
    for (const auto& [p, e] : f.factors) {
      CHECK(p > prev);
      CHECK(e >= 1);
      prev = p;
    }
  }
}

TEST_CASE("factorize handles 64-bit survey inputs") {
  const Factorization f = factorize(18446744069414584320ull);  // p-1 for the 64-bit NTT prime
  CHECK(f.omega() == 6);
  CHECK(f.verified());
  CHECK(f.factors[0] == PrimePower{2, 32});
  CHECK(f.factors[5] == PrimePower{65537, 1});

  // semiprime with two large factors exercises the rho path
  const std::uint64_t a = 1000000007, b = 1000000009;
  const Factorization g = factorize(a * b);
  REQUIRE(g.factors.size() == 2);
  CHECK(g.factors[0] == PrimePower{a, 1});
  CHECK(g.factors[1] == PrimePower{b, 1});

  CHECK_THROWS_AS(factorize(0), DomainError);
}

TEST_CASE("primorial values and index") {
  CHECK(primorial(4) == 210);
  CHECK(primorial(1) == 2);
  CHECK(primorial(8) == 9699690);  // direct product oracle

  CHECK(primorial_index(100) == 3);
  CHECK(primorial_index(2) == 1);
  CHECK(primorial_index(1'000'000) == 7);  // N_7 = 510510 <= 1e6 < N_8
  CHECK_THROWS_AS(primorial_index(1), DomainError);
}

TEST_CASE("primorial_index round trip for k = 2..15") {
  for (std::uint32_t k = 2; k <= 15; ++k) {
    const mpz_class nk = primorial(k);
    REQUIRE(nk.fits_ulong_p());
    const std::uint64_t v = mpz_get_ui(nk.get_mpz_t());
    CHECK(primorial_index(v) == k);
    CHECK(primorial_index(v - 1) == k - 1);
  }
}

TEST_CASE("least_prime_in_progression examples and oracle") {
  CHECK(least_prime_in_progression(2, 1, 100) == 3);
  CHECK(least_prime_in_progression(30, 1, 10'000) == 31);
  CHECK(least_prime_in_progression(9699690, 1, 10'000'000'000ull) == 106696591);

  CHECK_THROWS_AS(least_prime_in_progression(10, 5, 1000), DomainError);

  // exhaustive-scan oracle: first prime in the class by brute force
  for (std::uint64_t m : {6ull, 30ull, 210ull, 9240ull}) {
    for (std::uint64_t r : {std::uint64_t{1}, m - 1}) {
      const auto got = least_prime_in_progression(m, r, 200'000);
      std::uint64_t expect = 0;
      for (std::uint64_t x = r == 0 ? m : r; x <= 200'000; x += m) {
        if (x >= 2 && oracles::naive_is_prime(x)) {
          expect = x;
          break;
        }
      }
      if (expect == 0) {
        CHECK_FALSE(got.has_value());
      } else {
        CHECK(got == expect);
      }
    }
  }

  // exhausted cap
  CHECK_FALSE(least_prime_in_progression(6, 1, 6).has_value());
}

TEST_CASE("nth_odd_prime") {
  CHECK(nth_odd_prime(1) == 3);
  CHECK(nth_odd_prime(2) == 5);
  CHECK(nth_odd_prime(20) == 73);
  CHECK(nth_odd_prime(10'000) == 104'743);
}

TEST_CASE("PTBL1 cache round trip") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "primroot_cache_test";
  fs::create_directories(dir);
  const PrimeTable t = sieve_primes(50'000);
  const std::string path = (dir / "t.bin").string();
  write_prime_table(t, path);
  const auto back = read_prime_table(path);
  REQUIRE(back.has_value());
  CHECK(back->limit == t.limit);
  CHECK(back->primes == t.primes);

  setenv(kCacheDirEnvVar, dir.c_str(), 1);
  const PrimeTable a = load_or_sieve(60'000);
  CHECK(fs::exists(dir / "ptbl_60000.bin"));
  const PrimeTable b = load_or_sieve(60'000);  // served from the cache file
  CHECK(a.primes == b.primes);
  unsetenv(kCacheDirEnvVar);
  fs::remove_all(dir);
}
