#include <doctest.h>

#include "oracles.hpp"
#include "primroot/certified_eval.hpp"
#include "primroot/errors.hpp"
#include "primroot/prime_engine.hpp"

using namespace primroot;

TEST_CASE("totient_ratio exact values") {
  CHECK(totient_ratio(factorize(3328)) == Rational(6, 13));
  CHECK(totient_ratio(factorize(8380416)) == Rational(100, 341));
  CHECK(totient_ratio(factorize(1)) == 1);
  // against the naive oracle over a range
  for (std::uint64_t n = 1; n <= 2000; ++n) {
    CHECK(totient_ratio(factorize(n)) == oracles::naive_totient_ratio(n));
  }
}

TEST_CASE("choose_depth examples") {
  CHECK(choose_depth(3329, 10) == 3);
  CHECK(choose_depth(3, 1) == 3);
  CHECK(choose_depth(1'000'003, 1) == 1);
  CHECK(choose_depth(3, 6) == 13);
  CHECK(choose_depth(2, 6) == 20);  // ceil(6 ln10 / ln2)
}

TEST_CASE("truncated_matrix_product exact and spot decimals") {
  CHECK(truncated_matrix_product(2, 2) == Rational(3, 8));

  // term-by-term rational oracle
  for (std::uint64_t p : {2ull, 3ull, 5ull, 3329ull}) {
    for (std::uint32_t J : {1u, 2u, 5u, 9u}) {
      CHECK(truncated_matrix_product(p, J) == oracles::product_term_by_term(p, J));
    }
  }

  // unreduced denominator is p^{J(J+1)/2}: the reduced one must divide it
  {
    const Rational pj = truncated_matrix_product(3, 7);
    CHECK(mpz_divisible_p(pow_mpz(3, 7 * 8 / 2).get_mpz_t(), pj.get_den().get_mpz_t()));
  }

  // P(5) ~ 0.7603, P(101) ~ 0.9900 at high depth
  CHECK(decimal_string(truncated_matrix_product(5, 40), 4) == "0.7603");
  CHECK(decimal_string(truncated_matrix_product(101, 12), 4) == "0.9900");

  CHECK_THROWS_AS(truncated_matrix_product(3, 2000), CapacityError);
  CHECK_THROWS_AS(truncated_matrix_product(1, 2), DomainError);
}

TEST_CASE("monotone truncation") {
  for (std::uint64_t p : {2ull, 3ull, 5ull, 101ull}) {
    Rational prev = truncated_matrix_product(p, 1);
    for (std::uint32_t J = 2; J <= 16; ++J) {
      const Rational cur = truncated_matrix_product(p, J);
      CHECK(cur < prev);
      prev = cur;
    }
  }
}

TEST_CASE("certify_c spec anchors") {
  const CertifiedInterval a = certify_c(3329, factorize(3328), 6);
  CHECK(render_decimal(a, 6).prefix == "0.461399");
  CHECK(a.width() <= a.width_bound());
  CHECK(a.lower <= Rational(461400, 1000000));
  CHECK(a.upper >= Rational(461399, 1000000));

  const CertifiedInterval b = certify_c(8380417, factorize(8380416), 6);
  CHECK(render_decimal(b, 6).prefix == "0.293255");
  CHECK(b.width() <= b.width_bound());

  const CertifiedInterval c = certify_c(3, factorize(2), 6);
  CHECK(c.lower <= Rational(280063, 1000000));
  CHECK(c.upper >= Rational(280063, 1000000));
  CHECK(c.width() <= c.width_bound());

  CHECK_THROWS_AS(certify_c(3329, factorize(100), 6), DomainError);
}

TEST_CASE("certify_c accepts p = 2") {
  // c(2) = prod (1 - 2^{-j}) = 0.2887880950..., displayed as ~0.2888
  const CertifiedInterval iv = certify_c(2, factorize(1), 6);
  CHECK(iv.lower <= Rational(2887880, 10000000));
  CHECK(iv.upper >= Rational(2887880, 10000000));
  CHECK(iv.width() <= iv.width_bound());
  CHECK(render_decimal(iv, 5).prefix == "0.28878");
  CHECK(decimal_string(iv.midpoint(), 4) == "0.2888");
}

TEST_CASE("bracketing against a depth-64 brute-force oracle, p <= 1e4") {
  const PrimeTable t = sieve_primes(10'000);
  for (std::size_t i = 1; i < t.primes.size(); ++i) {
    const std::uint64_t p = t.primes[i];
    const Factorization f = factorize(p - 1);
    const CertifiedInterval iv = certify_c(p, f, 8);
    // independent route: totient ratio by naive factorization, product term
    // by term at depth 64
    const Rational deep = oracles::naive_totient_ratio(p - 1) * oracles::product_term_by_term(p, 64);
    CHECK(iv.lower <= deep);
    CHECK(deep <= iv.upper);
    CHECK(iv.width() <= iv.width_bound());
  }
}

TEST_CASE("matrix product stays above one half for odd p") {
  const PrimeTable t = sieve_primes(1000);
  for (std::size_t i = 1; i < t.primes.size(); ++i) {
    const std::uint64_t p = t.primes[i];
    const std::uint32_t J = choose_depth(p, 8);
    Rational tail(1, p - 1);
    tail /= Rational(pow_mpz(p, J));
    CHECK(truncated_matrix_product(p, J) - tail >= Rational(1, 2));
  }
}

TEST_CASE("c_fixed_dimension exact values and monotonicity") {
  CHECK(c_fixed_dimension(3, factorize(2), 1) == Rational(1, 3));
  CHECK(c_fixed_dimension(3329, factorize(3328), 1) ==
        Rational(6, 13) * Rational(3328, 3329));
  for (std::uint64_t p : {3ull, 5ull, 3329ull}) {
    const Factorization f = factorize(p - 1);
    Rational prev = c_fixed_dimension(p, f, 1);
    for (std::uint32_t n = 2; n <= 6; ++n) {
      const Rational cur = c_fixed_dimension(p, f, n);
      CHECK(cur < prev);
      prev = cur;
    }
  }
}

TEST_CASE("render_decimal rationals, ties to even") {
  CHECK(render_decimal(Rational(6, 13), 6) == "0.461538");
  CHECK(render_decimal(Rational(3, 8), 3) == "0.375");
  CHECK(render_decimal(Rational(1, 8), 2) == "0.12");   // 0.125 -> even
  CHECK(render_decimal(Rational(3, 8), 2) == "0.38");   // 0.375 -> even
  CHECK(render_decimal(Rational(1, 4), 1) == "0.2");    // 0.25 -> even
  CHECK(render_decimal(Rational(-3, 8), 3) == "-0.375");
  CHECK(render_decimal(Rational(7, 2), 1) == "3.5");
  CHECK_THROWS_AS(render_decimal(Rational(1, 2), 0), DomainError);
}

TEST_CASE("render_decimal interval prefix is a certified truncation") {
  const CertifiedInterval iv = certify_c(3329, factorize(3328), 6);
  const RenderedInterval r = render_decimal(iv, 10);
  CHECK(r.prefix.substr(0, 8) == "0.461399");
  // every prefix digit is a true digit of any value inside the bracket
  CHECK(r.lower.substr(0, r.prefix.size()) == r.prefix);

  // rounding the endpoints would flip 0.461399... to 0.461400: the prefix
  // must truncate, not round
  CHECK(render_decimal(iv, 6).prefix == "0.461399");
}
