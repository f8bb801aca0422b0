#include "primroot/explicit_bounds.hpp"

#include <cmath>
#include <vector>

#include "primroot/errors.hpp"

namespace primroot {

double p3_constant() {
  // midpoint of the depth-40 bracket; tail 3^{-40}/2 ~ 4e-20 is far below
  // double resolution, so this is P(3) correctly rounded
  static const double value = [] {
    const Rational pj = truncated_matrix_product(3, 40);
    Rational tail(1, 2);
    tail /= Rational(pow_mpz(3, 40));
    return to_double(pj - tail / 2);
  }();
  return value;
}

double bound_B(std::uint32_t K) {
  static const PrimeTable small = sieve_primes(1000);
  if (K > 160) throw CapacityError("bound_B: K beyond tabulated primes");
  Rational mertens = 1;
  for (std::uint32_t i = 0; i < K; ++i) {
    const std::uint64_t p = small.primes[i];
    mertens *= Rational(p - 1, p);
  }
  return p3_constant() * to_double(mertens);
}

std::optional<double> coarse_lower_bound(std::uint64_t p) {
  if (p <= (std::uint64_t{1} << 30)) return std::nullopt;
  return 0.56 / std::log(static_cast<double>(p));
}

BoundReport overhead(std::uint64_t p, const Factorization& fact, std::uint32_t digits) {
  BoundReport r;
  r.p = p;
  r.omega = static_cast<std::uint32_t>(fact.omega());
  r.c_interval = certify_c(p, fact, digits);
  // the omega-based family bounds c(p) only for odd p; c(2) = P(2) < P_3
  r.generic_bound = p == 2 ? 0.0 : bound_B(r.omega);
  r.coarse_bound = coarse_lower_bound(p);
  r.overhead_lower = 1 / r.c_interval.upper;
  r.overhead_upper = 1 / r.c_interval.lower;
  r.overhead = to_double(2 / (r.c_interval.lower + r.c_interval.upper));
  return r;
}

MinScanResult scan_min_c(std::uint64_t x_limit, const PrimeTable& table, std::uint32_t digits) {
  if (x_limit < 3) throw DomainError("scan_min_c: x_limit must be >= 3");
  if (x_limit > kScanLimitCap) throw CapacityError("scan_min_c: x_limit above supported 1e7");
  if (table.limit < x_limit) throw DomainError("scan_min_c: prime table too small");

  const std::size_t n = table.count_upto(x_limit);
  if (n < 2) throw DomainError("scan_min_c: no odd prime in range");

  // per-block argmin over prime indices [1, n), combined in ascending block
  // order so ties resolve toward the smaller prime
  const std::size_t block = 4096;
  const std::size_t nblocks = (n - 1 + block - 1) / block;
  std::vector<Rational> block_min(nblocks);
  std::vector<std::uint64_t> block_arg(nblocks, 0);

#pragma omp parallel for schedule(dynamic)
  for (long long b = 0; b < static_cast<long long>(nblocks); ++b) {
    const std::size_t lo = 1 + static_cast<std::size_t>(b) * block;
    const std::size_t hi = std::min(lo + block, n);
    Rational best;
    std::uint64_t best_p = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      const std::uint64_t p = table.primes[i];
      const Factorization fact = factorize_with_table(p - 1, table);
      const Rational mid = certify_c(p, fact, digits).midpoint();
      if (best_p == 0 || mid < best) {
        best = mid;
        best_p = p;
      }
    }
    block_min[static_cast<std::size_t>(b)] = best;
    block_arg[static_cast<std::size_t>(b)] = best_p;
  }

  Rational best = block_min[0];
  std::uint64_t best_p = block_arg[0];
  for (std::size_t b = 1; b < nblocks; ++b) {
    if (block_arg[b] != 0 && block_min[b] < best) {
      best = block_min[b];
      best_p = block_arg[b];
    }
  }

  MinScanResult res;
  res.x_limit = x_limit;
  res.argmin_p = best_p;
  res.min_c = to_double(best);
  res.loglog_ratio = res.min_c * std::log(std::log(static_cast<double>(x_limit)));
  return res;
}

MinScanResult scan_min_c(std::uint64_t x_limit) {
  if (x_limit < 3) throw DomainError("scan_min_c: x_limit must be >= 3");
  if (x_limit > kScanLimitCap) throw CapacityError("scan_min_c: x_limit above supported 1e7");
  return scan_min_c(x_limit, sieve_primes(x_limit));
}

WitnessRecord sharp_constant_witness(std::uint32_t k, std::uint64_t search_cap,
                                     std::uint32_t digits) {
  if (k < 2) throw DomainError("sharp_constant_witness: k must be >= 2");
  if (k > 15) throw CapacityError("sharp_constant_witness: N_k exceeds 64 bits for k > 15");
  WitnessRecord rec;
  rec.k = k;
  const mpz_class nk = primorial(k);
  rec.primorial_Nk = mpz_get_ui(nk.get_mpz_t());
  // a cap below N_k cannot contain any p ≡ 1 (mod N_k): report not-found
  rec.p_star = search_cap < rec.primorial_Nk
                   ? std::nullopt
                   : least_prime_in_progression(rec.primorial_Nk, 1, search_cap);
  if (rec.p_star) {
    const std::uint64_t p = *rec.p_star;
    const Factorization fact = factorize(p - 1);
    rec.c_midpoint = to_double(certify_c(p, fact, digits).midpoint());
    rec.ratio = 1.0 / (rec.c_midpoint * std::log(std::log(static_cast<double>(p))));
  }
  return rec;
}

}  // namespace primroot
