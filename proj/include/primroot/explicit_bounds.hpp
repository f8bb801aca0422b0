#pragma once

#include <cstdint>
#include <optional>

#include "primroot/certified_eval.hpp"
#include "primroot/prime_engine.hpp"

namespace primroot {

// P(3) = prod (1 - 3^{-j}), certified to well beyond 12 digits.
double p3_constant();

// B(K) = P_3 * prod_{i=1..K} (1 - 1/p_i); valid lower bound for c(p)
// whenever omega(p-1) <= K.
double bound_B(std::uint32_t K);

// 0.56 / log p, valid for p > 2^30; disengaged below that threshold.
std::optional<double> coarse_lower_bound(std::uint64_t p);

struct BoundReport {
  std::uint64_t p = 0;
  std::uint32_t omega = 0;
  double generic_bound = 0.0;                    // B(omega(p-1))
  std::optional<double> coarse_bound;            // 0.56/log p when p > 2^30
  CertifiedInterval c_interval;
  double overhead = 0.0;                         // 1 / midpoint of c bracket
  Rational overhead_lower;                       // 1 / upper endpoint
  Rational overhead_upper;                       // 1 / lower endpoint
};

BoundReport overhead(std::uint64_t p, const Factorization& fact, std::uint32_t digits = 12);

struct MinScanResult {
  std::uint64_t x_limit = 0;
  std::uint64_t argmin_p = 0;
  double min_c = 0.0;
  double loglog_ratio = 0.0;  // min_c * log log x
};

inline constexpr std::uint64_t kScanLimitCap = 10'000'000;

// Exact argmin of the certified midpoint of c(p) over odd primes p <= x_limit
// at D = 8, ties broken toward the smaller prime.  `table.limit` must reach
// x_limit.
MinScanResult scan_min_c(std::uint64_t x_limit, const PrimeTable& table,
                         std::uint32_t digits = 8);
MinScanResult scan_min_c(std::uint64_t x_limit);

struct WitnessRecord {
  std::uint32_t k = 0;
  std::uint64_t primorial_Nk = 0;
  std::optional<std::uint64_t> p_star;
  double c_midpoint = 0.0;
  double ratio = 0.0;  // 1 / (c(p*) log log p*)
};

// Least prime p* ≡ 1 (mod N_k) up to search_cap, with the extremal-order
// ratio computed from the certified value of c(p*).
WitnessRecord sharp_constant_witness(std::uint32_t k, std::uint64_t search_cap,
                                     std::uint32_t digits = 12);

}  // namespace primroot
