#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "primroot/prime_engine.hpp"
#include "primroot/rational.hpp"

namespace primroot {

// w_l = log(l/(l-1)), the jump of log(n/phi(n)) at a prime l
double jump_weight(std::uint64_t odd_prime);

struct Atom {
  double value;
  double mass;
};

// Law of X_N = (1/2) prod_{l <= l_N} (1 - 1/l)^{B_l} over the first N odd
// primes: either the full atom list (N <= 20) or a frozen sample set.
struct TruncatedLaw {
  enum class Mode { kExactAtoms, kSampler };

  Mode mode = Mode::kExactAtoms;
  std::uint32_t num_primes = 0;   // N
  std::uint64_t largest_prime = 0;  // l_N
  std::vector<Atom> atoms;        // exact mode; ascending value
  std::vector<double> cumulative; // exact mode; prefix sums of mass
  std::vector<double> samples;    // sampler mode; ascending
  std::optional<std::uint64_t> seed;
};

inline constexpr std::uint32_t kExactAtomCap = 20;

// All 2^N atoms of the truncated law; coincident values merge exactly.
TruncatedLaw exact_atoms(std::uint32_t N);

// i.i.d. samples of X_N in sample-index order; bit-identical for fixed
// (N, count, seed) on every platform.
std::vector<double> sample_truncated(std::uint32_t N, std::size_t count, std::uint64_t seed);

// sample_truncated frozen into a law handle (samples sorted)
TruncatedLaw sampler_law(std::uint32_t N, std::size_t count, std::uint64_t seed);

// right-continuous P(X_N <= alpha)
double truncated_cdf(const TruncatedLaw& law, double alpha);

struct TailMean {
  double partial_sum = 0.0;       // sum over primes y < l <= cutoff of w_l/(l-1)
  double remainder_bound = 0.0;   // rigorous overcount of the neglected tail
  double upper() const { return partial_sum + remainder_bound; }
};

// eta(y) truncated at `cutoff`; remainder bounded by 1/cutoff
TailMean tail_mean(double y, std::uint64_t cutoff, const PrimeTable& table);
TailMean tail_mean(double y, std::uint64_t cutoff);

inline constexpr std::uint64_t kTailMeanDefaultCutoff = 10'000'000;

// W1(G_N, G) <= (1/2) E[T_N], evaluated with the remainder overcount
double wasserstein_bound(std::uint32_t N, const PrimeTable& table,
                         std::uint64_t cutoff = kTailMeanDefaultCutoff);
double wasserstein_bound(std::uint32_t N, std::uint64_t cutoff = kTailMeanDefaultCutoff);

// Q(y) = prod_{3 <= l <= y} (l-2)/(l-1)
double Q_product(double y, const PrimeTable& table);
double Q_product(double y);

// delta_y(m) for an even squarefree m with largest prime factor <= y
double smooth_kernel_density(std::uint64_t m, double y, const PrimeTable& table);
double smooth_kernel_density(std::uint64_t m, double y);

struct AnchorValue {
  std::uint64_t m;
  Rational ratio;             // phi(m)/m
  bool first_with_ratio;
};

// All even squarefree m <= max_m with their exact totient ratios, by m.
std::vector<AnchorValue> anchor_values(std::uint64_t max_m);

struct EmpiricalDistribution {
  std::string source;
  std::vector<double> values;  // ascending
};

inline constexpr std::uint64_t kEmpiricalLimitCap = 10'000'000;

// Certified midpoints of c(p) for all odd primes p <= x_limit at depth
// choose_depth(p, digits).
EmpiricalDistribution empirical_cp(std::uint64_t x_limit, std::uint32_t digits,
                                   const PrimeTable& table);
EmpiricalDistribution empirical_cp(std::uint64_t x_limit, std::uint32_t digits);

struct HistogramBin {
  double lo;
  double hi;
  double mass;
};

// equal-width bins over [0, 0.5]; left-closed right-open, last bin closed
std::vector<HistogramBin> histogram(const EmpiricalDistribution& dist, std::uint32_t bins);

struct Distances {
  double kolmogorov = 0.0;
  double wasserstein1 = 0.0;
};

Distances distance(const TruncatedLaw& a, const TruncatedLaw& b);
Distances distance(const EmpiricalDistribution& a, const TruncatedLaw& b);
Distances distance(const EmpiricalDistribution& a, const EmpiricalDistribution& b);

}  // namespace primroot
