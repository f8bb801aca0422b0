#include "primroot/limit_law.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "primroot/certified_eval.hpp"
#include "primroot/errors.hpp"
#include "primroot/numeric.hpp"
#include "primroot/rng.hpp"

namespace primroot {

double jump_weight(std::uint64_t odd_prime) {
  if (odd_prime < 3 || odd_prime % 2 == 0 || !is_prime(odd_prime))
    throw DomainError("jump_weight: argument must be an odd prime");
  return std::log1p(1.0 / static_cast<double>(odd_prime - 1));
}

namespace {

std::vector<std::uint64_t> first_odd_primes(std::uint32_t N) {
  const std::uint64_t last = nth_odd_prime(N);
  const PrimeTable t = sieve_primes(last);
  std::vector<std::uint64_t> out;
  out.reserve(N);
  for (std::uint32_t p : t.primes) {
    if (p >= 3) out.push_back(p);
  }
  return out;
}

// exact value of (1/2) prod_{j in mask} (l_j - 1)/l_j
Rational exact_subset_value(std::uint32_t mask, const std::vector<std::uint64_t>& primes) {
  Rational v(1, 2);
  for (std::uint32_t j = 0; mask != 0; ++j, mask >>= 1) {
    if (mask & 1) v *= Rational(primes[j] - 1, primes[j]);
  }
  return v;
}

}  // namespace

TruncatedLaw exact_atoms(std::uint32_t N) {
  if (N == 0) throw DomainError("exact_atoms: N must be >= 1");
  if (N > kExactAtomCap) throw CapacityError("exact_atoms: N above the 2^20-atom cap");

  const std::vector<std::uint64_t> primes = first_odd_primes(N);
  const std::size_t count = std::size_t{1} << N;

  // Subset DP over bitmasks.  Values go through the same log-space path as
  // the sampler (weights added in ascending prime order, one exp at the end),
  // so an atom and the samples that land on it agree bit for bit.  The double
  // values only order the atoms; merging falls back to exact rationals below.
  std::vector<double> logsum(count), value(count), mass(count);
  double q0 = 1.0;
  for (std::uint64_t l : primes) q0 *= double(l - 2) / double(l - 1);
  logsum[0] = 0.0;
  mass[0] = q0;
  std::vector<double> w(N), mf(N);
  for (std::uint32_t j = 0; j < N; ++j) {
    w[j] = jump_weight(primes[j]);
    mf[j] = 1.0 / double(primes[j] - 2);
  }
  value[0] = 0.5;
  for (std::size_t m = 1; m < count; ++m) {
    // strip the highest bit so weights accumulate in ascending index order
    const int j = std::bit_width(m) - 1;
    const std::size_t prev = m ^ (std::size_t{1} << j);
    logsum[m] = logsum[prev] + w[static_cast<std::size_t>(j)];
    mass[m] = mass[m & (m - 1)] * mf[static_cast<std::size_t>(std::countr_zero(m))];
    value[m] = 0.5 * std::exp(-logsum[m]);
  }

  std::vector<std::uint32_t> order(count);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (value[a] != value[b]) return value[a] < value[b];
    return a < b;
  });

  TruncatedLaw law;
  law.mode = TruncatedLaw::Mode::kExactAtoms;
  law.num_primes = N;
  law.largest_prime = primes.back();
  law.atoms.reserve(count);
  for (std::size_t i = 0; i < count;) {
    const std::uint32_t mask = order[i];
    double merged = mass[mask];
    std::size_t j = i + 1;
    // doubles can collide for distinct subsets; merge only on exact equality
    while (j < count && value[order[j]] == value[mask]) {
      if (exact_subset_value(order[j], primes) == exact_subset_value(mask, primes)) {
        merged += mass[order[j]];
        ++j;
      } else {
        break;
      }
    }
    law.atoms.push_back({value[mask], merged});
    i = j;
  }
  law.cumulative.resize(law.atoms.size());
  CompensatedSum cum;
  for (std::size_t i = 0; i < law.atoms.size(); ++i) {
    cum.add(law.atoms[i].mass);
    law.cumulative[i] = cum.value();
  }
  return law;
}

std::vector<double> sample_truncated(std::uint32_t N, std::size_t count, std::uint64_t seed) {
  if (N == 0) throw DomainError("sample_truncated: N must be >= 1");
  if (count == 0) throw DomainError("sample_truncated: count must be >= 1");

  const std::vector<std::uint64_t> primes = first_odd_primes(N);
  std::vector<double> acc(count, 0.0);

  // One substream per prime index.  The Bernoulli(1/(l-1)) hits along the
  // sample axis are generated by inverse-transform sampling of the geometric
  // gaps, so the work is proportional to the number of hits rather than to
  // count * N.
  for (std::uint32_t j = 0; j < N; ++j) {
    const double w = jump_weight(primes[j]);
    const double log1m = std::log1p(-1.0 / static_cast<double>(primes[j] - 1));
    Rng64 rng = Rng64::substream(seed, j);
    std::uint64_t pos = static_cast<std::uint64_t>(
        std::floor(std::log(rng.next_unit_positive()) / log1m));
    while (pos < count) {
      acc[pos] += w;
      pos += 1 + static_cast<std::uint64_t>(
                     std::floor(std::log(rng.next_unit_positive()) / log1m));
    }
  }
  for (double& x : acc) x = 0.5 * std::exp(-x);
  return acc;
}

TruncatedLaw sampler_law(std::uint32_t N, std::size_t count, std::uint64_t seed) {
  TruncatedLaw law;
  law.mode = TruncatedLaw::Mode::kSampler;
  law.num_primes = N;
  law.largest_prime = nth_odd_prime(N);
  law.seed = seed;
  law.samples = sample_truncated(N, count, seed);
  std::sort(law.samples.begin(), law.samples.end());
  return law;
}

double truncated_cdf(const TruncatedLaw& law, double alpha) {
  if (law.mode == TruncatedLaw::Mode::kExactAtoms) {
    if (law.atoms.empty()) throw DomainError("truncated_cdf: empty law");
    std::size_t lo = 0, hi = law.atoms.size();
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      if (law.atoms[mid].value <= alpha) {
        lo = mid + 1;
      } else {
        hi = mid;
      }
    }
    return lo == 0 ? 0.0 : law.cumulative[lo - 1];
  }
  if (law.samples.empty()) throw DomainError("truncated_cdf: empty law");
  const auto it = std::upper_bound(law.samples.begin(), law.samples.end(), alpha);
  return double(it - law.samples.begin()) / double(law.samples.size());
}

TailMean tail_mean(double y, std::uint64_t cutoff, const PrimeTable& table) {
  if (!(y > 0)) throw DomainError("tail_mean: y must be positive");
  if (static_cast<double>(cutoff) <= y) throw DomainError("tail_mean: cutoff must exceed y");
  if (cutoff > kSieveLimitCap) throw CapacityError("tail_mean: cutoff above supported 1e8");
  if (table.limit < cutoff) throw DomainError("tail_mean: prime table too small");

  const std::uint64_t ylo = y >= 1 ? static_cast<std::uint64_t>(y) : 0;
  const std::size_t begin = table.count_upto(ylo);
  const std::size_t end = table.count_upto(cutoff);
  const auto* primes = table.primes.data();
  TailMean tm;
  tm.partial_sum = blockwise_sum<double>(end - begin, [&](std::size_t i) {
    const double l = primes[begin + i];
    return std::log1p(1.0 / (l - 1.0)) / (l - 1.0);
  });
  // sum_{n > cutoff} 1/(n(n-1)) = 1/cutoff bounds the neglected primes
  tm.remainder_bound = 1.0 / static_cast<double>(cutoff);
  return tm;
}

TailMean tail_mean(double y, std::uint64_t cutoff) {
  if (cutoff > kSieveLimitCap) throw CapacityError("tail_mean: cutoff above supported 1e8");
  return tail_mean(y, cutoff, sieve_primes(cutoff));
}

double wasserstein_bound(std::uint32_t N, const PrimeTable& table, std::uint64_t cutoff) {
  if (N == 0) throw DomainError("wasserstein_bound: N must be >= 1");
  const std::uint64_t ln = nth_odd_prime(N);
  return 0.5 * tail_mean(static_cast<double>(ln), cutoff, table).upper();
}

double wasserstein_bound(std::uint32_t N, std::uint64_t cutoff) {
  if (cutoff > kSieveLimitCap)
    throw CapacityError("wasserstein_bound: cutoff above supported 1e8");
  return wasserstein_bound(N, sieve_primes(cutoff), cutoff);
}

double Q_product(double y, const PrimeTable& table) {
  if (!(y >= 3)) throw DomainError("Q_product: y must be >= 3");
  if (static_cast<double>(table.limit) < y) throw DomainError("Q_product: prime table too small");
  double q = 1.0;
  for (std::uint32_t l : table.primes) {
    if (static_cast<double>(l) > y) break;
    if (l == 2) continue;
    q *= double(l - 2) / double(l - 1);
  }
  return q;
}

double Q_product(double y) {
  if (!(y >= 3)) throw DomainError("Q_product: y must be >= 3");
  return Q_product(y, sieve_primes(static_cast<std::uint64_t>(y) + 1));
}

double smooth_kernel_density(std::uint64_t m, double y, const PrimeTable& table) {
  if (m < 2 || m % 2 != 0) throw DomainError("smooth_kernel_density: m must be even");
  const Factorization fact = factorize(m);
  std::uint64_t phi = 1;
  for (const auto& [prime, exponent] : fact.factors) {
    if (exponent != 1) throw DomainError("smooth_kernel_density: m must be squarefree");
    if (static_cast<double>(prime) > y)
      throw DomainError("smooth_kernel_density: m has a prime factor above y");
    phi *= prime - 1;
  }
  double dens = 1.0 / static_cast<double>(phi);
  for (std::uint32_t l : table.primes) {
    if (static_cast<double>(l) > y) break;
    if (l == 2 || m % l == 0) continue;
    dens *= double(l - 2) / double(l - 1);
  }
  return dens;
}

double smooth_kernel_density(std::uint64_t m, double y) {
  if (!(y >= 2)) throw DomainError("smooth_kernel_density: y must be >= 2");
  return smooth_kernel_density(m, y, sieve_primes(static_cast<std::uint64_t>(y) + 1));
}

std::vector<AnchorValue> anchor_values(std::uint64_t max_m) {
  if (max_m < 2) throw DomainError("anchor_values: max_m must be >= 2");
  if (max_m > kEmpiricalLimitCap) throw CapacityError("anchor_values: max_m above supported 1e7");
  std::vector<AnchorValue> out;
  for (std::uint64_t m = 2; m <= max_m; m += 2) {
    const Factorization fact = factorize(m);
    bool squarefree = true;
    for (const auto& [prime, exponent] : fact.factors) {
      (void)prime;
      if (exponent != 1) {
        squarefree = false;
        break;
      }
    }
    if (!squarefree) continue;
    // distinct squarefree kernels have distinct ratios, so each ratio's
    // first witness is the value itself
    out.push_back({m, totient_ratio(fact), true});
  }
  return out;
}

EmpiricalDistribution empirical_cp(std::uint64_t x_limit, std::uint32_t digits,
                                   const PrimeTable& table) {
  if (x_limit < 3) throw DomainError("empirical_cp: x_limit must be >= 3");
  if (x_limit > kEmpiricalLimitCap)
    throw CapacityError("empirical_cp: x_limit above supported 1e7");
  if (table.limit < x_limit) throw DomainError("empirical_cp: prime table too small");

  const std::size_t n = table.count_upto(x_limit);
  EmpiricalDistribution dist;
  dist.source = "c(p) midpoints, odd primes p <= " + std::to_string(x_limit) +
                ", D = " + std::to_string(digits);
  if (n < 2) return dist;
  dist.values.resize(n - 1);
#pragma omp parallel for schedule(dynamic, 2048)
  for (long long i = 1; i < static_cast<long long>(n); ++i) {
    const std::uint64_t p = table.primes[static_cast<std::size_t>(i)];
    const Factorization fact = factorize_with_table(p - 1, table);
    dist.values[static_cast<std::size_t>(i) - 1] =
        to_double(certify_c(p, fact, digits).midpoint());
  }
  std::sort(dist.values.begin(), dist.values.end());
  return dist;
}

EmpiricalDistribution empirical_cp(std::uint64_t x_limit, std::uint32_t digits) {
  if (x_limit > kEmpiricalLimitCap)
    throw CapacityError("empirical_cp: x_limit above supported 1e7");
  return empirical_cp(x_limit, digits, sieve_primes(x_limit));
}

std::vector<HistogramBin> histogram(const EmpiricalDistribution& dist, std::uint32_t bins) {
  if (bins == 0) throw DomainError("histogram: bins must be >= 1");
  if (dist.values.empty()) throw DomainError("histogram: empty distribution");
  const double width = 0.5 / bins;
  std::vector<std::size_t> counts(bins, 0);
  for (double v : dist.values) {
    auto idx = static_cast<std::int64_t>(std::floor(v / width));
    if (idx < 0) idx = 0;
    if (idx >= bins) idx = bins - 1;  // closes the last bin at 0.5
    ++counts[static_cast<std::size_t>(idx)];
  }
  std::vector<HistogramBin> out(bins);
  for (std::uint32_t b = 0; b < bins; ++b) {
    out[b] = {b * width, b + 1 == bins ? 0.5 : (b + 1) * width,
              double(counts[b]) / double(dist.values.size())};
  }
  return out;
}

namespace {

// common discrete view: ascending (value, mass) with equal values merged
std::vector<Atom> to_atoms(const std::vector<double>& sorted_values) {
  if (sorted_values.empty()) throw DomainError("distance: empty distribution");
  std::vector<Atom> out;
  const double w = 1.0 / double(sorted_values.size());
  for (std::size_t i = 0; i < sorted_values.size();) {
    std::size_t j = i;
    while (j < sorted_values.size() && sorted_values[j] == sorted_values[i]) ++j;
    out.push_back({sorted_values[i], w * double(j - i)});
    i = j;
  }
  return out;
}

std::vector<Atom> to_atoms(const TruncatedLaw& law) {
  if (law.mode == TruncatedLaw::Mode::kExactAtoms) {
    if (law.atoms.empty()) throw DomainError("distance: empty law");
    return law.atoms;
  }
  return to_atoms(law.samples);
}

std::vector<Atom> to_atoms(const EmpiricalDistribution& d) { return to_atoms(d.values); }

// Kolmogorov distance and W1 = integral |F_a - F_b| by a merged sweep over
// the pooled jump points.
Distances atom_distance(const std::vector<Atom>& a, const std::vector<Atom>& b) {
  Distances d;
  std::size_t i = 0, j = 0;
  double ca = 0.0, cb = 0.0;
  double prev = 0.0;
  bool have_prev = false;
  while (i < a.size() || j < b.size()) {
    double x;
    if (i < a.size() && (j >= b.size() || a[i].value <= b[j].value)) {
      x = a[i].value;
    } else {
      x = b[j].value;
    }
    if (have_prev) d.wasserstein1 += std::abs(ca - cb) * (x - prev);
    while (i < a.size() && a[i].value == x) ca += a[i++].mass;
    while (j < b.size() && b[j].value == x) cb += b[j++].mass;
    d.kolmogorov = std::max(d.kolmogorov, std::abs(ca - cb));
    prev = x;
    have_prev = true;
  }
  return d;
}

}  // namespace

Distances distance(const TruncatedLaw& a, const TruncatedLaw& b) {
  return atom_distance(to_atoms(a), to_atoms(b));
}

Distances distance(const EmpiricalDistribution& a, const TruncatedLaw& b) {
  return atom_distance(to_atoms(a), to_atoms(b));
}

Distances distance(const EmpiricalDistribution& a, const EmpiricalDistribution& b) {
  return atom_distance(to_atoms(a), to_atoms(b));
}

}  // namespace primroot
