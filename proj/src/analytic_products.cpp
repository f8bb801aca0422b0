#include "primroot/analytic_products.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "primroot/csv.hpp"
#include "primroot/errors.hpp"
#include "primroot/numeric.hpp"

namespace primroot {

namespace {

void check_cutoff(std::uint64_t cutoff, const PrimeTable& table) {
  if (cutoff < 3) throw DomainError("prime_cutoff must be >= 3");
  if (cutoff > kSieveLimitCap) throw CapacityError("prime_cutoff above supported 1e8");
  if (table.limit < cutoff) throw DomainError("prime table smaller than prime_cutoff");
}

// odd-prime index range [begin, end) for primes in (2, cutoff]
std::pair<std::size_t, std::size_t> odd_range(std::uint64_t cutoff, const PrimeTable& table) {
  return {1, table.count_upto(cutoff)};
}

// tail envelope |a_l(s)| <= |s| w_l e^{|s| w_l} / (l-1) <= C/(l-1)^2 summed
// over l > cutoff; valid as |log(1+a)| <= 2|a| once |a| <= 1/2
struct MellinTail {
  double estimate;
  bool convergent;
};

MellinTail mellin_tail(double abs_s, std::uint64_t cutoff) {
  if (abs_s == 0.0) return {0.0, true};
  const double wc = std::log1p(1.0 / static_cast<double>(cutoff - 1));
  const double c = abs_s * std::exp(abs_s * wc);
  const double amax = c / (static_cast<double>(cutoff - 1) * static_cast<double>(cutoff - 1));
  return {2.0 * c / static_cast<double>(cutoff - 1), amax <= 0.5};
}

}  // namespace

std::complex<double> local_factor(std::uint64_t ell, std::complex<double> s) {
  if (ell < 3 || !is_prime(ell)) throw DomainError("local_factor: ell must be an odd prime");
  const double w = jump_weight(ell);
  const double inv = 1.0 / static_cast<double>(ell - 1);
  return (1.0 - inv) + inv * std::exp(-s * w);
}

EulerProductEval mellin(std::complex<double> s, std::uint64_t prime_cutoff,
                        const PrimeTable& table) {
  check_cutoff(prime_cutoff, table);
  const auto [begin, end] = odd_range(prime_cutoff, table);
  const auto* primes = table.primes.data();

  // std::log maps an exactly-zero factor to real part -inf, which exp turns
  // back into a zero product
  const std::complex<double> logsum =
      blockwise_sum<std::complex<double>>(end - begin, [&](std::size_t i) {
        const double l = primes[begin + i];
        const double w = std::log1p(1.0 / (l - 1.0));
        const double inv = 1.0 / (l - 1.0);
        return std::log((1.0 - inv) + inv * std::exp(-s * w));
      });

  EulerProductEval out;
  out.prime_cutoff = prime_cutoff;
  const MellinTail tail = mellin_tail(std::abs(s), prime_cutoff);
  out.tail_estimate = tail.estimate;
  out.convergent = tail.convergent;
  out.value = std::exp(-s * std::log(2.0) + logsum);
  return out;
}

EulerProductEval mellin(std::complex<double> s, std::uint64_t prime_cutoff) {
  if (prime_cutoff > kSieveLimitCap) throw CapacityError("prime_cutoff above supported 1e8");
  return mellin(s, prime_cutoff, sieve_primes(prime_cutoff));
}

EulerProductEval moment(double k, std::uint64_t prime_cutoff, const PrimeTable& table) {
  if (!(k > 0)) throw DomainError("moment: k must be positive");
  check_cutoff(prime_cutoff, table);
  const auto [begin, end] = odd_range(prime_cutoff, table);
  const auto* primes = table.primes.data();

  const double logsum = blockwise_sum<double>(end - begin, [&](std::size_t i) {
    const double l = primes[begin + i];
    const double w = std::log1p(1.0 / (l - 1.0));
    const double inv = 1.0 / (l - 1.0);
    return std::log((1.0 - inv) + inv * std::exp(-k * w));
  });

  EulerProductEval out;
  out.prime_cutoff = prime_cutoff;
  const MellinTail tail = mellin_tail(k, prime_cutoff);
  out.tail_estimate = tail.estimate;
  out.convergent = tail.convergent;
  out.value = std::exp(-k * std::log(2.0) + logsum);
  return out;
}

EulerProductEval moment(double k, std::uint64_t prime_cutoff) {
  if (prime_cutoff > kSieveLimitCap) throw CapacityError("prime_cutoff above supported 1e8");
  return moment(k, prime_cutoff, sieve_primes(prime_cutoff));
}

namespace {

// one charfun factor, clamped to [0,1]; log(0) = -inf propagates to a zero
// product through exp
double charfun_log_factor(double tau, double w, double coef) {
  const double s = std::sin(0.5 * tau * w);
  double factor = 1.0 - coef * (2.0 * s * s);
  factor = std::clamp(factor, 0.0, 1.0);
  return std::log(factor);
}

double charfun_tail(double tau, std::uint64_t cutoff) {
  const double c = static_cast<double>(cutoff - 2);
  return tau * tau / (c * c);
}

}  // namespace

CharfunSweeper::CharfunSweeper(const PrimeTable& table, std::uint64_t cutoff,
                               std::uint64_t secondary_cutoff) {
  check_cutoff(cutoff, table);
  if (secondary_cutoff != 0 && secondary_cutoff > cutoff)
    throw DomainError("CharfunSweeper: secondary cutoff must not exceed the primary");
  cutoff_ = cutoff;
  secondary_cutoff_ = secondary_cutoff;
  const auto [begin, end] = odd_range(cutoff, table);
  weight_.resize(end - begin);
  coef_.resize(end - begin);
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < static_cast<long long>(end - begin); ++i) {
    const double l = table.primes[begin + static_cast<std::size_t>(i)];
    weight_[static_cast<std::size_t>(i)] = std::log1p(1.0 / (l - 1.0));
    coef_[static_cast<std::size_t>(i)] = 2.0 * (l - 2.0) / ((l - 1.0) * (l - 1.0));
  }
  secondary_count_ =
      secondary_cutoff == 0 ? 0 : table.count_upto(secondary_cutoff) - begin;
}

double CharfunSweeper::eval(double tau) const { return eval_pair(tau).second; }

std::pair<double, double> CharfunSweeper::eval_pair(double tau) const {
  const std::size_t n = weight_.size();
  const std::size_t split = secondary_count_;
  const double head = blockwise_sum<double>(split, [&](std::size_t i) {
    return charfun_log_factor(tau, weight_[i], coef_[i]);
  });
  const double rest = blockwise_sum<double>(n - split, [&](std::size_t i) {
    return charfun_log_factor(tau, weight_[split + i], coef_[split + i]);
  });
  return {std::exp(head), std::exp(head + rest)};
}

double CharfunSweeper::tail_estimate(double tau) const { return charfun_tail(tau, cutoff_); }

EulerProductEval charfun_sq(double tau, std::uint64_t prime_cutoff, const PrimeTable& table) {
  check_cutoff(prime_cutoff, table);
  const auto [begin, end] = odd_range(prime_cutoff, table);
  const auto* primes = table.primes.data();

  const double logsum = blockwise_sum<double>(end - begin, [&](std::size_t i) {
    const double l = primes[begin + i];
    const double w = std::log1p(1.0 / (l - 1.0));
    const double coef = 2.0 * (l - 2.0) / ((l - 1.0) * (l - 1.0));
    return charfun_log_factor(tau, w, coef);
  });

  EulerProductEval out;
  out.prime_cutoff = prime_cutoff;
  out.tail_estimate = charfun_tail(tau, prime_cutoff);
  out.convergent = out.tail_estimate <= 0.5;
  out.value = std::exp(logsum);
  return out;
}

EulerProductEval charfun_sq(double tau, std::uint64_t prime_cutoff) {
  if (prime_cutoff > kSieveLimitCap) throw CapacityError("prime_cutoff above supported 1e8");
  return charfun_sq(tau, prime_cutoff, sieve_primes(prime_cutoff));
}

double decade_mean(double tau_lo, double tau_hi, std::uint32_t points,
                   std::uint64_t prime_cutoff, const PrimeTable& table) {
  if (!(tau_lo > 0) || !(tau_hi > tau_lo))
    throw DomainError("decade_mean: need 0 < tau_lo < tau_hi");
  if (points == 0) throw DomainError("decade_mean: points must be >= 1");
  const CharfunSweeper sweeper(table, prime_cutoff);
  if (points == 1) return sweeper.eval(tau_lo);

  const double step = std::log(tau_hi / tau_lo) / (points - 1);
  std::vector<double> vals(points);
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < static_cast<long long>(points); ++i) {
    const double tau = i + 1 == static_cast<long long>(points)
                           ? tau_hi
                           : tau_lo * std::exp(step * static_cast<double>(i));
    vals[static_cast<std::size_t>(i)] = sweeper.eval(tau);
  }
  CompensatedSum sum;
  for (double v : vals) sum.add(v);
  return sum.value() / points;
}

double decade_mean(double tau_lo, double tau_hi, std::uint32_t points,
                   std::uint64_t prime_cutoff) {
  if (prime_cutoff > kSieveLimitCap) throw CapacityError("prime_cutoff above supported 1e8");
  return decade_mean(tau_lo, tau_hi, points, prime_cutoff, sieve_primes(prime_cutoff));
}

EndpointConstants endpoint_constants(std::uint64_t prime_cutoff, const PrimeTable& table) {
  if (prime_cutoff < 1'000'000)
    throw DomainError("endpoint_constants: cutoff must be >= 1e6");
  check_cutoff(prime_cutoff, table);
  const auto [begin, end] = odd_range(prime_cutoff, table);
  const auto* primes = table.primes.data();

  const double logsum = blockwise_sum<double>(end - begin, [&](std::size_t i) {
    const double l = primes[begin + i];
    return std::log1p(-1.0 / ((l - 1.0) * (l - 1.0)));
  });

  EndpointConstants out;
  out.prime_cutoff = prime_cutoff;
  out.tail_estimate = 1.0 / static_cast<double>(prime_cutoff - 1);
  out.singular_series = 2.0 * std::exp(logsum);
  out.kappa = out.singular_series * std::exp(-kEulerGamma);
  return out;
}

EndpointConstants endpoint_constants(std::uint64_t prime_cutoff) {
  if (prime_cutoff > kSieveLimitCap) throw CapacityError("prime_cutoff above supported 1e8");
  return endpoint_constants(prime_cutoff, sieve_primes(prime_cutoff));
}

EndpointSurvival endpoint_survival(double epsilon, const TruncatedLaw& law) {
  if (!(epsilon > 0.0) || !(epsilon < 0.25))
    throw DomainError("endpoint_survival: epsilon must lie in (0, 1/4)");
  if (law.mode == TruncatedLaw::Mode::kSampler && law.samples.size() < 1'000'000)
    throw DomainError("endpoint_survival: sampled law needs >= 1e6 samples");

  EndpointSurvival out;
  out.survival = 1.0 - truncated_cdf(law, 0.5 - epsilon);
  const double t = -std::log1p(-2.0 * epsilon);
  const double y = 1.0 / (2.0 * t);
  out.upper_bound = y < 3.0 ? 1.0 : Q_product(y);
  return out;
}

void write_moments_csv(std::ostream& os, std::span<const double> ks,
                       std::uint64_t prime_cutoff, const PrimeTable& table) {
  os << "k,moment,tail_estimate\n";
  for (double k : ks) {
    const EulerProductEval ev = moment(k, prime_cutoff, table);
    os << fmt_double(k) << ',' << fmt_double(ev.real()) << ','
       << fmt_double(ev.tail_estimate) << '\n';
  }
}

void write_constants_json(std::ostream& os, std::uint64_t prime_cutoff,
                          const PrimeTable& table) {
  const EndpointConstants c = endpoint_constants(prime_cutoff, table);
  os << "{\n"
     << "  \"kappa\": " << fmt_double(c.kappa) << ",\n"
     << "  \"singular_series\": " << fmt_double(c.singular_series) << ",\n"
     << "  \"euler_gamma\": " << fmt_double(c.euler_gamma) << ",\n"
     << "  \"prime_cutoff\": " << c.prime_cutoff << ",\n"
     << "  \"tail_estimate\": " << fmt_double(c.tail_estimate) << ",\n"
     << "  \"tail_kind\": \"heuristic upper envelope\"\n"
     << "}\n";
}

}  // namespace primroot
