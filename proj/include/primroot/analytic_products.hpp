#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "primroot/limit_law.hpp"
#include "primroot/prime_engine.hpp"

namespace primroot {

// Euler--Mascheroni constant, pinned as an input literal.
inline constexpr double kEulerGamma = 0.57721566490153286061;

struct EulerProductEval {
  std::complex<double> value;
  std::uint64_t prime_cutoff = 0;
  // upper envelope for the neglected |sum_{l > cutoff} log factor|; an
  // estimate, not a certified enclosure
  double tail_estimate = 0.0;
  bool convergent = true;  // tail envelope applicable at this cutoff
  double real() const { return value.real(); }
};

// F_s(l) = (l-2)/(l-1) + exp(-s w_l)/(l-1)
std::complex<double> local_factor(std::uint64_t ell, std::complex<double> s);

// M(s) = 2^{-s} prod_{3 <= l <= cutoff} F_s(l), accumulated in log space
EulerProductEval mellin(std::complex<double> s, std::uint64_t prime_cutoff,
                        const PrimeTable& table);
EulerProductEval mellin(std::complex<double> s, std::uint64_t prime_cutoff);

// E[X^k] for real k > 0; real specialization of mellin
EulerProductEval moment(double k, std::uint64_t prime_cutoff, const PrimeTable& table);
EulerProductEval moment(double k, std::uint64_t prime_cutoff);

// |mu_f^(tau)|^2 = prod (1 - (2(l-2)/(l-1)^2)(1 - cos(tau w_l))), factors
// clamped to [0,1]
EulerProductEval charfun_sq(double tau, std::uint64_t prime_cutoff, const PrimeTable& table);
EulerProductEval charfun_sq(double tau, std::uint64_t prime_cutoff);

// Precomputed weights for sweeping charfun_sq over many tau, optionally
// reporting a second (smaller) cutoff from the same pass.
class CharfunSweeper {
 public:
  CharfunSweeper(const PrimeTable& table, std::uint64_t cutoff,
                 std::uint64_t secondary_cutoff = 0);

  double eval(double tau) const;
  // (value at secondary cutoff, value at primary cutoff)
  std::pair<double, double> eval_pair(double tau) const;
  double tail_estimate(double tau) const;

 private:
  std::vector<double> weight_;  // w_l
  std::vector<double> coef_;    // 2(l-2)/(l-1)^2
  std::size_t secondary_count_ = 0;
  std::uint64_t cutoff_ = 0;
  std::uint64_t secondary_cutoff_ = 0;
};

// arithmetic mean of charfun_sq over `points` log-spaced tau in
// [tau_lo, tau_hi], endpoints included
double decade_mean(double tau_lo, double tau_hi, std::uint32_t points,
                   std::uint64_t prime_cutoff, const PrimeTable& table);
double decade_mean(double tau_lo, double tau_hi, std::uint32_t points,
                   std::uint64_t prime_cutoff);

struct EndpointConstants {
  double kappa = 0.0;            // 2 e^{-gamma} prod (1 - 1/(l-1)^2)
  double singular_series = 0.0;  // twin-prime constant, 2 prod (1 - 1/(l-1)^2)
  double euler_gamma = kEulerGamma;
  std::uint64_t prime_cutoff = 0;
  double tail_estimate = 0.0;
};

EndpointConstants endpoint_constants(std::uint64_t prime_cutoff, const PrimeTable& table);
EndpointConstants endpoint_constants(std::uint64_t prime_cutoff);

struct EndpointSurvival {
  double survival = 0.0;     // P(X > 1/2 - eps) under the truncated law
  double upper_bound = 0.0;  // Q(1/(2t)) with t = -log(1 - 2 eps)
};

EndpointSurvival endpoint_survival(double epsilon, const TruncatedLaw& law);

// CSV/JSON emission for the analytic quantities
void write_moments_csv(std::ostream& os, std::span<const double> ks,
                       std::uint64_t prime_cutoff, const PrimeTable& table);
void write_constants_json(std::ostream& os, std::uint64_t prime_cutoff,
                          const PrimeTable& table);

}  // namespace primroot
