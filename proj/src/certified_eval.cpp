#include "primroot/certified_eval.hpp"

#include <cmath>

#include "primroot/errors.hpp"

namespace primroot {

Rational CertifiedInterval::width_bound() const {
  mpz_class den = pow_mpz(p, depth_J);
  if (p != 2) den *= 2 * mpz_class(static_cast<unsigned long>(p - 1));
  return Rational(1, den);
}

Rational totient_ratio(const Factorization& fact) {
  Rational r = 1;
  for (const auto& [prime, exponent] : fact.factors) {
    (void)exponent;
    r *= Rational(prime - 1, prime);
  }
  return r;
}

std::uint32_t choose_depth(std::uint64_t p, std::uint32_t digits) {
  if (p < 2) throw DomainError("choose_depth: p must be >= 2");
  if (digits == 0) throw DomainError("choose_depth: digits must be >= 1");
  const double j = std::ceil(digits * std::log(10.0) / std::log(static_cast<double>(p)));
  return j < 1.0 ? 1u : static_cast<std::uint32_t>(j);
}

Rational truncated_matrix_product(std::uint64_t p, std::uint32_t J, std::uint64_t bit_budget) {
  if (p < 2) throw DomainError("truncated_matrix_product: p must be >= 2");
  if (J == 0) throw DomainError("truncated_matrix_product: J must be >= 1");
  const double bits =
      0.5 * double(J) * (double(J) + 1.0) * std::log2(static_cast<double>(p));
  if (bits > static_cast<double>(bit_budget))
    throw CapacityError("truncated_matrix_product: intermediate size exceeds bit budget");

  // numerator prod (p^j - 1), denominator p^{J(J+1)/2}
  mpz_class num = 1, pw = 1;
  const mpz_class pz(static_cast<unsigned long>(p));
  for (std::uint32_t j = 1; j <= J; ++j) {
    pw *= pz;
    num *= pw - 1;
  }
  Rational out(num, pow_mpz(pz, std::uint64_t(J) * (J + 1) / 2));
  out.canonicalize();
  return out;
}

CertifiedInterval certify_c(std::uint64_t p, const Factorization& fact, std::uint32_t digits,
                            std::uint64_t bit_budget) {
  if (p < 2) throw DomainError("certify_c: p must be >= 2");
  if (fact.n != p - 1 || fact.recompose() != p - 1)
    throw DomainError("certify_c: factorization does not recompose to p-1");

  const Rational ratio = totient_ratio(fact);
  const std::uint32_t J = choose_depth(p, digits);
  const Rational pj = truncated_matrix_product(p, J, bit_budget);

  // tail: 0 <= P_J - P <= p^{-J}/(p-1)
  Rational tail(1, p - 1);
  tail /= Rational(pow_mpz(p, J));

  CertifiedInterval iv;
  iv.p = p;
  iv.depth_J = J;
  iv.digits_D = digits;
  iv.upper = ratio * pj;
  iv.lower = ratio * (pj - tail);
  return iv;
}

Rational c_fixed_dimension(std::uint64_t p, const Factorization& fact, std::uint32_t n,
                           std::uint64_t bit_budget) {
  if (n == 0) throw DomainError("c_fixed_dimension: n must be >= 1");
  if (p < 2) throw DomainError("c_fixed_dimension: p must be >= 2");
  if (fact.n != p - 1 || fact.recompose() != p - 1)
    throw DomainError("c_fixed_dimension: factorization does not recompose to p-1");
  return totient_ratio(fact) * truncated_matrix_product(p, n, bit_budget);
}

std::string render_decimal(const Rational& x, unsigned digits) {
  if (digits == 0) throw DomainError("render_decimal: digits must be >= 1");
  return decimal_string(x, digits);
}

RenderedInterval render_decimal(const CertifiedInterval& iv, unsigned digits) {
  if (digits == 0) throw DomainError("render_decimal: digits must be >= 1");
  RenderedInterval out;
  out.prefix = common_decimal_prefix(iv.lower, iv.upper, digits);
  out.lower = decimal_string(iv.lower, digits);
  out.upper = decimal_string(iv.upper, digits);
  return out;
}

}  // namespace primroot
