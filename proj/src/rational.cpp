#include "primroot/rational.hpp"

#include <algorithm>

#include "primroot/errors.hpp"

namespace primroot {

mpz_class pow_mpz(const mpz_class& base, std::uint64_t exp) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
  return out;
}

namespace {

// digits of |x| * 10^digits under the given rounding, as a plain digit string
std::string scaled_digits(const Rational& x, unsigned digits, bool round_half_even) {
  mpz_class num = abs(x.get_num());
  const mpz_class& den = x.get_den();
  num *= pow_mpz(10, digits);
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (round_half_even) {
    const int cmp = mpz_cmp(mpz_class(2 * r).get_mpz_t(), den.get_mpz_t());
    if (cmp > 0 || (cmp == 0 && mpz_odd_p(q.get_mpz_t()))) ++q;
  }
  return q.get_str();
}

std::string assemble(const std::string& sign, std::string digits_str, unsigned digits) {
  if (digits_str.size() <= digits) {
    digits_str.insert(0, digits + 1 - digits_str.size(), '0');
  }
  const std::size_t point = digits_str.size() - digits;
  std::string out = sign + digits_str.substr(0, point);
  if (digits > 0) out += "." + digits_str.substr(point);
  return out;
}

}  // namespace

std::string decimal_string(const Rational& x, unsigned digits) {
  const std::string sign = sgn(x) < 0 ? "-" : "";
  return assemble(sign, scaled_digits(x, digits, true), digits);
}

std::string truncated_decimal_string(const Rational& x, unsigned digits) {
  const std::string sign = sgn(x) < 0 ? "-" : "";
  return assemble(sign, scaled_digits(x, digits, false), digits);
}

std::string common_decimal_prefix(const Rational& lo, const Rational& hi, unsigned digits) {
  if (lo > hi) throw DomainError("common_decimal_prefix: lo > hi");
  const std::string a = truncated_decimal_string(lo, digits);
  const std::string b = truncated_decimal_string(hi, digits);
  // differing integer-part width means no shared digits at all
  if (a.size() != b.size()) return std::string();
  std::size_t n = 0;
  while (n < a.size() && a[n] == b[n]) ++n;
  std::string prefix = a.substr(0, n);
  if (!prefix.empty() && prefix.back() == '.') prefix.pop_back();
  return prefix;
}

}  // namespace primroot
