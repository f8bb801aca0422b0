// Python bindings for the main primroot operations.  Arbitrary-precision
// rationals cross the boundary as (numerator, denominator) decimal strings
// or as rendered decimals; bulk data as plain lists.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "primroot/analytic_products.hpp"
#include "primroot/certified_eval.hpp"
#include "primroot/errors.hpp"
#include "primroot/explicit_bounds.hpp"
#include "primroot/limit_law.hpp"
#include "primroot/prime_engine.hpp"

namespace py = pybind11;
using namespace primroot;

namespace {

Factorization fact_of(std::uint64_t n) { return factorize(n); }

py::dict interval_dict(const CertifiedInterval& iv, unsigned digits) {
  const RenderedInterval r = render_decimal(iv, digits);
  py::dict d;
  d["prefix"] = r.prefix;
  d["lower"] = decimal_string(iv.lower, digits + 2);
  d["upper"] = decimal_string(iv.upper, digits + 2);
  d["depth_J"] = iv.depth_J;
  d["digits_D"] = iv.digits_D;
  return d;
}

}  // namespace

PYBIND11_MODULE(_primroot, m) {
  m.doc() = "certified primitive-root determinant density toolkit";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<CapacityError>(m, "CapacityError", PyExc_RuntimeError);

  m.def("is_prime", &is_prime, py::arg("n"),
        "deterministic primality test for n < 2**64");

  m.def(
      "factorize",
      [](std::uint64_t n) {
        std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
        for (const auto& [p, e] : fact_of(n).factors) out.emplace_back(p, e);
        return out;
      },
      py::arg("n"), "prime factorization as (prime, exponent) pairs");

  m.def(
      "prime_count", [](std::uint64_t limit) { return sieve_primes(limit).count(); },
      py::arg("limit"), "pi(limit) via the segmented sieve");

  m.def(
      "primorial", [](std::uint32_t k) { return primorial(k).get_str(); }, py::arg("k"),
      "N_k as a decimal string");
  m.def("primorial_index", &primorial_index, py::arg("x"));
  m.def(
      "least_prime_in_progression",
      [](std::uint64_t modulus, std::uint64_t residue, std::uint64_t cap) {
        return least_prime_in_progression(modulus, residue, cap);
      },
      py::arg("modulus"), py::arg("residue"), py::arg("search_cap"));

  m.def(
      "totient_ratio",
      [](std::uint64_t n) {
        const Rational r = totient_ratio(fact_of(n));
        return std::make_pair(r.get_num().get_str(), r.get_den().get_str());
      },
      py::arg("n"), "phi(n)/n as (numerator, denominator) strings");

  m.def("choose_depth", &choose_depth, py::arg("p"), py::arg("digits"));

  m.def(
      "matrix_product",
      [](std::uint64_t p, std::uint32_t J) {
        return to_double(truncated_matrix_product(p, J));
      },
      py::arg("p"), py::arg("J"), "P_J(p) rounded to binary64");

  m.def(
      "certify_c",
      [](std::uint64_t p, unsigned digits) {
        return interval_dict(certify_c(p, fact_of(p - 1), digits), digits);
      },
      py::arg("p"), py::arg("digits") = 12,
      "certified bracket for c(p) with its decimal prefix");

  m.def(
      "c_fixed_dimension",
      [](std::uint64_t p, std::uint32_t n) {
        return to_double(c_fixed_dimension(p, fact_of(p - 1), n));
      },
      py::arg("p"), py::arg("n"));

  m.def("bound_B", &bound_B, py::arg("K"));
  m.def("coarse_lower_bound", &coarse_lower_bound, py::arg("p"));

  m.def(
      "overhead",
      [](std::uint64_t p, std::uint32_t digits) {
        const BoundReport rep = overhead(p, fact_of(p - 1), digits);
        py::dict d;
        d["p"] = rep.p;
        d["omega"] = rep.omega;
        d["overhead"] = rep.overhead;
        d["overhead_2dp"] =
            decimal_string(Rational(2) / (rep.c_interval.lower + rep.c_interval.upper), 2);
        d["bracket"] =
            std::make_pair(to_double(rep.overhead_lower), to_double(rep.overhead_upper));
        d["generic_bound"] = rep.generic_bound;
        d["coarse_bound"] = rep.coarse_bound;
        d["c"] = interval_dict(rep.c_interval, digits);
        return d;
      },
      py::arg("p"), py::arg("digits") = 12, "PRIM-LWE rejection-sampling overhead report");

  m.def(
      "scan_min_c",
      [](std::uint64_t x) {
        const MinScanResult r = scan_min_c(x);
        py::dict d;
        d["x_limit"] = r.x_limit;
        d["argmin_p"] = r.argmin_p;
        d["min_c"] = r.min_c;
        d["loglog_ratio"] = r.loglog_ratio;
        return d;
      },
      py::arg("x_limit"));

  m.def(
      "witness",
      [](std::uint32_t k, std::uint64_t cap) {
        const WitnessRecord r = sharp_constant_witness(k, cap);
        py::dict d;
        d["k"] = r.k;
        d["N_k"] = r.primorial_Nk;
        d["p_star"] = r.p_star;
        d["c_midpoint"] = r.c_midpoint;
        d["ratio"] = r.ratio;
        return d;
      },
      py::arg("k"), py::arg("search_cap"));

  m.def("jump_weight", &jump_weight, py::arg("odd_prime"));
  m.def(
      "exact_atoms",
      [](std::uint32_t N) {
        const TruncatedLaw law = exact_atoms(N);
        std::vector<double> values, masses;
        values.reserve(law.atoms.size());
        masses.reserve(law.atoms.size());
        for (const Atom& a : law.atoms) {
          values.push_back(a.value);
          masses.push_back(a.mass);
        }
        return std::make_pair(values, masses);
      },
      py::arg("N"), "(values, masses) of the 2^N-atom truncated law");
  m.def("sample_truncated", &sample_truncated, py::arg("N"), py::arg("count"), py::arg("seed"));
  m.def(
      "tail_mean",
      [](double y, std::uint64_t cutoff) {
        const TailMean tm = tail_mean(y, cutoff);
        return std::make_pair(tm.partial_sum, tm.remainder_bound);
      },
      py::arg("y"), py::arg("cutoff"));
  m.def(
      "wasserstein_bound", [](std::uint32_t N) { return wasserstein_bound(N); }, py::arg("N"));
  m.def(
      "q_product", [](double y) { return Q_product(y); }, py::arg("y"));
  m.def(
      "smooth_kernel_density",
      [](std::uint64_t mm, double y) { return smooth_kernel_density(mm, y); }, py::arg("m"),
      py::arg("y"));

  m.def(
      "moment",
      [](double k, std::uint64_t cutoff) {
        const EulerProductEval ev = moment(k, cutoff);
        return std::make_pair(ev.real(), ev.tail_estimate);
      },
      py::arg("k"), py::arg("prime_cutoff"), "(value, tail_estimate)");
  m.def(
      "mellin",
      [](std::complex<double> s, std::uint64_t cutoff) { return mellin(s, cutoff).value; },
      py::arg("s"), py::arg("prime_cutoff"));
  m.def(
      "charfun_sq",
      [](double tau, std::uint64_t cutoff) { return charfun_sq(tau, cutoff).real(); },
      py::arg("tau"), py::arg("prime_cutoff"));
  m.def(
      "endpoint_constants",
      [](std::uint64_t cutoff) {
        const EndpointConstants ec = endpoint_constants(cutoff);
        py::dict d;
        d["kappa"] = ec.kappa;
        d["singular_series"] = ec.singular_series;
        d["euler_gamma"] = ec.euler_gamma;
        d["prime_cutoff"] = ec.prime_cutoff;
        d["tail_estimate"] = ec.tail_estimate;
        return d;
      },
      py::arg("prime_cutoff"));

  m.attr("__version__") = "0.1.0";
}
