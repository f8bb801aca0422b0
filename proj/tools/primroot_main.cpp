// primroot: certified evaluation and distributional exploration of the
// primitive-root determinant density c(p) over prime fields.
//
// Subcommands: eval, table, figure, audit, scan, witness.
// Exit codes: 0 success, 2 input error, 3 capacity error.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "primroot/analytic_products.hpp"
#include "primroot/certified_eval.hpp"
#include "primroot/csv.hpp"
#include "primroot/errors.hpp"
#include "primroot/explicit_bounds.hpp"
#include "primroot/limit_law.hpp"
#include "primroot/prime_cache.hpp"
#include "primroot/prime_engine.hpp"

using json = nlohmann::ordered_json;
using namespace primroot;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitCapacity = 3;

std::uint64_t to_count(double v, const std::string& what) {
  if (!(v >= 0) || v > 1.8e19 || v != std::floor(v))
    throw DomainError(what + " must be a nonnegative integer");
  return static_cast<std::uint64_t>(v);
}

// sink that writes to a file when --output is given, stdout otherwise
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw DomainError("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::string two_decimals(const Rational& x) { return decimal_string(x, 2); }

std::string sig6(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// "2^8,13" -> factorization of the recomposed integer
Factorization parse_hint(std::uint64_t n, const std::string& hint) {
  Factorization f;
  f.n = n;
  std::stringstream ss(hint);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw DomainError("empty factor in hint");
    const auto caret = item.find('^');
    std::uint64_t prime = 0;
    std::uint32_t exp = 1;
    try {
      prime = std::stoull(item.substr(0, caret));
      if (caret != std::string::npos)
        exp = static_cast<std::uint32_t>(std::stoul(item.substr(caret + 1)));
    } catch (const std::exception&) {
      throw DomainError("cannot parse hint item: " + item);
    }
    f.factors.push_back({prime, exp});
  }
  if (!f.verified())
    throw DomainError("hint rejected: does not recompose to " + std::to_string(n));
  return f;
}

json audit_record(std::uint64_t p, std::uint32_t digits,
                  const std::optional<std::string>& label) {
  const Factorization fact = factorize(p - 1);
  const BoundReport rep = overhead(p, fact, digits);
  const RenderedInterval r = render_decimal(rep.c_interval, digits);
  json rec;
  rec["p"] = p;
  if (label) rec["context"] = *label;
  json fac = json::array();
  for (const auto& [prime, exponent] : fact.factors) fac.push_back({prime, exponent});
  rec["factorization_of_p_minus_1"] = fac;
  rec["omega"] = rep.omega;
  rec["c"] = {{"prefix", r.prefix},
              {"lower", decimal_string(rep.c_interval.lower, digits + 2)},
              {"upper", decimal_string(rep.c_interval.upper, digits + 2)},
              {"depth_J", rep.c_interval.depth_J},
              {"digits_D", digits}};
  rec["overhead"] = two_decimals(Rational(2) / (rep.c_interval.lower + rep.c_interval.upper));
  rec["overhead_bracket"] = {to_double(rep.overhead_lower), to_double(rep.overhead_upper)};
  rec["generic_bound"] = rep.generic_bound;
  if (rep.coarse_bound) {
    rec["coarse_bound"] = *rep.coarse_bound;
  } else {
    rec["coarse_bound"] = nullptr;
  }
  return rec;
}

int cmd_eval(std::uint64_t p, std::uint32_t digits, const std::string& hint,
             const std::string& out_path) {
  if (!is_prime(p)) {
    std::cerr << "error: " << p << " is not prime\n";
    return kExitInput;
  }
  if (!hint.empty()) parse_hint(p - 1, hint);  // hints are verified, never trusted
  Output out(out_path);
  out.stream() << audit_record(p, digits, std::nullopt).dump(2) << '\n';
  return kExitOk;
}

int cmd_table(const std::string& which, const std::string& out_path) {
  Output out(out_path);
  std::ostream& os = out.stream();
  if (which == "bk") {
    os << "K,B_K\n";
    for (std::uint32_t k : {1, 5, 10, 15, 20}) {
      os << k << ',' << sig6(bound_B(k)) << '\n';
    }
    return kExitOk;
  }
  if (which == "nist") {
    os << "standard,p,omega,generic_bound,sharper_bound\n";
    const struct {
      const char* name;
      std::uint64_t p;
    } rows[] = {{"ML-KEM (FIPS 203)", 3329}, {"ML-DSA (FIPS 204)", 8380417}};
    for (const auto& row : rows) {
      const Factorization fact = factorize(row.p - 1);
      const Rational sharper =
          totient_ratio(fact) * (1 - Rational(1, static_cast<unsigned long>(row.p - 1)));
      os << row.name << ',' << row.p << ',' << fact.omega() << ','
         << sig6(bound_B(static_cast<std::uint32_t>(fact.omega()))) << ','
         << sig6(to_double(sharper)) << '\n';
    }
    return kExitOk;
  }
  if (which == "survey") {
    os << "context,p,omega,overhead\n";
    const struct {
      const char* name;
      std::uint64_t p;
    } rows[] = {{"ML-KEM (FIPS 203)", 3329},
                {"ML-DSA (FIPS 204)", 8380417},
                {"NewHope / FALCON", 12289},
                {"BFV/BGV FHE (small)", 786433},
                {"BFV/BGV FHE (medium)", 2013265921},
                {"NTTRU / BLISS", 7681},
                {"64-bit NTT prime", 18446744069414584321ull},
                {"Fermat prime (2^16+1)", 65537}};
    for (const auto& row : rows) {
      const BoundReport rep = overhead(row.p, factorize(row.p - 1), 12);
      os << row.name << ',' << row.p << ',' << rep.omega << ','
         << two_decimals(Rational(2) / (rep.c_interval.lower + rep.c_interval.upper)) << '\n';
    }
    return kExitOk;
  }
  throw DomainError("unknown table: " + which + " (expected bk, nist or survey)");
}

int cmd_figure_cdf(std::uint64_t xlimit, std::uint32_t N, std::uint64_t samples,
                   std::uint64_t seed, std::uint32_t digits, const std::string& out_path,
                   const std::string& samples_path) {
  const std::uint64_t table_limit = std::max<std::uint64_t>(xlimit, nth_odd_prime(N) + 1);
  const PrimeTable table = load_or_sieve(table_limit);
  const EmpiricalDistribution emp = empirical_cp(xlimit, digits, table);
  const std::vector<double> raw = sample_truncated(N, samples, seed);
  if (!samples_path.empty()) {
    Output dump(samples_path);
    dump.stream() << "value\n";
    for (double v : raw) dump.stream() << fmt_double(v) << '\n';
  }
  std::vector<double> sorted = raw;
  std::sort(sorted.begin(), sorted.end());

  Output out(out_path);
  std::ostream& os = out.stream();
  os << "# primroot figure cdf xlimit=" << xlimit << " N=" << N << " samples=" << samples
     << " seed=" << seed << " digits=" << digits << '\n';
  os << "alpha,G_empirical,G_theoretical\n";
  const int grid = 10'000;
  for (int i = 0; i < grid; ++i) {
    const double alpha = 0.5 * double(i) / double(grid - 1);
    const auto fe = std::upper_bound(emp.values.begin(), emp.values.end(), alpha) -
                    emp.values.begin();
    const auto ft = std::upper_bound(sorted.begin(), sorted.end(), alpha) - sorted.begin();
    os << fmt_double(alpha) << ',' << fmt_double(double(fe) / double(emp.values.size()))
       << ',' << fmt_double(double(ft) / double(sorted.size())) << '\n';
  }
  return kExitOk;
}

int cmd_figure_hist(std::uint64_t xlimit, std::uint32_t bins, std::uint32_t digits,
                    const std::string& out_path, std::string anchors_path,
                    std::uint64_t anchors_max) {
  const PrimeTable table = load_or_sieve(xlimit);
  const EmpiricalDistribution emp = empirical_cp(xlimit, digits, table);
  Output out(out_path);
  std::ostream& os = out.stream();
  os << "# primroot figure hist xlimit=" << xlimit << " bins=" << bins << " digits=" << digits
     << '\n';
  os << "bin_lo,bin_hi,mass\n";
  for (const HistogramBin& b : histogram(emp, bins)) {
    os << fmt_double(b.lo) << ',' << fmt_double(b.hi) << ',' << fmt_double(b.mass) << '\n';
  }
  // the anchor list accompanies the histogram by default in file mode
  if (anchors_path.empty() && !out_path.empty()) {
    const auto dot = out_path.rfind('.');
    anchors_path = dot == std::string::npos
                       ? out_path + "_anchors"
                       : out_path.substr(0, dot) + "_anchors" + out_path.substr(dot);
  }
  if (!anchors_path.empty()) {
    Output anch(anchors_path);
    anch.stream() << "m,phi_over_m,value\n";
    for (const AnchorValue& a : anchor_values(anchors_max)) {
      anch.stream() << a.m << ',' << a.ratio.get_str() << ',' << fmt_double(to_double(a.ratio))
                    << '\n';
    }
  }
  return kExitOk;
}

int cmd_figure_charfun(std::uint64_t cutoff, double taumax, std::uint32_t points,
                       const std::string& out_path) {
  if (points < 1) throw DomainError("points must be >= 1");
  if (!(taumax > 1.0)) throw DomainError("taumax must exceed 1");
  const PrimeTable table = load_or_sieve(cutoff);
  const CharfunSweeper sweeper(table, cutoff);
  Output out(out_path);
  std::ostream& os = out.stream();
  os << "# primroot figure charfun cutoff=" << cutoff << " taumax=" << fmt_double(taumax)
     << " points=" << points << '\n';
  os << "tau,charfun_sq\n";
  std::vector<double> taus(points), vals(points);
  const double step = points == 1 ? 0.0 : std::log(taumax) / double(points - 1);
  for (std::uint32_t i = 0; i < points; ++i) taus[i] = std::exp(step * double(i));
  if (points > 1) taus[points - 1] = taumax;
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < static_cast<long long>(points); ++i) {
    vals[static_cast<std::size_t>(i)] = sweeper.eval(taus[static_cast<std::size_t>(i)]);
  }
  for (std::uint32_t i = 0; i < points; ++i) {
    os << fmt_double(taus[i]) << ',' << fmt_double(vals[i]) << '\n';
  }
  return kExitOk;
}

// moduli file: newline-delimited decimal integers, or a JSON list whose
// entries are integers or {"p": ..., "label": ...} objects
std::vector<std::pair<std::uint64_t, std::optional<std::string>>> parse_moduli(
    const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open moduli file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::vector<std::pair<std::uint64_t, std::optional<std::string>>> out;

  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::exception& e) {
      throw DomainError(std::string("JSON parse error: ") + e.what());
    }
    for (const auto& item : doc) {
      if (item.is_number_unsigned()) {
        out.emplace_back(item.get<std::uint64_t>(), std::nullopt);
      } else if (item.is_object() && item.contains("p")) {
        std::optional<std::string> label;
        if (item.contains("label")) label = item["label"].get<std::string>();
        out.emplace_back(item["p"].get<std::uint64_t>(), label);
      } else {
        throw DomainError("JSON moduli entries must be integers or {p, label} objects");
      }
    }
    return out;
  }

  std::istringstream lines(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.pop_back();
    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    const std::string tok = line.substr(start);
    std::uint64_t v = 0;
    const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (res.ec != std::errc() || res.ptr != tok.data() + tok.size()) {
      throw DomainError("line " + std::to_string(lineno) + ": not a decimal integer: " + tok);
    }
    out.emplace_back(v, std::nullopt);
  }
  return out;
}

int cmd_audit(const std::string& path, std::uint32_t digits, const std::string& out_path) {
  const auto moduli = parse_moduli(path);
  if (moduli.empty()) throw DomainError("moduli file is empty");
  json doc;
  doc["meta"] = {{"digits", digits}, {"input", path}};
  json records = json::array();
  std::vector<std::uint64_t> composite;
  double max_overhead = 0.0;
  std::uint64_t argmax = 0;
  for (const auto& [p, label] : moduli) {
    if (!is_prime(p)) {
      composite.push_back(p);
      json rec;
      rec["p"] = p;
      if (label) rec["context"] = *label;
      rec["error"] = "not prime";
      records.push_back(rec);
      continue;
    }
    const json rec = audit_record(p, digits, label);
    const double mid = rec["overhead_bracket"][0].get<double>();
    if (mid > max_overhead) {
      max_overhead = mid;
      argmax = p;
    }
    records.push_back(rec);
  }
  doc["records"] = records;
  doc["summary"] = {{"count", moduli.size()},
                    {"composite_entries", composite},
                    {"max_overhead", max_overhead},
                    {"max_overhead_p", argmax}};
  Output out(out_path);
  out.stream() << doc.dump(2) << '\n';
  if (!composite.empty()) {
    std::cerr << "error: " << composite.size() << " composite entr"
              << (composite.size() == 1 ? "y" : "ies") << " in " << path << '\n';
    return kExitInput;
  }
  return kExitOk;
}

int cmd_scan(std::uint64_t x_limit, bool decades, std::uint32_t digits,
             const std::string& out_path) {
  if (x_limit < 3) throw DomainError("x_limit must be >= 3");
  if (x_limit > kScanLimitCap) throw CapacityError("x_limit above supported 1e7");
  const PrimeTable table = load_or_sieve(x_limit);
  Output out(out_path);
  std::ostream& os = out.stream();
  os << "x_limit,argmin_p,min_c,loglog_ratio\n";
  std::vector<std::uint64_t> limits;
  if (decades) {
    for (std::uint64_t x = 1000; x < x_limit; x *= 10) limits.push_back(x);
  }
  limits.push_back(x_limit);
  for (std::uint64_t x : limits) {
    const MinScanResult r = scan_min_c(x, table, digits);
    os << r.x_limit << ',' << r.argmin_p << ',' << fmt_double(r.min_c) << ','
       << fmt_double(r.loglog_ratio) << '\n';
  }
  return kExitOk;
}

int cmd_witness(std::uint32_t k, std::uint64_t cap, std::uint32_t digits,
                const std::string& out_path) {
  const WitnessRecord rec = sharp_constant_witness(k, cap, digits);
  Output out(out_path);
  std::ostream& os = out.stream();
  os << "k,N_k,found,p_star,c_mid,ratio\n";
  os << rec.k << ',' << rec.primorial_Nk << ',' << (rec.p_star ? 1 : 0) << ',';
  if (rec.p_star) {
    os << *rec.p_star << ',' << fmt_double(rec.c_midpoint) << ',' << fmt_double(rec.ratio)
       << '\n';
  } else {
    os << ",,\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certified primitive-root determinant density toolkit"};
  app.require_subcommand(1);

  std::string eval_p_str;
  std::uint32_t eval_digits = 12;
  std::string eval_hint, eval_out;
  auto* eval = app.add_subcommand("eval", "certified c(p) and overhead for one prime");
  eval->add_option("p", eval_p_str, "prime modulus")->required();
  eval->add_option("--digits", eval_digits, "correct decimal digits D");
  eval->add_option("--hint", eval_hint, "factorization hint for p-1, e.g. 2^8,13");
  eval->add_option("--output", eval_out, "write JSON here instead of stdout");

  std::string table_which, table_out;
  auto* table = app.add_subcommand("table", "reproduce a table (bk, nist, survey)");
  table->add_option("which", table_which, "bk | nist | survey")->required();
  table->add_option("--output", table_out, "write CSV here instead of stdout");

  std::string fig_which, fig_out, fig_samples_out, fig_anchors_out;
  double fig_xlimit = 1e6, fig_samples = 1e7, fig_taumax = 1e6, fig_cutoff = 1e7;
  std::uint64_t fig_seed = 1;
  std::uint32_t fig_N = 10'000, fig_bins = 100, fig_points = 1000, fig_digits = 9;
  std::uint64_t fig_anchors_max = 210;
  auto* figure = app.add_subcommand("figure", "emit figure data (cdf, hist, charfun)");
  figure->add_option("which", fig_which, "cdf | hist | charfun")->required();
  figure->add_option("--xlimit", fig_xlimit, "largest prime for empirical c(p)");
  figure->add_option("--N", fig_N, "number of odd primes kept in the truncated law");
  figure->add_option("--samples", fig_samples, "Monte Carlo sample count");
  figure->add_option("--seed", fig_seed, "sampler seed (echoed in metadata)");
  figure->add_option("--bins", fig_bins, "histogram bin count");
  figure->add_option("--cutoff", fig_cutoff, "prime cutoff for the Euler product");
  figure->add_option("--taumax", fig_taumax, "top of the tau sweep (from 1)");
  figure->add_option("--points", fig_points, "sweep grid size");
  figure->add_option("--digits", fig_digits, "digits for empirical c(p)");
  figure->add_option("--output", fig_out, "write CSV here instead of stdout");
  figure->add_option("--samples-output", fig_samples_out, "also dump raw samples (cdf only)");
  figure->add_option("--anchors-output", fig_anchors_out, "also dump anchor ratios (hist only)");
  figure->add_option("--anchors-max", fig_anchors_max, "largest anchor kernel m");

  std::string audit_file, audit_out;
  std::uint32_t audit_digits = 12;
  auto* audit = app.add_subcommand("audit", "PRIM-LWE overhead audit of a moduli file");
  audit->add_option("moduli_file", audit_file, "newline-delimited integers or JSON list")
      ->required();
  audit->add_option("--digits", audit_digits, "correct decimal digits D");
  audit->add_option("--output", audit_out, "write JSON here instead of stdout");

  double scan_x = 1e6;
  bool scan_decades = false;
  std::uint32_t scan_digits = 8;
  std::string scan_out;
  auto* scan = app.add_subcommand("scan", "minimum of c(p) over odd primes up to x");
  scan->add_option("x_limit", scan_x, "scan bound")->required();
  scan->add_flag("--decades", scan_decades, "emit one row per decade from 1e3");
  scan->add_option("--digits", scan_digits, "certified digits per evaluation");
  scan->add_option("--output", scan_out, "write CSV here instead of stdout");

  std::uint32_t wit_k = 2;
  double wit_cap = 1e6;
  std::uint32_t wit_digits = 12;
  std::string wit_out;
  auto* witness = app.add_subcommand("witness", "least prime 1 mod N_k and its ratio");
  witness->add_option("k", wit_k, "primorial index")->required();
  witness->add_option("cap", wit_cap, "search cap")->required();
  witness->add_option("--digits", wit_digits, "certified digits");
  witness->add_option("--output", wit_out, "write CSV here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*eval) {
      std::uint64_t p = 0;
      const auto res =
          std::from_chars(eval_p_str.data(), eval_p_str.data() + eval_p_str.size(), p);
      if (res.ec != std::errc() || res.ptr != eval_p_str.data() + eval_p_str.size())
        throw DomainError("cannot parse prime: " + eval_p_str);
      return cmd_eval(p, eval_digits, eval_hint, eval_out);
    }
    if (*table) return cmd_table(table_which, table_out);
    if (*figure) {
      if (fig_which == "cdf") {
        return cmd_figure_cdf(to_count(fig_xlimit, "xlimit"), fig_N,
                              to_count(fig_samples, "samples"), fig_seed, fig_digits, fig_out,
                              fig_samples_out);
      }
      if (fig_which == "hist") {
        return cmd_figure_hist(to_count(fig_xlimit, "xlimit"), fig_bins, fig_digits, fig_out,
                               fig_anchors_out, fig_anchors_max);
      }
      if (fig_which == "charfun") {
        return cmd_figure_charfun(to_count(fig_cutoff, "cutoff"), fig_taumax, fig_points,
                                  fig_out);
      }
      throw DomainError("unknown figure: " + fig_which + " (expected cdf, hist or charfun)");
    }
    if (*audit) return cmd_audit(audit_file, audit_digits, audit_out);
    if (*scan) return cmd_scan(to_count(scan_x, "x_limit"), scan_decades, scan_digits, scan_out);
    if (*witness) return cmd_witness(wit_k, to_count(wit_cap, "cap"), wit_digits, wit_out);
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitOk;
}
