// Command-line front door for the log-complete-monotonicity toolkit:
// grid checks of the gamma-function families, tau(s,t) analysis,
// reference tables, asymptotic comparisons, and sequence scans.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>
#include <json.hpp>

#include "lcm/check.hpp"
#include "lcm/families.hpp"
#include "lcm/io.hpp"
#include "lcm/specfun.hpp"
#include "lcm/tau.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFail = 2;

struct OutputOpts {
  std::string format = "csv";
  std::string out_path;
};

void emit(const OutputOpts& opts, const std::string& text) {
  if (opts.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(opts.out_path);
  if (!f) throw std::runtime_error("cannot open output file: " + opts.out_path);
  f << text;
}

std::pair<double, double> parse_interval(const std::string& s) {
  const auto pos = s.find(':');
  if (pos == std::string::npos || pos == 0 || pos + 1 == s.size())
    throw std::invalid_argument("malformed interval, expected lo:hi");
  std::size_t used = 0;
  const double lo = std::stod(s.substr(0, pos), &used);
  if (used != pos) throw std::invalid_argument("malformed interval lower bound");
  const std::string hi_str = s.substr(pos + 1);
  const double hi = std::stod(hi_str, &used);
  if (used != hi_str.size()) throw std::invalid_argument("malformed interval upper bound");
  return {lo, hi};
}

struct CheckConfig {
  std::string family = "recip-gamma-root";
  std::string preset;
  double alpha = 0.0, a = 0.0, b = 0.0, c = 1.0;
  bool reciprocal = false;
  bool negative_branch = false;
  std::optional<double> shift;
  bool product_demo = false;
  std::string compose_kind;
  double h_a = 1.0, h_b = 0.0, h_alpha = 1.0;
  std::string interval = "-0.99:50";
  int orders = 8;
  int grid = 400;
  double tolerance = 1e-9;
  bool serial = false;
  OutputOpts out;
};

lcm::FamilyKind parse_family(const std::string& name) {
  if (name == "recip-gamma-root") return lcm::FamilyKind::RecipGammaRoot;
  if (name == "nu") return lcm::FamilyKind::NuAlpha;
  if (name == "x-ratio") return lcm::FamilyKind::XAlphaRatio;
  if (name == "q") return lcm::FamilyKind::QAB;
  throw std::invalid_argument("unknown family: " + name);
}

lcm::InnerKind parse_inner(const std::string& name) {
  if (name == "power") return lcm::InnerKind::PowerAffine;
  if (name == "log1p") return lcm::InnerKind::LogAffine;
  if (name == "one-minus-exp") return lcm::InnerKind::OneMinusExp;
  if (name == "atan-sqrt") return lcm::InnerKind::AtanSqrt;
  throw std::invalid_argument("unknown inner function: " + name);
}

void apply_preset(CheckConfig& cfg) {
  const std::string& p = cfg.preset;
  auto set = [&](const std::string& family, double alpha, bool reciprocal,
                 const std::string& interval, int orders, int grid) {
    cfg.family = family;
    cfg.alpha = alpha;
    cfg.reciprocal = reciprocal;
    cfg.interval = interval;
    cfg.orders = orders;
    cfg.grid = grid;
  };
  if (p == "thm1") {
    set("recip-gamma-root", 0, false, "-0.99:50", 8, 400);
  } else if (p == "thm2-pass") {
    set("nu", 1.0, false, "-0.99:50", 8, 400);
  } else if (p == "thm2-fail") {
    set("nu", 0.9, false, "1:10000", 2, 400);
  } else if (p == "thm3-pass") {
    set("x-ratio", 1.0, false, "0.001:50", 6, 400);
  } else if (p == "thm3-fail") {
    set("x-ratio", 0.1, true, "0.001:10", 2, 400);
  } else if (p == "thm4") {
    set("nu", lcm::tau0_estimate(100).alpha_threshold, true, "-0.99:50", 6, 400);
  } else if (p == "thm6-pass") {
    set("recip-gamma-root", 0, false, "-0.99:50", 6, 200);
    cfg.shift = 1.0;
  } else if (p == "thm6-fail") {
    set("recip-gamma-root", 0, false, "0.01:50", 6, 200);
    cfg.shift = -1.0;
  } else if (p == "thm7") {
    set("recip-gamma-root", 0, false, "-0.99:50", 6, 200);
    cfg.product_demo = true;
  } else if (p == "thm8") {
    set("recip-gamma-root", 0, false, "0.01:30", 6, 200);
    cfg.compose_kind = "one-minus-exp";
  } else if (p == "prop-q-pass") {
    set("q", 0, false, "1:100", 4, 200);
    cfg.a = 1.0;
    cfg.b = 0.0;
    cfg.c = 1.0;
  } else if (p == "prop-q-fail") {
    set("q", 0, false, "1:100", 4, 200);
    cfg.a = 0.0;
    cfg.b = 1.0;
    cfg.c = 1.0;
  } else {
    throw std::invalid_argument("unknown preset: " + p);
  }
}

int run_check(CheckConfig cfg) {
  if (!cfg.preset.empty()) apply_preset(cfg);

  lcm::FamilySpec spec;
  spec.kind = parse_family(cfg.family);
  spec.alpha = cfg.alpha;
  spec.a = cfg.a;
  spec.b = cfg.b;
  spec.c_power = cfg.c;
  spec.reciprocal = cfg.reciprocal;
  spec.negative_branch = cfg.negative_branch;

  lcm::ProviderPtr provider = lcm::make_provider(spec, 20);

  const auto [lo, hi] = parse_interval(cfg.interval);
  lcm::Interval iv{lo, hi};

  if (cfg.product_demo) {
    lcm::FamilySpec nu1;
    nu1.kind = lcm::FamilyKind::NuAlpha;
    nu1.alpha = 1.0;
    provider = lcm::power_product(
        {{provider, 2.0}, {lcm::make_provider(nu1, 20), 0.5}});
  }
  if (cfg.shift) provider = lcm::shift_ratio(provider, *cfg.shift);
  if (!cfg.compose_kind.empty()) {
    lcm::InnerFunction h;
    h.kind = parse_inner(cfg.compose_kind);
    h.a = cfg.h_a;
    h.b = cfg.h_b;
    h.alpha = cfg.h_alpha;
    provider = lcm::compose(provider, h, iv);
  }

  const auto mode = cfg.serial ? lcm::ExecMode::Serial : lcm::ExecMode::Parallel;
  const lcm::CheckReport report =
      lcm::check_lcm(*provider, iv, cfg.orders, cfg.grid, cfg.tolerance, mode);

  if (cfg.out.format == "json") {
    emit(cfg.out, json(report).dump(2) + "\n");
  } else {
    emit(cfg.out, lcm::report_to_csv(report));
  }
  return report.pass ? kExitOk : kExitFail;
}

struct TauConfig {
  std::optional<double> s;
  std::string scan;
  OutputOpts out;
};

int run_tau(const TauConfig& cfg) {
  std::vector<lcm::TauResult> rows;
  if (cfg.s) {
    rows.push_back(lcm::tau_max(*cfg.s));
  } else if (!cfg.scan.empty()) {
    const auto [lo, hi] = parse_interval(cfg.scan);
    const int s_lo = static_cast<int>(lo), s_hi = static_cast<int>(hi);
    if (s_lo < 1 || s_hi < s_lo) throw std::invalid_argument("bad scan range");
    rows.resize(static_cast<std::size_t>(s_hi - s_lo + 1));
#pragma omp parallel for schedule(dynamic)
    for (int s = s_lo; s <= s_hi; ++s)
      rows[static_cast<std::size_t>(s - s_lo)] = lcm::tau_max(s);
  } else {
    throw std::invalid_argument("tau: need --s or --scan");
  }

  if (cfg.out.format == "json") {
    emit(cfg.out, json(rows).dump(2) + "\n");
  } else {
    emit(cfg.out, lcm::tau_results_to_csv(rows));
  }
  return kExitOk;
}

struct TableConfig {
  std::string name;
  long kmax = 100000;
  OutputOpts out;
};

int run_table(const TableConfig& cfg) {
  using lcm::format_double;
  std::ostringstream csv;
  json j;

  if (cfg.name == "remark-tau") {
    csv << "s,t_star,tau_max\n";
    for (int s : {2, 3}) {
      const auto r = lcm::tau_max(s);
      csv << s << ',' << format_double(r.t_star) << ',' << format_double(r.tau_max)
          << '\n';
      j.push_back({{"s", s}, {"t_star", r.t_star}, {"tau_max", r.tau_max}});
    }
  } else if (cfg.name == "thresholds") {
    csv << "s,tau_max,alpha_threshold\n";
    for (int s : {2, 3}) {
      const auto r = lcm::tau_max(s);
      const double thr = 1.0 / (1.0 + r.tau_max);
      csv << s << ',' << format_double(r.tau_max) << ',' << format_double(thr) << '\n';
      j.push_back({{"s", s}, {"tau_max", r.tau_max}, {"alpha_threshold", thr}});
    }
  } else if (cfg.name == "nbx-limit") {
    // Probe of [ln Gamma(1+x) - x psi(1+x)] / x^2 at x = 10^-k. The
    // truncation error is linear in x, so the table carries a
    // Richardson-extrapolated column that converges to -pi^2/12.
    csv << "x,value,extrapolated\n";
    double prev = 0.0;
    for (int k = 2; k <= 5; ++k) {
      const double x = std::pow(10.0, -k);
      const double v = (lcm::ln_gamma(1.0 + x) - x * lcm::digamma(1.0 + x)) / (x * x);
      const double extrap = (k == 2) ? v : (10.0 * v - prev) / 9.0;
      csv << format_double(x) << ',' << format_double(v) << ','
          << format_double(extrap) << '\n';
      j.push_back({{"x", x}, {"value", v}, {"extrapolated", extrap}});
      prev = v;
    }
  } else if (cfg.name == "hirsch") {
    const double c = lcm::hirsch_constant(cfg.kmax);
    const double bound = 1.0 / (6.0 * static_cast<double>(cfg.kmax) *
                                static_cast<double>(cfg.kmax));
    csv << "k_max,value,tail_bound\n";
    csv << cfg.kmax << ',' << format_double(c) << ',' << format_double(bound) << '\n';
    j.push_back({{"k_max", cfg.kmax}, {"value", c}, {"tail_bound", bound}});
  } else {
    throw std::invalid_argument("unknown table: " + cfg.name);
  }

  if (cfg.out.format == "json") {
    emit(cfg.out, j.dump(2) + "\n");
  } else {
    emit(cfg.out, csv.str());
  }
  return kExitOk;
}

struct AsymConfig {
  std::string kind = "lngamma";
  int terms = 1;
  double x_min = 1.0;
  double x_max = 100.0;
  int points = 20;
  OutputOpts out;
};

int run_asym(const AsymConfig& cfg) {
  using lcm::format_double;
  lcm::AsymptoticSeries series;
  if (cfg.kind == "lngamma") {
    series.kind = lcm::SeriesKind::LnGamma;
  } else if (cfg.kind == "digamma") {
    series.kind = lcm::SeriesKind::Digamma;
  } else {
    throw std::invalid_argument("unknown series kind: " + cfg.kind);
  }
  series.terms = cfg.terms;
  if (cfg.points < 2 || cfg.x_min < 1.0 || cfg.x_max <= cfg.x_min)
    throw std::invalid_argument("asym: bad probe range");

  std::ostringstream csv;
  json j;
  csv << "x,exact,expansion,abs_error\n";
  const double step = std::log(cfg.x_max / cfg.x_min) / (cfg.points - 1);
  for (int i = 0; i < cfg.points; ++i) {
    const double x = cfg.x_min * std::exp(i * step);
    const double exact = (series.kind == lcm::SeriesKind::LnGamma)
                             ? lcm::ln_gamma(x)
                             : lcm::digamma(x);
    const double approx = lcm::asym_eval(series, x);
    const double err = std::fabs(approx - exact);
    csv << format_double(x) << ',' << format_double(exact) << ','
        << format_double(approx) << ',' << format_double(err) << '\n';
    j.push_back({{"x", x}, {"exact", exact}, {"expansion", approx}, {"abs_error", err}});
  }
  if (cfg.out.format == "json") {
    emit(cfg.out, j.dump(2) + "\n");
  } else {
    emit(cfg.out, csv.str());
  }
  return kExitOk;
}

struct SeqConfig {
  int m = 1;
  int n = 0;
  int kmax = 300;
  OutputOpts out;
};

int run_seq(const SeqConfig& cfg) {
  using lcm::format_double;
  if (cfg.kmax < 2) throw std::invalid_argument("seq: kmax must be >= 2");
  std::ostringstream csv;
  json rows;
  csv << "k,value,delta\n";
  bool nondecreasing = true;
  double prev = 0.0;
  for (int k = 1; k <= cfg.kmax; ++k) {
    const double v = lcm::factorial_root_ratio(k, cfg.m, cfg.n);
    const double delta = (k == 1) ? 0.0 : v - prev;
    if (k > 1 && delta < -1e-12) nondecreasing = false;
    csv << k << ',' << format_double(v) << ',' << format_double(delta) << '\n';
    rows.push_back({{"k", k}, {"value", v}, {"delta", delta}});
    prev = v;
  }
  csv << "# nondecreasing=" << (nondecreasing ? "true" : "false") << '\n';
  if (cfg.out.format == "json") {
    json j{{"rows", rows}, {"nondecreasing", nondecreasing}};
    emit(cfg.out, j.dump(2) + "\n");
  } else {
    emit(cfg.out, csv.str());
  }
  return kExitOk;
}

void add_output_opts(CLI::App* cmd, OutputOpts& out) {
  cmd->add_option("--format", out.format, "Output format (csv|json)")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", out.out_path, "Write output to this path");
}

}  // namespace

int main(int argc, char** argv) {
#ifdef _OPENMP
  if (const char* cap = std::getenv("LCM_MAX_THREADS")) {
    const int n = std::atoi(cap);
    if (n > 0) omp_set_num_threads(n);
  }
#endif

  CLI::App app{"Numeric verification of logarithmically completely monotonic "
               "gamma-function families"};
  app.require_subcommand(1);

  CheckConfig check_cfg;
  auto* check = app.add_subcommand("check", "Run a grid LCM check");
  check->add_option("--family", check_cfg.family,
                    "Family (recip-gamma-root|nu|x-ratio|q)");
  check->add_option("--preset", check_cfg.preset, "Named theorem preset");
  check->add_option("--alpha", check_cfg.alpha, "Family exponent alpha");
  check->add_option("--a", check_cfg.a, "Q family offset a");
  check->add_option("--b", check_cfg.b, "Q family offset b");
  check->add_option("--c", check_cfg.c, "Q family power c");
  check->add_flag("--reciprocal", check_cfg.reciprocal, "Check 1/f instead of f");
  check->add_flag("--negative-branch", check_cfg.negative_branch,
                  "x-ratio on (-1,0) instead of (0,inf)");
  check->add_option("--shift", check_cfg.shift, "Wrap in f(x)/f(x+shift)");
  check->add_option("--compose", check_cfg.compose_kind,
                    "Compose with inner function (power|log1p|one-minus-exp|atan-sqrt)");
  check->add_option("--h-a", check_cfg.h_a, "Inner function parameter a");
  check->add_option("--h-b", check_cfg.h_b, "Inner function parameter b");
  check->add_option("--h-alpha", check_cfg.h_alpha, "Inner function exponent");
  check->add_option("--interval", check_cfg.interval, "Check interval lo:hi");
  check->add_option("--orders", check_cfg.orders, "Highest derivative order");
  check->add_option("--grid", check_cfg.grid, "Grid size");
  check->add_option("--tolerance", check_cfg.tolerance, "Base tolerance");
  check->add_flag("--serial", check_cfg.serial, "Use the serial reference kernel");
  add_output_opts(check, check_cfg.out);

  TauConfig tau_cfg;
  auto* tau = app.add_subcommand("tau", "Maximize tau(s,.)");
  tau->add_option("--s", tau_cfg.s, "Single s value");
  tau->add_option("--scan", tau_cfg.scan, "Integer scan range lo:hi");
  add_output_opts(tau, tau_cfg.out);

  TableConfig table_cfg;
  auto* table = app.add_subcommand("table", "Reference tables");
  table->add_option("--name", table_cfg.name,
                    "Table name (remark-tau|thresholds|nbx-limit|hirsch)")
      ->required();
  table->add_option("--kmax", table_cfg.kmax, "Summation cutoff for hirsch");
  add_output_opts(table, table_cfg.out);

  AsymConfig asym_cfg;
  auto* asym = app.add_subcommand("asym", "Compare exact values with expansions");
  asym->add_option("--kind", asym_cfg.kind, "Series kind (lngamma|digamma)");
  asym->add_option("--terms", asym_cfg.terms, "Correction terms retained");
  asym->add_option("--x-min", asym_cfg.x_min, "Probe range start (>= 1)");
  asym->add_option("--x-max", asym_cfg.x_max, "Probe range end");
  asym->add_option("--points", asym_cfg.points, "Number of probe points");
  add_output_opts(asym, asym_cfg.out);

  SeqConfig seq_cfg;
  auto* seq = app.add_subcommand("seq", "Factorial-root ratio scan");
  seq->add_option("--m", seq_cfg.m, "Sequence parameter m");
  seq->add_option("--n", seq_cfg.n, "Sequence parameter n (0 = two-factor)");
  seq->add_option("--kmax", seq_cfg.kmax, "Scan length");
  add_output_opts(seq, seq_cfg.out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return run_check(check_cfg);
    if (tau->parsed()) return run_tau(tau_cfg);
    if (table->parsed()) return run_table(table_cfg);
    if (asym->parsed()) return run_asym(asym_cfg);
    if (seq->parsed()) return run_seq(seq_cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
