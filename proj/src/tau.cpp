#include "lcm/tau.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "lcm/specfun.hpp"

namespace lcm {

namespace {

constexpr int kPreScanPoints = 1000;
constexpr double kGoldenTol = 1e-10;
constexpr double kInvPhi = 0.61803398874989484820;

void require_positive(double v, const char* name) {
  if (!std::isfinite(v) || v <= 0.0)
    throw std::domain_error(std::string("tau: ") + name + " must be finite and > 0");
}

}  // namespace

double tau(double s, double t) {
  require_positive(s, "s");
  require_positive(t, "t");
  // (t/(t+1))^(s+1) = exp((s+1) log1p(-1/(t+1)))
  const double pw = std::exp((s + 1.0) * std::log1p(-1.0 / (t + 1.0)));
  return (t - (t + s + 1.0) * pw) / s;
}

TauResult tau_max(double s) {
  require_positive(s, "s");
  if (s > 1e4) throw std::domain_error("tau_max: s must be <= 1e4");

  long evals = 0;
  auto f = [&](double t) {
    ++evals;
    return tau(s, t);
  };

  // Log-spaced pre-scan; the maximizer grows roughly linearly in s.
  const double t_lo = 1e-3;
  const double t_hi = 50.0 * s + 50.0;
  const double step = std::log(t_hi / t_lo) / (kPreScanPoints - 1);
  std::vector<double> ts(kPreScanPoints), vs(kPreScanPoints);
  for (int i = 0; i < kPreScanPoints; ++i) {
    ts[i] = t_lo * std::exp(i * step);
    vs[i] = f(ts[i]);
  }

  int best = 0;
  for (int i = 1; i < kPreScanPoints; ++i)
    if (vs[i] > vs[best]) best = i;
  if (best == 0 || best == kPreScanPoints - 1)
    throw std::runtime_error("tau_max: bracket expansion failed (maximum at scan edge)");

  // Unimodality pre-check: any separated second local maximum of
  // comparable height aborts the solver.
  for (int i = 1; i + 1 < kPreScanPoints; ++i) {
    if (i == best) continue;
    const double prominence =
        vs[i] - std::max(vs[i - 1], vs[i + 1]);
    if (prominence > 1e-12 * std::max(1.0, std::fabs(vs[best])) &&
        std::abs(i - best) > 2)
      throw std::runtime_error("tau_max: pre-scan shows two separated local maxima");
  }

  double a = ts[best - 1], b = ts[best + 1];
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > kGoldenTol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }

  TauResult r;
  r.s = s;
  r.t_star = 0.5 * (a + b);
  r.tau_max = tau(s, r.t_star);
  r.bracket_lo = ts[best - 1];
  r.bracket_hi = ts[best + 1];
  r.evaluations = evals;
  return r;
}

RayBound tau_ray_bound(double mu, double t) {
  require_positive(mu, "mu");
  require_positive(t, "t");
  return {tau(mu * t, t), -std::expm1(-mu) / mu};
}

Tau0Result tau0_estimate(int s_max) {
  if (s_max < 3) throw std::domain_error("tau0_estimate: s_max must be >= 3");
  std::vector<double> maxima(static_cast<std::size_t>(s_max));
#pragma omp parallel for schedule(dynamic)
  for (int s = 1; s <= s_max; ++s) maxima[s - 1] = tau_max(s).tau_max;

  Tau0Result r;
  r.tau0 = maxima[0];
  r.s_at = 1;
  for (int s = 2; s <= s_max; ++s)
    if (maxima[s - 1] > r.tau0) {
      r.tau0 = maxima[s - 1];
      r.s_at = s;
    }
  r.alpha_threshold = 1.0 / (1.0 + r.tau0);
  r.tail_increasing = (r.s_at == s_max) && maxima[s_max - 1] > maxima[s_max - 2];
  return r;
}

double hirsch_constant(long k_max) {
  if (k_max < 10) throw std::domain_error("hirsch_constant: k_max must be >= 10");
  // Smallest terms first.
  double s = 0.0;
  for (long k = k_max; k >= 1; --k) {
    const double ik = 1.0 / static_cast<double>(k);
    s += ik - std::atan(ik);
  }
  // Tail of sum (1/(3k^3) - 1/(5k^5) + 1/(7k^7)) for k > k_max, each
  // power sum by Euler-Maclaurin at K = k_max.
  const double K = static_cast<double>(k_max);
  auto power_tail = [K](double p) {
    return 1.0 / ((p - 1.0) * std::pow(K, p - 1.0)) - 0.5 / std::pow(K, p) +
           p / (12.0 * std::pow(K, p + 1.0));
  };
  s += power_tail(3.0) / 3.0 - power_tail(5.0) / 5.0 + power_tail(7.0) / 7.0;
  return -kEulerGamma + s;
}

}  // namespace lcm
