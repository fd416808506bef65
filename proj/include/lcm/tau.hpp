#pragma once

// The two-variable bound function tau(s,t), its maximization over t,
// the ray upper bound, the tau_0 estimate over integer s, and the
// Hirsch-type constant from the referee representation.

namespace lcm {

struct TauResult {
  double s = 0.0;
  double t_star = 0.0;
  double tau_max = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  long evaluations = 0;
};

struct Tau0Result {
  double tau0 = 0.0;
  int s_at = 0;
  double alpha_threshold = 0.0;
  // True when the per-s maxima were still increasing at s_max, i.e. the
  // reported tau0 sits at the truncation boundary rather than interior.
  bool tail_increasing = false;
};

// tau(s,t) = (1/s)[t - (t+s+1)(t/(t+1))^(s+1)], s, t > 0. The power is
// taken through log space for stability at large s.
double tau(double s, double t);

// Maximizer of tau(s,.) over (0, inf): 1e3-point log-spaced pre-scan
// (which also checks unimodality), bracket, then golden-section
// refinement to |dt| <= 1e-10. Requires 0 < s <= 1e4.
TauResult tau_max(double s);

// (tau(mu*t, t), (1/mu)(1 - e^-mu)); the first is strictly below the second.
struct RayBound {
  double value;
  double bound;
};
RayBound tau_ray_bound(double mu, double t);

// max over integer s <= s_max of tau_max(s), s_max >= 3.
Tau0Result tau0_estimate(int s_max);

// c = -gamma + sum_{k>=1} (1/k - arctan(1/k)), partial sum to k_max
// (>= 10) plus an analytic tail estimate; absolute error is far below
// the 1/(6 k_max^2) tail bound.
double hirsch_constant(long k_max);

}  // namespace lcm
