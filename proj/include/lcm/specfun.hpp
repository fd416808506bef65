#pragma once

// Double-precision Gamma-family special functions: ln Gamma, digamma,
// polygamma, integer-argument zeta, and the truncated Stirling-type
// asymptotic expansions. All functions are pure and reentrant.

namespace lcm {

inline constexpr double kEulerGamma = 0.57721566490153286061;
inline constexpr double kPi = 3.14159265358979323846;

enum class SeriesKind { LnGamma, Digamma };

// Truncated asymptotic expansion; `terms` counts the 1/x^k correction
// terms retained beyond the leading part (0..10, the Bernoulli table bound).
struct AsymptoticSeries {
  SeriesKind kind;
  int terms;
};

// ln Gamma(x) for x > 0. Relative error <= 1e-12 on (0, 1e6].
double ln_gamma(double x);

// psi(x) for x > 0. Relative error <= 1e-12.
double digamma(double x);

// psi^(n)(x) for 1 <= n <= 20, x > 0. Sign is (-1)^(n+1); relative
// error <= 1e-11 for n <= 12.
double polygamma(int n, double x);

// Riemann zeta at integer k, 2 <= k <= 64. Relative error <= 1e-14.
double zeta_int(int k);

// Value of the truncated expansion at x >= 1. With kind LnGamma and
// terms=1 this is (x-1/2)ln x - x + ln(2pi)/2 + 1/(12x).
double asym_eval(const AsymptoticSeries& series, double x);

}  // namespace lcm
