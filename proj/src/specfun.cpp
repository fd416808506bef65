#include "lcm/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lcm {

namespace {

// Bernoulli numbers B_2 .. B_20.
constexpr double kBernoulli[10] = {
    1.0 / 6.0,         -1.0 / 30.0,       1.0 / 42.0,      -1.0 / 30.0,
    5.0 / 66.0,        -691.0 / 2730.0,   7.0 / 6.0,       -3617.0 / 510.0,
    43867.0 / 798.0,   -174611.0 / 330.0};

constexpr double kHalfLn2Pi = 0.91893853320467274178;  // ln(2*pi)/2

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

void require_positive_finite(double x, const char* fn) {
  if (!std::isfinite(x) || x <= 0.0)
    throw std::domain_error(std::string(fn) + ": argument must be finite and > 0");
}

// Stirling series for ln Gamma, valid for large x.
double ln_gamma_asym(double x) {
  double s = (x - 0.5) * std::log(x) - x + kHalfLn2Pi;
  const double x2 = x * x;
  double xp = x;
  for (int j = 1; j <= 10; ++j) {
    s += kBernoulli[j - 1] / (2.0 * j * (2.0 * j - 1.0) * xp);
    xp *= x2;
  }
  return s;
}

double digamma_asym(double x) {
  double s = std::log(x) - 0.5 / x;
  const double x2 = x * x;
  double xp = x2;
  for (int j = 1; j <= 10; ++j) {
    s -= kBernoulli[j - 1] / (2.0 * j * xp);
    xp *= x2;
  }
  return s;
}

}  // namespace

double ln_gamma(double x) {
  require_positive_finite(x, "ln_gamma");
  double shift = 0.0;
  while (x < 12.0) {
    shift -= std::log(x);
    x += 1.0;
  }
  return ln_gamma_asym(x) + shift;
}

double digamma(double x) {
  require_positive_finite(x, "digamma");
  double shift = 0.0;
  while (x < 12.0) {
    shift -= 1.0 / x;
    x += 1.0;
  }
  return digamma_asym(x) + shift;
}

double polygamma(int n, double x) {
  if (n < 1 || n > 20) throw std::domain_error("polygamma: order must be in 1..20");
  require_positive_finite(x, "polygamma");

  const double fact_n = factorial(n);
  const double threshold = 15.0 + 0.5 * n;

  // psi^(n)(x) = psi^(n)(x+1) + (-1)^(n+1) n! / x^(n+1)
  double shift_sum = 0.0;
  while (x < threshold) {
    shift_sum += fact_n / std::pow(x, n + 1);
    x += 1.0;
  }

  // Asymptotic expansion of (-1)^(n+1) psi^(n)(x):
  //   (n-1)!/x^n + n!/(2 x^(n+1)) + sum_j B_2j (2j+n-1)! / ((2j)! x^(2j+n))
  double t = factorial(n - 1) / std::pow(x, n) + fact_n / (2.0 * std::pow(x, n + 1));
  const double x2 = x * x;
  double xp = std::pow(x, n + 2);
  // coeff_j = (2j+n-1)! / (2j)!
  double coeff = factorial(n + 1) / 2.0;
  for (int j = 1; j <= 10; ++j) {
    t += kBernoulli[j - 1] * coeff / xp;
    coeff *= static_cast<double>(2 * j + n) * (2 * j + n + 1) /
             (static_cast<double>(2 * j + 1) * (2 * j + 2));
    xp *= x2;
  }

  const double sign = (n % 2 == 1) ? 1.0 : -1.0;  // (-1)^(n+1)
  return sign * (t + shift_sum);
}

double zeta_int(int k) {
  if (k < 2 || k > 64) throw std::domain_error("zeta_int: argument must be in 2..64");
  if (k >= 55) return 1.0 + std::pow(2.0, -k) + std::pow(3.0, -k);

  const int n_direct = 30;
  double s = 0.0;
  for (int i = n_direct - 1; i >= 1; --i) s += std::pow(static_cast<double>(i), -k);

  // Euler-Maclaurin tail starting at N = n_direct.
  const double nf = n_direct;
  const double kd = k;
  s += std::pow(nf, 1.0 - kd) / (kd - 1.0);
  s += 0.5 * std::pow(nf, -kd);
  s += kd * std::pow(nf, -kd - 1.0) / 12.0;
  s -= kd * (kd + 1.0) * (kd + 2.0) * std::pow(nf, -kd - 3.0) / 720.0;
  s += kd * (kd + 1.0) * (kd + 2.0) * (kd + 3.0) * (kd + 4.0) *
       std::pow(nf, -kd - 5.0) / 30240.0;
  return s;
}

double asym_eval(const AsymptoticSeries& series, double x) {
  if (series.terms < 0 || series.terms > 10)
    throw std::domain_error("asym_eval: terms must be in 0..10");
  if (!std::isfinite(x) || x < 1.0)
    throw std::domain_error("asym_eval: argument must be >= 1");

  const double x2 = x * x;
  if (series.kind == SeriesKind::LnGamma) {
    double s = (x - 0.5) * std::log(x) - x + kHalfLn2Pi;
    double xp = x;
    for (int j = 1; j <= series.terms; ++j) {
      s += kBernoulli[j - 1] / (2.0 * j * (2.0 * j - 1.0) * xp);
      xp *= x2;
    }
    return s;
  }
  double s = std::log(x) - 0.5 / x;
  double xp = x2;
  for (int j = 1; j <= series.terms; ++j) {
    s -= kBernoulli[j - 1] / (2.0 * j * xp);
    xp *= x2;
  }
  return s;
}

}  // namespace lcm
