#pragma once

// Truncated Taylor-series ("jet") arithmetic. A jet stores the
// coefficients c_0..c_N of a function's expansion at a fixed center;
// c_k = f^(k)(center)/k!. Binary operations require matching centers
// and orders; there is no automatic re-centering.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lcm/specfun.hpp"

namespace lcm {

inline constexpr int kMaxJetOrder = 24;

class Jet {
 public:
  Jet(double center, std::vector<double> coeffs)
      : center_(center), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("Jet: empty coefficient list");
    for (double c : coeffs_)
      if (!std::isfinite(c)) throw std::invalid_argument("Jet: non-finite coefficient");
  }

  // Identity jet: c_0 = x, c_1 = 1, higher coefficients zero.
  static Jet variable(double x, int order) {
    if (order < 0 || order > kMaxJetOrder)
      throw std::invalid_argument("Jet: order must be in 0..24");
    std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
    c[0] = x;
    if (order >= 1) c[1] = 1.0;
    return Jet(x, std::move(c));
  }

  static Jet constant(double value, double center, int order) {
    if (order < 0 || order > kMaxJetOrder)
      throw std::invalid_argument("Jet: order must be in 0..24");
    std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
    c[0] = value;
    return Jet(center, std::move(c));
  }

  double center() const { return center_; }
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<double>& coeffs() const { return coeffs_; }
  double coeff(int k) const { return coeffs_[static_cast<std::size_t>(k)]; }

  // f^(k)(center) = k! c_k
  double derivative(int k) const {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f * coeff(k);
  }

 private:
  double center_;
  std::vector<double> coeffs_;
};

namespace detail {
inline void require_compatible(const Jet& a, const Jet& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("Jet: mismatched orders");
  if (a.center() != b.center())
    throw std::invalid_argument("Jet: mismatched centers");
}
}  // namespace detail

inline Jet operator+(const Jet& a, const Jet& b) {
  detail::require_compatible(a, b);
  std::vector<double> c(a.coeffs());
  for (int k = 0; k <= a.order(); ++k) c[k] += b.coeff(k);
  return Jet(a.center(), std::move(c));
}

inline Jet operator-(const Jet& a, const Jet& b) {
  detail::require_compatible(a, b);
  std::vector<double> c(a.coeffs());
  for (int k = 0; k <= a.order(); ++k) c[k] -= b.coeff(k);
  return Jet(a.center(), std::move(c));
}

inline Jet operator-(const Jet& a) {
  std::vector<double> c(a.coeffs());
  for (double& v : c) v = -v;
  return Jet(a.center(), std::move(c));
}

inline Jet operator*(double s, const Jet& a) {
  std::vector<double> c(a.coeffs());
  for (double& v : c) v *= s;
  return Jet(a.center(), std::move(c));
}

inline Jet operator+(const Jet& a, double s) {
  std::vector<double> c(a.coeffs());
  c[0] += s;
  return Jet(a.center(), std::move(c));
}

inline Jet operator+(double s, const Jet& a) { return a + s; }

// Cauchy product.
inline Jet operator*(const Jet& a, const Jet& b) {
  detail::require_compatible(a, b);
  const int n = a.order();
  std::vector<double> c(static_cast<std::size_t>(n) + 1, 0.0);
  for (int k = 0; k <= n; ++k) {
    double s = 0.0;
    for (int j = 0; j <= k; ++j) s += a.coeff(j) * b.coeff(k - j);
    c[k] = s;
  }
  return Jet(a.center(), std::move(c));
}

// Forward substitution: q with q*b == a to truncation order.
inline Jet operator/(const Jet& a, const Jet& b) {
  detail::require_compatible(a, b);
  if (std::fabs(b.coeff(0)) <= 1e-300)
    throw std::domain_error("Jet: division by jet with (near-)zero constant term");
  const int n = a.order();
  std::vector<double> q(static_cast<std::size_t>(n) + 1, 0.0);
  for (int k = 0; k <= n; ++k) {
    double s = a.coeff(k);
    for (int j = 0; j < k; ++j) s -= q[j] * b.coeff(k - j);
    q[k] = s / b.coeff(0);
  }
  return Jet(a.center(), std::move(q));
}

// b = ln a:  k b_k a_0 = k a_k - sum_{j=1..k-1} j b_j a_{k-j}
inline Jet jet_ln(const Jet& a) {
  if (a.coeff(0) <= 0.0)
    throw std::domain_error("jet_ln: constant term must be positive");
  const int n = a.order();
  std::vector<double> b(static_cast<std::size_t>(n) + 1, 0.0);
  b[0] = std::log(a.coeff(0));
  for (int k = 1; k <= n; ++k) {
    double s = k * a.coeff(k);
    for (int j = 1; j < k; ++j) s -= j * b[j] * a.coeff(k - j);
    b[k] = s / (k * a.coeff(0));
  }
  return Jet(a.center(), std::move(b));
}

// b = exp a:  k b_k = sum_{j=1..k} j a_j b_{k-j}
inline Jet jet_exp(const Jet& a) {
  const int n = a.order();
  std::vector<double> b(static_cast<std::size_t>(n) + 1, 0.0);
  b[0] = std::exp(a.coeff(0));
  for (int k = 1; k <= n; ++k) {
    double s = 0.0;
    for (int j = 1; j <= k; ++j) s += j * a.coeff(j) * b[k - j];
    b[k] = s / k;
  }
  return Jet(a.center(), std::move(b));
}

inline Jet jet_pow(const Jet& a, double p) {
  if (a.coeff(0) <= 0.0)
    throw std::domain_error("jet_pow: constant term must be positive");
  return jet_exp(p * jet_ln(a));
}

inline Jet jet_sqrt(const Jet& a) { return jet_pow(a, 0.5); }

// b = atan a:  b' = a' / (1 + a^2), integrated termwise.
inline Jet jet_atan(const Jet& a) {
  const int n = a.order();
  std::vector<double> b(static_cast<std::size_t>(n) + 1, 0.0);
  b[0] = std::atan(a.coeff(0));
  if (n == 0) return Jet(a.center(), std::move(b));

  const Jet u = 1.0 + a * a;
  // numerator coefficients of a' (order n-1)
  std::vector<double> ad(static_cast<std::size_t>(n), 0.0);
  for (int k = 0; k < n; ++k) ad[k] = (k + 1) * a.coeff(k + 1);
  // forward substitution against u truncated to order n-1
  std::vector<double> t(static_cast<std::size_t>(n), 0.0);
  for (int k = 0; k < n; ++k) {
    double s = ad[k];
    for (int j = 0; j < k; ++j) s -= t[j] * u.coeff(k - j);
    t[k] = s / u.coeff(0);
  }
  for (int k = 1; k <= n; ++k) b[k] = t[k - 1] / k;
  return Jet(a.center(), std::move(b));
}

// Jet of ln Gamma(1+x) at x > -1: c_0 = ln Gamma(x+1), c_1 = psi(x+1),
// c_k = psi^(k-1)(x+1)/k! for k >= 2. The shift into (0,1) arguments is
// handled by the recurrences inside specfun.
inline Jet jet_lngamma1p(double x, int order) {
  if (!(x > -1.0)) throw std::domain_error("jet_lngamma1p: argument must be > -1");
  if (order < 0 || order > 20)
    throw std::invalid_argument("jet_lngamma1p: order must be in 0..20");
  std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
  c[0] = ln_gamma(x + 1.0);
  if (order >= 1) c[1] = digamma(x + 1.0);
  double kfact = 1.0;
  for (int k = 2; k <= order; ++k) {
    kfact *= k;
    c[k] = polygamma(k - 1, x + 1.0) / kfact;
  }
  return Jet(x, std::move(c));
}

// Composition g(inner) where g is given by its derivatives at
// inner's constant term. Horner evaluation in (inner - inner_0).
inline Jet jet_compose(const std::vector<double>& outer_derivs, const Jet& inner) {
  const int n = inner.order();
  if (static_cast<int>(outer_derivs.size()) < n + 1)
    throw std::invalid_argument("jet_compose: need outer derivatives up to the jet order");
  Jet u = inner + (-inner.coeff(0));  // zero constant term
  double kfact = 1.0;
  std::vector<double> o(static_cast<std::size_t>(n) + 1, 0.0);
  for (int k = 0; k <= n; ++k) {
    if (k >= 2) kfact *= k;
    o[k] = outer_derivs[k] / kfact;
  }
  Jet r = Jet::constant(o[n], inner.center(), n);
  for (int k = n - 1; k >= 0; --k) r = r * u + o[k];
  return r;
}

}  // namespace lcm
