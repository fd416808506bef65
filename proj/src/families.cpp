#include "lcm/families.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace lcm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kMaxFamilyOrder = 20;

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// psi^(k)(y) with the proof's convention psi^(-1) = ln Gamma, psi^(0) = psi.
double psi_ext(int k, double y) {
  if (k == -1) return ln_gamma(y);
  if (k == 0) return digamma(y);
  return polygamma(k, y);
}

// n-th derivative of ln(1+x).
double dln1p(int n, double x) {
  if (n == 0) return std::log1p(x);
  double sign = (n % 2 == 1) ? 1.0 : -1.0;  // (-1)^(n-1)
  return sign * factorial(n - 1) / std::pow(1.0 + x, n);
}

// n-th derivative of ln|x| (valid on both sides of 0).
double dln_abs(int n, double x) {
  if (n == 0) return std::log(std::fabs(x));
  double sign = (n % 2 == 1) ? 1.0 : -1.0;
  return sign * factorial(n - 1) / std::pow(x, n);
}

// Termwise-differentiated zeta series for g near 0:
//   g(x) = -gamma + sum_{k>=2} (-1)^k zeta(k) x^(k-1) / k,   |x| < 1.
double g_series_deriv(int n, double x) {
  double s = (n == 0) ? -kEulerGamma : 0.0;
  const int k0 = std::max(2, n + 1);
  // falling factorial (k-1)(k-2)...(k-n) at k = k0
  double fall = 1.0;
  for (int j = 0; j < n; ++j) fall *= k0 - 1 - j;
  double xp = std::pow(x, k0 - 1 - n);
  for (int k = k0; k <= 64; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    const double term = sign * zeta_int(k) / k * fall * xp;
    s += term;
    if (k > k0 + 4 && std::fabs(term) < 1e-18 * (std::fabs(s) + 1e-30)) break;
    fall *= static_cast<double>(k) / (k - n);
    xp *= x;
  }
  return s;
}

double quad_integrand(int n, double x, double s) {
  const double arg = x * s + 1.0;
  const double ps = (n == 0) ? digamma(arg) : polygamma(n, arg);
  return (n == 0) ? ps : std::pow(s, n) * ps;
}

double adaptive_simpson(int n, double x, double a, double b, double fa,
                        double fm, double fb, double whole, double tol,
                        int depth) {
  if (depth > 40) throw std::runtime_error("g_quadrature: did not converge");
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = quad_integrand(n, x, lm), frm = quad_integrand(n, x, rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return adaptive_simpson(n, x, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
         adaptive_simpson(n, x, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

bool is_integer(double v) { return v == std::floor(v); }

}  // namespace

void Interval::validate() const {
  if (!(lo < hi)) throw std::invalid_argument("Interval: lo must be < hi");
  if (lo_margin < 0.0 || hi_margin < 0.0)
    throw std::invalid_argument("Interval: margins must be >= 0");
  if (!(inner_lo() < inner_hi()))
    throw std::invalid_argument("Interval: margins leave an empty interval");
}

void LogDerivProvider::require_in_domain(double x) const {
  if (!domain_.contains(x)) {
    std::ostringstream os;
    os << "evaluation point " << x << " outside domain (" << domain_.lo << ", "
       << domain_.hi << ")";
    throw std::domain_error(os.str());
  }
}

void LogDerivProvider::require_order(int n) const {
  if (n < 0 || n > max_order_)
    throw std::domain_error("derivative order out of range");
}

Interval FamilySpec::natural_domain() const {
  switch (kind) {
    case FamilyKind::RecipGammaRoot:
    case FamilyKind::NuAlpha:
      return {-1.0, kInf};
    case FamilyKind::XAlphaRatio:
      return negative_branch ? Interval{-1.0, 0.0} : Interval{0.0, kInf};
    case FamilyKind::QAB:
      return {-(1.0 + std::min(a, b)), kInf};
  }
  throw std::logic_error("unreachable");
}

void FamilySpec::validate() const {
  if (kind == FamilyKind::QAB && !(c_power > 0.0))
    throw std::invalid_argument("FamilySpec: Q_ab exponent c must be > 0");
  if (kind == FamilyKind::XAlphaRatio && negative_branch) {
    // x^alpha must be real and positive on (-1, 0).
    if (!is_integer(alpha))
      throw std::invalid_argument(
          "FamilySpec: the (-1,0) branch requires integer alpha");
    if (static_cast<long>(alpha) % 2 != 0)
      throw std::invalid_argument(
          "FamilySpec: odd alpha makes x^alpha negative on (-1,0)");
  }
}

std::string FamilySpec::describe() const {
  std::ostringstream os;
  switch (kind) {
    case FamilyKind::RecipGammaRoot:
      os << "1/Gamma(x+1)^(1/x)";
      break;
    case FamilyKind::NuAlpha:
      os << "Gamma(x+1)^(1/x)/(x+1)^" << alpha;
      break;
    case FamilyKind::XAlphaRatio:
      os << "Gamma(x+1)^(1/x)/x^" << alpha;
      if (negative_branch) os << " on (-1,0)";
      break;
    case FamilyKind::QAB:
      os << "[Q_{" << a << "," << b << "}]^" << c_power;
      break;
  }
  if (reciprocal) return "reciprocal of " + os.str();
  return os.str();
}

double h_n(int n, double x) {
  if (n < 1 || n > kMaxFamilyOrder)
    throw std::domain_error("h_n: order must be in 1..20");
  if (!(x > -1.0)) throw std::domain_error("h_n: argument must be > -1");
  double sum = 0.0;
  double coef = factorial(n);  // n!/k!
  double xp = 1.0;
  double sign = (n % 2 == 0) ? 1.0 : -1.0;  // (-1)^(n-k) at k = 0
  for (int k = 0; k <= n; ++k) {
    sum += sign * coef * xp * psi_ext(k - 1, x + 1.0);
    sign = -sign;
    coef /= (k + 1);
    xp *= x;
  }
  return sum;
}

double g_derivs(int n, double x) {
  if (n < 0 || n > kMaxFamilyOrder)
    throw std::domain_error("g_derivs: order must be in 0..20");
  if (!(x > -1.0)) throw std::domain_error("g_derivs: argument must be > -1");
  if (std::fabs(x) < 0.25) return g_series_deriv(n, x);
  if (n == 0) return ln_gamma(x + 1.0) / x;
  return h_n(n, x) / std::pow(x, n + 1);
}

double g_quadrature(int n, double x) {
  if (n < 0 || n > 12) throw std::domain_error("g_quadrature: order must be in 0..12");
  if (!(x > -1.0)) throw std::domain_error("g_quadrature: argument must be > -1");
  const double fa = quad_integrand(n, x, 0.0);
  const double fb = quad_integrand(n, x, 1.0);
  const double fm = quad_integrand(n, x, 0.5);
  const double whole = (fa + 4.0 * fm + fb) / 6.0;
  return adaptive_simpson(n, x, 0.0, 1.0, fa, fm, fb, whole, 1e-10, 0);
}

double mu_alpha_n(double alpha, int n, double x) {
  if (n < 1 || n > kMaxFamilyOrder)
    throw std::domain_error("mu_alpha_n: order must be in 1..20");
  if (!(x > -1.0)) throw std::domain_error("mu_alpha_n: argument must be > -1");
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  return h_n(n, x) +
         sign * factorial(n - 1) * alpha * std::pow(x, n + 1) / std::pow(x + 1.0, n);
}

FamilyProvider::FamilyProvider(FamilySpec spec, int max_order)
    : LogDerivProvider(spec.natural_domain(), max_order), spec_(spec) {
  if (max_order < 1 || max_order > kMaxFamilyOrder)
    throw std::invalid_argument("FamilyProvider: max_order must be in 1..20");
  spec_.validate();
}

double FamilyProvider::eval(double x, int n) const {
  require_in_domain(x);
  require_order(n);
  double v = 0.0;
  switch (spec_.kind) {
    case FamilyKind::RecipGammaRoot:
      v = -g_derivs(n, x);
      break;
    case FamilyKind::NuAlpha:
      v = g_derivs(n, x) - spec_.alpha * dln1p(n, x);
      break;
    case FamilyKind::XAlphaRatio:
      v = g_derivs(n, x) - spec_.alpha * dln_abs(n, x);
      break;
    case FamilyKind::QAB:
      v = spec_.c_power * (g_derivs(n, x + spec_.a) - g_derivs(n, x + spec_.b));
      break;
  }
  return spec_.reciprocal ? -v : v;
}

double FamilyProvider::eval_via_jets(double x, int n) const {
  require_in_domain(x);
  require_order(n);
  auto jet_g = [n](double y) {
    return jet_lngamma1p(y, n) / Jet::variable(y, n);
  };
  double v = 0.0;
  switch (spec_.kind) {
    case FamilyKind::RecipGammaRoot:
      v = (-jet_g(x)).derivative(n);
      break;
    case FamilyKind::NuAlpha: {
      const Jet t = jet_g(x) - spec_.alpha * jet_ln(1.0 + Jet::variable(x, n));
      v = t.derivative(n);
      break;
    }
    case FamilyKind::XAlphaRatio: {
      const Jet xj = Jet::variable(x, n);
      const Jet lx = (x > 0.0) ? jet_ln(xj) : jet_ln(-xj);
      v = (jet_g(x) - spec_.alpha * lx).derivative(n);
      break;
    }
    case FamilyKind::QAB: {
      const Jet t = jet_g(x + spec_.a) - jet_g(x + spec_.b);
      v = spec_.c_power * t.derivative(n);
      break;
    }
  }
  return spec_.reciprocal ? -v : v;
}

std::string FamilyProvider::describe() const { return spec_.describe(); }

ProviderPtr make_provider(const FamilySpec& spec, int max_order) {
  return std::make_shared<FamilyProvider>(spec, max_order);
}

namespace {

class ShiftRatioProvider : public LogDerivProvider {
 public:
  ShiftRatioProvider(ProviderPtr p, double alpha, Interval domain)
      : LogDerivProvider(domain, p->max_order()), p_(std::move(p)), alpha_(alpha) {}

  double eval(double x, int n) const override {
    require_in_domain(x);
    require_order(n);
    return p_->eval(x, n) - p_->eval(x + alpha_, n);
  }

  std::string describe() const override {
    std::ostringstream os;
    os << "f(x)/f(x+" << alpha_ << ") with f = " << p_->describe();
    return os.str();
  }

 private:
  ProviderPtr p_;
  double alpha_;
};

class PowerProductProvider : public LogDerivProvider {
 public:
  PowerProductProvider(std::vector<std::pair<ProviderPtr, double>> items,
                       Interval domain, int max_order)
      : LogDerivProvider(domain, max_order), items_(std::move(items)) {}

  double eval(double x, int n) const override {
    require_in_domain(x);
    require_order(n);
    double s = 0.0;
    for (const auto& [p, w] : items_) s += w * p->eval(x, n);
    return s;
  }

  std::string describe() const override {
    std::ostringstream os;
    os << "product of " << items_.size() << " weighted factors";
    return os.str();
  }

 private:
  std::vector<std::pair<ProviderPtr, double>> items_;
};

class ComposeProvider : public LogDerivProvider {
 public:
  ComposeProvider(ProviderPtr p, InnerFunction h, Interval domain)
      : LogDerivProvider(domain, std::min(p->max_order(), kMaxJetOrder)),
        p_(std::move(p)),
        h_(h) {}

  double eval(double x, int n) const override {
    require_in_domain(x);
    require_order(n);
    if (n == 0) return p_->eval(h_.value(x), 0);
    const Jet inner = h_.jet_at(x, n);
    std::vector<double> outer(static_cast<std::size_t>(n) + 1, 0.0);
    for (int k = 0; k <= n; ++k) outer[k] = p_->eval(inner.coeff(0), k);
    return jet_compose(outer, inner).derivative(n);
  }

  std::string describe() const override {
    return "f(" + h_.describe() + ") with f = " + p_->describe();
  }

 private:
  ProviderPtr p_;
  InnerFunction h_;
};

}  // namespace

ProviderPtr shift_ratio(ProviderPtr p, double alpha) {
  if (alpha == 0.0) throw std::invalid_argument("shift_ratio: alpha must be nonzero");
  const Interval& base = p->domain();
  Interval j{std::max(base.lo, base.lo - alpha), std::min(base.hi, base.hi - alpha)};
  if (!(j.lo < j.hi))
    throw std::invalid_argument("shift_ratio: empty intersection domain");
  return std::make_shared<ShiftRatioProvider>(std::move(p), alpha, j);
}

ProviderPtr power_product(std::vector<std::pair<ProviderPtr, double>> items) {
  if (items.empty()) throw std::invalid_argument("power_product: no factors");
  double lo = -kInf, hi = kInf;
  int max_order = kMaxFamilyOrder;
  for (const auto& [p, w] : items) {
    if (w < 0.0) throw std::invalid_argument("power_product: negative weight");
    lo = std::max(lo, p->domain().lo);
    hi = std::min(hi, p->domain().hi);
    max_order = std::min(max_order, p->max_order());
  }
  if (!(lo < hi)) throw std::invalid_argument("power_product: empty common domain");
  return std::make_shared<PowerProductProvider>(std::move(items), Interval{lo, hi},
                                                max_order);
}

void InnerFunction::validate() const {
  switch (kind) {
    case InnerKind::PowerAffine:
      if (a < 0.0 || alpha < 0.0 || alpha > 1.0)
        throw std::invalid_argument(
            "unsupported inner function: a x^alpha + b needs a >= 0 and alpha in [0,1]");
      break;
    case InnerKind::LogAffine:
      if (b < 0.0)
        throw std::invalid_argument(
            "unsupported inner function: a + b ln(1+x) needs b >= 0");
      break;
    case InnerKind::OneMinusExp:
    case InnerKind::AtanSqrt:
      break;
  }
}

Interval InnerFunction::domain() const {
  switch (kind) {
    case InnerKind::PowerAffine:
      return {0.0, kInf};
    case InnerKind::LogAffine:
      return {-1.0, kInf};
    case InnerKind::OneMinusExp:
      return {-kInf, kInf};
    case InnerKind::AtanSqrt:
      return {0.0, kInf};
  }
  throw std::logic_error("unreachable");
}

double InnerFunction::value(double x) const {
  switch (kind) {
    case InnerKind::PowerAffine:
      return a * std::pow(x, alpha) + b;
    case InnerKind::LogAffine:
      return a + b * std::log1p(x);
    case InnerKind::OneMinusExp:
      return -std::expm1(-x);
    case InnerKind::AtanSqrt:
      return std::atan(std::sqrt(x));
  }
  throw std::logic_error("unreachable");
}

double InnerFunction::limit_hi() const {
  switch (kind) {
    case InnerKind::PowerAffine:
      return (a == 0.0 || alpha == 0.0) ? a + b : kInf;
    case InnerKind::LogAffine:
      return (b == 0.0) ? a : kInf;
    case InnerKind::OneMinusExp:
      return 1.0;
    case InnerKind::AtanSqrt:
      return kPi / 2.0;
  }
  throw std::logic_error("unreachable");
}

Jet InnerFunction::jet_at(double x, int order) const {
  const Jet xj = Jet::variable(x, order);
  switch (kind) {
    case InnerKind::PowerAffine:
      if (alpha == 0.0) return Jet::constant(a + b, x, order);
      if (alpha == 1.0) return a * xj + b;
      return a * jet_pow(xj, alpha) + b;
    case InnerKind::LogAffine:
      return a + b * jet_ln(1.0 + xj);
    case InnerKind::OneMinusExp:
      return 1.0 + (-jet_exp(-xj));
    case InnerKind::AtanSqrt:
      return jet_atan(jet_sqrt(xj));
  }
  throw std::logic_error("unreachable");
}

std::string InnerFunction::describe() const {
  std::ostringstream os;
  switch (kind) {
    case InnerKind::PowerAffine:
      os << a << " x^" << alpha << " + " << b;
      break;
    case InnerKind::LogAffine:
      os << a << " + " << b << " ln(1+x)";
      break;
    case InnerKind::OneMinusExp:
      os << "1 - exp(-x)";
      break;
    case InnerKind::AtanSqrt:
      os << "arctan(sqrt(x))";
      break;
  }
  return os.str();
}

ProviderPtr compose(ProviderPtr p, const InnerFunction& h, Interval interval) {
  h.validate();
  interval.validate();
  const Interval hdom = h.domain();
  if (interval.lo < hdom.lo || interval.hi > hdom.hi)
    throw std::invalid_argument("compose: interval outside the inner function's domain");
  const double range_lo = h.value(interval.lo);
  const double range_hi =
      std::isfinite(interval.hi) ? h.value(interval.hi) : h.limit_hi();
  const Interval pdom = p->domain();
  if (range_lo < pdom.lo || range_hi > pdom.hi)
    throw std::invalid_argument("compose: inner range leaves the outer domain");
  return std::make_shared<ComposeProvider>(std::move(p), h, interval);
}

double factorial_root_ratio(int k, int m, int n) {
  if (k < 1 || m < 1 || n < 0)
    throw std::domain_error("factorial_root_ratio: need k >= 1, m >= 1, n >= 0");
  if (k + m + n > 10000)
    throw std::domain_error("factorial_root_ratio: k + m + n must be <= 10^4");
  auto root = [](int j) { return ln_gamma(j + 1.0) / j; };
  if (n == 0) return std::exp(root(k) - root(m + k));
  return std::exp(root(k) + root(k + m + n) - root(k + m) - root(k + n));
}

}  // namespace lcm
