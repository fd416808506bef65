#pragma once

// The paper's gamma-function families, exposed as providers of the
// derivatives of ln f on an open interval, plus the closure combinators
// (shift ratio, weighted power product, composition with a catalog of
// inner functions with completely monotonic derivative).

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "lcm/jet.hpp"

namespace lcm {

// Open interval with optional evaluation margins at both ends.
struct Interval {
  double lo;
  double hi;
  double lo_margin = 0.0;
  double hi_margin = 0.0;

  double inner_lo() const { return lo + lo_margin; }
  double inner_hi() const { return hi - hi_margin; }
  bool contains(double x) const { return x > lo && x < hi; }
  void validate() const;
};

enum class FamilyKind {
  RecipGammaRoot,  // 1 / Gamma(x+1)^(1/x) on (-1, inf)
  NuAlpha,         // Gamma(x+1)^(1/x) / (x+1)^alpha on (-1, inf)
  XAlphaRatio,     // Gamma(x+1)^(1/x) / x^alpha on (0, inf) or (-1, 0)
  QAB,             // [Gamma(x+a+1)^(1/(x+a)) / Gamma(x+b+1)^(1/(x+b))]^c
};

struct FamilySpec {
  FamilyKind kind = FamilyKind::RecipGammaRoot;
  double alpha = 0.0;
  double a = 0.0;
  double b = 0.0;
  double c_power = 1.0;
  // Use the family's reciprocal 1/f (negates ln f). Needed for the
  // reciprocal statements (e.g. (x+1)^alpha / Gamma(x+1)^(1/x)).
  bool reciprocal = false;
  // XAlphaRatio only: take the (-1, 0) branch instead of (0, inf).
  bool negative_branch = false;

  Interval natural_domain() const;
  void validate() const;
  std::string describe() const;
};

class LogDerivProvider {
 public:
  virtual ~LogDerivProvider() = default;

  const Interval& domain() const { return domain_; }
  int max_order() const { return max_order_; }

  // n-th derivative of ln f at x; n = 0 is ln f itself.
  virtual double eval(double x, int n) const = 0;

  virtual std::string describe() const = 0;

 protected:
  LogDerivProvider(Interval domain, int max_order)
      : domain_(domain), max_order_(max_order) {}
  void require_in_domain(double x) const;
  void require_order(int n) const;

  Interval domain_;
  int max_order_;
};

using ProviderPtr = std::shared_ptr<const LogDerivProvider>;

// h_n(x) = sum_{k=0..n} (-1)^(n-k) n! x^k psi^(k-1)(x+1) / k!
// with psi^(-1) = ln Gamma and psi^(0) = psi. Requires 1 <= n <= 20.
double h_n(int n, double x);

// n-th derivative of g(x) = ln Gamma(x+1)/x (with g(0) = -gamma),
// 0 <= n <= 20. Switches to the zeta-series branch for |x| < 0.25.
double g_derivs(int n, double x);

// Same derivative via adaptive quadrature of int_0^1 s^n psi^(n)(xs+1) ds;
// absolute tolerance 1e-10. Test oracle for g_derivs. Requires n <= 12.
double g_quadrature(int n, double x);

// mu_{alpha,n}(x) = h_n(x) + (-1)^n (n-1)! alpha x^(n+1) / (x+1)^n.
double mu_alpha_n(double alpha, int n, double x);

// Family provider backed by the closed-form recurrences; exposes the
// jet-arithmetic route as an independent cross-check path.
class FamilyProvider : public LogDerivProvider {
 public:
  FamilyProvider(FamilySpec spec, int max_order);
  double eval(double x, int n) const override;
  double eval_via_jets(double x, int n) const;
  std::string describe() const override;
  const FamilySpec& spec() const { return spec_; }

 private:
  FamilySpec spec_;
};

ProviderPtr make_provider(const FamilySpec& spec, int max_order);

// F_alpha(x) = f(x)/f(x+alpha); derivatives subtract pointwise.
ProviderPtr shift_ratio(ProviderPtr p, double alpha);

// prod_i f_i^(w_i), w_i >= 0; derivatives are the weighted sums.
ProviderPtr power_product(std::vector<std::pair<ProviderPtr, double>> items);

// Inner-function catalog for compositions; every member has a
// completely monotonic derivative on its domain.
enum class InnerKind {
  PowerAffine,   // a x^alpha + b,  a >= 0, 0 <= alpha <= 1, on (0, inf)
  LogAffine,     // a + b ln(1+x),  b >= 0, on (-1, inf)
  OneMinusExp,   // 1 - e^(-x)
  AtanSqrt,      // arctan(sqrt(x)) on (0, inf)
};

struct InnerFunction {
  InnerKind kind = InnerKind::OneMinusExp;
  double a = 1.0;
  double b = 0.0;
  double alpha = 1.0;

  void validate() const;
  Interval domain() const;
  double value(double x) const;
  double limit_hi() const;  // sup of the range (monotone increasing h)
  Jet jet_at(double x, int order) const;
  std::string describe() const;
};

// f(h(x)) for f behind provider p; evaluated by jet composition.
// Rejects h whose range leaves p's domain.
ProviderPtr compose(ProviderPtr p, const InnerFunction& h, Interval interval);

// The factorial-root ratio sequences. n = 0 selects the two-factor
// sequence (k!)^(1/k) / ((m+k)!)^(1/(m+k)); n >= 1 the four-factor one.
double factorial_root_ratio(int k, int m, int n);

}  // namespace lcm
