#pragma once

// Grid verification of the defining inequality (-1)^n [ln f]^(n) >= 0.
// A scan cannot prove the property; PASS means "no counterexample found
// at the tested orders", while FAIL carries a concrete witness.
//
// The grid kernel exists in two variants: a serial reference and an
// OpenMP-parallel one. Both produce bit-identical reports.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcm/families.hpp"

namespace lcm {

enum class ExecMode { Serial, Parallel };

struct OrderRecord {
  int order = 0;
  double min_signed = 0.0;  // min over the grid of (-1)^n [ln f]^(n)
  double argmin = 0.0;
};

struct CheckReport {
  std::string description;
  Interval interval{0.0, 1.0};
  int max_order = 0;
  int grid_size = 0;
  double tolerance = 0.0;  // base tolerance, scaled per order
  std::vector<OrderRecord> records;
  bool pass = false;
  std::optional<int> first_fail_order;
};

// Deterministic grid over the margined interval, uniform in a tanh
// reparameterization that clusters points near both endpoints.
std::vector<double> make_grid(const Interval& iv, int n);

// (min value, argmin) of s_order(x) = (-1)^order eval(x, order).
std::pair<double, double> min_signed_derivative(const LogDerivProvider& p,
                                               int order, const Interval& iv,
                                               int grid,
                                               ExecMode mode = ExecMode::Parallel);

CheckReport check_lcm(const LogDerivProvider& p, const Interval& iv,
                      int max_order, int grid, double tolerance = 1e-9,
                      ExecMode mode = ExecMode::Parallel);

// Richardson-extrapolated central difference of p.eval(., 0) of the
// given order (<= 4); independent oracle for the analytic derivatives.
double fd_oracle(const LogDerivProvider& p, int order, double x);

}  // namespace lcm
