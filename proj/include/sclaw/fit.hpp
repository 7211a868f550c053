#pragma once

#include <span>

namespace sclaw {

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  int points = 0;
};

/// Ordinary least squares y = slope * x + intercept.
LineFit fit_line(std::span<const double> x, std::span<const double> y);

/// Least-squares fit of log(y) against log(x); entries with x <= 0 or y <= 0 are skipped.
LineFit fit_power_law(std::span<const double> x, std::span<const double> y);

}  // namespace sclaw
