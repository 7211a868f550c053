#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sclaw {

/// One scalar flux component u -> f_k(u).
///
/// Two shapes cover every family in the library: the even power |u|^p / p and a
/// polynomial sum_j c_j u^j.  Both are polynomials on u >= 0, which is what
/// the effective-flux inversion relies on.
class ScalarFlux {
 public:
  static ScalarFlux abs_power(int power);
  static ScalarFlux polynomial(std::vector<double> coefficients);

  double value(double u) const;
  double slope(double u) const;
  double curvature(double u) const;

  /// (f(a) - f(b)) / (a - b), summed without cancellation when a and b share a sign.
  double secant(double a, double b) const;

  /// Coefficients c_j of the polynomial that agrees with this component for u >= 0.
  std::vector<double> nonnegative_branch() const;

  bool is_abs_power() const { return power_ > 0; }
  int power() const { return power_; }
  const std::vector<double>& coefficients() const { return coefficients_; }

 private:
  int power_ = 0;
  std::vector<double> coefficients_;
};

enum class FluxFamily { PowerLaw, Prop2Pair, Polynomial };

std::string to_string(FluxFamily family);
FluxFamily flux_family_from_string(const std::string& name);

/// A d-component flux field f = (f_1, ..., f_d) with state bound R0.
struct FluxSpec {
  FluxFamily family = FluxFamily::PowerLaw;
  int zeta = 0;  // power-law only
  std::vector<ScalarFlux> components;
  double u_bound = 1.0;

  int dimension() const { return static_cast<int>(components.size()); }
};

/// f_k(u) = |u|^{zeta+d+2-k} / (zeta+d+2-k), so f_k'(u) = u^{zeta+d+1-k} for u >= 0.
FluxSpec power_law_flux(int zeta, int dimension, double u_bound);

/// f_1 = (u^2+1)^2/4, f_2 = u^2/2.
FluxSpec prop2_pair_flux(double u_bound);

/// Component k is sum_j coefficients[k][j] u^j.
FluxSpec polynomial_flux(std::vector<std::vector<double>> coefficients, double u_bound);

/// (f_1(u), ..., f_d(u)); throws DomainError when |u| > R0.
std::vector<double> eval_flux(const FluxSpec& spec, double u);
std::vector<double> eval_flux_prime(const FluxSpec& spec, double u);

/// Largest |f_k'(u)| over k and over u in [lo, hi], sampled densely plus endpoints.
double max_axis_speed(const FluxSpec& spec, double lo, double hi);

/// Worst |(f_k(u+delta) - f_k(u))/delta - f_k'(u)| over `samples` points of [-R0, R0).
double derivative_consistency_error(const FluxSpec& spec, double delta, int samples);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double x) const { return lo <= x && x <= hi; }
  double length() const { return hi - lo; }
};

/// Scalar flux g(u) = xi0 . f(u) governing data that is constant on the planes xi0 . x = const.
class EffectiveFlux {
 public:
  /// Builds g and locates the convexity window containing `base_point` (default R0/2).
  EffectiveFlux(FluxSpec spec, std::vector<double> direction);
  EffectiveFlux(FluxSpec spec, std::vector<double> direction, double base_point);

  double value(double u) const;
  double slope(double u) const;
  double curvature(double u) const;
  double secant(double a, double b) const;

  /// (g')^{-1}(eta) on the convexity window.  Closed form when g' = c u^q on u >= 0.
  double inverse_slope(double eta) const;

  /// Minimiser of g on the convexity window (the sonic point of the Godunov flux).
  double sonic_point() const { return sonic_point_; }

  const Interval& convexity_window() const { return window_; }
  const FluxSpec& spec() const { return spec_; }
  std::span<const double> direction() const { return direction_; }
  double u_bound() const { return spec_.u_bound; }

  /// True when g'(u) = c u^q for u >= 0, which admits a closed-form inverse.
  bool has_monomial_slope() const { return monomial_degree_ > 0; }

 private:
  void locate_window(double base_point);
  void detect_monomial();
  void locate_sonic_point();

  FluxSpec spec_;
  std::vector<double> direction_;
  // xi . f as one polynomial when every component is polynomial, so cancelling terms drop out exactly.
  std::optional<ScalarFlux> combined_;
  Interval window_;
  double sonic_point_ = 0.0;
  int monomial_degree_ = 0;
  double monomial_coefficient_ = 0.0;
};

std::shared_ptr<const EffectiveFlux> effective_flux(const FluxSpec& spec, std::vector<double> direction);

}  // namespace sclaw
