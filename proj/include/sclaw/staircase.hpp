#pragma once

#include <string>
#include <vector>

#include "sclaw/flux.hpp"
#include "sclaw/profile.hpp"

namespace sclaw {

enum class Construction { Prop1, Prop2 };

std::string to_string(Construction c);
Construction construction_from_string(const std::string& name);

/// Sequence parameters of the staircase constructions.
///
/// Prop1 uses the power-law flux with effective degree q = zeta + d and
/// exponent alpha' = 1/q + eps; Prop2 uses the flux pair with q = 3 and
/// gamma = 1/3 + eps.  Both share l_m = n^{-q alpha'} and
/// sigma_{2n} = 2/(R n^alpha'), sigma_{2n+1} = 1/(R n^alpha').
struct BlowupParams {
  Construction construction = Construction::Prop1;
  int zeta = 1;
  int dimension = 2;
  double epsilon = 1.0 / 30.0;
  double R = 1.0;
  long N = 0;  // 0 selects the smallest admissible start index
  long n_max = 40;
  double inner_fraction = 0.5;  // r = inner_fraction * R

  int degree() const { return construction == Construction::Prop2 ? 3 : zeta + dimension; }
  double exponent() const { return 1.0 / degree() + epsilon; }
  double tail_value() const;

  /// Throws ParameterError naming the first violated inequality.
  void validate() const;
};

BlowupParams prop1_params(int zeta, int dimension, double epsilon, double R, long n_max, long N = 0);
BlowupParams prop2_params(double epsilon, double R, long n_max, long N = 0);

/// Smallest N >= 1 with 1/N < tail value and (1 + 1/N)^alpha' < 2.
long minimal_start_index(const BlowupParams& params);

/// Copy of params with N resolved (when 0) and validated.
BlowupParams resolve(BlowupParams params);

/// l_m and sigma_m for n = floor(m/2).
double rung_length(const BlowupParams& params, long m);
double rung_value(const BlowupParams& params, long m);

struct RungSequences {
  long first = 0;  // 2N
  long last = 0;   // 2 n_max + 1
  std::vector<double> l;      // m = first .. last
  std::vector<double> sigma;  // m = first .. last
  std::vector<double> w;      // w_m = sum_{k=first}^{m} l_k, m = first .. last
  double x1 = 0.0;            // lim w_m: finite sum plus the integral estimate of the tail
  double x1_lower = 0.0;
  double x1_upper = 0.0;

  double l_at(long m) const { return l[static_cast<std::size_t>(m - first)]; }
  double sigma_at(long m) const { return sigma[static_cast<std::size_t>(m - first)]; }
  double w_at(long m) const { return w[static_cast<std::size_t>(m - first)]; }
  /// Rung m holds sigma_m on (w_{m-1}, w_m), so its width is exactly l_m; w_{first-1} = 0.
  double left_at(long m) const { return m == first ? 0.0 : w_at(m - 1); }
};

RungSequences build_rungs(const BlowupParams& params);

/// e_1 for Prop1, (1, -1) for Prop2.
std::vector<double> default_direction(const BlowupParams& params);

/// Flux matching the construction, with R0 = 2 sup|u0| unless u_bound > 0.
FluxSpec default_flux(const BlowupParams& params, double u_bound = 0.0);

/// Staircase initial datum: 0 for m < 0, sigma_m on (w_{m-1}, w_m), the tail value
/// on (w_{2 n_max + 1}, max(R, X1)), 0 beyond.  All pieces are constant.
PlanarProfile build_single_box(const BlowupParams& params, const FluxSpec& flux, std::vector<double> direction);
PlanarProfile build_single_box(const BlowupParams& params);

/// Two-state datum u0 = a on {xi0.x < 0}, b on {xi0.x > 0}, restricted to [-R, R]^d.
PlanarProfile build_two_state(const FluxSpec& flux, std::vector<double> direction, double a, double b, double R,
                              double inner_fraction = 0.5);

}  // namespace sclaw
