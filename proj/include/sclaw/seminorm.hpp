#pragma once

#include <string>
#include <vector>

#include "sclaw/fit.hpp"
#include "sclaw/profile.hpp"
#include "sclaw/staircase.hpp"

namespace sclaw {

struct LpDifference {
  double value = 0.0;
  bool tangent = false;  // the shift is parallel to the planes of the profile, so the difference vanishes
};

/// ||u(. + h e_i) - u||_{L^p} of the planar function u(x) = P(xi0 . x) over the inner cross-section.
/// Constant-constant intervals are integrated exactly, intervals touching a fan by adaptive Simpson.
LpDifference shifted_lp_difference(const PlanarProfile& profile, double h, double p, int axis);

struct SeminormQuery {
  double s = 0.4;
  double p = 1.0;
  double theta = 1.0;
  int axis = 0;
  double h_min = 1e-4;
  double h_max = 1.0;
  int points_per_decade = 64;
  double trim_decades = 0.5;  // excluded at each end of the fit range
  double fit_h_min = 0.0;     // optional extra lower limit of the fit range (0: none)
};

/// Fit floor that keeps the last resolved rung M(h) below sqrt(n_max), so the rungs lost to
/// truncation stay a vanishing fraction of ||Delta^h u|| as n_max grows: l_{2 floor(sqrt(n_max))}.
double truncation_safe_h(const BlowupParams& params);

struct ScanResult {
  std::vector<double> h;           // decreasing from h_max to h_min
  std::vector<double> lp_diff;     // ||Delta^h u||_p
  std::vector<double> integrand;   // ||Delta^h u||_p^theta h^{-1-s theta}
  std::vector<double> cumulative;  // S(h) = int_h^{h_max} integrand dh
  double seminorm = 0.0;           // S(h_min)
  bool tangent = false;
  /// Slope of log(dS/dlog(1/h)) against log(1/h).  For S ~ C h^{-kappa} this equals kappa
  /// without the offset that the upper cutoff h_max adds to log S itself.
  double kappa_fitted = 0.0;
  LineFit fit;
  double kappa_log_s = 0.0;  // slope of log S vs log(1/h) over the same range, for comparison
};

ScanResult truncated_besov(const PlanarProfile& profile, const SeminormQuery& query, unsigned threads = 1);

/// theta/p + q s alpha' theta - alpha' theta - q alpha' theta / p.
double kappa_closed_form(const BlowupParams& params, double s, double p, double theta);

/// c_n = (1 - t/t_n) / n^{q alpha'}: width of the part of rung 2n on which the shift by h = c_n sees the jump.
double rung_scale(const BlowupParams& params, long n, double t);

/// M(h) = floor(((1 - t/t_n) / h)^{1/(q alpha')}).
long rungs_below(const BlowupParams& params, double h, double t);

enum class SeriesRegime { Divergent, Bounded, Excessive };

std::string to_string(SeriesRegime r);

struct LowerBoundSeries {
  double kappa = 0.0;
  SeriesRegime regime = SeriesRegime::Divergent;
  std::string note;
  double prefactor = 0.0;                // ((2r)^{d-1} (1 - t/t_n) / R^p)^{theta/p}
  std::vector<long> checkpoints;         // n = N, 2N, 4N, ... and the last term
  std::vector<double> divergent_partial; // prefactor * sum_{k=N}^{n} k^{-(1-kappa)}
  std::vector<double> convergent_partial;// prefactor * sum_{k=N}^{n} k^{-(2-kappa)}
  double growth_exponent = 0.0;          // fitted from dyadic block sums; tends to kappa
};

LowerBoundSeries lower_bound_series(const BlowupParams& params, double s, double p, double theta, double t,
                                    long n_terms);

/// Directional total variation in e_axis of u(x) = P(xi0 . x) over the inner cross-section.
double total_variation(const PlanarProfile& profile, int axis);

/// Same, restricted to the rungs up to n: jumps into pieces tagged <= 2n + 1 and fans tagged <= 2n + 1.
double tv_partial(const PlanarProfile& profile, long n, int axis);

struct TvGrowth {
  std::vector<long> n;    // n_first * 2^j up to n_last
  std::vector<double> tv; // tv_partial at each n
  double exponent = 0.0;  // slope of log(TV(2n) - TV(n)) vs log n; the additive offset of TV cancels
  LineFit fit;
};

TvGrowth tv_growth(const PlanarProfile& profile, long n_first, long n_last, int axis);

struct Lemma2Outcome {
  bool first = false;   // (x+1)^b > x^b + b / x^{1-b} - b(1-b) / x^{2-b}
  bool second = false;  // (x+1)^{1+b} > x^{1+b} + (1+b) x^b
  double first_margin = 0.0;   // left minus right side, divided by x^b
  double second_margin = 0.0;  // left minus right side, divided by x^{1+b}
};

/// Throws DomainError unless x >= 1 and 0 < beta < 1.
Lemma2Outcome lemma2_check(double x, double beta);

struct Lemma2Sweep {
  std::size_t samples = 0;
  std::size_t first_violations = 0;
  std::size_t second_violations = 0;
  double min_first_margin = 0.0;
  double min_second_margin = 0.0;
};

/// Halton points: x log-uniform in [1, 1e6], beta uniform in (0.01, 0.99); indices seed+1 .. seed+samples.
Lemma2Sweep lemma2_sweep(std::size_t samples, std::size_t seed = 0);

}  // namespace sclaw
