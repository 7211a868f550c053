#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sclaw/fit.hpp"
#include "sclaw/flux.hpp"

namespace sclaw {

struct NondegeneracyOptions {
  double u_bound = 1.0;         // R0: states range over |v| < R0
  std::vector<double> deltas;   // ascending, inside (0, 1)
  std::size_t sphere_samples = 1000;
  std::size_t v_grid = 1'000'000;
  double trim_fraction = 0.1;   // fraction of the delta decades dropped at each end of the fit
  std::size_t lattice_offset = 0;  // seed: shifts the direction lattice
  unsigned threads = 1;
};

/// Estimate of the exponent alpha and constant C in meas{|v|<R0 : |tau + f'(v).xi| < delta} < C delta^alpha.
struct NondegeneracyResult {
  std::vector<double> deltas;
  std::vector<double> worst_measure;          // sup over sampled directions, per delta
  std::vector<double> worst_direction;        // (tau, xi) maximising the measure at the smallest fitted delta
  double alpha = 0.0;                         // NaN when a degenerate direction was found
  double constant = 0.0;
  LineFit fit;
  std::size_t directions_scanned = 0;
  bool degenerate = false;
  std::vector<double> degenerate_direction;
  double refinement_change = 0.0;  // worst relative change of the worst-direction measures on a doubled grid
  bool refinement_ok = false;      // refinement_change < 1%
  double zero_set_measure = 0.0;   // meas{phi == 0} at the worst direction, v_grid
  double zero_set_measure_refined = 0.0;  // same on the doubled grid
};

/// Measures meas{|v|<R0 : |tau + f'(v).xi| < delta} for one direction (tau, xi), one entry per delta.
/// Uniform midpoint grid counting; `deltas` must be ascending.
std::vector<double> level_set_measures(const FluxSpec& spec, double u_bound, std::span<const double> direction,
                                       std::span<const double> deltas, std::size_t v_grid);

/// Measure of the points where tau + f'(v).xi vanishes to rounding (relative 8 ulp of its terms).
double zero_set_measure(const FluxSpec& spec, double u_bound, std::span<const double> direction, std::size_t v_grid);

NondegeneracyResult nondegeneracy_exponent(const FluxSpec& spec, const NondegeneracyOptions& options);

/// `per_decade` log-spaced points from lo to hi inclusive.
std::vector<double> log_spaced(double lo, double hi, int per_decade);

}  // namespace sclaw
