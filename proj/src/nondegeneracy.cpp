#include "sclaw/nondegeneracy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sclaw/errors.hpp"
#include "sclaw/parallel.hpp"
#include "sclaw/sampling.hpp"

namespace sclaw {

namespace {

constexpr double kZeroUlps = 8.0 * std::numeric_limits<double>::epsilon();

// f_k'(v_j) on the midpoint grid of (-R0, R0), one row per component.
std::vector<std::vector<double>> tabulate_slopes(const FluxSpec& spec, double u_bound, std::size_t n) {
  std::vector<std::vector<double>> table(spec.components.size(), std::vector<double>(n));
  const double dv = 2.0 * u_bound / static_cast<double>(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double v = -u_bound + (static_cast<double>(j) + 0.5) * dv;
    for (std::size_t k = 0; k < spec.components.size(); ++k) table[k][j] = spec.components[k].slope(v);
  }
  return table;
}

struct DirectionScan {
  std::vector<double> measure;
  std::size_t zero_count = 0;
};

DirectionScan scan_direction(const std::vector<std::vector<double>>& table, std::span<const double> direction,
                             std::span<const double> deltas, double dv) {
  const std::size_t n = table.empty() ? 0 : table[0].size();
  const std::size_t d = table.size();
  const double tau = direction[0];
  const double largest = deltas.back();
  std::vector<std::size_t> histogram(deltas.size() + 1, 0);
  DirectionScan scan;
  for (std::size_t j = 0; j < n; ++j) {
    double phi = tau;
    double scale = std::abs(tau);
    for (std::size_t k = 0; k < d; ++k) {
      const double term = direction[k + 1] * table[k][j];
      phi += term;
      scale += std::abs(term);
    }
    const double a = std::abs(phi);
    if (a <= kZeroUlps * scale) ++scan.zero_count;
    if (a >= largest) continue;
    const auto idx = static_cast<std::size_t>(std::upper_bound(deltas.begin(), deltas.end(), a) - deltas.begin());
    ++histogram[idx];
  }
  scan.measure.resize(deltas.size());
  std::size_t running = 0;
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    running += histogram[i];
    scan.measure[i] = static_cast<double>(running) * dv;
  }
  return scan;
}

void check_direction(const FluxSpec& spec, std::span<const double> direction) {
  if (static_cast<int>(direction.size()) != spec.dimension() + 1) {
    throw DomainError("direction must have 1 + d entries (tau, xi)");
  }
}

}  // namespace

std::vector<double> log_spaced(double lo, double hi, int per_decade) {
  if (!(lo > 0.0 && hi > lo) || per_decade < 1) throw DomainError("log_spaced: need 0 < lo < hi and per_decade >= 1");
  const double decades = std::log10(hi / lo);
  const int steps = std::max(1, static_cast<int>(std::lround(decades * per_decade)));
  std::vector<double> out(static_cast<std::size_t>(steps) + 1);
  for (int i = 0; i <= steps; ++i) out[static_cast<std::size_t>(i)] = lo * std::pow(hi / lo, static_cast<double>(i) / steps);
  out.front() = lo;
  out.back() = hi;
  return out;
}

std::vector<double> level_set_measures(const FluxSpec& spec, double u_bound, std::span<const double> direction,
                                       std::span<const double> deltas, std::size_t v_grid) {
  check_direction(spec, direction);
  if (deltas.empty() || !std::is_sorted(deltas.begin(), deltas.end())) throw DomainError("deltas must be ascending");
  const auto table = tabulate_slopes(spec, u_bound, v_grid);
  return scan_direction(table, direction, deltas, 2.0 * u_bound / static_cast<double>(v_grid)).measure;
}

double zero_set_measure(const FluxSpec& spec, double u_bound, std::span<const double> direction, std::size_t v_grid) {
  check_direction(spec, direction);
  const auto table = tabulate_slopes(spec, u_bound, v_grid);
  const std::vector<double> probe{1.0};
  const double dv = 2.0 * u_bound / static_cast<double>(v_grid);
  return static_cast<double>(scan_direction(table, direction, probe, dv).zero_count) * dv;
}

NondegeneracyResult nondegeneracy_exponent(const FluxSpec& spec, const NondegeneracyOptions& options) {
  const auto& deltas = options.deltas;
  if (deltas.size() < 2 || !std::is_sorted(deltas.begin(), deltas.end()) || deltas.front() <= 0.0 ||
      deltas.back() >= 1.0) {
    throw DomainError("delta grid must be ascending inside (0, 1)");
  }
  if (!(options.u_bound > 0.0)) throw DomainError("u_bound must be positive");
  if (options.v_grid < 2) throw DomainError("v_grid too small");

  const std::size_t dim = static_cast<std::size_t>(spec.dimension()) + 1;
  auto directions = symmetric_directions(dim);
  const auto lattice = sphere_lattice(dim, options.sphere_samples, options.lattice_offset);
  directions.insert(directions.end(), lattice.begin(), lattice.end());

  const auto table = tabulate_slopes(spec, options.u_bound, options.v_grid);
  const double dv = 2.0 * options.u_bound / static_cast<double>(options.v_grid);
  const std::size_t degenerate_threshold = std::max<std::size_t>(16, options.v_grid / 1000);

  std::vector<DirectionScan> scans(directions.size());
  parallel_for(directions.size(), options.threads,
               [&](std::size_t i) { scans[i] = scan_direction(table, directions[i], deltas, dv); });

  NondegeneracyResult result;
  result.deltas = deltas;
  result.directions_scanned = directions.size();
  result.worst_measure.assign(deltas.size(), 0.0);
  for (std::size_t i = 0; i < directions.size(); ++i) {
    if (scans[i].zero_count > degenerate_threshold) {
      if (!result.degenerate) result.degenerate_direction = directions[i];
      result.degenerate = true;
    }
    for (std::size_t k = 0; k < deltas.size(); ++k) result.worst_measure[k] = std::max(result.worst_measure[k], scans[i].measure[k]);
  }

  // Fit over the middle of the delta decades.
  const double log_lo = std::log10(deltas.front());
  const double log_hi = std::log10(deltas.back());
  const double trim = options.trim_fraction * (log_hi - log_lo);
  std::vector<double> fx, fy;
  std::size_t first_fitted = deltas.size();
  for (std::size_t k = 0; k < deltas.size(); ++k) {
    const double ld = std::log10(deltas[k]);
    if (ld < log_lo + trim - 1e-12 || ld > log_hi - trim + 1e-12) continue;
    if (first_fitted == deltas.size()) first_fitted = k;
    fx.push_back(deltas[k]);
    fy.push_back(result.worst_measure[k]);
  }
  if (first_fitted == deltas.size()) throw DomainError("delta grid too coarse for the trimmed fit");

  std::size_t worst = 0;
  for (std::size_t i = 0; i < directions.size(); ++i) {
    if (scans[i].measure[first_fitted] > scans[worst].measure[first_fitted]) worst = i;
  }
  result.worst_direction = directions[worst];

  if (result.degenerate) {
    result.alpha = std::numeric_limits<double>::quiet_NaN();
    result.constant = std::numeric_limits<double>::quiet_NaN();
  } else {
    result.fit = fit_power_law(fx, fy);
    result.alpha = result.fit.slope;
    result.constant = std::exp(result.fit.intercept);
  }

  // Grid refinement at the worst direction.
  const auto refined_table = tabulate_slopes(spec, options.u_bound, 2 * options.v_grid);
  const auto refined = scan_direction(refined_table, result.worst_direction, deltas, 0.5 * dv);
  for (std::size_t k = first_fitted; k < deltas.size(); ++k) {
    const double base = scans[worst].measure[k];
    if (base > 0.0) result.refinement_change = std::max(result.refinement_change, std::abs(refined.measure[k] - base) / base);
  }
  result.refinement_ok = result.refinement_change < 0.01;
  result.zero_set_measure = static_cast<double>(scans[worst].zero_count) * dv;
  result.zero_set_measure_refined = static_cast<double>(refined.zero_count) * 0.5 * dv;
  return result;
}

}  // namespace sclaw
