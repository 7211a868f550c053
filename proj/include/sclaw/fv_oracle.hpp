#pragma once

#include <cstddef>
#include <vector>

#include "sclaw/exact_solution.hpp"
#include "sclaw/flux.hpp"
#include "sclaw/profile.hpp"

namespace sclaw {

struct Grid1D {
  double lo = 0.0;
  double hi = 1.0;
  std::size_t cells = 100;
  double cfl = 0.9;
  double end_time = 0.0;
  double fixed_dt = 0.0;  // 0 selects dt = cfl * dm / max|g'| each step

  double dm() const { return (hi - lo) / static_cast<double>(cells); }
  double center(std::size_t i) const { return lo + (static_cast<double>(i) + 0.5) * dm(); }
};

struct FvResult {
  std::vector<double> averages;
  std::size_t steps = 0;
  double mass_initial = 0.0;
  double mass_final = 0.0;
  double data_min = 0.0;
  double data_max = 0.0;
};

/// Exact Godunov flux for convex g: min of g over [uL, uR] if uL <= uR, max of g(uL), g(uR) otherwise.
double godunov_flux(const EffectiveFlux& g, double left, double right);

/// Cell averages of a profile by exact integration (fans included).
std::vector<double> exact_cell_averages(const PlanarProfile& profile, const Grid1D& grid);

/// First-order Godunov scheme with outflow (copy) boundaries.  Throws CflError when
/// the configured CFL number is not in (0, 1) or a fixed dt violates it.
FvResult godunov_solve(std::vector<double> initial, const EffectiveFlux& g, const Grid1D& grid);
FvResult godunov_solve(const PlanarProfile& initial, const EffectiveFlux& g, const Grid1D& grid);

/// sum |a_i - b_i| dm over cells whose centre lies in [window_lo, window_hi].
double l1_distance(const std::vector<double>& a, const std::vector<double>& b, const Grid1D& grid, double window_lo,
                   double window_hi);

/// Cells outside [data_min, data_max] of the initial averages (no tolerance).
std::size_t max_principle_violations(const FvResult& result);

struct ConvergenceRow {
  std::size_t cells = 0;
  double dm = 0.0;
  double l1_error = 0.0;
  double observed_order = 0.0;  // log2(e_prev / e) for successive doublings; NaN on the first row
  std::size_t max_principle_violations = 0;
  double mass_drift = 0.0;  // |final - initial| of sum u dm
};

/// Godunov vs exact cell averages at time t on [lo, hi] for each cell count.
/// The window is [lo, hi] shrunk by V t so the outflow boundaries cannot matter.
std::vector<ConvergenceRow> convergence_study(const ExactSolution& exact, double t, double lo, double hi,
                                              const std::vector<std::size_t>& cells, double cfl = 0.9);

/// Domain around a bounded profile: [begin - pad, end + pad] with pad covering V t plus a margin.
std::pair<double, double> padded_domain(const ExactSolution& exact, double t, double margin = 0.25);

struct Grid2D {
  double x_lo = -1.0, x_hi = 1.0;
  double y_lo = -1.0, y_hi = 1.0;
  std::size_t nx = 64, ny = 64;
  double cfl = 0.9;
  double end_time = 0.0;
  double fixed_dt = 0.0;

  double dx() const { return (x_hi - x_lo) / static_cast<double>(nx); }
  double dy() const { return (y_hi - y_lo) / static_cast<double>(ny); }
  double x_center(std::size_t i) const { return x_lo + (static_cast<double>(i) + 0.5) * dx(); }
  double y_center(std::size_t j) const { return y_lo + (static_cast<double>(j) + 0.5) * dy(); }
};

struct Field2D {
  std::size_t nx = 0, ny = 0;
  std::vector<double> u;

  Field2D() = default;
  Field2D(std::size_t nx_, std::size_t ny_, double value = 0.0) : nx(nx_), ny(ny_), u(nx_ * ny_, value) {}
  double& at(std::size_t i, std::size_t j) { return u[j * nx + i]; }
  double at(std::size_t i, std::size_t j) const { return u[j * nx + i]; }
};

struct Fv2DResult {
  Field2D field;
  std::size_t steps = 0;
  double mass_initial = 0.0;
  double mass_final = 0.0;
  double data_min = 0.0;
  double data_max = 0.0;
};

/// Planar data u(x) = P(xi0 . x) sampled at cell centres, ignoring the profile's transverse box.
Field2D sample_planar(const PlanarProfile& profile, const Grid2D& grid);

/// Unsplit local Lax-Friedrichs (Rusanov) scheme for u_t + f1(u)_x + f2(u)_y = 0 with outflow boundaries.
Fv2DResult lax_friedrichs_2d(const Field2D& initial, const FluxSpec& flux, const Grid2D& grid, unsigned threads = 1);

/// L1 distance between a 2D field and a 1D reference u(m), m = xi0 . x, over cells at
/// least `margin_cells` away from the boundary.  The reference is piecewise constant per cell.
double planar_discrepancy(const Field2D& field, const Grid2D& grid, const std::vector<double>& direction,
                          const std::vector<double>& reference, const Grid1D& reference_grid,
                          std::size_t margin_cells);

}  // namespace sclaw
