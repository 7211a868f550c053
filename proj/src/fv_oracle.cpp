#include "sclaw/fv_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "sclaw/errors.hpp"
#include "sclaw/parallel.hpp"

namespace sclaw {

namespace {

void check_cfl_number(double cfl) {
  if (!(cfl > 0.0 && cfl < 1.0)) {
    std::ostringstream os;
    os << "CFL number " << cfl << " not in (0, 1)";
    throw CflError(os.str());
  }
}

// Step size for this step: adaptive, or the fixed one after checking it against the CFL bound.
double choose_dt(double rate, double cfl, double fixed_dt, double remaining) {
  if (fixed_dt > 0.0) {
    if (fixed_dt * rate > cfl) {
      std::ostringstream os;
      os.precision(17);
      os << "fixed dt = " << fixed_dt << " gives CFL number " << fixed_dt * rate << " > " << cfl;
      throw CflError(os.str());
    }
    return std::min(fixed_dt, remaining);
  }
  if (rate <= 0.0) return remaining;
  return std::min(cfl / rate, remaining);
}

}  // namespace

double godunov_flux(const EffectiveFlux& g, double left, double right) {
  if (left <= right) return g.value(std::clamp(g.sonic_point(), left, right));
  return std::max(g.value(left), g.value(right));
}

std::vector<double> exact_cell_averages(const PlanarProfile& profile, const Grid1D& grid) {
  std::vector<double> out(grid.cells);
  const double dm = grid.dm();
  for (std::size_t i = 0; i < grid.cells; ++i) {
    const double a = grid.lo + static_cast<double>(i) * dm;
    out[i] = profile.integrate(a, a + dm) / dm;
  }
  return out;
}

FvResult godunov_solve(const PlanarProfile& initial, const EffectiveFlux& g, const Grid1D& grid) {
  return godunov_solve(exact_cell_averages(initial, grid), g, grid);
}

FvResult godunov_solve(std::vector<double> u, const EffectiveFlux& g, const Grid1D& grid) {
  check_cfl_number(grid.cfl);
  if (u.size() != grid.cells || grid.cells < 2) throw DomainError("cell count mismatch");
  const double dm = grid.dm();
  FvResult res;
  res.data_min = *std::min_element(u.begin(), u.end());
  res.data_max = *std::max_element(u.begin(), u.end());
  for (double v : u) res.mass_initial += v * dm;

  const std::size_t n = u.size();
  std::vector<double> flux(n + 1);
  double t = 0.0;
  while (t < grid.end_time) {
    double speed = 0.0;
    for (double v : u) speed = std::max(speed, std::abs(g.slope(v)));
    const double dt = choose_dt(speed / dm, grid.cfl, grid.fixed_dt, grid.end_time - t);
    // Outflow: ghost cells copy the boundary cells, so boundary fluxes are g(u_0) and g(u_{n-1}).
    flux[0] = godunov_flux(g, u[0], u[0]);
    flux[n] = godunov_flux(g, u[n - 1], u[n - 1]);
    for (std::size_t i = 1; i < n; ++i) flux[i] = godunov_flux(g, u[i - 1], u[i]);
    const double lambda = dt / dm;
    for (std::size_t i = 0; i < n; ++i) u[i] -= lambda * (flux[i + 1] - flux[i]);
    t = (grid.end_time - t <= dt) ? grid.end_time : t + dt;
    ++res.steps;
  }
  for (double v : u) res.mass_final += v * dm;
  res.averages = std::move(u);
  return res;
}

double l1_distance(const std::vector<double>& a, const std::vector<double>& b, const Grid1D& grid, double window_lo,
                   double window_hi) {
  double acc = 0.0;
  for (std::size_t i = 0; i < grid.cells; ++i) {
    const double c = grid.center(i);
    if (c < window_lo || c > window_hi) continue;
    acc += std::abs(a[i] - b[i]);
  }
  return acc * grid.dm();
}

std::size_t max_principle_violations(const FvResult& result) {
  return static_cast<std::size_t>(std::count_if(result.averages.begin(), result.averages.end(), [&](double v) {
    return v < result.data_min || v > result.data_max;
  }));
}

std::pair<double, double> padded_domain(const ExactSolution& exact, double t, double margin) {
  const auto& p = exact.initial();
  const double pad = exact.schedule().axis_speed * t + margin;
  return {p.begin() - pad, p.end + pad};
}

std::vector<ConvergenceRow> convergence_study(const ExactSolution& exact, double t, double lo, double hi,
                                              const std::vector<std::size_t>& cells, double cfl) {
  const PlanarProfile at_t = exact.evolve(t);
  const double reach = exact.schedule().axis_speed * t;
  std::vector<ConvergenceRow> rows;
  for (std::size_t k : cells) {
    Grid1D grid{lo, hi, k, cfl, t, 0.0};
    const auto numeric = godunov_solve(exact.initial(), exact.flux(), grid);
    const auto reference = exact_cell_averages(at_t, grid);
    ConvergenceRow row;
    row.cells = k;
    row.dm = grid.dm();
    row.l1_error = l1_distance(numeric.averages, reference, grid, lo + reach, hi - reach);
    row.observed_order = rows.empty() ? std::numeric_limits<double>::quiet_NaN()
                                      : std::log(rows.back().l1_error / row.l1_error) /
                                            std::log(static_cast<double>(k) / static_cast<double>(rows.back().cells));
    row.max_principle_violations = max_principle_violations(numeric);
    row.mass_drift = std::abs(numeric.mass_final - numeric.mass_initial);
    rows.push_back(row);
  }
  return rows;
}

Field2D sample_planar(const PlanarProfile& profile, const Grid2D& grid) {
  if (profile.dimension() != 2) throw DomainError("sample_planar needs a 2D profile");
  Field2D f(grid.nx, grid.ny);
  for (std::size_t j = 0; j < grid.ny; ++j) {
    for (std::size_t i = 0; i < grid.nx; ++i) {
      const double m = profile.direction[0] * grid.x_center(i) + profile.direction[1] * grid.y_center(j);
      f.at(i, j) = profile.value_at(m);
    }
  }
  return f;
}

Fv2DResult lax_friedrichs_2d(const Field2D& initial, const FluxSpec& flux, const Grid2D& grid, unsigned threads) {
  check_cfl_number(grid.cfl);
  if (flux.dimension() != 2) throw DomainError("lax_friedrichs_2d needs a two-component flux");
  if (initial.nx != grid.nx || initial.ny != grid.ny) throw DomainError("field/grid size mismatch");
  const auto& f1 = flux.components[0];
  const auto& f2 = flux.components[1];
  const std::size_t nx = grid.nx, ny = grid.ny;
  const double dx = grid.dx(), dy = grid.dy();

  Fv2DResult res;
  res.field = initial;
  auto& u = res.field.u;
  res.data_min = *std::min_element(u.begin(), u.end());
  res.data_max = *std::max_element(u.begin(), u.end());
  for (double v : u) res.mass_initial += v * dx * dy;

  auto rusanov = [](const ScalarFlux& f, double a, double b) {
    const double s = std::max(std::abs(f.slope(a)), std::abs(f.slope(b)));
    return 0.5 * (f.value(a) + f.value(b)) - 0.5 * s * (b - a);
  };

  std::vector<double> next(u.size());
  double t = 0.0;
  while (t < grid.end_time) {
    double ax = 0.0, ay = 0.0;
    for (double v : u) {
      ax = std::max(ax, std::abs(f1.slope(v)));
      ay = std::max(ay, std::abs(f2.slope(v)));
    }
    const double dt = choose_dt(ax / dx + ay / dy, grid.cfl, grid.fixed_dt, grid.end_time - t);
    const double lx = dt / dx, ly = dt / dy;
    parallel_for(ny, threads, [&](std::size_t j) {
      const std::size_t jm = j == 0 ? 0 : j - 1;
      const std::size_t jp = j + 1 == ny ? j : j + 1;
      for (std::size_t i = 0; i < nx; ++i) {
        const std::size_t im = i == 0 ? 0 : i - 1;
        const std::size_t ip = i + 1 == nx ? i : i + 1;
        const double c = u[j * nx + i];
        const double fe = rusanov(f1, c, u[j * nx + ip]);
        const double fw = rusanov(f1, u[j * nx + im], c);
        const double fn = rusanov(f2, c, u[jp * nx + i]);
        const double fs = rusanov(f2, u[jm * nx + i], c);
        next[j * nx + i] = c - lx * (fe - fw) - ly * (fn - fs);
      }
    });
    u.swap(next);
    t = (grid.end_time - t <= dt) ? grid.end_time : t + dt;
    ++res.steps;
  }
  for (double v : u) res.mass_final += v * dx * dy;
  return res;
}

double planar_discrepancy(const Field2D& field, const Grid2D& grid, const std::vector<double>& direction,
                          const std::vector<double>& reference, const Grid1D& reference_grid,
                          std::size_t margin_cells) {
  double acc = 0.0;
  const double dm = reference_grid.dm();
  for (std::size_t j = margin_cells; j + margin_cells < grid.ny; ++j) {
    for (std::size_t i = margin_cells; i + margin_cells < grid.nx; ++i) {
      const double m = direction[0] * grid.x_center(i) + direction[1] * grid.y_center(j);
      const double k = std::floor((m - reference_grid.lo) / dm);
      if (k < 0.0 || k >= static_cast<double>(reference_grid.cells)) throw DomainError("reference grid too short");
      acc += std::abs(field.at(i, j) - reference[static_cast<std::size_t>(k)]);
    }
  }
  return acc * grid.dx() * grid.dy();
}

}  // namespace sclaw
