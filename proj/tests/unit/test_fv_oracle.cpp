#include <gtest/gtest.h>

#include <cmath>

#include "sclaw/errors.hpp"
#include "sclaw/fv_oracle.hpp"

using namespace sclaw;

namespace {

const EffectiveFlux& burgers() {
  static const EffectiveFlux g(polynomial_flux({{0.0, 0.0, 0.5}}, 2.0), {1.0});
  return g;
}

std::vector<double> riemann_cells(const Grid1D& grid, double a, double b) {
  std::vector<double> u(grid.cells);
  for (std::size_t i = 0; i < grid.cells; ++i) u[i] = grid.center(i) < 0.0 ? a : b;
  return u;
}

double burgers_shock_error(std::size_t cells) {
  Grid1D grid{-1.0, 1.0, cells, 0.9, 0.5, 0.0};
  const auto r = godunov_solve(riemann_cells(grid, 1.0, 0.0), burgers(), grid);
  std::vector<double> exact(cells);
  const double dm = grid.dm();
  for (std::size_t i = 0; i < cells; ++i) {
    const double lo = grid.lo + i * dm;
    exact[i] = std::clamp((0.25 - lo) / dm, 0.0, 1.0);  // shock at m = 0.25
  }
  return l1_distance(r.averages, exact, grid, -0.5, 0.75);
}

}  // namespace

TEST(GodunovFlux, ConvexMinMaxFormula) {
  const auto& g = burgers();
  EXPECT_DOUBLE_EQ(godunov_flux(g, 1.0, 0.0), 0.5);   // shock moving right
  EXPECT_NEAR(godunov_flux(g, -1.0, 1.0), 0.0, 1e-15);  // transonic rarefaction: sonic point
  EXPECT_DOUBLE_EQ(godunov_flux(g, 0.5, 1.0), 0.125);
  EXPECT_DOUBLE_EQ(godunov_flux(g, -1.0, -0.5), 0.125);
  EXPECT_DOUBLE_EQ(godunov_flux(g, 1.0, -1.0), 0.5);  // stationary shock
}

TEST(Godunov, ConstantStateIsPreserved) {
  Grid1D grid{0.0, 1.0, 137, 0.9, 0.7, 0.0};
  const auto r = godunov_solve(std::vector<double>(grid.cells, 0.3), burgers(), grid);
  for (double v : r.averages) EXPECT_DOUBLE_EQ(v, 0.3);
}

TEST(Godunov, BurgersShockConvergesAtFirstOrder) {
  const double e1 = burgers_shock_error(200), e2 = burgers_shock_error(400);
  EXPECT_LT(e1, 2.0 * (2.0 / 200));
  EXPECT_LT(e2, 2.0 * (2.0 / 400));
  EXPECT_NEAR(e1 / e2, 2.0, 0.6);
}

TEST(Godunov, ConservesMassAndRespectsBounds) {
  const ExactSolution exact(build_single_box(prop1_params(1, 2, 0.5, 1.0, 40)));
  const double t = 0.5 * exact.t0();
  const auto [lo, hi] = padded_domain(exact, t);
  Grid1D grid{lo, hi, 2048, 0.9, t, 0.0};
  const auto r = godunov_solve(exact.initial(), exact.flux(), grid);
  EXPECT_NEAR(r.mass_final, r.mass_initial, 1e-12);
  EXPECT_EQ(max_principle_violations(r), 0u);
  EXPECT_GT(r.steps, 0u);
}

TEST(Godunov, FixedStepViolatingCflIsRejected) {
  Grid1D grid{-1.0, 1.0, 100, 0.9, 0.5, 0.5};
  EXPECT_THROW(godunov_solve(riemann_cells(grid, 1.0, 0.0), burgers(), grid), CflError);
  grid.fixed_dt = 0.0;
  grid.cfl = 1.2;
  EXPECT_THROW(godunov_solve(riemann_cells(grid, 1.0, 0.0), burgers(), grid), CflError);
}

TEST(Godunov, StaircaseErrorDecreasesAtNearFirstOrder) {
  const ExactSolution exact(build_single_box(prop1_params(1, 2, 0.5, 1.0, 40)));
  const double t = 0.5 * exact.t0();
  const auto [lo, hi] = padded_domain(exact, t);
  const auto rows = convergence_study(exact, t, lo, hi, {1024, 2048, 4096});
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_TRUE(std::isnan(rows[0].observed_order));
  EXPECT_LT(rows.back().l1_error, 1e-2);
  for (std::size_t k = 1; k < rows.size(); ++k) {
    EXPECT_GE(rows[k].observed_order, 0.7);
    EXPECT_LE(rows[k].observed_order, 1.3);
    EXPECT_EQ(rows[k].max_principle_violations, 0u);
    EXPECT_LT(rows[k].mass_drift, 1e-12);
  }
}

TEST(ExactCellAverages, IntegrateThePiecesExactly) {
  const ExactSolution exact(build_single_box(prop1_params(1, 2, 0.5, 1.0, 10)));
  const auto at = exact.evolve(0.1);
  Grid1D grid{-0.5, 2.0, 50, 0.9, 0.1, 0.0};
  const auto avg = exact_cell_averages(at, grid);
  double total = 0.0;
  for (double v : avg) total += v * grid.dm();
  EXPECT_NEAR(total, at.integrate(grid.lo, grid.hi), 1e-14);
}

TEST(LaxFriedrichs, ZeroStaysZero) {
  Grid2D grid{-1.0, 1.0, -1.0, 1.0, 32, 32, 0.9, 0.3, 0.0};
  const auto r = lax_friedrichs_2d(Field2D(32, 32), prop2_pair_flux(2.0), grid);
  for (double v : r.field.u) EXPECT_EQ(v, 0.0);
}

TEST(LaxFriedrichs, PlanarReductionConverges) {
  const auto params = prop2_params(0.3, 1.0, 6);
  const auto profile = build_single_box(params);
  const ExactSolution exact(profile);
  const double T = 0.5 * exact.t0();
  Grid1D fine{-2.0, 2.0, 1 << 14, 0.9, T, 0.0};
  const auto reference = godunov_solve(profile, *profile.flux, fine);
  double previous = 0.0;
  for (std::size_t n : {64u, 128u}) {
    Grid2D grid{-1.0, 1.0, -1.0, 1.0, n, n, 0.9, T, 0.0};
    const auto r = lax_friedrichs_2d(sample_planar(profile, grid), profile.flux->spec(), grid, 2);
    EXPECT_GE(*std::min_element(r.field.u.begin(), r.field.u.end()), r.data_min);
    EXPECT_LE(*std::max_element(r.field.u.begin(), r.field.u.end()), r.data_max);
    const double d = planar_discrepancy(r.field, grid, profile.direction, reference.averages, fine, r.steps);
    if (previous > 0.0) {
      EXPECT_GT(previous / d, 1.3);
    }
    previous = d;
  }
}

TEST(LaxFriedrichs, RiemannRarefactionShowsTwoPlateaus) {
  const double a = 0.25, b = 1.0;
  const auto flux = prop2_pair_flux(2.0);
  const auto profile = build_two_state(flux, {1.0, -1.0}, a, b, 1.0);
  const double T = 0.1;
  Grid2D grid{-1.0, 1.0, -1.0, 1.0, 256, 256, 0.9, T, 0.0};
  const auto r = lax_friedrichs_2d(sample_planar(profile, grid), flux, grid, 2);
  const auto& g = *profile.flux;
  double worst_a = 0.0, worst_b = 0.0;
  for (std::size_t j = 64; j < 192; ++j) {
    for (std::size_t i = 64; i < 192; ++i) {
      const double m = grid.x_center(i) - grid.y_center(j);
      if (m < g.slope(a) * T - 0.3) worst_a = std::max(worst_a, std::abs(r.field.at(i, j) - a));
      if (m > g.slope(b) * T + 0.3) worst_b = std::max(worst_b, std::abs(r.field.at(i, j) - b));
    }
  }
  EXPECT_LT(worst_a, 1e-2);
  EXPECT_LT(worst_b, 1e-2);
  // Monotone transition along the diagonal.
  double prev = -1.0;
  for (std::size_t i = 64; i < 192; ++i) {
    const double v = r.field.at(i, 255 - i);
    EXPECT_GE(v, prev - 1e-12);
    prev = v;
  }
}
