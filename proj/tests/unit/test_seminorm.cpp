#include <gtest/gtest.h>

#include <cmath>

#include "sclaw/errors.hpp"
#include "sclaw/exact_solution.hpp"
#include "sclaw/seminorm.hpp"

using namespace sclaw;

namespace {

PlanarProfile unit_jump() { return build_two_state(power_law_flux(1, 2, 2.0), {1.0, 0.0}, 1.0, 0.0, 1.0); }

ScanResult scan(const BlowupParams& p, double s, unsigned threads = 1) {
  SeminormQuery q;
  q.s = s;
  q.h_min = rung_length(p, 2 * p.n_max);
  q.h_max = rung_length(p, 2 * p.N);
  q.fit_h_min = truncation_safe_h(p);
  return truncated_besov(build_single_box(p), q, threads);
}

double lp_norm(const PlanarProfile& p) { return p.cross_section() * p.integrate(p.begin(), p.end); }

}  // namespace

TEST(ShiftedDifference, ZeroShift) {
  const auto p = build_single_box(prop1_params(1, 2, 0.1, 1.0, 20));
  EXPECT_EQ(shifted_lp_difference(p, 0.0, 1.0, 0).value, 0.0);
}

TEST(ShiftedDifference, SingleJumpIsARectangle) {
  const auto p = unit_jump();
  EXPECT_NEAR(shifted_lp_difference(p, 0.1, 1.0, 0).value, 0.1 * 1.0, 1e-15);  // (2r)^{d-1} = 1
  EXPECT_NEAR(shifted_lp_difference(p, 0.1, 2.0, 0).value, std::sqrt(0.1), 1e-15);
}

TEST(ShiftedDifference, TangentShiftVanishes) {
  const auto p = build_single_box(prop1_params(1, 2, 0.1, 1.0, 20));
  const auto d = shifted_lp_difference(p, 0.3, 1.0, 1);
  EXPECT_EQ(d.value, 0.0);
  EXPECT_TRUE(d.tangent);
  EXPECT_THROW(shifted_lp_difference(p, 0.3, 1.0, 2), DomainError);
  EXPECT_THROW(shifted_lp_difference(p, -0.3, 1.0, 0), DomainError);
}

TEST(ShiftedDifference, RespectsTriangleAndBvBounds) {
  const auto params = prop1_params(1, 2, 0.1, 1.0, 200);
  const ExactSolution exact(build_single_box(params));
  for (double t : {0.0, 0.5 * exact.t0()}) {
    const auto p = t > 0.0 ? exact.evolve(t) : exact.initial();
    const double norm = lp_norm(p);
    const double tv = total_variation(p, 0);
    for (double h : {1e-4, 1e-3, 1e-2, 0.1, 0.5, 2.0}) {
      const double d = shifted_lp_difference(p, h, 1.0, 0).value;
      EXPECT_LE(d, 2.0 * norm * (1.0 + 1e-12));
      EXPECT_LE(d, h * tv * (1.0 + 1e-9)) << "h = " << h << " t = " << t;
    }
  }
}

TEST(ShiftedDifference, FanPiecesMatchQuadrature) {
  const ExactSolution exact(build_single_box(prop1_params(1, 2, 0.5, 1.0, 10)));
  const auto p = exact.evolve(0.5 * exact.t0());
  const double h = 0.013;
  const int n = 400'000;
  const double a = p.begin() - h, b = p.end;
  double brute = 0.0;
  for (int i = 0; i < n; ++i) {
    const double m = a + (i + 0.5) * (b - a) / n;
    brute += std::abs(p.value_at(m + h) - p.value_at(m));
  }
  brute *= (b - a) / n * p.cross_section();
  EXPECT_NEAR(shifted_lp_difference(p, h, 1.0, 0).value, brute, 1e-5);
}

TEST(ShiftedDifference, MeetsTheRungLowerBound) {
  const auto params = prop1_params(1, 2, 1.0 / 30.0, 1.0, 400);
  const ExactSolution exact(build_single_box(params));
  const double t = 0.05;
  const auto p = exact.evolve(t);
  const long n = 20;
  const double h = rung_scale(params, n, t);
  const double q = params.degree(), a = params.exponent(), r = params.inner_fraction * params.R;
  const double K = 1.0 / interaction_times(params).t_n;
  const double bound = std::pow(2.0 * r, params.dimension - 1) * static_cast<double>(n - params.N) * (1.0 - K * t) /
                       std::pow(static_cast<double>(n), a * (1.0 + q));
  EXPECT_GE(shifted_lp_difference(p, h, 1.0, 0).value, bound);
}

TEST(RungScale, CountsRungsBelowH) {
  const auto params = prop1_params(1, 2, 1.0 / 30.0, 1.0, 400);
  const double t = 0.05;
  for (long n : {5L, 20L, 100L}) {
    EXPECT_EQ(rungs_below(params, rung_scale(params, n, t) * (1.0 - 1e-12), t), n);
    EXPECT_EQ(rungs_below(params, rung_scale(params, n, t) * 1.001, t), n - 1);
  }
}

TEST(Besov, ZeroProfileHasZeroSeminorm) {
  PlanarProfile p = build_two_state(power_law_flux(1, 2, 2.0), {1.0, 0.0}, 1.0, 0.0, 1.0);
  p.pieces = {Piece::constant(0.0, 0.0)};
  p.end = 1.0;
  SeminormQuery q;
  const auto r = truncated_besov(p, q);
  EXPECT_EQ(r.seminorm, 0.0);
}

TEST(Besov, CumulativeIsMonotone) {
  const auto r = scan(prop1_params(1, 2, 1e-3, 1.0, 1000), 0.4);
  for (std::size_t k = 1; k < r.cumulative.size(); ++k) EXPECT_GE(r.cumulative[k], r.cumulative[k - 1]);
  for (std::size_t k = 1; k < r.h.size(); ++k) EXPECT_LT(r.h[k], r.h[k - 1]);
  for (double v : r.lp_diff) EXPECT_GE(v, 0.0);
  EXPECT_DOUBLE_EQ(r.seminorm, r.cumulative.back());
}

TEST(Besov, FittedKappaTracksClosedFormInBlowupRegime) {
  for (auto [s, eps] : std::vector<std::pair<double, double>>{{0.4, 1e-3}, {0.45, 1e-3}, {0.5, 1e-3}, {0.6, 1e-2}}) {
    const auto p = prop1_params(1, 2, eps, 1.0, 10'000);
    EXPECT_NEAR(scan(p, s).kappa_fitted, kappa_closed_form(p, s, 1.0, 1.0), 0.05) << "s = " << s;
  }
}

TEST(Besov, BoundedBelowCriticalSmoothness) {
  EXPECT_LE(scan(prop1_params(1, 2, 1e-3, 1.0, 10'000), 0.25).kappa_fitted, 0.02);
}

TEST(Besov, ThreadCountDoesNotChangeResult) {
  const auto p = prop1_params(1, 2, 1e-3, 1.0, 2000);
  const auto one = scan(p, 0.4, 1), four = scan(p, 0.4, 4);
  EXPECT_EQ(one.lp_diff, four.lp_diff);
  EXPECT_EQ(one.seminorm, four.seminorm);
}

TEST(Kappa, ClosedFormExamples) {
  const auto coarse = prop1_params(1, 2, 1.0 / 30.0, 1.0, 40);
  EXPECT_NEAR(kappa_closed_form(coarse, 0.4, 1.0, 1.0), (0.4 - 1.0 / 3.0) * 1.1 - 0.1, 1e-15);
  const auto fine = prop1_params(1, 2, 1e-3, 1.0, 40);
  EXPECT_NEAR(kappa_closed_form(fine, 0.4, 1.0, 1.0), 0.0638666666666667, 1e-13);
  const auto marginal = prop1_params(1, 2, 1e-12, 1.0, 40);
  EXPECT_NEAR(kappa_closed_form(marginal, 1.0 / 3.0, 1.0, 1.0), 0.0, 1e-11);
  // Both displayed forms agree: (s - 1/q) theta (1 + q eps) - q eps / p.
  for (double theta : {0.5, 1.0, 2.0}) {
    const double s = 0.45, p = 1.5, q = 3.0, e = 1e-3;
    EXPECT_NEAR(kappa_closed_form(fine, s, p, theta), (s - 1.0 / q) * theta * (1.0 + q * e) - q * e * theta / p, 1e-15);
  }
}

TEST(LowerBoundSeries, FlagsExcessiveEpsilon) {
  const auto s = lower_bound_series(prop1_params(1, 2, 1.0 / 30.0, 1.0, 40), 0.4, 1.0, 1.0, 0.0, 1000);
  EXPECT_EQ(s.regime, SeriesRegime::Bounded);
  EXPECT_NE(s.note.find("epsilon too large"), std::string::npos);
  EXPECT_LT(s.kappa, 0.0);
}

TEST(LowerBoundSeries, DivergentPartialSumsGrowLikeNToKappa) {
  const auto params = prop1_params(1, 2, 1e-3, 1.0, 40);
  const auto s = lower_bound_series(params, 0.4, 1.0, 1.0, 0.1, 1'000'000);
  EXPECT_EQ(s.regime, SeriesRegime::Divergent);
  EXPECT_NEAR(s.growth_exponent, s.kappa, 0.01);
  for (std::size_t k = 1; k < s.checkpoints.size(); ++k) {
    EXPECT_GT(s.divergent_partial[k], s.divergent_partial[k - 1]);
    EXPECT_GE(s.convergent_partial[k], s.convergent_partial[k - 1]);
  }
  // The companion series with exponent 2 - kappa stays below its integral bound.
  const double kappa = s.kappa;
  const double bound = s.prefactor * (std::pow(params.N, kappa - 2.0) + std::pow(params.N, kappa - 1.0) / (1.0 - kappa));
  EXPECT_LT(s.convergent_partial.back(), bound);
  EXPECT_GT(s.divergent_partial.back(), 10.0 * s.convergent_partial.back());
}

TEST(LowerBoundSeries, RejectsTimeBeyondTn) {
  EXPECT_THROW(lower_bound_series(prop1_params(1, 2, 1e-3, 1.0, 40), 0.4, 1.0, 1.0, 0.3, 100), DomainError);
}

TEST(TotalVariation, TwoStateJump) {
  const auto p = build_two_state(power_law_flux(1, 2, 2.0), {1.0, 0.0}, 0.8, 0.3, 2.0);
  EXPECT_NEAR(total_variation(p, 0), 0.5 * 2.0, 1e-15);  // (2r)^{d-1} = 2
}

TEST(TotalVariation, TwoRungStaircase) {
  const auto params = prop1_params(1, 2, 0.1, 1.0, 2, 2);
  const auto p = build_single_box(params);
  const double s4 = rung_value(params, 4), s5 = rung_value(params, 5), tail = params.tail_value();
  EXPECT_NEAR(total_variation(p, 0), s4 + std::abs(s4 - s5) + std::abs(s5 - tail) + tail, 1e-15);
}

TEST(TotalVariation, PartialSumsSumTheJumps) {
  const auto params = prop1_params(1, 2, 0.1, 1.0, 50);
  const auto p = build_single_box(params);
  double expected = rung_value(params, 2 * params.N);
  for (long k = params.N; k <= 20; ++k) {
    expected += rung_value(params, 2 * k) - rung_value(params, 2 * k + 1);
    if (k < 20) expected += rung_value(params, 2 * k + 2) - rung_value(params, 2 * k + 1);
  }
  EXPECT_NEAR(tv_partial(p, 20, 0), expected, 1e-13);
}

TEST(TotalVariation, GrowthExponentIsOneMinusAlpha) {
  for (auto params : {prop1_params(1, 2, 1.0 / 30.0, 1.0, 10'000), prop2_params(1.0 / 30.0, 1.0, 10'000)}) {
    const ExactSolution exact(build_single_box(params));
    const int axis = 0;
    const auto g0 = tv_growth(exact.initial(), params.N, params.n_max, axis);
    EXPECT_NEAR(g0.exponent, 1.0 - params.exponent(), 0.05);
    const auto evolved = exact.evolve(0.5 * exact.t0());
    const auto g1 = tv_growth(evolved, params.N, params.n_max, axis);
    EXPECT_NEAR(g1.exponent, 1.0 - params.exponent(), 0.05);
    for (std::size_t k = 0; k < g0.n.size(); ++k) {
      EXPECT_LE(g1.tv[k], 2.0 * g0.tv[k]);
      EXPECT_GE(g1.tv[k], 0.5 * g0.tv[k]);
    }
  }
}

TEST(Lemma2, Examples) {
  const auto a = lemma2_check(1.0, 0.5);
  EXPECT_TRUE(a.first);
  EXPECT_TRUE(a.second);
  EXPECT_NEAR(a.first_margin, std::sqrt(2.0) - 1.25, 1e-15);  // margins are divided by x^beta
  EXPECT_NEAR(a.second_margin, std::pow(2.0, 1.5) - 2.5, 1e-15);
  const auto b = lemma2_check(1e6, 0.99);
  EXPECT_TRUE(b.first);
  EXPECT_TRUE(b.second);
  EXPECT_TRUE(lemma2_check(1.0, 1.0 - 1e-9).second);
}

TEST(Lemma2, DomainIsChecked) {
  EXPECT_THROW(lemma2_check(0.5, 0.5), DomainError);
  EXPECT_THROW(lemma2_check(2.0, 1.0), DomainError);
  EXPECT_THROW(lemma2_check(2.0, 0.0), DomainError);
}

TEST(Lemma2, SweepHasNoViolations) {
  const auto s = lemma2_sweep(100'000);
  EXPECT_EQ(s.samples, 100'000u);
  EXPECT_EQ(s.first_violations, 0u);
  EXPECT_EQ(s.second_violations, 0u);
  EXPECT_GT(s.min_first_margin, 0.0);
  EXPECT_GT(s.min_second_margin, 0.0);
}
