#include <gtest/gtest.h>

#include <cmath>

#include "sclaw/errors.hpp"
#include "sclaw/staircase.hpp"

using namespace sclaw;

TEST(Rungs, LengthAndValueAgainstHighPrecisionOracle) {
  const auto p = prop1_params(1, 2, 1.0 / 30.0, 1.0, 40);
  EXPECT_NEAR(rung_length(p, 4), 0.46651649576840371, 1e-15);  // 2^{-1.1}
  const auto p2 = prop1_params(1, 2, 1.0 / 30.0, 2.0, 100);
  EXPECT_NEAR(rung_value(p2, 5), 0.38778619045843366, 1e-15);  // 1 / (2 * 2^{11/30})
  EXPECT_NEAR(rung_value(p2, 4), 2.0 * 0.38778619045843366, 2e-15);
}

TEST(Rungs, FirstPartialSumIsSingleTerm) {
  for (double R : {1.0, 2.0}) {
    const auto p = prop1_params(1, 2, 0.1, R, 200);
    const auto r = build_rungs(p);
    EXPECT_EQ(r.first, 2 * p.N);
    EXPECT_EQ(r.last, 2 * p.n_max + 1);
    EXPECT_DOUBLE_EQ(r.w_at(r.first), r.l_at(r.first));
    EXPECT_DOUBLE_EQ(r.left_at(r.first), 0.0);
  }
}

TEST(Rungs, MonotoneAndAlternating) {
  for (auto p : {prop1_params(1, 2, 1.0 / 30.0, 1.0, 300), prop1_params(2, 3, 0.05, 2.0, 300),
                 prop2_params(0.1, 1.0, 300)}) {
    const auto r = build_rungs(p);
    for (long m = r.first; m <= r.last; ++m) {
      EXPECT_GT(r.l_at(m), 0.0);
      EXPECT_NEAR(r.w_at(m) - r.left_at(m), r.l_at(m), 1e-14 * r.w_at(m));
      if (m > r.first) {
        EXPECT_GT(r.w_at(m), r.w_at(m - 1));
      }
    }
    for (long n = p.N; n < p.n_max; ++n) {
      EXPECT_GT(r.sigma_at(2 * n), r.sigma_at(2 * n + 1));
      EXPECT_LT(r.sigma_at(2 * n + 1), r.sigma_at(2 * n + 2));
    }
  }
}

TEST(Rungs, LimitBracketsTheLongSum) {
  const auto p = prop1_params(1, 2, 0.1, 1.0, 40);
  const auto r = build_rungs(p);
  EXPECT_LE(r.x1_lower, r.x1);
  EXPECT_LE(r.x1, r.x1_upper);
  const auto long_run = build_rungs(prop1_params(1, 2, 0.1, 1.0, 400'000));
  // Both brackets hold the same limit; the long one is tighter.
  EXPECT_LE(r.x1_lower, long_run.x1_upper);
  EXPECT_GE(r.x1_upper, long_run.x1_lower);
  EXPECT_GE(long_run.x1, r.x1_lower);
  EXPECT_LE(long_run.x1, r.x1_upper);
  EXPECT_LT(long_run.x1_upper - long_run.x1_lower, r.x1_upper - r.x1_lower);
}

TEST(Params, MinimalStartIndex) {
  EXPECT_EQ(prop1_params(1, 2, 1.0 / 30.0, 1.0, 40).N, 2);
  EXPECT_EQ(prop1_params(1, 2, 1.0 / 30.0, 2.0, 100).N, 65);  // 1/n < 2^{-6}
  EXPECT_EQ(prop2_params(0.3, 2.0, 100).N, 65);               // 1/n < 2^{-6}
}

TEST(Params, ViolatedInequalitiesAreNamed) {
  BlowupParams p;
  p.N = 1;
  try {
    p.validate();
    FAIL() << "N = 1 with R = 1 must violate 1/n < tail";
  } catch (const ParameterError& e) {
    EXPECT_NE(std::string(e.what()).find("1/n < tail value"), std::string::npos);
  }
  p.N = 2;
  p.epsilon = 0.7;
  EXPECT_THROW(p.validate(), ParameterError);
  p.epsilon = -0.1;
  EXPECT_THROW(p.validate(), ParameterError);
  p.epsilon = 0.1;
  p.n_max = 1;
  EXPECT_THROW(p.validate(), ParameterError);
}

TEST(Params, TailValues) {
  EXPECT_DOUBLE_EQ(prop1_params(1, 2, 0.1, 2.0, 100).tail_value(), 1.0 / 64.0);
  EXPECT_DOUBLE_EQ(prop1_params(1, 3, 0.1, 2.0, 200).tail_value(), 1.0 / 128.0);
  EXPECT_DOUBLE_EQ(prop2_params(0.1, 2.0, 100).tail_value(), 1.0 / 64.0);
}

TEST(SingleBox, Prop1MatchesRungsPieceByPiece) {
  const auto params = prop1_params(1, 2, 1.0 / 30.0, 1.0, 40);
  const auto profile = build_single_box(params);
  const auto r = build_rungs(params);
  EXPECT_TRUE(profile.all_constant());
  EXPECT_EQ(profile.direction, (std::vector<double>{1.0, 0.0}));
  for (long m : {4L, 5L, 9L, 16L, 23L, 38L, 51L, 60L, 77L, 81L}) {
    const double mid = 0.5 * (r.left_at(m) + r.w_at(m));
    EXPECT_DOUBLE_EQ(profile.value_at(mid), r.sigma_at(m)) << "m = " << m;
  }
  const double tail_mid = 0.5 * (r.w_at(r.last) + profile.end);
  EXPECT_DOUBLE_EQ(profile.value_at(tail_mid), params.tail_value());
  EXPECT_EQ(profile.value_at(-0.1), 0.0);
  EXPECT_EQ(profile.value_at(profile.end + 0.1), 0.0);
  EXPECT_DOUBLE_EQ(profile.end, std::max(params.R, r.x1));
  EXPECT_DOUBLE_EQ(profile.max_value(), 2.0 / std::pow(2.0, params.exponent()));
  EXPECT_GE(profile.min_value(), 0.0);
}

TEST(SingleBox, Prop1BoxAndInnerBox) {
  const auto params = prop1_params(1, 2, 0.5, 1.0, 40);
  const auto p = build_single_box(params);
  EXPECT_EQ(p.planar_axes, std::vector<int>{0});
  EXPECT_DOUBLE_EQ(p.support.lower[1], -1.0);
  EXPECT_DOUBLE_EQ(p.support.upper[1], 1.0);
  EXPECT_DOUBLE_EQ(p.inner.upper[1], 0.5);
  EXPECT_DOUBLE_EQ(p.support.lower[0], -1.0);
  EXPECT_DOUBLE_EQ(p.support.upper[0], p.end);
}

TEST(SingleBox, Prop2UsesDiagonalDirectionAndSameValues) {
  const auto params = prop2_params(0.3, 1.0, 20);
  const auto profile = build_single_box(params);
  EXPECT_EQ(profile.direction, (std::vector<double>{1.0, -1.0}));
  const auto r = build_rungs(params);
  for (long m = r.first; m <= r.last; ++m) {
    EXPECT_DOUBLE_EQ(profile.value_at(0.5 * (r.left_at(m) + r.w_at(m))), r.sigma_at(m));
  }
  EXPECT_NEAR(profile.flux->slope(2.0), 8.0, 1e-14);
  EXPECT_TRUE(profile.planar_axes.empty());
}

TEST(SingleBox, TwoRungProfile) {
  const auto params = prop1_params(1, 2, 0.1, 1.0, 2, 2);
  const auto profile = build_single_box(params);
  ASSERT_EQ(profile.pieces.size(), 3u);
  EXPECT_EQ(profile.pieces[0].tag, 4);
  EXPECT_EQ(profile.pieces[1].tag, 5);
  EXPECT_EQ(profile.pieces[2].tag, kTailTag);
}

TEST(SingleBox, NonConvexFluxIsRejected) {
  const auto params = prop1_params(1, 2, 0.1, 1.0, 10);
  const auto concave = polynomial_flux({{0.0, 0.0, 0.0, -1.0}, {0.0, 0.0, 0.5}}, 4.0);
  EXPECT_THROW(build_single_box(params, concave, {1.0, 0.0}), ConstructionError);
}

TEST(SingleBox, FluxBoundBelowDataIsRejected) {
  const auto params = prop1_params(1, 2, 0.1, 1.0, 10);
  EXPECT_THROW(build_single_box(params, power_law_flux(1, 2, 0.5), {1.0, 0.0}), ParameterError);
}

TEST(TwoState, PiecesAndBox) {
  const auto p = build_two_state(power_law_flux(1, 2, 2.0), {1.0, 0.0}, 1.0, 0.25, 1.0);
  ASSERT_EQ(p.pieces.size(), 2u);
  EXPECT_EQ(p.value_at(-0.5), 1.0);
  EXPECT_EQ(p.value_at(0.5), 0.25);
  EXPECT_TRUE(std::isinf(p.end));
  EXPECT_DOUBLE_EQ(p.inner.upper[0], 0.5);
}

TEST(Construction, NamesRoundTrip) {
  EXPECT_EQ(construction_from_string("prop1"), Construction::Prop1);
  EXPECT_EQ(construction_from_string(to_string(Construction::Prop2)), Construction::Prop2);
  EXPECT_THROW(construction_from_string("prop3"), ParameterError);
}
