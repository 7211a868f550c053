#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "sclaw/errors.hpp"
#include "sclaw/exact_solution.hpp"
#include "sclaw/profile.hpp"
#include "sclaw/staircase.hpp"

using namespace sclaw;

namespace {

double midpoint_integral(const PlanarProfile& p, double a, double b, int n) {
  const double h = (b - a) / n;
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += p.value_at(a + (i + 0.5) * h);
  return s * h;
}

}  // namespace

TEST(Profile, LocateAndValues) {
  PlanarProfile p;
  p.direction = {1.0};
  p.pieces = {Piece::constant(0.0, 2.0), Piece::constant(1.0, 1.0), Piece::constant(3.0, 0.5)};
  p.end = 4.0;
  EXPECT_EQ(p.locate(-0.1), 3u);
  EXPECT_EQ(p.locate(0.0), 0u);
  EXPECT_EQ(p.locate(2.0), 1u);
  EXPECT_EQ(p.locate(4.0), 3u);
  EXPECT_EQ(p.value_at(3.5), 0.5);
  EXPECT_EQ(p.value_at(5.0), 0.0);
  EXPECT_DOUBLE_EQ(p.integrate(-1.0, 10.0), 2.0 + 2.0 + 0.5);
  EXPECT_DOUBLE_EQ(p.integrate(0.5, 3.5), 1.0 + 2.0 + 0.25);
}

TEST(Profile, MergeEqualConstants) {
  PlanarProfile p;
  p.direction = {1.0};
  p.pieces = {Piece::constant(0.0, 1.0, 4), Piece::constant(1.0, 1.0, 5), Piece::constant(2.0, 3.0, 6)};
  p.end = 3.0;
  merge_equal_constants(p);
  ASSERT_EQ(p.pieces.size(), 2u);
  EXPECT_EQ(p.pieces[1].left, 2.0);
}

TEST(Profile, InvariantViolationsThrow) {
  PlanarProfile p;
  p.direction = {1.0};
  p.pieces = {Piece::constant(1.0, 1.0), Piece::constant(0.5, 2.0)};
  p.end = 3.0;
  EXPECT_THROW(p.check_invariants(), ConstructionError);
}

TEST(Profile, FanIntegralMatchesQuadrature) {
  const auto params = prop1_params(1, 2, 0.5, 1.0, 20);
  const ExactSolution exact(build_single_box(params));
  const auto at = exact.evolve(0.5 * exact.t0());
  EXPECT_FALSE(at.all_constant());
  const double a = at.begin(), b = at.end;
  EXPECT_NEAR(at.integrate(a, b), midpoint_integral(at, a, b, 400'000), 1e-6);
  const double c = a + 0.37 * (b - a), d = a + 0.61 * (b - a);
  EXPECT_NEAR(at.integrate(c, d), midpoint_integral(at, c, d, 400'000), 1e-6);
}

TEST(Profile, CrossSection) {
  const auto p1 = build_single_box(prop1_params(1, 2, 0.5, 1.0, 20));
  EXPECT_DOUBLE_EQ(p1.cross_section(), 1.0);  // (2r)^{d-1} with r = 1/2
  const auto p3 = build_single_box(prop1_params(1, 3, 0.5, 2.0, 200));
  EXPECT_DOUBLE_EQ(p3.cross_section(), 4.0);
}

TEST(Profile, WriteReadRoundTrip) {
  const auto params = prop1_params(1, 2, 0.3, 1.0, 12);
  const ExactSolution exact(build_single_box(params));
  for (double t : {0.0, 0.4 * exact.t0()}) {
    const auto original = t > 0.0 ? exact.evolve(t) : exact.initial();
    std::stringstream ss;
    write_profile(ss, original);
    const auto back = read_profile(ss, original.flux);
    ASSERT_EQ(back.pieces.size(), original.pieces.size());
    for (std::size_t i = 0; i < back.pieces.size(); ++i) {
      EXPECT_EQ(back.pieces[i].left, original.pieces[i].left);
      EXPECT_EQ(back.pieces[i].kind, original.pieces[i].kind);
      EXPECT_EQ(back.pieces[i].value, original.pieces[i].value);
      EXPECT_EQ(back.pieces[i].right_value, original.pieces[i].right_value);
      EXPECT_EQ(back.pieces[i].center, original.pieces[i].center);
      EXPECT_EQ(back.pieces[i].tag, original.pieces[i].tag);
    }
    EXPECT_EQ(back.end, original.end);
    EXPECT_EQ(back.time, original.time);
    EXPECT_EQ(back.direction, original.direction);
    EXPECT_EQ(back.support.lower, original.support.lower);
    EXPECT_EQ(back.inner.upper, original.inner.upper);
    EXPECT_EQ(back.planar_axes, original.planar_axes);
    EXPECT_EQ(back.header, original.header);
  }
}

TEST(Profile, ReadReportsLineOfBadRow) {
  std::stringstream ss("# direction 1\n# time 0\n# end 2\n0 const 1 1 0 4\n1 ramp 2 2 0 5\n");
  try {
    read_profile(ss);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("line 5"), std::string::npos) << e.what();
  }
}

TEST(Box, ContainsTranslateVolume) {
  Box b{{-1.0, -2.0}, {1.0, 2.0}};
  EXPECT_TRUE(b.contains({0.0, 1.9}));
  EXPECT_FALSE(b.contains({1.1, 0.0}));
  EXPECT_DOUBLE_EQ(b.volume(), 8.0);
  const auto t = b.translated(0, 5.0);
  EXPECT_DOUBLE_EQ(t.lower[0], 4.0);
  EXPECT_DOUBLE_EQ(t.upper[1], 2.0);
}
