#include <gtest/gtest.h>

#include "sclaw/config.hpp"
#include "sclaw/errors.hpp"

using namespace sclaw;

namespace {

ConfigError parse_error(const std::string& text) {
  try {
    parse_config_string(text);
  } catch (const ConfigError& e) {
    return e;
  }
  ADD_FAILURE() << "no error for:\n" << text;
  return ConfigError("", 0, "");
}

}  // namespace

TEST(Config, DefaultsWhenEmpty) {
  const auto c = parse_config_string("");
  EXPECT_EQ(c, RunConfig{});
  EXPECT_TRUE(c.analyses.empty());
}

TEST(Config, SectionsRequestAnalysesInOrder) {
  const auto c = parse_config_string("datum = prop2\nepsilon = 0.3\n[tiling]\nboxes = 2\n[times]\n[check-lemmas]\n");
  EXPECT_EQ(c.datum, DatumKind::Prop2);
  EXPECT_DOUBLE_EQ(c.epsilon, 0.3);
  EXPECT_EQ(c.tiling.boxes, 2);
  EXPECT_EQ(c.analyses, (std::vector<std::string>{"tiling", "times", "check-lemmas"}));
}

TEST(Config, ExplicitAnalysesKeyWins) {
  const auto c = parse_config_string("analyses = times, validate\n[seminorm]\ns = 0.45\n");
  EXPECT_EQ(c.analyses, (std::vector<std::string>{"times", "validate"}));
  EXPECT_DOUBLE_EQ(c.seminorm.s, 0.45);
}

TEST(Config, RoundTripIsExact) {
  RunConfig c;
  c.datum = DatumKind::Lemma1Riemann;
  c.epsilon = 1.0 / 30.0;
  c.flux = FluxFamily::Polynomial;
  c.flux_coefficients = {{0.0, 0.1, 0.25}, {0.0, 0.0, 0.0, 1.0 / 3.0}};
  c.direction = {0.6, -0.8};
  c.riemann_left = 0.2;
  c.riemann_right = 1.0 / 7.0;
  c.seed = 17;
  c.out = "out/x";
  c.analyses = {"times", "nondegeneracy"};
  c.validate.cells = {100, 300};
  c.seminorm.s = 0.41234567890123456;
  c.seminorm.truncation_floor = false;
  c.nondegeneracy.v_grid = 12345;
  c.tiling.t0_gap = 0.25;
  const auto back = parse_config_string(serialize_config(c));
  EXPECT_EQ(back, c);
  EXPECT_EQ(serialize_config(back), serialize_config(c));
}

TEST(Config, HashIsStableAndSensitive) {
  RunConfig a;
  RunConfig b = a;
  EXPECT_EQ(config_hash(a), config_hash(b));
  EXPECT_EQ(config_hash(a).size(), 16u);
  b.seminorm.s = 0.41;
  EXPECT_NE(config_hash(a), config_hash(b));
}

TEST(Config, UnknownKeyReportsLine) {
  const auto e = parse_error("datum = prop1\n\n[seminorm]\nsigma = 0.4\n");
  EXPECT_EQ(e.key(), "seminorm.sigma");
  EXPECT_EQ(e.line(), 4);
  EXPECT_STREQ(e.what(), "config:4: key 'seminorm.sigma': unknown key");
}

TEST(Config, OutOfRangeValueNamesKey) {
  const auto e = parse_error("datum = prop1\n[seminorm]\ns = -0.2\n");
  EXPECT_EQ(e.key(), "seminorm.s");
  EXPECT_EQ(e.line(), 3);
}

TEST(Config, MalformedInputIsRejected) {
  EXPECT_EQ(parse_error("epsilon = 0.1\nepsilon = 0.2\n").line(), 2);
  EXPECT_EQ(parse_error("[times]\n[times]\n").line(), 2);
  EXPECT_EQ(parse_error("[plot]\n").key(), "plot");
  EXPECT_EQ(parse_error("datum = prop9\n").key(), "datum");
  EXPECT_EQ(parse_error("n_max = many\n").key(), "n_max");
  EXPECT_EQ(parse_error("just words\n").line(), 1);
  EXPECT_EQ(parse_error("analyses = times, plot\n").key(), "analyses");
  EXPECT_EQ(parse_error("datum = lemma1-riemann\nriemann_left = 1\nriemann_right = 1\n").key(), "riemann_right");
}

TEST(Config, CommentsAndWhitespaceAreIgnored) {
  const auto c = parse_config_string("  # header\n  R   =  2   # trailing\n\n");
  EXPECT_DOUBLE_EQ(c.R, 2.0);
}

TEST(Config, DerivedObjects) {
  auto c = parse_config_string("datum = prop2\nepsilon = 0.3\nR = 2\nn_max = 100\n");
  const auto p = blowup_params(c);
  EXPECT_EQ(p.construction, Construction::Prop2);
  EXPECT_EQ(p.dimension, 2);
  EXPECT_EQ(p.N, 65);
  EXPECT_EQ(config_datum(c).direction, (std::vector<double>{1.0, -1.0}));

  c = parse_config_string("datum = lemma1-riemann\nriemann_left = 0.25\nriemann_right = 1\n");
  EXPECT_THROW(blowup_params(c), ParameterError);
  const auto d = config_datum(c);
  EXPECT_EQ(d.value_at(-0.5), 0.25);
  EXPECT_EQ(d.value_at(0.5), 1.0);
}

TEST(DatumKind, NamesRoundTrip) {
  for (auto k : {DatumKind::Prop1, DatumKind::Prop2, DatumKind::Lemma1Riemann}) {
    EXPECT_EQ(datum_kind_from_string(to_string(k)), k);
  }
  EXPECT_THROW(datum_kind_from_string("x"), std::invalid_argument);
}
