#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sclaw/flux.hpp"
#include "sclaw/profile.hpp"
#include "sclaw/staircase.hpp"

namespace sclaw {

enum class DatumKind { Prop1, Prop2, Lemma1Riemann };

std::string to_string(DatumKind k);
DatumKind datum_kind_from_string(const std::string& name);

struct ValidateConfig {
  std::vector<long> cells{1024, 2048, 4096};
  double time_fraction = 0.5;  // t = time_fraction * t0
  double cfl = 0.9;
  double min_order = 0.7;
  double max_order = 1.3;
  double max_error = 1e-2;  // on the finest grid
  bool operator==(const ValidateConfig&) const = default;
};

struct SeminormConfig {
  double s = 0.4;
  double p = 1.0;
  double theta = 1.0;
  int axis = 1;          // 1-based direction index
  double h_min = 0.0;    // 0: l_{2 n_max}
  double h_max = 0.0;    // 0: l_{2N}
  int points_per_decade = 64;
  double trim_decades = 0.5;
  bool truncation_floor = true;  // fit only where h >= l_{2 floor(sqrt(n_max))}
  double time_fraction = 0.0;    // evaluate at t = time_fraction * t0
  double tolerance = 0.05;       // |kappa_fitted - kappa| for s >= 1/q
  double bounded_slope = 0.02;   // kappa_fitted ceiling for s < 1/q
  double tv_tolerance = 0.05;    // |TV growth exponent - (1 - alpha')|
  long series_terms = 1'000'000;
  bool operator==(const SeminormConfig&) const = default;
};

struct NondegeneracyConfig {
  double delta_min = 1e-8;
  double delta_max = 1e-1;
  int per_decade = 4;
  long sphere_samples = 1000;
  long v_grid = 1'000'000;
  double u_bound = 0.0;    // 0: the flux bound
  double expected = 0.0;   // 0: 1/q of the construction
  double tolerance = 0.05;
  bool operator==(const NondegeneracyConfig&) const = default;
};

struct LemmasConfig {
  long samples = 100'000;
  bool operator==(const LemmasConfig&) const = default;
};

struct TilingConfig {
  int boxes = 3;
  double t0_gap = 1.0;
  bool operator==(const TilingConfig&) const = default;
};

struct RunConfig {
  DatumKind datum = DatumKind::Prop1;
  int zeta = 1;
  int dimension = 2;
  double epsilon = 1.0 / 30.0;
  double R = 1.0;
  long N = 0;
  long n_max = 40;
  double inner_fraction = 0.5;

  FluxFamily flux = FluxFamily::PowerLaw;  // Lemma1Riemann only; the staircases fix their flux
  std::vector<std::vector<double>> flux_coefficients;  // polynomial family, one list per component
  double flux_u_bound = 0.0;                           // 0: twice the data bound
  std::vector<double> direction;                       // empty: construction default
  double riemann_left = 1.0;
  double riemann_right = 0.0;

  long seed = 0;
  std::string out = "out";
  std::vector<std::string> analyses;  // in order of their sections

  ValidateConfig validate;
  SeminormConfig seminorm;
  NondegeneracyConfig nondegeneracy;
  LemmasConfig lemmas;
  TilingConfig tiling;

  bool operator==(const RunConfig&) const = default;
};

/// Analyses a config section may request.
const std::vector<std::string>& known_analyses();

/// Flat `key = value` lines; `[name]` opens the parameter block of analysis `name` and requests it.
/// `#` starts a comment.  Throws ConfigError with line and key for unknown keys and bad values.
RunConfig parse_config(std::istream& is);
RunConfig parse_config_file(const std::string& path);
RunConfig parse_config_string(const std::string& text);

/// Writes every key; parse_config(serialize_config(c)) == c.
std::string serialize_config(const RunConfig& config);

/// Throws ConfigError naming the key of the first out-of-range value.
void validate_config(const RunConfig& config);

/// Staircase parameters of a Prop1/Prop2 config (ParameterError for the Riemann datum).
BlowupParams blowup_params(const RunConfig& config);

/// Flux the config's datum evolves under.
FluxSpec config_flux(const RunConfig& config);

/// Initial datum of the config.
PlanarProfile config_datum(const RunConfig& config);

/// 64-bit FNV-1a of the serialized config.
std::string config_hash(const RunConfig& config);

}  // namespace sclaw
