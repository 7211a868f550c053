#include "sclaw/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>

#include "sclaw/errors.hpp"

namespace sclaw {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  if (trim(s).empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

double to_double(const std::string& v) {
  std::size_t used = 0;
  const double x = std::stod(v, &used);
  if (used != v.size()) throw std::invalid_argument("trailing characters");
  return x;
}

long to_long(const std::string& v) {
  std::size_t used = 0;
  const long x = std::stol(v, &used);
  if (used != v.size()) throw std::invalid_argument("trailing characters");
  return x;
}

bool to_bool(const std::string& v) {
  if (v == "true") return true;
  if (v == "false") return false;
  throw std::invalid_argument("expected true or false");
}

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

std::string fmt_list(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + fmt(v[i]);
  return out;
}

std::vector<double> parse_list(const std::string& v) {
  std::vector<double> out;
  for (const auto& item : split(v, ',')) out.push_back(to_double(item));
  return out;
}

struct Field {
  std::string section;  // "" for the top block
  std::string key;
  std::function<void(RunConfig&, const std::string&)> set;
  std::function<std::string(const RunConfig&)> get;
};

template <typename T>
Field real(std::string section, std::string key, T RunConfig::*block, double T::*member) {
  return {std::move(section), std::move(key), [=](RunConfig& c, const std::string& v) { c.*block.*member = to_double(v); },
          [=](const RunConfig& c) { return fmt(c.*block.*member); }};
}

template <typename T, typename I>
Field integer(std::string section, std::string key, T RunConfig::*block, I T::*member) {
  return {std::move(section), std::move(key),
          [=](RunConfig& c, const std::string& v) { c.*block.*member = static_cast<I>(to_long(v)); },
          [=](const RunConfig& c) { return std::to_string(c.*block.*member); }};
}

Field top_real(std::string key, double RunConfig::*member) {
  return {"", std::move(key), [=](RunConfig& c, const std::string& v) { c.*member = to_double(v); },
          [=](const RunConfig& c) { return fmt(c.*member); }};
}

template <typename I>
Field top_integer(std::string key, I RunConfig::*member) {
  return {"", std::move(key), [=](RunConfig& c, const std::string& v) { c.*member = static_cast<I>(to_long(v)); },
          [=](const RunConfig& c) { return std::to_string(c.*member); }};
}

const std::vector<Field>& fields() {
  static const std::vector<Field> table = [] {
    std::vector<Field> f;
    f.push_back({"", "datum", [](RunConfig& c, const std::string& v) { c.datum = datum_kind_from_string(v); },
                 [](const RunConfig& c) { return to_string(c.datum); }});
    f.push_back(top_integer("zeta", &RunConfig::zeta));
    f.push_back(top_integer("dimension", &RunConfig::dimension));
    f.push_back(top_real("epsilon", &RunConfig::epsilon));
    f.push_back(top_real("R", &RunConfig::R));
    f.push_back(top_integer("N", &RunConfig::N));
    f.push_back(top_integer("n_max", &RunConfig::n_max));
    f.push_back(top_real("inner_fraction", &RunConfig::inner_fraction));
    f.push_back({"", "flux", [](RunConfig& c, const std::string& v) { c.flux = flux_family_from_string(v); },
                 [](const RunConfig& c) { return to_string(c.flux); }});
    f.push_back({"", "flux_coefficients",
                 [](RunConfig& c, const std::string& v) {
                   c.flux_coefficients.clear();
                   for (const auto& comp : split(v, ';')) c.flux_coefficients.push_back(parse_list(comp));
                 },
                 [](const RunConfig& c) {
                   std::string out;
                   for (std::size_t k = 0; k < c.flux_coefficients.size(); ++k) {
                     out += (k ? "; " : "") + fmt_list(c.flux_coefficients[k]);
                   }
                   return out;
                 }});
    f.push_back(top_real("flux_u_bound", &RunConfig::flux_u_bound));
    f.push_back({"", "direction", [](RunConfig& c, const std::string& v) { c.direction = parse_list(v); },
                 [](const RunConfig& c) { return fmt_list(c.direction); }});
    f.push_back(top_real("riemann_left", &RunConfig::riemann_left));
    f.push_back(top_real("riemann_right", &RunConfig::riemann_right));
    f.push_back(top_integer("seed", &RunConfig::seed));
    f.push_back({"", "out", [](RunConfig& c, const std::string& v) { c.out = v; },
                 [](const RunConfig& c) { return c.out; }});
    f.push_back({"", "analyses", [](RunConfig& c, const std::string& v) { c.analyses = split(v, ','); },
                 [](const RunConfig& c) {
                   std::string out;
                   for (std::size_t i = 0; i < c.analyses.size(); ++i) out += (i ? ", " : "") + c.analyses[i];
                   return out;
                 }});

    using V = ValidateConfig;
    f.push_back({"validate", "cells",
                 [](RunConfig& c, const std::string& v) {
                   c.validate.cells.clear();
                   for (const auto& item : split(v, ',')) c.validate.cells.push_back(to_long(item));
                 },
                 [](const RunConfig& c) {
                   std::string out;
                   for (std::size_t i = 0; i < c.validate.cells.size(); ++i) {
                     out += (i ? ", " : "") + std::to_string(c.validate.cells[i]);
                   }
                   return out;
                 }});
    f.push_back(real("validate", "time_fraction", &RunConfig::validate, &V::time_fraction));
    f.push_back(real("validate", "cfl", &RunConfig::validate, &V::cfl));
    f.push_back(real("validate", "min_order", &RunConfig::validate, &V::min_order));
    f.push_back(real("validate", "max_order", &RunConfig::validate, &V::max_order));
    f.push_back(real("validate", "max_error", &RunConfig::validate, &V::max_error));

    using S = SeminormConfig;
    f.push_back(real("seminorm", "s", &RunConfig::seminorm, &S::s));
    f.push_back(real("seminorm", "p", &RunConfig::seminorm, &S::p));
    f.push_back(real("seminorm", "theta", &RunConfig::seminorm, &S::theta));
    f.push_back(integer("seminorm", "axis", &RunConfig::seminorm, &S::axis));
    f.push_back(real("seminorm", "h_min", &RunConfig::seminorm, &S::h_min));
    f.push_back(real("seminorm", "h_max", &RunConfig::seminorm, &S::h_max));
    f.push_back(integer("seminorm", "points_per_decade", &RunConfig::seminorm, &S::points_per_decade));
    f.push_back(real("seminorm", "trim_decades", &RunConfig::seminorm, &S::trim_decades));
    f.push_back({"seminorm", "truncation_floor",
                 [](RunConfig& c, const std::string& v) { c.seminorm.truncation_floor = to_bool(v); },
                 [](const RunConfig& c) { return std::string(c.seminorm.truncation_floor ? "true" : "false"); }});
    f.push_back(real("seminorm", "time_fraction", &RunConfig::seminorm, &S::time_fraction));
    f.push_back(real("seminorm", "tolerance", &RunConfig::seminorm, &S::tolerance));
    f.push_back(real("seminorm", "bounded_slope", &RunConfig::seminorm, &S::bounded_slope));
    f.push_back(real("seminorm", "tv_tolerance", &RunConfig::seminorm, &S::tv_tolerance));
    f.push_back(integer("seminorm", "series_terms", &RunConfig::seminorm, &S::series_terms));

    using D = NondegeneracyConfig;
    f.push_back(real("nondegeneracy", "delta_min", &RunConfig::nondegeneracy, &D::delta_min));
    f.push_back(real("nondegeneracy", "delta_max", &RunConfig::nondegeneracy, &D::delta_max));
    f.push_back(integer("nondegeneracy", "per_decade", &RunConfig::nondegeneracy, &D::per_decade));
    f.push_back(integer("nondegeneracy", "sphere_samples", &RunConfig::nondegeneracy, &D::sphere_samples));
    f.push_back(integer("nondegeneracy", "v_grid", &RunConfig::nondegeneracy, &D::v_grid));
    f.push_back(real("nondegeneracy", "u_bound", &RunConfig::nondegeneracy, &D::u_bound));
    f.push_back(real("nondegeneracy", "expected", &RunConfig::nondegeneracy, &D::expected));
    f.push_back(real("nondegeneracy", "tolerance", &RunConfig::nondegeneracy, &D::tolerance));

    f.push_back(integer("check-lemmas", "samples", &RunConfig::lemmas, &LemmasConfig::samples));

    f.push_back(integer("tiling", "boxes", &RunConfig::tiling, &TilingConfig::boxes));
    f.push_back(real("tiling", "t0_gap", &RunConfig::tiling, &TilingConfig::t0_gap));
    return f;
  }();
  return table;
}

const Field* find_field(const std::string& section, const std::string& key) {
  for (const auto& f : fields()) {
    if (f.section == section && f.key == key) return &f;
  }
  return nullptr;
}

using LineMap = std::map<std::string, int>;

int line_of(const LineMap& lines, const std::string& key) {
  const auto it = lines.find(key);
  return it == lines.end() ? 0 : it->second;
}

void check(bool ok, const LineMap& lines, const std::string& key, const std::string& message) {
  if (!ok) throw ConfigError(key, line_of(lines, key), message);
}

void validate_with_lines(const RunConfig& c, const LineMap& lines) {
  check(c.zeta >= 1, lines, "zeta", "must be >= 1");
  check(c.dimension >= 1, lines, "dimension", "must be >= 1");
  check(c.epsilon > 0.0, lines, "epsilon", "must be positive");
  check(c.R > 0.0, lines, "R", "must be positive");
  check(c.N >= 0, lines, "N", "must be >= 0 (0 selects the smallest admissible N)");
  check(c.n_max >= 1, lines, "n_max", "must be >= 1");
  check(c.inner_fraction > 0.0 && c.inner_fraction < 1.0, lines, "inner_fraction", "must lie in (0, 1)");
  check(c.flux_u_bound >= 0.0, lines, "flux_u_bound", "must be >= 0");
  check(c.seed >= 0, lines, "seed", "must be >= 0");
  check(!c.out.empty(), lines, "out", "must not be empty");
  for (const auto& a : c.analyses) {
    const auto& known = known_analyses();
    check(std::find(known.begin(), known.end(), a) != known.end(), lines, "analyses", "unknown analysis '" + a + "'");
  }
  if (c.datum == DatumKind::Lemma1Riemann) {
    check(c.riemann_left != c.riemann_right, lines, "riemann_right", "must differ from riemann_left");
    if (c.flux == FluxFamily::Polynomial) {
      check(!c.flux_coefficients.empty(), lines, "flux_coefficients", "needed by the polynomial flux");
    }
  }

  const auto& v = c.validate;
  check(!v.cells.empty() && std::all_of(v.cells.begin(), v.cells.end(), [](long n) { return n >= 2; }), lines,
        "validate.cells", "needs at least one count >= 2");
  check(v.time_fraction >= 0.0 && v.time_fraction < 1.0, lines, "validate.time_fraction", "must lie in [0, 1)");
  check(v.cfl > 0.0 && v.cfl < 1.0, lines, "validate.cfl", "must lie in (0, 1)");
  check(v.min_order <= v.max_order, lines, "validate.max_order", "must be >= min_order");
  check(v.max_error > 0.0, lines, "validate.max_error", "must be positive");

  const auto& s = c.seminorm;
  check(s.s > 0.0 && s.s < 1.0, lines, "seminorm.s", "must lie in (0, 1)");
  check(s.p >= 1.0, lines, "seminorm.p", "must be >= 1");
  check(s.theta > 0.0, lines, "seminorm.theta", "must be positive");
  check(s.axis >= 1 && s.axis <= c.dimension, lines, "seminorm.axis", "must lie in 1..dimension");
  check(s.h_min >= 0.0, lines, "seminorm.h_min", "must be >= 0");
  check(s.h_max >= 0.0 && (s.h_max == 0.0 || s.h_max > s.h_min), lines, "seminorm.h_max", "must exceed h_min");
  check(s.points_per_decade >= 1, lines, "seminorm.points_per_decade", "must be >= 1");
  check(s.trim_decades >= 0.0, lines, "seminorm.trim_decades", "must be >= 0");
  check(s.time_fraction >= 0.0 && s.time_fraction < 1.0, lines, "seminorm.time_fraction", "must lie in [0, 1)");
  check(s.tolerance > 0.0, lines, "seminorm.tolerance", "must be positive");
  check(s.tv_tolerance > 0.0, lines, "seminorm.tv_tolerance", "must be positive");
  check(s.series_terms >= 1, lines, "seminorm.series_terms", "must be >= 1");

  const auto& d = c.nondegeneracy;
  check(d.delta_min > 0.0, lines, "nondegeneracy.delta_min", "must be positive");
  check(d.delta_max > d.delta_min && d.delta_max < 1.0, lines, "nondegeneracy.delta_max", "must lie in (delta_min, 1)");
  check(d.per_decade >= 1, lines, "nondegeneracy.per_decade", "must be >= 1");
  check(d.sphere_samples >= 0, lines, "nondegeneracy.sphere_samples", "must be >= 0");
  check(d.v_grid >= 2, lines, "nondegeneracy.v_grid", "must be >= 2");
  check(d.u_bound >= 0.0, lines, "nondegeneracy.u_bound", "must be >= 0");
  check(d.tolerance > 0.0, lines, "nondegeneracy.tolerance", "must be positive");

  check(c.lemmas.samples >= 1, lines, "check-lemmas.samples", "must be >= 1");
  check(c.tiling.boxes >= 1, lines, "tiling.boxes", "must be >= 1");
  check(c.tiling.t0_gap >= 0.0, lines, "tiling.t0_gap", "must be >= 0");
}

}  // namespace

std::string to_string(DatumKind k) {
  switch (k) {
    case DatumKind::Prop1: return "prop1";
    case DatumKind::Prop2: return "prop2";
    case DatumKind::Lemma1Riemann: return "lemma1-riemann";
  }
  return "unknown";
}

DatumKind datum_kind_from_string(const std::string& name) {
  if (name == "prop1") return DatumKind::Prop1;
  if (name == "prop2") return DatumKind::Prop2;
  if (name == "lemma1-riemann") return DatumKind::Lemma1Riemann;
  throw std::invalid_argument("expected prop1, prop2 or lemma1-riemann");
}

const std::vector<std::string>& known_analyses() {
  static const std::vector<std::string> names{"times", "validate", "seminorm", "nondegeneracy", "check-lemmas", "tiling"};
  return names;
}

RunConfig parse_config(std::istream& is) {
  RunConfig c;
  LineMap lines;
  std::string section;
  std::vector<std::string> sections;
  bool analyses_given = false;
  std::string raw;
  int line = 0;
  while (std::getline(is, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string text = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (text.empty()) continue;
    if (text.front() == '[') {
      if (text.back() != ']') throw ConfigError("", line, "unterminated section header");
      section = trim(text.substr(1, text.size() - 2));
      const auto& known = known_analyses();
      if (std::find(known.begin(), known.end(), section) == known.end()) {
        throw ConfigError(section, line, "unknown section");
      }
      if (std::find(sections.begin(), sections.end(), section) != sections.end()) {
        throw ConfigError(section, line, "duplicate section");
      }
      sections.push_back(section);
      continue;
    }
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw ConfigError("", line, "expected key = value");
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    const std::string full = section.empty() ? key : section + "." + key;
    const Field* f = find_field(section, key);
    if (f == nullptr) throw ConfigError(full, line, "unknown key");
    if (lines.count(full)) throw ConfigError(full, line, "duplicate key");
    lines[full] = line;
    try {
      f->set(c, value);
    } catch (const std::exception& e) {
      throw ConfigError(full, line, "bad value '" + value + "': " + e.what());
    }
    if (full == "analyses") analyses_given = true;
  }
  if (!analyses_given) c.analyses = sections;
  validate_with_lines(c, lines);
  return c;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("", 0, "cannot open '" + path + "'");
  return parse_config(is);
}

RunConfig parse_config_string(const std::string& text) {
  std::istringstream is(text);
  return parse_config(is);
}

std::string serialize_config(const RunConfig& config) {
  std::ostringstream os;
  std::string section;
  for (const auto& f : fields()) {
    if (f.section != section) {
      section = f.section;
      os << "\n[" << section << "]\n";
    }
    os << f.key << " = " << f.get(config) << "\n";
  }
  return os.str();
}

void validate_config(const RunConfig& config) { validate_with_lines(config, {}); }

BlowupParams blowup_params(const RunConfig& c) {
  BlowupParams p;
  switch (c.datum) {
    case DatumKind::Prop1: p.construction = Construction::Prop1; break;
    case DatumKind::Prop2: p.construction = Construction::Prop2; break;
    case DatumKind::Lemma1Riemann: throw ParameterError("the lemma1-riemann datum has no staircase parameters");
  }
  p.zeta = c.zeta;
  p.dimension = c.datum == DatumKind::Prop2 ? 2 : c.dimension;
  p.epsilon = c.epsilon;
  p.R = c.R;
  p.N = c.N;
  p.n_max = c.n_max;
  p.inner_fraction = c.inner_fraction;
  return resolve(p);
}

FluxSpec config_flux(const RunConfig& c) {
  if (c.datum != DatumKind::Lemma1Riemann) return default_flux(blowup_params(c), c.flux_u_bound);
  const double bound = c.flux_u_bound > 0.0 ? c.flux_u_bound
                                            : 2.0 * std::max(std::abs(c.riemann_left), std::abs(c.riemann_right));
  switch (c.flux) {
    case FluxFamily::PowerLaw: return power_law_flux(c.zeta, c.dimension, bound);
    case FluxFamily::Prop2Pair: return prop2_pair_flux(bound);
    case FluxFamily::Polynomial: return polynomial_flux(c.flux_coefficients, bound);
  }
  throw ParameterError("unknown flux family");
}

PlanarProfile config_datum(const RunConfig& c) {
  const FluxSpec flux = config_flux(c);
  if (c.datum == DatumKind::Lemma1Riemann) {
    std::vector<double> dir = c.direction;
    if (dir.empty()) {
      dir.assign(static_cast<std::size_t>(flux.dimension()), 0.0);
      dir[0] = 1.0;
    }
    return build_two_state(flux, dir, c.riemann_left, c.riemann_right, c.R, c.inner_fraction);
  }
  const BlowupParams p = blowup_params(c);
  return build_single_box(p, flux, c.direction.empty() ? default_direction(p) : c.direction);
}

std::string config_hash(const RunConfig& config) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : serialize_config(config)) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

}  // namespace sclaw
