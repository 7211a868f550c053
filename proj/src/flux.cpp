#include "sclaw/flux.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "sclaw/errors.hpp"

namespace sclaw {

namespace {

double horner(const std::vector<double>& c, double u) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * u + *it;
  return acc;
}

std::vector<double> differentiate(const std::vector<double>& c) {
  std::vector<double> d;
  for (std::size_t j = 1; j < c.size(); ++j) d.push_back(static_cast<double>(j) * c[j]);
  return d;
}

// |u|^k with sign(u) attached, i.e. the derivative of |u|^{k+1}/(k+1).
double signed_power(double u, int k) {
  const double m = std::pow(std::abs(u), k);
  return u < 0.0 ? -m : m;
}

void check_bound(const FluxSpec& spec, double u) {
  if (!(std::abs(u) <= spec.u_bound)) {
    std::ostringstream os;
    os << "state " << u << " outside [-R0, R0] with R0 = " << spec.u_bound;
    throw DomainError(os.str());
  }
}

}  // namespace

ScalarFlux ScalarFlux::abs_power(int power) {
  if (power < 2) throw ParameterError("abs-power flux needs power >= 2");
  ScalarFlux f;
  f.power_ = power;
  return f;
}

ScalarFlux ScalarFlux::polynomial(std::vector<double> coefficients) {
  ScalarFlux f;
  f.coefficients_ = std::move(coefficients);
  return f;
}

double ScalarFlux::value(double u) const {
  if (power_ > 0) return std::pow(std::abs(u), power_) / power_;
  return horner(coefficients_, u);
}

double ScalarFlux::slope(double u) const {
  if (power_ > 0) return signed_power(u, power_ - 1);
  return horner(differentiate(coefficients_), u);
}

double ScalarFlux::curvature(double u) const {
  if (power_ > 0) return (power_ - 1) * std::pow(std::abs(u), power_ - 2);
  return horner(differentiate(differentiate(coefficients_)), u);
}

double ScalarFlux::secant(double a, double b) const {
  if (a == b) return slope(a);
  // (a^j - b^j)/(a - b) = sum_i a^i b^{j-1-i}
  auto divided_power = [&](int j) {
    double acc = 0.0, ai = 1.0;
    for (int i = 0; i < j; ++i) {
      acc += ai * std::pow(b, j - 1 - i);
      ai *= a;
    }
    return acc;
  };
  if (power_ > 0) {
    if ((a < 0.0) != (b < 0.0)) return (value(a) - value(b)) / (a - b);
    const double sign = (a < 0.0 && power_ % 2 == 1) ? -1.0 : 1.0;
    return sign * divided_power(power_) / power_;
  }
  double acc = 0.0;
  for (std::size_t j = 1; j < coefficients_.size(); ++j) acc += coefficients_[j] * divided_power(static_cast<int>(j));
  return acc;
}

std::vector<double> ScalarFlux::nonnegative_branch() const {
  if (power_ == 0) return coefficients_;
  std::vector<double> c(static_cast<std::size_t>(power_) + 1, 0.0);
  c.back() = 1.0 / power_;
  return c;
}

std::string to_string(FluxFamily family) {
  switch (family) {
    case FluxFamily::PowerLaw: return "power-law";
    case FluxFamily::Prop2Pair: return "prop2-pair";
    case FluxFamily::Polynomial: return "polynomial";
  }
  return "unknown";
}

FluxFamily flux_family_from_string(const std::string& name) {
  if (name == "power-law") return FluxFamily::PowerLaw;
  if (name == "prop2-pair") return FluxFamily::Prop2Pair;
  if (name == "polynomial") return FluxFamily::Polynomial;
  throw ParameterError("unknown flux family '" + name + "'");
}

FluxSpec power_law_flux(int zeta, int dimension, double u_bound) {
  if (zeta < 1 || dimension < 1) throw ParameterError("power-law flux needs zeta >= 1 and d >= 1");
  if (!(u_bound > 0.0)) throw ParameterError("u_bound must be positive");
  FluxSpec spec;
  spec.family = FluxFamily::PowerLaw;
  spec.zeta = zeta;
  spec.u_bound = u_bound;
  for (int k = 1; k <= dimension; ++k) spec.components.push_back(ScalarFlux::abs_power(zeta + dimension + 2 - k));
  return spec;
}

FluxSpec prop2_pair_flux(double u_bound) {
  if (!(u_bound > 0.0)) throw ParameterError("u_bound must be positive");
  FluxSpec spec;
  spec.family = FluxFamily::Prop2Pair;
  spec.u_bound = u_bound;
  spec.components.push_back(ScalarFlux::polynomial({0.25, 0.0, 0.5, 0.0, 0.25}));
  spec.components.push_back(ScalarFlux::polynomial({0.0, 0.0, 0.5}));
  return spec;
}

FluxSpec polynomial_flux(std::vector<std::vector<double>> coefficients, double u_bound) {
  if (coefficients.empty()) throw ParameterError("polynomial flux needs at least one component");
  if (!(u_bound > 0.0)) throw ParameterError("u_bound must be positive");
  FluxSpec spec;
  spec.family = FluxFamily::Polynomial;
  spec.u_bound = u_bound;
  for (auto& c : coefficients) spec.components.push_back(ScalarFlux::polynomial(std::move(c)));
  return spec;
}

std::vector<double> eval_flux(const FluxSpec& spec, double u) {
  check_bound(spec, u);
  std::vector<double> out;
  out.reserve(spec.components.size());
  for (const auto& c : spec.components) out.push_back(c.value(u));
  return out;
}

std::vector<double> eval_flux_prime(const FluxSpec& spec, double u) {
  check_bound(spec, u);
  std::vector<double> out;
  out.reserve(spec.components.size());
  for (const auto& c : spec.components) out.push_back(c.slope(u));
  return out;
}

double max_axis_speed(const FluxSpec& spec, double lo, double hi) {
  constexpr int kSamples = 1024;
  double best = 0.0;
  for (int i = 0; i <= kSamples; ++i) {
    const double u = lo + (hi - lo) * i / kSamples;
    for (const auto& c : spec.components) best = std::max(best, std::abs(c.slope(u)));
  }
  return best;
}

double derivative_consistency_error(const FluxSpec& spec, double delta, int samples) {
  double worst = 0.0;
  const double r0 = spec.u_bound;
  for (int i = 0; i < samples; ++i) {
    const double u = -r0 + 2.0 * r0 * (i + 0.5) / samples;
    for (const auto& c : spec.components) {
      const double fd = (c.value(u + delta) - c.value(u)) / delta;
      worst = std::max(worst, std::abs(fd - c.slope(u)));
    }
  }
  return worst;
}

EffectiveFlux::EffectiveFlux(FluxSpec spec, std::vector<double> direction)
    : EffectiveFlux(spec, std::move(direction), 0.5 * spec.u_bound) {}

EffectiveFlux::EffectiveFlux(FluxSpec spec, std::vector<double> direction, double base_point)
    : spec_(std::move(spec)), direction_(std::move(direction)) {
  if (static_cast<int>(direction_.size()) != spec_.dimension()) {
    throw ParameterError("direction length does not match flux dimension");
  }
  if (std::all_of(direction_.begin(), direction_.end(), [](double v) { return v == 0.0; })) {
    throw ParameterError("effective flux direction must be nonzero");
  }
  if (std::none_of(spec_.components.begin(), spec_.components.end(), [](const auto& c) { return c.is_abs_power(); })) {
    std::vector<double> sum;
    for (std::size_t k = 0; k < direction_.size(); ++k) {
      const auto& ck = spec_.components[k].coefficients();
      if (sum.size() < ck.size()) sum.resize(ck.size(), 0.0);
      for (std::size_t j = 0; j < ck.size(); ++j) sum[j] += direction_[k] * ck[j];
    }
    combined_ = ScalarFlux::polynomial(std::move(sum));
  }
  locate_window(base_point);
  detect_monomial();
  locate_sonic_point();
}

double EffectiveFlux::value(double u) const {
  if (combined_) return combined_->value(u);
  double acc = 0.0;
  for (std::size_t k = 0; k < direction_.size(); ++k) acc += direction_[k] * spec_.components[k].value(u);
  return acc;
}

double EffectiveFlux::slope(double u) const {
  if (combined_) return combined_->slope(u);
  double acc = 0.0;
  for (std::size_t k = 0; k < direction_.size(); ++k) acc += direction_[k] * spec_.components[k].slope(u);
  return acc;
}

double EffectiveFlux::curvature(double u) const {
  if (combined_) return combined_->curvature(u);
  double acc = 0.0;
  for (std::size_t k = 0; k < direction_.size(); ++k) acc += direction_[k] * spec_.components[k].curvature(u);
  return acc;
}

double EffectiveFlux::secant(double a, double b) const {
  if (combined_) return combined_->secant(a, b);
  double acc = 0.0;
  for (std::size_t k = 0; k < direction_.size(); ++k) acc += direction_[k] * spec_.components[k].secant(a, b);
  return acc;
}

void EffectiveFlux::locate_window(double base_point) {
  constexpr int kSamples = 4000;
  const double r0 = spec_.u_bound;
  const double step = 2.0 * r0 / kSamples;
  const double fd = 0.25 * step;
  std::vector<double> u(kSamples + 1);
  std::vector<bool> positive(kSamples + 1);
  for (int i = 0; i <= kSamples; ++i) {
    u[i] = -r0 + i * step;
    const double second = (slope(u[i] + fd) - slope(u[i] - fd)) / (2.0 * fd);
    positive[i] = second > 0.0;
  }

  // Maximal runs of positive samples; prefer the one holding the base point, else the longest.
  int best_lo = -1, best_hi = -1, base_lo = -1, base_hi = -1;
  for (int i = 0; i <= kSamples;) {
    if (!positive[i]) {
      ++i;
      continue;
    }
    int j = i;
    while (j + 1 <= kSamples && positive[j + 1]) ++j;
    if (best_lo < 0 || j - i > best_hi - best_lo) {
      best_lo = i;
      best_hi = j;
    }
    if (u[i] - 0.5 * step <= base_point && base_point <= u[j] + 0.5 * step) {
      base_lo = i;
      base_hi = j;
    }
    i = j + 1;
  }
  if (best_lo < 0) throw ConstructionError("no convexity window: g'' <= 0 on all of [-R0, R0]");
  const int lo = base_lo >= 0 ? base_lo : best_lo;
  const int hi = base_lo >= 0 ? base_hi : best_hi;
  window_.lo = lo == 0 ? -r0 : u[lo] - 0.5 * step;
  window_.hi = hi == kSamples ? r0 : u[hi] + 0.5 * step;
}

void EffectiveFlux::detect_monomial() {
  std::vector<double> g;
  for (std::size_t k = 0; k < direction_.size(); ++k) {
    const auto branch = spec_.components[k].nonnegative_branch();
    if (g.size() < branch.size()) g.resize(branch.size(), 0.0);
    for (std::size_t j = 0; j < branch.size(); ++j) g[j] += direction_[k] * branch[j];
  }
  const auto dg = differentiate(g);
  double scale = 0.0;
  for (double c : dg) scale = std::max(scale, std::abs(c));
  int degree = -1;
  int nonzero = 0;
  for (std::size_t j = 0; j < dg.size(); ++j) {
    if (std::abs(dg[j]) > 1e-14 * scale) {
      ++nonzero;
      degree = static_cast<int>(j);
    }
  }
  if (nonzero == 1 && degree >= 1 && dg[static_cast<std::size_t>(degree)] > 0.0) {
    monomial_degree_ = degree;
    monomial_coefficient_ = dg[static_cast<std::size_t>(degree)];
  }
}

void EffectiveFlux::locate_sonic_point() {
  double lo = window_.lo, hi = window_.hi;
  if (slope(lo) >= 0.0) {
    sonic_point_ = lo;
    return;
  }
  if (slope(hi) <= 0.0) {
    sonic_point_ = hi;
    return;
  }
  for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(lo)); ++it) {
    const double mid = 0.5 * (lo + hi);
    (slope(mid) < 0.0 ? lo : hi) = mid;
  }
  sonic_point_ = 0.5 * (lo + hi);
}

double EffectiveFlux::inverse_slope(double eta) const {
  if (monomial_degree_ > 0 && eta >= 0.0) {
    const double x = eta / monomial_coefficient_;
    if (monomial_degree_ == 1) return x;
    if (monomial_degree_ == 3) return std::cbrt(x);
    return std::pow(x, 1.0 / monomial_degree_);
  }
  double lo = window_.lo, hi = window_.hi;
  const double slo = slope(lo), shi = slope(hi);
  const double tol = 1e-12 * std::max({1.0, std::abs(slo), std::abs(shi)});
  if (eta < slo - tol || eta > shi + tol) {
    std::ostringstream os;
    os << "characteristic speed " << eta << " outside g'(window) = [" << slo << ", " << shi << "]";
    throw DomainError(os.str());
  }
  for (int it = 0; it < 200 && hi - lo > 1e-14 * std::max(1.0, std::abs(lo)); ++it) {
    const double mid = 0.5 * (lo + hi);
    (slope(mid) < eta ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

std::shared_ptr<const EffectiveFlux> effective_flux(const FluxSpec& spec, std::vector<double> direction) {
  return std::make_shared<const EffectiveFlux>(spec, std::move(direction));
}

}  // namespace sclaw
