#include "sclaw/staircase.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sclaw/errors.hpp"

namespace sclaw {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

// Effective flux whose convexity window is located around the middle of the data range.
std::shared_ptr<const EffectiveFlux> checked_effective_flux(const FluxSpec& flux, const std::vector<double>& direction,
                                                            double lo, double hi) {
  if (flux.u_bound < std::max(std::abs(lo), std::abs(hi))) {
    throw ParameterError("u_bound " + fmt(flux.u_bound) + " is below sup|u0| = " + fmt(std::max(-lo, hi)));
  }
  auto g = std::make_shared<const EffectiveFlux>(flux, direction, 0.5 * (lo + hi));
  const auto& win = g->convexity_window();
  if (!(win.lo <= lo && hi <= win.hi)) {
    throw ConstructionError("effective flux is not strictly convex on the data range [" + fmt(lo) + ", " + fmt(hi) +
                            "]");
  }
  return g;
}

}  // namespace

std::string to_string(Construction c) { return c == Construction::Prop2 ? "prop2" : "prop1"; }

Construction construction_from_string(const std::string& name) {
  if (name == "prop1") return Construction::Prop1;
  if (name == "prop2") return Construction::Prop2;
  throw ParameterError("unknown construction '" + name + "'");
}

double BlowupParams::tail_value() const {
  return construction == Construction::Prop2 ? std::pow(R, -6.0) : std::pow(R, -(dimension + 4.0));
}

void BlowupParams::validate() const {
  if (construction == Construction::Prop1 && zeta < 1) throw ParameterError("zeta >= 1 violated");
  if (dimension < 1) throw ParameterError("d >= 1 violated");
  if (construction == Construction::Prop2 && dimension != 2) throw ParameterError("prop2 requires d = 2");
  if (!(epsilon > 0.0)) throw ParameterError("epsilon > 0 violated");
  if (!(exponent() < 1.0)) throw ParameterError("alpha' = 1/q + epsilon < 1 violated");
  if (!(R > 0.0)) throw ParameterError("R > 0 violated");
  if (!(inner_fraction > 0.0 && inner_fraction < 1.0)) throw ParameterError("0 < r < R violated");
  if (N < 1) throw ParameterError("N >= 1 violated");
  if (n_max < N) throw ParameterError("n_max >= N violated");
  // Both conditions are monotone in n, so checking n = N covers every n >= N.
  const double n = static_cast<double>(N);
  if (!(std::pow(1.0 + 1.0 / n, exponent()) < 2.0)) {
    throw ParameterError("(1 + 1/n)^alpha' < 2 violated at n = N = " + std::to_string(N));
  }
  if (!(1.0 / n < tail_value())) {
    throw ParameterError("1/n < tail value violated at n = N = " + std::to_string(N) + " (tail " +
                         fmt(tail_value()) + ")");
  }
}

BlowupParams prop1_params(int zeta, int dimension, double epsilon, double R, long n_max, long N) {
  BlowupParams p;
  p.construction = Construction::Prop1;
  p.zeta = zeta;
  p.dimension = dimension;
  p.epsilon = epsilon;
  p.R = R;
  p.n_max = n_max;
  p.N = N;
  return resolve(p);
}

BlowupParams prop2_params(double epsilon, double R, long n_max, long N) {
  BlowupParams p;
  p.construction = Construction::Prop2;
  p.zeta = 0;
  p.dimension = 2;
  p.epsilon = epsilon;
  p.R = R;
  p.n_max = n_max;
  p.N = N;
  return resolve(p);
}

long minimal_start_index(const BlowupParams& params) {
  long n = static_cast<long>(std::floor(1.0 / params.tail_value())) + 1;
  n = std::max(n, 1L);
  while (!(std::pow(1.0 + 1.0 / n, params.exponent()) < 2.0)) ++n;
  return n;
}

BlowupParams resolve(BlowupParams params) {
  if (params.N == 0) {
    params.N = minimal_start_index(params);
    params.n_max = std::max(params.n_max, params.N);
  }
  params.validate();
  return params;
}

double rung_length(const BlowupParams& params, long m) {
  const double n = static_cast<double>(m / 2);
  return std::pow(n, -params.degree() * params.exponent());
}

double rung_value(const BlowupParams& params, long m) {
  const double n = static_cast<double>(m / 2);
  return (m % 2 == 0 ? 2.0 : 1.0) / (params.R * std::pow(n, params.exponent()));
}

RungSequences build_rungs(const BlowupParams& params) {
  params.validate();
  RungSequences r;
  r.first = 2 * params.N;
  r.last = 2 * params.n_max + 1;
  const auto count = static_cast<std::size_t>(r.last - r.first + 1);
  r.l.reserve(count);
  r.sigma.reserve(count);
  r.w.reserve(count);
  double acc = 0.0;
  for (long m = r.first; m <= r.last; ++m) {
    const double l = rung_length(params, m);
    acc += l;
    r.l.push_back(l);
    r.w.push_back(acc);
    r.sigma.push_back(rung_value(params, m));
  }
  // Remaining lengths: 2 sum_{n > n_max} n^{-s}, bracketed by the integral test.
  const double s = params.degree() * params.exponent();
  const double nm = static_cast<double>(params.n_max);
  auto tail_integral = [s](double from) { return std::pow(from, 1.0 - s) / (s - 1.0); };
  const double w_last = r.w[count - 1];
  r.x1_lower = w_last + 2.0 * tail_integral(nm + 1.0);
  r.x1_upper = w_last + 2.0 * tail_integral(nm);
  r.x1 = w_last + 2.0 * tail_integral(nm + 0.5);
  return r;
}

std::vector<double> default_direction(const BlowupParams& params) {
  if (params.construction == Construction::Prop2) return {1.0, -1.0};
  std::vector<double> e(static_cast<std::size_t>(params.dimension), 0.0);
  e[0] = 1.0;
  return e;
}

FluxSpec default_flux(const BlowupParams& params, double u_bound) {
  const double sup = std::max(rung_value(params, 2 * params.N), params.tail_value());
  const double r0 = u_bound > 0.0 ? u_bound : 2.0 * sup;
  if (params.construction == Construction::Prop2) return prop2_pair_flux(r0);
  return power_law_flux(params.zeta, params.dimension, r0);
}

PlanarProfile build_single_box(const BlowupParams& params) {
  return build_single_box(params, default_flux(params), default_direction(params));
}

PlanarProfile build_single_box(const BlowupParams& params, const FluxSpec& flux, std::vector<double> direction) {
  params.validate();
  if (static_cast<int>(direction.size()) != params.dimension || flux.dimension() != params.dimension) {
    throw ParameterError("direction, flux and params disagree on d");
  }
  const RungSequences rungs = build_rungs(params);
  const double sup = std::max(rungs.sigma.front(), params.tail_value());

  PlanarProfile p;
  p.direction = direction;
  p.flux = checked_effective_flux(flux, direction, 0.0, sup);
  if (std::abs(p.flux->slope(0.0)) > 1e-14) throw ConstructionError("g'(0) = 0 violated");

  for (long m = rungs.first; m <= rungs.last; ++m) p.pieces.push_back(Piece::constant(rungs.left_at(m), rungs.sigma_at(m), m));
  p.pieces.push_back(Piece::constant(rungs.w_at(rungs.last), params.tail_value(), kTailTag));
  p.end = std::max(params.R, rungs.x1);
  merge_equal_constants(p);

  const int d = params.dimension;
  const double R = params.R;
  const double r = params.inner_fraction * R;
  int nonzero = 0, axis = 0;
  for (int j = 0; j < d; ++j) {
    if (direction[static_cast<std::size_t>(j)] != 0.0) {
      ++nonzero;
      axis = j;
    }
  }
  if (nonzero == 1) {
    // Faces normal to the profile axis are level sets of m and live in the pieces.
    const double c = direction[static_cast<std::size_t>(axis)];
    p.support.lower.assign(static_cast<std::size_t>(d), -R);
    p.support.upper.assign(static_cast<std::size_t>(d), R);
    p.inner.lower.assign(static_cast<std::size_t>(d), -r);
    p.inner.upper.assign(static_cast<std::size_t>(d), r);
    p.support.lower[static_cast<std::size_t>(axis)] = std::min(-R, p.end / c);
    p.support.upper[static_cast<std::size_t>(axis)] = std::max(R, p.end / c);
    p.inner.lower[static_cast<std::size_t>(axis)] = p.support.lower[static_cast<std::size_t>(axis)];
    p.inner.upper[static_cast<std::size_t>(axis)] = p.support.upper[static_cast<std::size_t>(axis)];
    p.planar_axes = {axis};
  } else {
    // Oblique planes: the box must be large enough that A_r meets every rung.
    const double H = std::max(R, p.end);
    p.support.lower.assign(static_cast<std::size_t>(d), -H);
    p.support.upper.assign(static_cast<std::size_t>(d), H);
    p.inner.lower.assign(static_cast<std::size_t>(d), -params.inner_fraction * H);
    p.inner.upper.assign(static_cast<std::size_t>(d), params.inner_fraction * H);
  }

  p.header = {{"construction", to_string(params.construction)},
              {"zeta", std::to_string(params.zeta)},
              {"d", std::to_string(params.dimension)},
              {"epsilon", fmt(params.epsilon)},
              {"R", fmt(params.R)},
              {"N", std::to_string(params.N)},
              {"n_max", std::to_string(params.n_max)},
              {"X1", fmt(rungs.x1)},
              {"coordinate", "m = xi0 . x"}};
  p.check_invariants();
  return p;
}

PlanarProfile build_two_state(const FluxSpec& flux, std::vector<double> direction, double a, double b, double R,
                              double inner_fraction) {
  if (static_cast<int>(direction.size()) != flux.dimension()) throw ParameterError("direction length != d");
  if (!(R > 0.0) || !(inner_fraction > 0.0 && inner_fraction < 1.0)) throw ParameterError("0 < r < R violated");
  PlanarProfile p;
  p.direction = direction;
  p.flux = checked_effective_flux(flux, direction, std::min(a, b), std::max(a, b));
  const double inf = std::numeric_limits<double>::infinity();
  p.pieces = {Piece::constant(-inf, a, 0), Piece::constant(0.0, b, 1)};
  p.end = inf;
  merge_equal_constants(p);
  const auto d = static_cast<std::size_t>(flux.dimension());
  p.support.lower.assign(d, -R);
  p.support.upper.assign(d, R);
  p.inner.lower.assign(d, -inner_fraction * R);
  p.inner.upper.assign(d, inner_fraction * R);
  p.header = {{"construction", "lemma1-riemann"}, {"a", fmt(a)}, {"b", fmt(b)}, {"R", fmt(R)}};
  return p;
}

}  // namespace sclaw
