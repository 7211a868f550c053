#include "sclaw/exact_solution.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sclaw/errors.hpp"

namespace sclaw {

std::vector<double> rankine_hugoniot_speed(const FluxSpec& flux, double a, double b) {
  if (a == b) throw DomainError("Rankine-Hugoniot speed undefined for a == b");
  std::vector<double> s;
  s.reserve(flux.components.size());
  for (const auto& c : flux.components) s.push_back(c.secant(a, b));
  return s;
}

double planar_shock_speed(const EffectiveFlux& g, double a, double b) {
  if (a == b) throw DomainError("Rankine-Hugoniot speed undefined for a == b");
  return g.secant(a, b);
}

InteractionTimes interaction_times(const BlowupParams& params) {
  const int q = params.degree();
  const double Rq = std::pow(params.R, q);
  const double two_q = std::ldexp(1.0, q);
  const double d1 = two_q * (q - 1) + 1.0;
  const double d2 = 2.0 * two_q - (q + 2);
  if (!(d1 > 0.0 && d2 > 0.0)) throw ParameterError("interaction-time denominators must be positive");
  return {Rq * (q + 1) / d1, Rq * (q + 1) / d2};
}

WaveSchedule build_schedule(const PlanarProfile& initial) {
  if (!initial.flux) throw ConstructionError("profile has no effective flux");
  if (!initial.all_constant()) throw ConstructionError("wave schedule needs all-constant initial data");
  if (initial.pieces.empty()) throw ConstructionError("empty profile");
  const EffectiveFlux& g = *initial.flux;
  WaveSchedule s;

  auto add_interface = [&](double origin, double left, double right, long tag) {
    if (left == right) return;
    Wave w;
    w.origin = origin;
    w.left_state = left;
    w.right_state = right;
    w.right_tag = tag;
    if (left > right) {
      w.kind = WaveKind::Shock;
      w.speed = w.right_speed = g.secant(left, right);
    } else {
      w.kind = WaveKind::Fan;
      w.speed = g.slope(left);
      w.right_speed = g.slope(right);
      if (!(w.speed < w.right_speed)) {
        std::ostringstream os;
        os << "fan at m = " << origin << " has non-increasing edge speeds (g not convex on [" << left << ", "
           << right << "])";
        throw ConstructionError(os.str());
      }
    }
    s.waves.push_back(w);
  };

  const auto& pieces = initial.pieces;
  const bool bounded_left = std::isfinite(pieces.front().left);
  double prev = bounded_left ? 0.0 : pieces.front().value;
  for (std::size_t i = bounded_left ? 0 : 1; i < pieces.size(); ++i) {
    add_interface(pieces[i].left, prev, pieces[i].value, pieces[i].tag);
    prev = pieces[i].value;
  }
  if (std::isfinite(initial.end)) add_interface(initial.end, prev, 0.0, kNoTag);

  for (std::size_t k = 0; k < s.waves.size(); ++k) {
    const Wave& w = s.waves[k];
    if (w.kind == WaveKind::Shock) {
      s.fronts.push_back({w.origin, w.speed, k, false});
    } else {
      s.fronts.push_back({w.origin, w.speed, k, true});
      s.fronts.push_back({w.origin, w.right_speed, k, false});
    }
  }

  s.pair_crossing.assign(s.fronts.size() > 0 ? s.fronts.size() - 1 : 0, kNever);
  for (std::size_t i = 0; i + 1 < s.fronts.size(); ++i) {
    const Front& a = s.fronts[i];
    const Front& b = s.fronts[i + 1];
    if (a.speed > b.speed && b.origin > a.origin) {
      s.pair_crossing[i] = (b.origin - a.origin) / (a.speed - b.speed);
      s.first_crossing = std::min(s.first_crossing, s.pair_crossing[i]);
    }
  }

  s.axis_speed = max_axis_speed(g.spec(), initial.min_value(), initial.max_value());
  for (int j = 0; j < initial.dimension(); ++j) {
    if (std::find(initial.planar_axes.begin(), initial.planar_axes.end(), j) != initial.planar_axes.end()) continue;
    const auto k = static_cast<std::size_t>(j);
    const double margin = std::min(initial.inner.lower[k] - initial.support.lower[k],
                                   initial.support.upper[k] - initial.inner.upper[k]);
    if (s.axis_speed > 0.0) s.finite_speed_time = std::min(s.finite_speed_time, margin / s.axis_speed);
  }
  s.t0 = std::min(s.finite_speed_time, s.first_crossing);
  if (!(s.t0 > 0.0)) throw ConstructionError("validity window t0 is not positive");
  return s;
}

double first_interaction_bruteforce(const PlanarProfile& initial) { return build_schedule(initial).first_crossing; }

double rung_interaction_time(const WaveSchedule& schedule) {
  const auto is_rung = [](long tag) { return tag != kNoTag && tag != kTailTag; };
  long first = kTailTag;
  for (const auto& w : schedule.waves) {
    if (is_rung(w.right_tag)) first = std::min(first, w.right_tag);
  }
  const auto interior = [&](const Front& f) {
    const long tag = schedule.waves[f.wave].right_tag;
    return is_rung(tag) && tag > first;
  };
  double t = kNever;
  for (std::size_t i = 0; i < schedule.pair_crossing.size(); ++i) {
    if (interior(schedule.fronts[i]) && interior(schedule.fronts[i + 1])) t = std::min(t, schedule.pair_crossing[i]);
  }
  return t;
}

std::size_t lax_violations(const WaveSchedule& schedule, const EffectiveFlux& g) {
  std::size_t bad = 0;
  for (const auto& w : schedule.waves) {
    if (w.kind != WaveKind::Shock) continue;
    if (!(g.slope(w.right_state) < w.speed && w.speed < g.slope(w.left_state))) ++bad;
  }
  return bad;
}

bool kruzkov_single_shock(const EffectiveFlux& g, double a, double b, int samples) {
  if (!(a > b)) throw DomainError("single-shock check needs a > b");
  const double s = g.secant(a, b);
  const double tol = 1e-14 * std::max(1.0, std::abs(s));
  for (int i = 1; i < samples; ++i) {
    const double k = b + (a - b) * i / samples;
    if (g.secant(k, a) < s - tol || s < g.secant(b, k) - tol) return false;
  }
  return true;
}

ExactSolution::ExactSolution(PlanarProfile initial) : initial_(std::move(initial)) {
  schedule_ = build_schedule(initial_);
  bounded_left_ = std::isfinite(initial_.pieces.front().left);
  bounded_right_ = std::isfinite(initial_.end);
  left_background_ = bounded_left_ ? 0.0 : initial_.pieces.front().value;
  left_tag_ = bounded_left_ ? kNoTag : initial_.pieces.front().tag;
  for (int j = 0; j < initial_.dimension(); ++j) {
    if (std::find(initial_.planar_axes.begin(), initial_.planar_axes.end(), j) == initial_.planar_axes.end()) {
      constrained_axes_.push_back(j);
    }
  }
}

void ExactSolution::check_time(double t) const {
  if (!(t >= 0.0)) throw DomainError("negative time");
  if (!(t < schedule_.t0)) {
    std::ostringstream os;
    os.precision(17);
    os << "t = " << t << " is outside the validity window [0, " << schedule_.t0 << ")";
    throw ValidityWindowError(os.str());
  }
}

double ExactSolution::state_after_front(std::size_t k, double m, double t) const {
  const Front& f = schedule_.fronts[k];
  const Wave& w = schedule_.waves[f.wave];
  if (!f.fan_left_edge) return w.right_state;
  const double u = initial_.flux->inverse_slope((m - w.origin) / t);
  return std::clamp(u, w.left_state, w.right_state);
}

std::vector<double> ExactSolution::front_positions(double t) const {
  check_time(t);
  std::vector<double> out;
  out.reserve(schedule_.fronts.size());
  for (const auto& f : schedule_.fronts) out.push_back(f.position(t));
  return out;
}

double ExactSolution::evaluate_planar(double m, double t) const {
  check_time(t);
  if (t == 0.0) return initial_.value_at(m);
  const auto& fr = schedule_.fronts;
  const auto it = std::partition_point(fr.begin(), fr.end(), [&](const Front& f) { return f.position(t) <= m; });
  if (it == fr.begin()) return left_background_;
  return state_after_front(static_cast<std::size_t>(it - fr.begin()) - 1, m, t);
}

double ExactSolution::evaluate(const std::vector<double>& x, double t) const {
  check_time(t);
  if (static_cast<int>(x.size()) != initial_.dimension()) throw DomainError("point dimension mismatch");
  const double reach = schedule_.axis_speed * t;
  const Box& box = initial_.support;
  for (int j : constrained_axes_) {
    const auto k = static_cast<std::size_t>(j);
    if (x[k] < box.lower[k] - reach || x[k] > box.upper[k] + reach) return 0.0;
  }
  for (int j : constrained_axes_) {
    const auto k = static_cast<std::size_t>(j);
    if (!(box.lower[k] + reach < x[k] && x[k] < box.upper[k] - reach)) {
      std::ostringstream os;
      os << "x[" << j << "] = " << x[k] << " lies within V t = " << reach << " of a box face";
      throw BoundaryLayerError(os.str());
    }
  }
  double m = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) m += initial_.direction[k] * x[k];
  return evaluate_planar(m, t);
}

PlanarProfile ExactSolution::evolve(double t) const {
  check_time(t);
  PlanarProfile out = initial_;
  if (t == 0.0) return out;
  out.time = t;
  out.pieces.clear();
  if (!bounded_left_) out.pieces.push_back(Piece::constant(initial_.pieces.front().left, left_background_, left_tag_));
  for (const auto& f : schedule_.fronts) {
    const Wave& w = schedule_.waves[f.wave];
    const double at = f.position(t);
    if (f.fan_left_edge) {
      out.pieces.push_back(Piece{at, PieceKind::Fan, w.left_state, w.right_state, w.origin, w.right_tag});
    } else {
      out.pieces.push_back(Piece::constant(at, w.right_state, w.right_tag));
    }
  }
  if (bounded_right_) {
    out.end = out.pieces.back().left;  // trailing zero state
    out.pieces.pop_back();
  }
  out.check_invariants();
  return out;
}

}  // namespace sclaw
