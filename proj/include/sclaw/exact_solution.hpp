#pragma once

#include <limits>
#include <vector>

#include "sclaw/flux.hpp"
#include "sclaw/profile.hpp"
#include "sclaw/staircase.hpp"

namespace sclaw {

inline constexpr double kNever = std::numeric_limits<double>::infinity();

/// (f(a) - f(b)) / (a - b) componentwise; throws DomainError when a == b.
std::vector<double> rankine_hugoniot_speed(const FluxSpec& flux, double a, double b);

/// Shock speed of the planar-reduced law, (g(a) - g(b)) / (a - b).
double planar_shock_speed(const EffectiveFlux& g, double a, double b);

struct InteractionTimes {
  double t_n = 0.0;        // characteristic from w_{2n} meets the shock from w_{2n+1}
  double t_tilde_n = 0.0;  // fan edge from w_{2n+2} meets the same shock
};

/// Closed forms with q the effective degree: R^q (q+1) / (2^q (q-1) + 1) and R^q (q+1) / (2^{q+1} - (q+2)).
InteractionTimes interaction_times(const BlowupParams& params);

enum class WaveKind { Shock, Fan };

/// The wave leaving one interface of an all-constant profile.
struct Wave {
  double origin = 0.0;
  WaveKind kind = WaveKind::Shock;
  double left_state = 0.0;
  double right_state = 0.0;
  double speed = 0.0;        // shock speed, or left edge speed g'(left) of a fan
  double right_speed = 0.0;  // right edge speed g'(right) of a fan (equal to speed for shocks)
  long right_tag = kNoTag;
};

/// A straight line m = origin + speed * t bounding a region of the evolved profile.
struct Front {
  double origin = 0.0;
  double speed = 0.0;
  std::size_t wave = 0;
  bool fan_left_edge = false;

  double position(double t) const { return origin + speed * t; }
};

struct WaveSchedule {
  std::vector<Wave> waves;
  std::vector<Front> fronts;           // ordered by position for 0 < t < first_crossing
  std::vector<double> pair_crossing;   // time fronts i and i+1 meet, kNever if they diverge
  double first_crossing = kNever;
  double axis_speed = 0.0;             // max_k max_u |f_k'(u)| over the data range
  double finite_speed_time = kNever;   // t1' = (R - r) / axis_speed over the constrained axes
  double t0 = kNever;
};

/// Waves of an all-constant profile (zero background outside a bounded profile).
WaveSchedule build_schedule(const PlanarProfile& initial);

/// Minimum over adjacent fronts of their crossing time; kNever when no pair converges.
double first_interaction_bruteforce(const PlanarProfile& initial);

/// Minimum crossing time over adjacent fronts whose waves both separate two consecutive rungs.  Excludes
/// the waves at the outer edges of the staircase, whose crossings depend on the truncation.
double rung_interaction_time(const WaveSchedule& schedule);

/// Number of shocks violating g'(right) < s < g'(left).
std::size_t lax_violations(const WaveSchedule& schedule, const EffectiveFlux& g);

/// Oleinik chord condition for the single shock a > b: secant(k, a) >= s >= secant(b, k) for sampled k in (b, a).
bool kruzkov_single_shock(const EffectiveFlux& g, double a, double b, int samples = 1000);

/// Entropy solution of all-constant planar data for 0 <= t < t0.
class ExactSolution {
 public:
  explicit ExactSolution(PlanarProfile initial);

  const PlanarProfile& initial() const { return initial_; }
  const WaveSchedule& schedule() const { return schedule_; }
  const EffectiveFlux& flux() const { return *initial_.flux; }
  double t0() const { return schedule_.t0; }

  /// Evolved planar profile at time t; throws ValidityWindowError for t >= t0, DomainError for t < 0.
  PlanarProfile evolve(double t) const;

  /// u along the profile coordinate, ignoring the transverse box faces.
  double evaluate_planar(double m, double t) const;

  /// u(x, t).  Zero outside the box enlarged by V t, the planar value inside the box
  /// shrunk by V t, and BoundaryLayerError in between.
  double evaluate(const std::vector<double>& x, double t) const;

  /// Front positions at time t, in order.
  std::vector<double> front_positions(double t) const;

 private:
  void check_time(double t) const;
  double state_after_front(std::size_t k, double m, double t) const;

  PlanarProfile initial_;
  WaveSchedule schedule_;
  double left_background_ = 0.0;
  long left_tag_ = kNoTag;
  bool bounded_left_ = true;
  bool bounded_right_ = true;
  std::vector<int> constrained_axes_;
};

}  // namespace sclaw
