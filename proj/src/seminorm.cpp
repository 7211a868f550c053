#include "sclaw/seminorm.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "sclaw/errors.hpp"
#include "sclaw/exact_solution.hpp"
#include "sclaw/parallel.hpp"
#include "sclaw/sampling.hpp"

namespace sclaw {

namespace {

double simpson_step(const std::function<double(double)>& f, double a, double fa, double b, double fb, double m,
                    double fm, double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return simpson_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
         simpson_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double rel_tol) {
  const double m = 0.5 * (a + b);
  const double fa = f(a), fb = f(b), fm = f(m);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  const double tol = rel_tol * std::max(std::abs(whole), 1e-300);
  return simpson_step(f, a, fa, b, fb, m, fm, whole, tol, 48);
}

// Value of the profile on the slot between breakpoint k-1 and k of (lefts..., end); slots 0 and
// pieces.size()+1 lie outside the profile.
double slot_value(const PlanarProfile& p, std::size_t slot, double m) {
  if (slot == 0 || slot > p.pieces.size()) return 0.0;
  return p.piece_value(slot - 1, m);
}

bool slot_is_constant(const PlanarProfile& p, std::size_t slot) {
  return slot == 0 || slot > p.pieces.size() || p.pieces[slot - 1].kind == PieceKind::Constant;
}

double directional_factor(const PlanarProfile& profile, int axis) {
  if (axis < 0 || axis >= profile.dimension()) throw DomainError("direction index out of range");
  return std::abs(profile.direction[static_cast<std::size_t>(axis)]) * profile.cross_section();
}

}  // namespace

LpDifference shifted_lp_difference(const PlanarProfile& profile, double h, double p, int axis) {
  if (!(h >= 0.0)) throw DomainError("h must be nonnegative");
  if (!(p >= 1.0)) throw DomainError("p must be >= 1");
  if (axis < 0 || axis >= profile.dimension()) throw DomainError("direction index out of range");
  const double shift = h * profile.direction[static_cast<std::size_t>(axis)];
  if (shift == 0.0) return {0.0, h > 0.0};

  // Breakpoints of P(m) and of P(m + shift), walked together.
  std::vector<double> bp;
  bp.reserve(profile.pieces.size() + 1);
  for (const auto& piece : profile.pieces) bp.push_back(piece.left);
  bp.push_back(profile.end);
  const std::size_t nb = bp.size();

  double total = 0.0;
  std::size_t i = 0, j = 0;  // slots: count of breakpoints <= x for P and for the shifted copy
  double x = std::min(bp.front(), bp.front() - shift);
  while (i < nb && bp[i] <= x) ++i;
  while (j < nb && bp[j] - shift <= x) ++j;
  while (i < nb || j < nb) {
    const double next = std::min(i < nb ? bp[i] : kNever, j < nb ? bp[j] - shift : kNever);
    if (next > x) {
      const bool both_constant = slot_is_constant(profile, i) && slot_is_constant(profile, j);
      if (both_constant) {
        const double diff = std::abs(slot_value(profile, j, x) - slot_value(profile, i, x));
        if (diff > 0.0) {
          if (!std::isfinite(next - x)) throw DomainError("difference has unbounded support");
          total += std::pow(diff, p) * (next - x);
        }
      } else {
        auto f = [&](double m) { return std::pow(std::abs(slot_value(profile, j, m + shift) - slot_value(profile, i, m)), p); };
        total += adaptive_simpson(f, x, next, 1e-10);
      }
      x = next;
    }
    while (i < nb && bp[i] <= x) ++i;
    while (j < nb && bp[j] - shift <= x) ++j;
  }
  return {std::pow(profile.cross_section() * total, 1.0 / p), false};
}

ScanResult truncated_besov(const PlanarProfile& profile, const SeminormQuery& q, unsigned threads) {
  if (!(q.h_min > 0.0 && q.h_max > q.h_min)) throw DomainError("need 0 < h_min < h_max");
  if (!(q.p >= 1.0) || !(q.theta > 0.0) || !(q.s > 0.0 && q.s < 1.0)) throw DomainError("need s in (0,1), p >= 1, theta > 0");
  if (q.points_per_decade < 1) throw DomainError("points_per_decade must be positive");
  const double decades = std::log10(q.h_max / q.h_min);
  const auto steps = static_cast<std::size_t>(std::ceil(decades * q.points_per_decade));
  ScanResult r;
  r.h.resize(steps + 1);
  for (std::size_t k = 0; k <= steps; ++k) {
    r.h[k] = k == steps ? q.h_min : q.h_max * std::pow(q.h_min / q.h_max, static_cast<double>(k) / steps);
  }
  r.lp_diff.resize(r.h.size());
  std::vector<char> tangent(r.h.size(), 0);
  parallel_for(r.h.size(), threads, [&](std::size_t k) {
    const auto d = shifted_lp_difference(profile, r.h[k], q.p, q.axis);
    r.lp_diff[k] = d.value;
    tangent[k] = d.tangent;
  });
  r.tangent = std::any_of(tangent.begin(), tangent.end(), [](char c) { return c != 0; });

  // In log h the integrand becomes g = ||Delta||^theta h^{-s theta}; trapezoid on that grid.
  std::vector<double> g(r.h.size());
  r.integrand.resize(r.h.size());
  for (std::size_t k = 0; k < r.h.size(); ++k) {
    g[k] = std::pow(r.lp_diff[k], q.theta) * std::pow(r.h[k], -q.s * q.theta);
    r.integrand[k] = g[k] / r.h[k];
  }
  r.cumulative.assign(r.h.size(), 0.0);
  for (std::size_t k = 1; k < r.h.size(); ++k) {
    r.cumulative[k] = r.cumulative[k - 1] + 0.5 * (g[k - 1] + g[k]) * std::log(r.h[k - 1] / r.h[k]);
  }
  r.seminorm = r.cumulative.back();

  const double fit_hi = q.h_max * std::pow(10.0, -q.trim_decades);
  const double fit_lo = std::max(q.h_min * std::pow(10.0, q.trim_decades), q.fit_h_min);
  std::vector<double> lx, ly, ls;
  for (std::size_t k = 0; k < r.h.size(); ++k) {
    if (r.h[k] > fit_hi || r.h[k] < fit_lo || !(g[k] > 0.0)) continue;
    lx.push_back(std::log(1.0 / r.h[k]));
    ly.push_back(std::log(g[k]));
    ls.push_back(r.cumulative[k] > 0.0 ? std::log(r.cumulative[k]) : std::numeric_limits<double>::quiet_NaN());
  }
  if (lx.size() >= 2) {
    r.fit = fit_line(lx, ly);
    r.kappa_fitted = r.fit.slope;
    if (std::all_of(ls.begin(), ls.end(), [](double v) { return std::isfinite(v); })) r.kappa_log_s = fit_line(lx, ls).slope;
  }
  return r;
}

double truncation_safe_h(const BlowupParams& params) {
  const long m = std::max(params.N, static_cast<long>(std::floor(std::sqrt(static_cast<double>(params.n_max)))));
  return rung_length(params, 2 * m);
}

double kappa_closed_form(const BlowupParams& params, double s, double p, double theta) {
  const double q = params.degree();
  const double a = params.exponent();
  return theta / p + q * s * a * theta - a * theta - q * a * theta / p;
}

double rung_scale(const BlowupParams& params, long n, double t) {
  const double tn = interaction_times(params).t_n;
  return (1.0 - t / tn) * std::pow(static_cast<double>(n), -params.degree() * params.exponent());
}

long rungs_below(const BlowupParams& params, double h, double t) {
  const double tn = interaction_times(params).t_n;
  if (!(t < tn)) throw DomainError("t must be below t_n");
  return static_cast<long>(std::floor(std::pow((1.0 - t / tn) / h, 1.0 / (params.degree() * params.exponent()))));
}

std::string to_string(SeriesRegime r) {
  switch (r) {
    case SeriesRegime::Divergent: return "divergent";
    case SeriesRegime::Bounded: return "bounded";
    case SeriesRegime::Excessive: return "excessive";
  }
  return "unknown";
}

LowerBoundSeries lower_bound_series(const BlowupParams& params, double s, double p, double theta, double t,
                                    long n_terms) {
  const double tn = interaction_times(params).t_n;
  if (!(t >= 0.0 && t < tn)) throw DomainError("lower-bound series needs 0 <= t < t_n");
  if (n_terms < params.N) throw DomainError("n_terms below N");
  LowerBoundSeries out;
  out.kappa = kappa_closed_form(params, s, p, theta);
  if (out.kappa <= 0.0) {
    out.regime = SeriesRegime::Bounded;
    out.note = "kappa <= 0: epsilon too large for this s, the lower bound does not diverge";
  } else if (out.kappa >= 1.0) {
    out.regime = SeriesRegime::Excessive;
    out.note = "kappa >= 1: outside the range (0, 1) assumed by the estimate";
  } else {
    out.note = "kappa in (0, 1): partial sums grow like n^kappa";
  }
  const double r = params.inner_fraction * params.R;
  out.prefactor = std::pow(std::pow(2.0 * r, params.dimension - 1) * (1.0 - t / tn) / std::pow(params.R, p), theta / p);

  double div = 0.0, conv = 0.0, block = 0.0;
  long next_checkpoint = params.N;
  std::vector<double> bx, by;
  for (long n = params.N; n <= n_terms; ++n) {
    const double nd = static_cast<double>(n);
    const double term = std::pow(nd, out.kappa - 1.0);
    div += term;
    conv += term / nd;
    block += term;
    if (n == next_checkpoint || n == n_terms) {
      out.checkpoints.push_back(n);
      out.divergent_partial.push_back(out.prefactor * div);
      out.convergent_partial.push_back(out.prefactor * conv);
      // Dyadic block [next_checkpoint/2, next_checkpoint) completed.
      if (n == next_checkpoint && n >= 16 * params.N) {
        bx.push_back(std::log(nd));
        by.push_back(std::log(block));
      }
      if (n == next_checkpoint) {
        block = 0.0;
        next_checkpoint *= 2;
      }
    }
  }
  if (bx.size() >= 2) out.growth_exponent = fit_line(bx, by).slope;
  return out;
}

namespace {

double profile_variation(const PlanarProfile& profile, long max_tag) {
  double tv = 0.0;
  double prev = std::isfinite(profile.begin()) ? 0.0 : profile.pieces.front().value;
  for (const auto& piece : profile.pieces) {
    if (piece.tag <= max_tag) {
      tv += std::abs(piece.value - prev);
      if (piece.kind == PieceKind::Fan) tv += std::abs(piece.right_value - piece.value);
    }
    prev = piece.right_value;
  }
  if (max_tag == kTailTag && std::isfinite(profile.end)) tv += std::abs(prev);
  return tv;
}

}  // namespace

double total_variation(const PlanarProfile& profile, int axis) {
  return directional_factor(profile, axis) * profile_variation(profile, kTailTag);
}

double tv_partial(const PlanarProfile& profile, long n, int axis) {
  return directional_factor(profile, axis) * profile_variation(profile, 2 * n + 1);
}

TvGrowth tv_growth(const PlanarProfile& profile, long n_first, long n_last, int axis) {
  if (n_first < 1 || n_last < 2 * n_first) throw DomainError("tv_growth needs 1 <= n_first and 2 n_first <= n_last");
  TvGrowth g;
  for (long n = n_first; n <= n_last; n *= 2) {
    g.n.push_back(n);
    g.tv.push_back(tv_partial(profile, n, axis));
  }
  std::vector<double> x, y;
  for (std::size_t j = 0; j + 1 < g.n.size(); ++j) {
    const double block = g.tv[j + 1] - g.tv[j];
    if (block <= 0.0) continue;
    x.push_back(static_cast<double>(g.n[j]));
    y.push_back(block);
  }
  if (x.size() >= 2) {
    g.fit = fit_power_law(x, y);
    g.exponent = g.fit.slope;
  }
  return g;
}

namespace {

// (1+y)^g - 1 - g y: series for small y, expm1/log1p otherwise.
double binomial_remainder(double y, double g) {
  if (y <= 0.1) {
    double coef = g * (g - 1.0) / 2.0;
    double yk = y * y;
    double sum = 0.0;
    for (int k = 2; k < 200; ++k) {
      const double term = coef * yk;
      sum += term;
      if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
      coef *= (g - k) / (k + 1.0);
      yk *= y;
    }
    return sum;
  }
  return std::expm1(g * std::log1p(y)) - g * y;
}

}  // namespace

Lemma2Outcome lemma2_check(double x, double beta) {
  if (!(x >= 1.0) || !std::isfinite(x)) throw DomainError("lemma 2 needs x >= 1");
  if (!(beta > 0.0 && beta < 1.0)) throw DomainError("lemma 2 needs 0 < beta < 1");
  const double y = 1.0 / x;
  Lemma2Outcome out;
  out.first_margin = binomial_remainder(y, beta) + beta * (1.0 - beta) * y * y;
  out.second_margin = binomial_remainder(y, 1.0 + beta);
  out.first = out.first_margin > 0.0;
  out.second = out.second_margin > 0.0;
  return out;
}

Lemma2Sweep lemma2_sweep(std::size_t samples, std::size_t seed) {
  Lemma2Sweep s;
  s.samples = samples;
  s.min_first_margin = s.min_second_margin = std::numeric_limits<double>::infinity();
  for (std::size_t k = seed + 1; k <= seed + samples; ++k) {
    const double x = std::pow(10.0, 6.0 * radical_inverse(k, 2));
    const double beta = 0.01 + 0.98 * radical_inverse(k, 3);
    const auto r = lemma2_check(x, beta);
    if (!r.first) ++s.first_violations;
    if (!r.second) ++s.second_violations;
    s.min_first_margin = std::min(s.min_first_margin, r.first_margin);
    s.min_second_margin = std::min(s.min_second_margin, r.second_margin);
  }
  return s;
}

}  // namespace sclaw
