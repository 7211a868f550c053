#include "sclaw/tiling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sclaw/errors.hpp"

namespace sclaw {

namespace {

TileBox make_box(const BlowupParams& base, double R, double offset) {
  BlowupParams p = base;
  p.R = R;
  if (R != base.R) {
    const long extra = base.n_max - base.N;
    p.N = 0;
    p.N = minimal_start_index(p);
    p.n_max = p.N + extra;
  }
  p = resolve(p);
  TileBox box;
  box.params = p;
  box.offset = offset;
  box.solution = std::make_shared<const ExactSolution>(build_single_box(p));
  box.t0 = box.solution->t0();
  box.axis_speed = box.solution->schedule().axis_speed;
  const auto& support = box.solution->initial().support;
  box.lower = offset + support.lower[0];
  box.upper = offset + support.upper[0];
  return box;
}

}  // namespace

bool Tiling::separated() const {
  return std::all_of(certificates.begin(), certificates.end(), [](const auto& c) { return c.ok; });
}

bool Tiling::t0_increasing() const {
  return std::all_of(t0_gaps.begin(), t0_gaps.end(), [&](double g) { return g > t0_gap; });
}

Tiling build_tiling(const BlowupParams& base, int K, double t0_gap) {
  if (K < 1) throw ParameterError("K >= 1 violated");
  if (base.construction != Construction::Prop1) throw ParameterError("tiling is built for the prop1 staircase");
  if (base.R != std::floor(base.R)) throw ParameterError("tiling needs an integer R_1");
  Tiling tiling;
  tiling.t0_gap = t0_gap;
  tiling.boxes.push_back(make_box(resolve(base), base.R, 0.0));

  for (int k = 1; k < K; ++k) {
    const TileBox& prev = tiling.boxes.back();
    double R = std::ceil(2.0 * prev.params.R);
    TileBox next = make_box(base, R, 0.0);
    while (!(next.t0 > prev.t0 + t0_gap)) {
      R = std::ceil(2.0 * R);
      next = make_box(base, R, 0.0);
    }
    double earlier_speed = 0.0;
    for (const auto& b : tiling.boxes) earlier_speed = std::max(earlier_speed, b.axis_speed);
    const double Y = prev.upper + R + (earlier_speed + next.axis_speed) * next.t0 + 1.0;
    next.offset = Y;
    next.lower += Y;
    next.upper += Y;
    tiling.t0_gaps.push_back(next.t0 - prev.t0);
    tiling.boxes.push_back(std::move(next));
  }

  const auto& boxes = tiling.boxes;
  for (std::size_t j = 0; j < boxes.size(); ++j) {
    for (std::size_t k = j + 1; k < boxes.size(); ++k) {
      SeparationCertificate c;
      c.earlier = j;
      c.later = k;
      c.gap = boxes[k].lower - boxes[j].upper;
      c.speed = boxes[j].axis_speed + boxes[k].axis_speed;
      c.horizon = boxes[k].t0;
      c.ok = c.gap > c.speed * c.horizon;
      tiling.certificates.push_back(c);
    }
  }

  tiling.tail_series_bound = std::pow(std::numbers::pi, 4) / 90.0;
  double series = 0.0, exact = 0.0, bound = 0.0;
  for (const auto& b : boxes) {
    const auto& p = b.params;
    series += std::pow(p.R, p.dimension) * p.tail_value();
    const auto& init = b.solution->initial();
    double transverse = 1.0;
    for (int j = 1; j < p.dimension; ++j) {
      transverse *= init.support.upper[static_cast<std::size_t>(j)] - init.support.lower[static_cast<std::size_t>(j)];
    }
    exact += transverse * init.integrate(init.begin(), init.end);
    bound += init.support.volume() * init.max_value();
    tiling.tail_series.push_back(series);
    tiling.l1_exact.push_back(exact);
    tiling.l1_bound.push_back(bound);
  }
  return tiling;
}

double TiledSolution::evaluate(const std::vector<double>& x, double t) const {
  if (!(t >= 0.0)) throw DomainError("negative time");
  double sum = 0.0;
  for (const auto& box : tiling_->boxes) {
    const double reach = box.axis_speed * t;
    if (x[0] < box.lower - reach || x[0] > box.upper + reach) continue;
    std::vector<double> local = x;
    local[0] -= box.offset;
    sum += box.solution->evaluate(local, t);
  }
  return sum;
}

}  // namespace sclaw
