#pragma once

#include <memory>
#include <vector>

#include "sclaw/exact_solution.hpp"
#include "sclaw/staircase.hpp"

namespace sclaw {

/// One staircase box of a tiling, stored in its own coordinates and shifted by `offset` along e_1.
struct TileBox {
  BlowupParams params;
  double offset = 0.0;  // Y_{k-1}
  std::shared_ptr<const ExactSolution> solution;
  double t0 = 0.0;
  double axis_speed = 0.0;
  double lower = 0.0;  // global extent of the support along e_1
  double upper = 0.0;
};

/// Finite-speed separation between an earlier box and a later one up to the later box's t0.
struct SeparationCertificate {
  std::size_t earlier = 0;
  std::size_t later = 0;
  double gap = 0.0;      // distance between the supports along e_1
  double speed = 0.0;    // V_earlier + V_later
  double horizon = 0.0;  // t0 of the later box
  bool ok = false;       // gap > speed * horizon
};

struct Tiling {
  std::vector<TileBox> boxes;
  std::vector<SeparationCertificate> certificates;
  double t0_gap = 1.0;
  std::vector<double> t0_gaps;  // t0^{k+1} - t0^k

  /// Partial sums of R_k^d * tail_k = R_k^{-4}, bounded by zeta(4) = pi^4 / 90 for distinct integers R_k.
  std::vector<double> tail_series;
  double tail_series_bound = 0.0;

  /// Partial sums of the exact integral of |u0| and of vol(box_k) * sup|u0| over box k.
  std::vector<double> l1_exact;
  std::vector<double> l1_bound;

  bool separated() const;
  bool t0_increasing() const;
};

/// K boxes along e_1: R_{k+1} = ceil(2 R_k), doubled until t0^{k+1} > t0^k + t0_gap, N_k the
/// smallest admissible start index, and Y_k = upper_k + R_{k+1} + (max_{j<=k} V_j + V_{k+1}) t0^{k+1} + 1, so every
/// earlier box, not just the neighbour, stays clear of box k+1 until its t0.
Tiling build_tiling(const BlowupParams& base, int K, double t0_gap = 1.0);

/// Sum of the per-box exact solutions.  A box contributes only where its support enlarged by V t
/// can reach; there t must be below that box's t0.
class TiledSolution {
 public:
  explicit TiledSolution(const Tiling& tiling) : tiling_(&tiling) {}

  double evaluate(const std::vector<double>& x, double t) const;

 private:
  const Tiling* tiling_;
};

}  // namespace sclaw
