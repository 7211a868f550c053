#pragma once

#include <iosfwd>
#include <limits>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "sclaw/flux.hpp"

namespace sclaw {

enum class PieceKind { Constant, Fan };

/// Tag of the constant tail plateau; it sorts after every rung index.
inline constexpr long kTailTag = std::numeric_limits<long>::max();
inline constexpr long kNoTag = -1;

/// One piece of a planar profile: either a constant or a centred rarefaction fan.
struct Piece {
  double left = 0.0;  // left breakpoint in the scalar coordinate m = xi0 . x
  PieceKind kind = PieceKind::Constant;
  double value = 0.0;        // constant value, or the state at the fan's left edge
  double right_value = 0.0;  // state at the right edge (equal to value for constants)
  double center = 0.0;       // fan centre in m; the fan value is (g')^{-1}((m - center) / time)
  long tag = kNoTag;         // rung index m of the plateau this piece belongs to; fans carry their right plateau

  static Piece constant(double left, double value, long tag = kNoTag) {
    return Piece{left, PieceKind::Constant, value, value, 0.0, tag};
  }
};

/// Axis-aligned box given by its lower and upper corners.
struct Box {
  std::vector<double> lower;
  std::vector<double> upper;

  int dimension() const { return static_cast<int>(lower.size()); }
  bool contains(const std::vector<double>& x) const;
  Box translated(int axis, double offset) const;
  double volume() const;
};

/// A function of the single coordinate m = xi0 . x, supported in a box of R^d.
///
/// Pieces cover [pieces.front().left, end) in increasing order; the profile is
/// zero outside.  The first left breakpoint may be -inf and `end` may be +inf
/// for Riemann data.  Axes listed in `planar_axes` are those whose box faces
/// are level sets of m and are already encoded in the pieces; the remaining
/// box faces bound the region where the planar description is exact.
struct PlanarProfile {
  std::vector<double> direction;
  std::vector<Piece> pieces;
  double end = 0.0;
  double time = 0.0;  // time the profile describes; fans need time > 0
  Box support;
  Box inner;  // A_r: region where the planar structure is certified for t < t1'
  std::vector<int> planar_axes;
  std::shared_ptr<const EffectiveFlux> flux;
  std::vector<std::pair<std::string, std::string>> header;

  int dimension() const { return static_cast<int>(direction.size()); }
  bool empty() const { return pieces.empty(); }
  double begin() const { return pieces.empty() ? end : pieces.front().left; }
  double right_of(std::size_t i) const { return i + 1 < pieces.size() ? pieces[i + 1].left : end; }

  /// Index of the piece holding m, or pieces.size() when m lies outside [begin, end).
  std::size_t locate(double m) const;
  double value_at(double m) const;
  double piece_value(std::size_t i, double m) const;

  /// Exact integral of the profile over [a, b] (fans via the Legendre identity).
  double integrate(double a, double b) const;

  bool all_constant() const;
  double min_value() const;
  double max_value() const;

  /// d-1 dimensional measure of the inner cross-section transverse to the profile axis,
  /// divided by |xi0_a| for the dominant axis a so that dx = cross_section * dm.
  double cross_section() const;
  int dominant_axis() const;

  /// Throws ConstructionError when breakpoints are not increasing or values leave [lo, hi] of the pieces.
  void check_invariants() const;
};

/// Merges adjacent constant pieces holding the same value.
void merge_equal_constants(PlanarProfile& profile);

/// Plain-text table "m_left kind value" with a '#' header (direction, box, params); 17 significant digits.
void write_profile(std::ostream& os, const PlanarProfile& profile);

/// Inverse of write_profile.  `flux` is attached to the result; fans need it to evaluate.
PlanarProfile read_profile(std::istream& is, std::shared_ptr<const EffectiveFlux> flux = nullptr);

}  // namespace sclaw
