#pragma once

#include <cstddef>
#include <vector>

namespace sclaw {

/// Spherical Fibonacci lattice: `count` nearly equal-area points on the unit 2-sphere.
/// `offset` rotates the lattice about the pole by offset golden angles.
std::vector<std::vector<double>> fibonacci_sphere(std::size_t count, std::size_t offset = 0);

/// Deterministic points on the unit sphere of R^dim.
///
/// dim == 3 uses the spherical Fibonacci lattice; other dimensions push the
/// additive-recurrence (Kronecker) lattice with generalized golden-ratio
/// increments through the normal quantile and normalise.  `offset` skips that many
/// lattice points, giving a different but equally deterministic set.
std::vector<std::vector<double>> sphere_lattice(std::size_t dim, std::size_t count, std::size_t offset = 0);

/// All nonzero vectors with entries in {-1, 0, 1}, normalised.  Contains the
/// coordinate axes and the diagonals, where flux degeneracies concentrate.
std::vector<std::vector<double>> symmetric_directions(std::size_t dim);

/// i-th element of the van der Corput sequence in `base`.
double radical_inverse(std::size_t index, unsigned base);

}  // namespace sclaw
