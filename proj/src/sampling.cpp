#include "sclaw/sampling.hpp"

#include <algorithm>
#include <boost/math/distributions/normal.hpp>
#include <cmath>
#include <numbers>

namespace sclaw {

std::vector<std::vector<double>> fibonacci_sphere(std::size_t count, std::size_t offset) {
  std::vector<std::vector<double>> points;
  points.reserve(count);
  const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (std::size_t i = 0; i < count; ++i) {
    const double z = 1.0 - (2.0 * static_cast<double>(i) + 1.0) / static_cast<double>(count);
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden_angle * static_cast<double>(i + offset);
    points.push_back({rho * std::cos(phi), rho * std::sin(phi), z});
  }
  return points;
}

std::vector<std::vector<double>> sphere_lattice(std::size_t dim, std::size_t count, std::size_t offset) {
  if (dim == 3) return fibonacci_sphere(count, offset);
  std::vector<std::vector<double>> points;
  points.reserve(count);
  if (dim == 1) {
    for (std::size_t i = 0; i < count; ++i) points.push_back({i % 2 == 0 ? 1.0 : -1.0});
    return points;
  }
  // phi_d is the unique positive root of x^{d+1} = x + 1.
  double phi = 2.0;
  for (int it = 0; it < 64; ++it) phi = std::pow(1.0 + phi, 1.0 / static_cast<double>(dim + 1));
  std::vector<double> increment(dim);
  for (std::size_t k = 0; k < dim; ++k) increment[k] = std::fmod(std::pow(1.0 / phi, static_cast<double>(k + 1)), 1.0);

  const boost::math::normal_distribution<double> normal;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<double> p(dim);
    double norm2 = 0.0;
    for (std::size_t k = 0; k < dim; ++k) {
      const double frac = std::fmod(0.5 + increment[k] * static_cast<double>(i + 1 + offset), 1.0);
      p[k] = boost::math::quantile(normal, std::clamp(frac, 1e-12, 1.0 - 1e-12));
      norm2 += p[k] * p[k];
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (double& v : p) v *= inv;
    points.push_back(std::move(p));
  }
  return points;
}

std::vector<std::vector<double>> symmetric_directions(std::size_t dim) {
  std::vector<std::vector<double>> out;
  std::size_t total = 1;
  for (std::size_t k = 0; k < dim; ++k) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<double> v(dim);
    std::size_t c = code;
    double norm2 = 0.0;
    for (std::size_t k = 0; k < dim; ++k) {
      v[k] = static_cast<double>(c % 3) - 1.0;
      c /= 3;
      norm2 += v[k] * v[k];
    }
    if (norm2 == 0.0) continue;
    const double inv = 1.0 / std::sqrt(norm2);
    for (double& x : v) x *= inv;
    out.push_back(std::move(v));
  }
  return out;
}

double radical_inverse(std::size_t index, unsigned base) {
  double result = 0.0;
  double f = 1.0 / base;
  while (index > 0) {
    result += f * static_cast<double>(index % base);
    index /= base;
    f /= base;
  }
  return result;
}

}  // namespace sclaw
