#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "vvilab/manifold.hpp"

namespace vvilab {

enum class Spacing { linear, log };

std::string to_string(Spacing s);
Spacing parse_spacing(std::string_view text);

/// Deterministic sample set over a coordinate box: a tensor grid with
/// `grid_n` points per axis followed by `extra_random` seeded uniform points.
struct DomainSampler {
  ManifoldId manifold;
  std::vector<std::pair<double, double>> box;  // [lo, hi] per coordinate
  int grid_n = 11;
  std::uint64_t seed = 42;
  int extra_random = 0;
  Spacing spacing = Spacing::linear;

  /// Throws DomainError for empty or inverted bounds, grid_n < 2, log spacing
  /// or orthant bounds that are not strictly positive.
  void validate() const;

  /// Grid points in lexicographic order (last coordinate varies fastest).
  /// Axis k-th value is lo + (hi - lo) * k / (grid_n - 1), so refining
  /// grid_n -> 2 grid_n - 1 reproduces the coarse points bitwise.
  [[nodiscard]] std::vector<Point> grid() const;

  /// grid() followed by the seeded random points.
  [[nodiscard]] std::vector<Point> samples() const;

  /// Largest axis step of the grid (in chart units, or log units for log
  /// spacing).
  [[nodiscard]] double step() const;
};

/// Independent mt19937_64 stream for (seed, stream index).
std::mt19937_64 stream_rng(std::uint64_t seed, std::uint64_t stream);

/// Uniform double in [0, 1) with 53 random bits; identical on every platform.
double unit_uniform(std::mt19937_64& gen);

}  // namespace vvilab
