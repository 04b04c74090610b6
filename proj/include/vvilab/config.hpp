#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "vvilab/check.hpp"
#include "vvilab/instance.hpp"

namespace vvilab {

/// Flat `key = value` pairs. Keys are normalized to lowercase with '-'
/// separators, so `dini_t0` and `dini-t0` name the same setting.
using KeyValues = std::map<std::string, std::string>;

/// Parses `key = value` lines; '#' starts a comment, blank lines are skipped.
/// Throws ConfigError on lines without '=' or unknown keys.
KeyValues parse_key_values(std::istream& in, const std::string& source);
KeyValues read_key_values(const std::string& path);

std::string normalize_key(std::string key);

/// Every setting of one run. Empty strings and empty optionals mean "use the
/// instance's own value".
struct RunConfig {
  // instance selection or inline definition
  std::string instance;
  std::string id;
  std::optional<ManifoldId> manifold;
  std::string bounds;
  std::optional<int> grid_n;
  std::optional<Spacing> spacing;
  std::optional<int> extra_random;
  std::string objective;
  std::string bifunction;
  std::optional<GeodesicMode> mode;

  // numerics
  double tol = kDefaultTol;
  std::uint64_t seed = 42;
  LimitSchedule sched{};
  HConvexForm hconvex_form = HConvexForm::componentwise;

  // command arguments
  std::string problem = "nvvip";
  std::string theorem;
  std::string property;
  std::string point;
  std::string replay;

  // output
  std::string format = "text";
  std::string out;

  /// Applies pairs in order; later calls override earlier ones. Throws
  /// ConfigError on unparseable values or unknown keys.
  void apply(const KeyValues& kv);
};

/// Builds the instance named or defined by the config: a catalog id, or an
/// inline definition with at least `manifold` and `bounds`. Overrides from
/// the config (bounds, grid, spacing, mode, functions) are applied on top of
/// a catalog instance. The sampler seed is the run seed.
ProblemInstance build_instance(const RunConfig& cfg);

/// "lo:hi" for every axis, or "lo:hi;lo:hi;..." per axis.
std::vector<std::pair<double, double>> parse_bounds(const std::string& text,
                                                    std::size_t dim);

/// Comma-separated chart coordinates.
std::vector<double> parse_coords(const std::string& text);

CheckContext make_context(const RunConfig& cfg, const ResolvedInstance& inst);

}  // namespace vvilab
