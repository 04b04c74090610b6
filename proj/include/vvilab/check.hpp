#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vvilab/differential.hpp"
#include "vvilab/manifold.hpp"
#include "vvilab/order_cone.hpp"

namespace vvilab {

enum class Verdict { holds_on_samples, counterexample };

std::string to_string(Verdict v);

/// Replayable record of a violated definitional inequality.
///
/// `margin` is the value of the offending quantity and `threshold` the bound
/// it crossed: the tuple violates iff margin > threshold, or margin >=
/// threshold when `inclusive` (failed strict-interior memberships).
struct Witness {
  std::string property;
  std::map<std::string, Point> points;
  std::map<std::string, double> params;
  std::map<std::string, VecM> values;
  double margin = 0.0;
  double threshold = 0.0;
  bool inclusive = false;

  [[nodiscard]] bool violates() const {
    return inclusive ? margin >= threshold : margin > threshold;
  }
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct CheckOutcome {
  std::string property;
  Verdict verdict = Verdict::holds_on_samples;
  std::optional<Witness> witness;
  std::size_t samples_checked = 0;
  std::vector<std::string> notes;

  [[nodiscard]] bool holds() const {
    return verdict == Verdict::holds_on_samples;
  }
};

/// Which rendering of geodesic h-convexity is checked: the componentwise
/// inequality h(p; log_p q) <= Phi(q) - Phi(p), or the cone form
/// h(p; log_p q) + Phi(p) - Phi(q) not in R^m_+ \ {0}.
enum class HConvexForm { componentwise, cone };

std::string to_string(HConvexForm f);
HConvexForm parse_hconvex_form(std::string_view text);

/// Everything a checker needs besides the functions and the sample set.
struct CheckContext {
  explicit CheckContext(Manifold m) : manifold(std::move(m)) {}

  Manifold manifold;
  double tol = kDefaultTol;
  LimitSchedule sched{};
  HConvexForm hconvex_form = HConvexForm::componentwise;
  std::vector<double> usc_t_set{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  std::uint64_t seed = 42;
};

}  // namespace vvilab
