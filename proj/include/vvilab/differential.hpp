#pragma once

#include <cstddef>
#include <functional>
#include <string>

#include "vvilab/manifold.hpp"
#include "vvilab/order_cone.hpp"

namespace vvilab {

/// A vector-valued objective Phi: S -> R^m.
struct ObjectiveFn {
  std::string id;
  std::size_t m = 1;
  std::function<VecM(const Point&)> eval;
  /// Exact directional derivative d/dt Phi(exp_p(t v)) at t = 0+, when known.
  /// Receives the manifold because the geodesic depends on its mode.
  std::function<VecM(const Manifold&, const Point&, const Tangent&)>
      analytic_directional;
  /// Optional restriction of the feasible set beyond manifold membership.
  std::function<bool(const Point&)> domain;

  /// Evaluates and checks the output length and NaN-freeness.
  [[nodiscard]] VecM operator()(const Point& p) const;
  [[nodiscard]] bool feasible(const Manifold& M, const Point& p) const;
};

/// Geometric sequence t_k = t0 * ratio^k, k = 0..steps-1, discretizing
/// t -> 0+.
struct LimitSchedule {
  double t0 = 1e-2;
  double ratio = 0.5;
  int steps = 20;

  /// Throws DomainError unless t0 > 0, 0 < ratio < 1 and steps >= 1.
  void validate() const;
  [[nodiscard]] double t(int k) const;
};

enum class DiniKind { upper, lower };

std::string to_string(DiniKind kind);

/// Quotients beyond this magnitude that grow monotonically are reported as
/// +/-infinity.
inline constexpr double kDiniDivergence = 1e12;

/// limsup_{t->0+} (Phi_i(exp_p t v) - Phi_i(p)) / t, estimated as the maximum
/// over the last ceil(steps/2) feasible quotients of the schedule.
double dini_upper(const Manifold& M, const ObjectiveFn& f,
                  std::size_t component, const Point& p, const Tangent& v,
                  const LimitSchedule& sched = {});

/// liminf counterpart of dini_upper (minimum over the tail).
double dini_lower(const Manifold& M, const ObjectiveFn& f,
                  std::size_t component, const Point& p, const Tangent& v,
                  const LimitSchedule& sched = {});

/// Componentwise Dini estimate; output has length f.m.
VecM dini_vector(const Manifold& M, const ObjectiveFn& f, const Point& p,
                 const Tangent& v, const LimitSchedule& sched, DiniKind kind);

}  // namespace vvilab
