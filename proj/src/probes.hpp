#pragma once

// Internal: single-tuple evaluators shared by the sweeping checkers and
// witness replay.

#include <algorithm>
#include <limits>
#include <optional>

#include "vvilab/bifunction.hpp"
#include "vvilab/check.hpp"
#include "vvilab/differential.hpp"
#include "vvilab/properties.hpp"

namespace vvilab::detail {

struct Probe {
  Point p;
  Point q;
  std::optional<Point> r;
  double a = 0.0;
  double b = 0.0;
  double t = 0.0;
  double alpha = 0.0;
};

struct Env {
  const CheckContext& ctx;
  const ObjectiveFn* phi;
  const Bifunction* h;

  [[nodiscard]] const Manifold& M() const { return ctx.manifold; }
  [[nodiscard]] double tol() const { return ctx.tol; }
  [[nodiscard]] const ObjectiveFn& objective() const;
  [[nodiscard]] const Bifunction& bifun() const;
};

using ProbeResult = std::optional<Witness>;

// Witness skeleton carrying p, q (and r when present).
Witness start_witness(Property prop, const Probe& pr);

inline double max_entry(const VecM& v) {
  double m = -std::numeric_limits<double>::infinity();
  for (double x : v) m = std::max(m, x);
  return m;
}

inline double max_neg_entry(const VecM& v) {
  double m = -std::numeric_limits<double>::infinity();
  for (double x : v) m = std::max(m, -x);
  return m;
}

// Objective-based probes (convexity.cpp).
ProbeResult probe_geodesic_convex(const Env& env, const Probe& pr);
ProbeResult probe_geodesic_quasiconvex(const Env& env, const Probe& pr);
ProbeResult probe_h_convex(const Env& env, const Probe& pr);
ProbeResult probe_h_pseudoconvex(const Env& env, const Probe& pr);
ProbeResult probe_h_quasiconvex(const Env& env, const Probe& pr);
ProbeResult probe_upper_dini_bound(const Env& env, const Probe& pr);
ProbeResult probe_lower_dini_bound(const Env& env, const Probe& pr);
ProbeResult probe_odd_homogeneous(const Env& env, const Probe& pr);
ProbeResult probe_strict_gap(const Env& env, const Probe& pr);

// Bifunction probes (bifunction.cpp).
ProbeResult probe_monotone(const Env& env, const Probe& pr);
ProbeResult probe_pseudomonotone(const Env& env, const Probe& pr);
ProbeResult probe_strictly_pseudomonotone(const Env& env, const Probe& pr);
ProbeResult probe_upper_sign_continuous(const Env& env, const Probe& pr);
ProbeResult probe_subadditive_poshom(const Env& env, const Probe& pr);
ProbeResult probe_pos_homogeneous(const Env& env, const Probe& pr);

// Homogeneity clause shared by several probes: returns a witness when
// |h(p, alpha v) - alpha h(p, v)|_inf > tol (1 + |alpha|).
ProbeResult homogeneity_clause(const Env& env, Property prop, const Probe& pr,
                               const Tangent& v);

}  // namespace vvilab::detail
