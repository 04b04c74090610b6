#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "vvilab/bifunction.hpp"
#include "vvilab/check.hpp"
#include "vvilab/differential.hpp"
#include "vvilab/manifold.hpp"
#include "vvilab/sampler.hpp"

namespace vvilab::testing {

inline DomainSampler box_sampler(ManifoldId id,
                                 std::vector<std::pair<double, double>> box,
                                 int n, Spacing spacing = Spacing::linear) {
  DomainSampler s;
  s.manifold = id;
  s.box = std::move(box);
  s.grid_n = n;
  s.spacing = spacing;
  return s;
}

inline DomainSampler line_sampler(ManifoldId id, double lo, double hi, int n,
                                  Spacing spacing = Spacing::linear) {
  return box_sampler(id, {{lo, hi}}, n, spacing);
}

inline CheckContext context(ManifoldId id,
                            GeodesicMode mode = GeodesicMode::paper) {
  return CheckContext(Manifold(id, mode));
}

inline ObjectiveFn objective(std::string id, std::size_t m,
                             std::function<VecM(const Point&)> fn) {
  ObjectiveFn f;
  f.id = std::move(id);
  f.m = m;
  f.eval = std::move(fn);
  return f;
}

inline Bifunction bifunction(
    std::string id, std::size_t m,
    std::function<VecM(const Point&, const Tangent&)> fn) {
  Bifunction h;
  h.id = std::move(id);
  h.m = m;
  h.eval = std::move(fn);
  return h;
}

/// Seeded random points and tangents for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }
  int integer(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }

  Point point(const Manifold& M) {
    std::vector<double> c(M.dim());
    for (double& x : c) {
      switch (M.id().kind) {
        case ManifoldKind::euclidean:
          x = uniform(-5.0, 5.0);
          break;
        case ManifoldKind::positive_orthant:
          x = std::exp(uniform(std::log(0.05), std::log(20.0)));
          break;
        case ManifoldKind::hyperbola_curve:
          x = uniform(-3.0, 3.0);
          break;
      }
    }
    return M.point(std::move(c));
  }

  /// Tangent whose exp stays inside the sampling region's scale.
  Tangent tangent(const Manifold& M, const Point& p, double scale = 2.0) {
    std::vector<double> c(M.dim());
    for (std::size_t i = 0; i < c.size(); ++i) {
      const double r = uniform(-scale, scale);
      c[i] = M.id().kind == ManifoldKind::positive_orthant ? r * p.coords[i]
                                                            : r;
    }
    return M.tangent(p, std::move(c));
  }

  VecM vec(std::size_t m, double lo, double hi) {
    VecM v(m);
    for (double& x : v) x = uniform(lo, hi);
    return v;
  }

 private:
  std::mt19937_64 rng_;
};

inline double max_abs_diff(const std::vector<double>& a,
                           const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    d = std::max(d, std::abs(a[i] - b[i]));
  }
  return a.size() == b.size() ? d : INFINITY;
}

/// Manifolds every geometry property runs over.
inline std::vector<Manifold> catalog_manifolds() {
  return {Manifold(ManifoldId::euclidean(1)),
          Manifold(ManifoldId::euclidean(2)),
          Manifold(ManifoldId::positive_orthant(1)),
          Manifold(ManifoldId::positive_orthant(2)),
          Manifold(ManifoldId::hyperbola_curve(), GeodesicMode::paper),
          Manifold(ManifoldId::hyperbola_curve(), GeodesicMode::constant_speed)};
}

inline std::string label(const Manifold& M) {
  return to_string(M.id()) + "/" + to_string(M.mode());
}

}  // namespace vvilab::testing
