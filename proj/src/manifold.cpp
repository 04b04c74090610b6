#include "vvilab/manifold.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/tools/roots.hpp>

namespace vvilab {

namespace {

// |v_i / p_i| above this overflows e^{v/p} in double precision.
constexpr double kMaxOrthantExponent = 700.0;

bool all_finite(const std::vector<double>& xs) {
  return std::all_of(xs.begin(), xs.end(),
                     [](double x) { return std::isfinite(x); });
}

}  // namespace

ManifoldId ManifoldId::euclidean(int n) {
  if (n < 1) throw DomainError("euclidean dimension must be >= 1");
  return {ManifoldKind::euclidean, n};
}

ManifoldId ManifoldId::positive_orthant(int n) {
  if (n < 1) throw DomainError("positive_orthant dimension must be >= 1");
  return {ManifoldKind::positive_orthant, n};
}

ManifoldId ManifoldId::hyperbola_curve() {
  return {ManifoldKind::hyperbola_curve, 1};
}

std::string to_string(const ManifoldId& id) {
  switch (id.kind) {
    case ManifoldKind::euclidean:
      return "euclidean(" + std::to_string(id.dim) + ")";
    case ManifoldKind::positive_orthant:
      return "positive_orthant(" + std::to_string(id.dim) + ")";
    case ManifoldKind::hyperbola_curve:
      return "hyperbola_curve";
  }
  return "?";
}

ManifoldId parse_manifold_id(std::string_view text) {
  if (text == "hyperbola_curve" || text == "hyperbola-curve") {
    return ManifoldId::hyperbola_curve();
  }
  const auto open = text.find('(');
  const auto close = text.rfind(')');
  std::string name(text.substr(0, open));
  int n = 1;
  if (open != std::string_view::npos) {
    if (close == std::string_view::npos || close < open) {
      throw DomainError("malformed manifold id: " + std::string(text));
    }
    std::istringstream in(std::string(text.substr(open + 1, close - open - 1)));
    if (!(in >> n)) {
      throw DomainError("malformed manifold dimension: " + std::string(text));
    }
  }
  std::replace(name.begin(), name.end(), '-', '_');
  if (name == "euclidean") return ManifoldId::euclidean(n);
  if (name == "positive_orthant") return ManifoldId::positive_orthant(n);
  throw UnknownIdError("unknown manifold: " + std::string(text));
}

std::string to_string(GeodesicMode mode) {
  return mode == GeodesicMode::paper ? "paper" : "constant-speed";
}

GeodesicMode parse_geodesic_mode(std::string_view text) {
  if (text == "paper") return GeodesicMode::paper;
  if (text == "constant-speed" || text == "constant_speed") {
    return GeodesicMode::constant_speed;
  }
  throw UnknownIdError("unknown geodesic mode: " + std::string(text));
}

Tangent operator*(double alpha, const Tangent& v) {
  Tangent out = v;
  for (double& c : out.components) c *= alpha;
  return out;
}

Tangent operator+(const Tangent& u, const Tangent& v) {
  if (!(u.base == v.base) || u.components.size() != v.components.size()) {
    throw DimensionError("tangent vectors live at different base points");
  }
  Tangent out = u;
  for (std::size_t i = 0; i < out.components.size(); ++i) {
    out.components[i] += v.components[i];
  }
  return out;
}

Tangent operator-(const Tangent& v) { return -1.0 * v; }

namespace hyperbola {

double metric_coefficient(double x) {
  const double x2 = x * x;
  return 1.0 + x2 / (1.0 + x2);
}

double speed(double x) { return std::sqrt(metric_coefficient(x)); }

double arclength(double a, double b) {
  if (a == b) return 0.0;
  // Unit-length panels keep the nearest complex singularity (|Im| >= 1/sqrt 2)
  // far enough away for 30-point Gauss to reach double precision.
  const int panels = std::max(1, static_cast<int>(std::ceil(std::abs(b - a))));
  const double h = (b - a) / panels;
  double total = 0.0;
  for (int k = 0; k < panels; ++k) {
    const double lo = a + k * h;
    const double hi = k + 1 == panels ? b : a + (k + 1) * h;
    total += boost::math::quadrature::gauss<double, 30>::integrate(
        [](double x) { return speed(x); }, lo, hi);
  }
  return total;
}

double advance(double x0, double s) {
  if (s == 0.0) return x0;
  // speed in [1, sqrt 2] brackets the chart displacement.
  const double lo = x0 + (s > 0 ? s / std::sqrt(2.0) : s);
  const double hi = x0 + (s > 0 ? s : s / std::sqrt(2.0));
  const double guess = x0 + s / speed(x0);
  std::uintmax_t iters = 100;
  return boost::math::tools::newton_raphson_iterate(
      [&](double x) {
        return std::make_pair(arclength(x0, x) - s, speed(x));
      },
      std::clamp(guess, lo, hi), lo, hi,
      std::numeric_limits<double>::digits - 2, iters);
}

}  // namespace hyperbola

Manifold::Manifold(ManifoldId id, GeodesicMode mode) : id_(id), mode_(mode) {
  if (id_.dim < 1) throw DomainError("manifold dimension must be >= 1");
  if (id_.kind == ManifoldKind::hyperbola_curve && id_.dim != 1) {
    throw DomainError("hyperbola_curve has intrinsic dimension 1");
  }
}

bool Manifold::contains(const std::vector<double>& coords) const {
  if (static_cast<int>(coords.size()) != id_.dim || !all_finite(coords)) {
    return false;
  }
  if (id_.kind == ManifoldKind::positive_orthant) {
    return std::all_of(coords.begin(), coords.end(),
                       [](double x) { return x > 0.0; });
  }
  return true;
}

void Manifold::require_point(const Point& p) const {
  if (!(p.manifold == id_)) {
    throw DimensionError("point belongs to " + to_string(p.manifold) +
                         ", expected " + to_string(id_));
  }
  if (static_cast<int>(p.coords.size()) != id_.dim) {
    throw DimensionError("point has " + std::to_string(p.coords.size()) +
                         " coordinates, expected " + std::to_string(id_.dim));
  }
}

void Manifold::require_tangent_at(const Point& p, const Tangent& v) const {
  require_point(p);
  if (!(v.base == p)) {
    throw DimensionError("tangent vector is not based at the given point");
  }
  if (static_cast<int>(v.components.size()) != id_.dim) {
    throw DimensionError("tangent has wrong number of components");
  }
}

Point Manifold::point(std::vector<double> coords) const {
  if (static_cast<int>(coords.size()) != id_.dim) {
    throw DimensionError("expected " + std::to_string(id_.dim) +
                         " coordinates for " + to_string(id_));
  }
  if (!contains(coords)) {
    throw DomainError("coordinates are not a point of " + to_string(id_));
  }
  return Point{id_, std::move(coords)};
}

Tangent Manifold::tangent(const Point& base,
                          std::vector<double> components) const {
  require_point(base);
  if (static_cast<int>(components.size()) != id_.dim) {
    throw DimensionError("tangent has wrong number of components");
  }
  if (!all_finite(components)) {
    throw DomainError("tangent components must be finite");
  }
  return Tangent{base, std::move(components)};
}

Tangent Manifold::zero(const Point& base) const {
  return tangent(base, std::vector<double>(id_.dim, 0.0));
}

Point Manifold::exp(const Point& p, const Tangent& v) const {
  require_tangent_at(p, v);
  std::vector<double> out(p.coords.size());
  switch (id_.kind) {
    case ManifoldKind::euclidean:
      for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = p.coords[i] + v.components[i];
      }
      break;
    case ManifoldKind::positive_orthant:
      for (std::size_t i = 0; i < out.size(); ++i) {
        const double e = v.components[i] / p.coords[i];
        if (!(std::abs(e) <= kMaxOrthantExponent)) {
          throw RangeError("exp overflow on positive_orthant: |v/p| = " +
                           std::to_string(std::abs(e)));
        }
        out[i] = p.coords[i] * std::exp(e);
      }
      break;
    case ManifoldKind::hyperbola_curve: {
      const double x = p.coords[0];
      const double u = v.components[0];
      out[0] = mode_ == GeodesicMode::paper
                   ? x + u
                   : hyperbola::advance(x, u * hyperbola::speed(x));
      break;
    }
  }
  if (!contains(out)) {
    throw RangeError("exp map produced a non-representable point");
  }
  return Point{id_, std::move(out)};
}

Tangent Manifold::log(const Point& p, const Point& q) const {
  require_point(p);
  require_point(q);
  std::vector<double> out(p.coords.size());
  switch (id_.kind) {
    case ManifoldKind::euclidean:
      for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = q.coords[i] - p.coords[i];
      }
      break;
    case ManifoldKind::positive_orthant:
      for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = p.coords[i] * std::log(q.coords[i] / p.coords[i]);
      }
      break;
    case ManifoldKind::hyperbola_curve: {
      const double x = p.coords[0];
      out[0] = mode_ == GeodesicMode::paper
                   ? q.coords[0] - x
                   : hyperbola::arclength(x, q.coords[0]) / hyperbola::speed(x);
      break;
    }
  }
  return Tangent{p, std::move(out)};
}

Tangent Manifold::transport(const Point& p, const Point& q,
                            const Tangent& v) const {
  require_tangent_at(p, v);
  require_point(q);
  std::vector<double> out = v.components;
  switch (id_.kind) {
    case ManifoldKind::euclidean:
      break;
    case ManifoldKind::positive_orthant:
      for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] *= q.coords[i] / p.coords[i];
      }
      break;
    case ManifoldKind::hyperbola_curve:
      // Chart-affine geodesics are autoparallel for the flat chart
      // connection, so paper mode transports by the identity. Constant-speed
      // mode carries the unit frame: |u|_p = |Pu|_q.
      if (mode_ == GeodesicMode::constant_speed) {
        out[0] *= hyperbola::speed(p.coords[0]) / hyperbola::speed(q.coords[0]);
      }
      break;
  }
  return Tangent{q, std::move(out)};
}

Point Manifold::geodesic_point(const Point& p, const Point& q, double t) const {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw DomainError("geodesic parameter t must lie in [0, 1]");
  }
  require_point(p);
  require_point(q);
  if (t == 0.0) return p;
  if (t == 1.0) return q;
  return exp(p, t * log(p, q));
}

double Manifold::inner(const Point& p, const Tangent& u,
                       const Tangent& v) const {
  require_tangent_at(p, u);
  require_tangent_at(p, v);
  double acc = 0.0;
  switch (id_.kind) {
    case ManifoldKind::euclidean:
      for (std::size_t i = 0; i < u.components.size(); ++i) {
        acc += u.components[i] * v.components[i];
      }
      break;
    case ManifoldKind::positive_orthant:
      for (std::size_t i = 0; i < u.components.size(); ++i) {
        acc += u.components[i] * v.components[i] /
               (p.coords[i] * p.coords[i]);
      }
      break;
    case ManifoldKind::hyperbola_curve:
      acc = hyperbola::metric_coefficient(p.coords[0]) * u.components[0] *
            v.components[0];
      break;
  }
  return acc;
}

double Manifold::norm(const Point& p, const Tangent& v) const {
  return std::sqrt(inner(p, v, v));
}

double Manifold::distance(const Point& p, const Point& q) const {
  require_point(p);
  require_point(q);
  if (id_.kind == ManifoldKind::hyperbola_curve) {
    return std::abs(hyperbola::arclength(p.coords[0], q.coords[0]));
  }
  return norm(p, log(p, q));
}

std::array<double, 2> Manifold::embed(const Point& p) const {
  require_point(p);
  if (id_.kind != ManifoldKind::hyperbola_curve) {
    throw DomainError("embed() is defined for hyperbola_curve only");
  }
  const double x = p.coords[0];
  return {x, std::sqrt(1.0 + x * x)};
}

}  // namespace vvilab
