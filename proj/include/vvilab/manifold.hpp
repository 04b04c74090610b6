#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vvilab/errors.hpp"

namespace vvilab {

enum class ManifoldKind { euclidean, positive_orthant, hyperbola_curve };

/// How geodesics are parameterized on manifolds where the choice matters.
///
/// `paper` is chart-affine: on the hyperbola curve the geodesic from x_p to
/// x_q is x(t) = x_p + t (x_q - x_p). `constant_speed` is arclength-affine.
/// On the euclidean and positive-orthant manifolds both modes coincide.
enum class GeodesicMode { paper, constant_speed };

struct ManifoldId {
  ManifoldKind kind = ManifoldKind::euclidean;
  int dim = 1;

  static ManifoldId euclidean(int n);
  static ManifoldId positive_orthant(int n);
  static ManifoldId hyperbola_curve();

  friend bool operator==(const ManifoldId&, const ManifoldId&) = default;
};

/// "euclidean(2)", "positive_orthant(1)", "hyperbola_curve".
std::string to_string(const ManifoldId& id);
ManifoldId parse_manifold_id(std::string_view text);

/// "paper" / "constant-speed".
std::string to_string(GeodesicMode mode);
GeodesicMode parse_geodesic_mode(std::string_view text);

/// A manifold point in chart coordinates. For the hyperbola curve the single
/// coordinate is x; the embedded point is (x, sqrt(1 + x^2)).
struct Point {
  ManifoldId manifold;
  std::vector<double> coords;

  friend bool operator==(const Point&, const Point&) = default;
};

/// A tangent vector anchored at `base`, in chart components.
struct Tangent {
  Point base;
  std::vector<double> components;

  friend bool operator==(const Tangent&, const Tangent&) = default;
};

Tangent operator*(double alpha, const Tangent& v);
/// Throws DimensionError when the base points differ.
Tangent operator+(const Tangent& u, const Tangent& v);
Tangent operator-(const Tangent& v);

/// One of the catalog Hadamard manifolds together with its geodesic
/// parameterization mode. All operations are pure.
class Manifold {
 public:
  explicit Manifold(ManifoldId id, GeodesicMode mode = GeodesicMode::paper);

  [[nodiscard]] const ManifoldId& id() const { return id_; }
  [[nodiscard]] GeodesicMode mode() const { return mode_; }
  [[nodiscard]] int dim() const { return id_.dim; }

  /// True when the chart coordinates describe a point of the manifold.
  [[nodiscard]] bool contains(const std::vector<double>& coords) const;

  /// Validating constructors.
  [[nodiscard]] Point point(std::vector<double> coords) const;
  [[nodiscard]] Tangent tangent(const Point& base,
                                std::vector<double> components) const;
  [[nodiscard]] Tangent zero(const Point& base) const;

  [[nodiscard]] Point exp(const Point& p, const Tangent& v) const;
  [[nodiscard]] Tangent log(const Point& p, const Point& q) const;
  /// Transport of v (based at p) along the geodesic from p to q.
  [[nodiscard]] Tangent transport(const Point& p, const Point& q,
                                  const Tangent& v) const;
  /// exp_p(t log_p q), t in [0, 1].
  [[nodiscard]] Point geodesic_point(const Point& p, const Point& q,
                                     double t) const;

  [[nodiscard]] double inner(const Point& p, const Tangent& u,
                             const Tangent& v) const;
  [[nodiscard]] double norm(const Point& p, const Tangent& v) const;
  /// Riemannian distance (length of the minimal geodesic). Independent of
  /// the parameterization mode.
  [[nodiscard]] double distance(const Point& p, const Point& q) const;

  /// Embedded (x, y) coordinates of a hyperbola-curve point.
  [[nodiscard]] std::array<double, 2> embed(const Point& p) const;

 private:
  void require_point(const Point& p) const;
  void require_tangent_at(const Point& p, const Tangent& v) const;

  ManifoldId id_;
  GeodesicMode mode_;
};

namespace hyperbola {

/// Metric coefficient g(x) = 1 + x^2 / (1 + x^2) of the induced metric in the
/// x-chart.
double metric_coefficient(double x);

/// sqrt(g(x)): arclength per unit of chart velocity.
double speed(double x);

/// Signed arclength from chart coordinate a to b.
double arclength(double a, double b);

/// Chart coordinate reached after travelling signed arclength `s` from x0.
double advance(double x0, double s);

}  // namespace hyperbola

}  // namespace vvilab
