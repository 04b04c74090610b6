#include "vvilab/catalog.hpp"

#include <cmath>
#include <functional>
#include <map>

namespace vvilab {

namespace {

using Jacobian = std::function<std::vector<VecM>(const Point&)>;

double scalar_coord(const Point& p, const std::string& id) {
  if (p.coords.size() != 1) {
    throw EvaluationError("objective '" + id + "' is defined on 1-D charts");
  }
  return p.coords[0];
}

// The chart velocity of t -> exp_p(t v) at t = 0 is v in every catalog
// manifold and mode, so the directional derivative is J(p) v.
ObjectiveFn smooth(std::string id, std::size_t m,
                   std::function<VecM(const Point&)> eval, Jacobian jac) {
  ObjectiveFn f;
  f.id = std::move(id);
  f.m = m;
  f.eval = std::move(eval);
  f.analytic_directional = [jac = std::move(jac)](const Manifold&,
                                                  const Point& p,
                                                  const Tangent& v) {
    const auto rows = jac(p);
    VecM out(rows.size(), 0.0);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t k = 0; k < v.components.size(); ++k) {
        out[i] += rows[i][k] * v.components[k];
      }
    }
    return out;
  };
  return f;
}

ObjectiveFn nonsmooth(std::string id, std::size_t m,
                      std::function<VecM(const Point&)> eval) {
  ObjectiveFn f;
  f.id = std::move(id);
  f.m = m;
  f.eval = std::move(eval);
  return f;
}

double bimodal(double x) {
  return -(x - 1.0) * (x - 1.0) * (x - 3.0) * (x - 3.0);
}

double bimodal_prime(double x) {
  return -2.0 * (x - 1.0) * (x - 3.0) * ((x - 3.0) + (x - 1.0));
}

struct ObjectiveDef {
  std::string id;
  Provenance provenance;
  std::string description;
  std::function<ObjectiveFn()> make;
};

const std::vector<ObjectiveDef>& objective_defs() {
  static const std::vector<ObjectiveDef> defs = [] {
    std::vector<ObjectiveDef> d;
    d.push_back({"example-3.3-phi", Provenance::paper,
                 "(x^2, y^2) on the hyperbola curve y = sqrt(1 + x^2)", [] {
                   const std::string id = "example-3.3-phi";
                   return smooth(
                       id, 2,
                       [id](const Point& p) {
                         const double x = scalar_coord(p, id);
                         const double y = std::sqrt(1.0 + x * x);
                         return VecM{x * x, y * y};
                       },
                       [](const Point& p) {
                         const double x = p.coords[0];
                         return std::vector<VecM>{{2.0 * x}, {2.0 * x}};
                       });
                 }});
    d.push_back({"neg-x2-y", Provenance::derived,
                 "(-x^2, y) on the hyperbola curve", [] {
                   const std::string id = "neg-x2-y";
                   return smooth(
                       id, 2,
                       [id](const Point& p) {
                         const double x = scalar_coord(p, id);
                         return VecM{-x * x, std::sqrt(1.0 + x * x)};
                       },
                       [](const Point& p) {
                         const double x = p.coords[0];
                         return std::vector<VecM>{
                             {-2.0 * x}, {x / std::sqrt(1.0 + x * x)}};
                       });
                 }});
    d.push_back({"biobjective-quadratic", Provenance::derived,
                 "((p-2)^2, (p-3)^2); Pareto interval [2, 3]", [] {
                   const std::string id = "biobjective-quadratic";
                   return smooth(
                       id, 2,
                       [id](const Point& p) {
                         const double x = scalar_coord(p, id);
                         return VecM{(x - 2) * (x - 2), (x - 3) * (x - 3)};
                       },
                       [](const Point& p) {
                         const double x = p.coords[0];
                         return std::vector<VecM>{{2 * (x - 2)}, {2 * (x - 3)}};
                       });
                 }});
    d.push_back({"shifted-square", Provenance::derived, "((p-2)^2, (p-2)^2)",
                 [] {
                   const std::string id = "shifted-square";
                   return smooth(
                       id, 2,
                       [id](const Point& p) {
                         const double x = scalar_coord(p, id);
                         return VecM{(x - 2) * (x - 2), (x - 2) * (x - 2)};
                       },
                       [](const Point& p) {
                         const double x = p.coords[0];
                         return std::vector<VecM>{{2 * (x - 2)}, {2 * (x - 2)}};
                       });
                 }});
    d.push_back({"log-square", Provenance::derived,
                 "((ln p)^2, (ln p)^2); geodesically convex on the orthant",
                 [] {
                   const std::string id = "log-square";
                   return smooth(
                       id, 2,
                       [id](const Point& p) {
                         const double l = std::log(scalar_coord(p, id));
                         return VecM{l * l, l * l};
                       },
                       [](const Point& p) {
                         const double x = p.coords[0];
                         const double g = 2.0 * std::log(x) / x;
                         return std::vector<VecM>{{g}, {g}};
                       });
                 }});
    d.push_back({"identity2", Provenance::trivial, "(p, p)", [] {
                   const std::string id = "identity2";
                   return smooth(
                       id, 2,
                       [id](const Point& p) {
                         const double x = scalar_coord(p, id);
                         return VecM{x, x};
                       },
                       [](const Point&) {
                         return std::vector<VecM>{{1.0}, {1.0}};
                       });
                 }});
    d.push_back({"neg-identity2", Provenance::trivial, "(-p, -p)", [] {
                   const std::string id = "neg-identity2";
                   return smooth(
                       id, 2,
                       [id](const Point& p) {
                         const double x = scalar_coord(p, id);
                         return VecM{-x, -x};
                       },
                       [](const Point&) {
                         return std::vector<VecM>{{-1.0}, {-1.0}};
                       });
                 }});
    d.push_back({"constant2", Provenance::trivial, "(1, 1)", [] {
                   return smooth(
                       "constant2", 2, [](const Point&) { return VecM{1.0, 1.0}; },
                       [](const Point& p) {
                         return std::vector<VecM>{
                             VecM(p.coords.size(), 0.0),
                             VecM(p.coords.size(), 0.0)};
                       });
                 }});
    d.push_back({"bimodal", Provenance::derived,
                 "(-(p-1)^2 (p-3)^2, p); not quasiconvex on [0.5, 4]", [] {
                   const std::string id = "bimodal";
                   return smooth(
                       id, 2,
                       [id](const Point& p) {
                         const double x = scalar_coord(p, id);
                         return VecM{bimodal(x), x};
                       },
                       [](const Point& p) {
                         return std::vector<VecM>{{bimodal_prime(p.coords[0])},
                                                  {1.0}};
                       });
                 }});
    d.push_back({"orthant2-log", Provenance::derived,
                 "((ln p1)^2 + (ln p2)^2, (ln p1 - ln p2 - 1)^2) on the "
                 "2-D orthant",
                 [] {
                   return smooth(
                       "orthant2-log", 2,
                       [](const Point& p) {
                         if (p.coords.size() != 2) {
                           throw EvaluationError(
                               "objective 'orthant2-log' is 2-D");
                         }
                         const double a = std::log(p.coords[0]);
                         const double b = std::log(p.coords[1]);
                         return VecM{a * a + b * b,
                                     (a - b - 1.0) * (a - b - 1.0)};
                       },
                       [](const Point& p) {
                         const double x = p.coords[0];
                         const double y = p.coords[1];
                         const double a = std::log(x);
                         const double b = std::log(y);
                         const double g = 2.0 * (a - b - 1.0);
                         return std::vector<VecM>{{2 * a / x, 2 * b / y},
                                                  {g / x, -g / y}};
                       });
                 }});
    d.push_back({"euclid2-quad", Provenance::derived,
                 "(|p|^2, |p - e1|^2) on the euclidean plane", [] {
                   return smooth(
                       "euclid2-quad", 2,
                       [](const Point& p) {
                         if (p.coords.size() != 2) {
                           throw EvaluationError(
                               "objective 'euclid2-quad' is 2-D");
                         }
                         const double x = p.coords[0];
                         const double y = p.coords[1];
                         return VecM{x * x + y * y, (x - 1) * (x - 1) + y * y};
                       },
                       [](const Point& p) {
                         const double x = p.coords[0];
                         const double y = p.coords[1];
                         return std::vector<VecM>{{2 * x, 2 * y},
                                                  {2 * (x - 1), 2 * y}};
                       });
                 }});
    // Scalar functions used by the derivative estimators.
    d.push_back({"square", Provenance::trivial, "p^2", [] {
                   return smooth(
                       "square", 1,
                       [](const Point& p) {
                         const double x = scalar_coord(p, "square");
                         return VecM{x * x};
                       },
                       [](const Point& p) {
                         return std::vector<VecM>{{2 * p.coords[0]}};
                       });
                 }});
    d.push_back({"cubic", Provenance::trivial, "p^3 - p", [] {
                   return smooth(
                       "cubic", 1,
                       [](const Point& p) {
                         const double x = scalar_coord(p, "cubic");
                         return VecM{x * x * x - x};
                       },
                       [](const Point& p) {
                         const double x = p.coords[0];
                         return std::vector<VecM>{{3 * x * x - 1}};
                       });
                 }});
    d.push_back({"sine", Provenance::trivial, "sin p", [] {
                   return smooth(
                       "sine", 1,
                       [](const Point& p) {
                         return VecM{std::sin(scalar_coord(p, "sine"))};
                       },
                       [](const Point& p) {
                         return std::vector<VecM>{{std::cos(p.coords[0])}};
                       });
                 }});
    d.push_back({"log", Provenance::trivial, "ln p", [] {
                   return smooth(
                       "log", 1,
                       [](const Point& p) {
                         return VecM{std::log(scalar_coord(p, "log"))};
                       },
                       [](const Point& p) {
                         return std::vector<VecM>{{1.0 / p.coords[0]}};
                       });
                 }});
    d.push_back({"abs", Provenance::trivial, "|p| (nonsmooth at 0)", [] {
                   return nonsmooth("abs", 1, [](const Point& p) {
                     return VecM{std::abs(scalar_coord(p, "abs"))};
                   });
                 }});
    d.push_back({"neg-abs", Provenance::trivial, "-|p| (nonsmooth at 0)", [] {
                   return nonsmooth("neg-abs", 1, [](const Point& p) {
                     return VecM{-std::abs(scalar_coord(p, "neg-abs"))};
                   });
                 }});
    return d;
  }();
  return defs;
}

double sum_of(const Tangent& v) {
  double s = 0.0;
  for (double c : v.components) s += c;
  return s;
}

struct BifunctionDef {
  std::string id;
  std::size_t m;
  Provenance provenance;
  std::string description;
  std::function<VecM(const Point&, const Tangent&)> eval;
  std::vector<DeclaredProperty> declared;
};

const std::vector<BifunctionDef>& bifunction_defs() {
  using PT = PropertyTag;
  static const std::vector<BifunctionDef> defs = {
      {"paper-monotone",
       2,
       Provenance::paper,
       "h(p; d) = (-p, (ln p - 1) / p * d) on the 1-D positive orthant",
       [](const Point& p, const Tangent& v) {
         if (p.coords.size() != 1) {
           throw EvaluationError("'paper-monotone' is defined on R_++");
         }
         const double x = p.coords[0];
         return VecM{-x, (std::log(x) - 1.0) / x * v.components[0]};
       },
       {{PT::monotone, Provenance::paper},
        {PT::pseudomonotone, Provenance::derived},
        {PT::strictly_pseudomonotone, Provenance::derived}}},
      {"zero2",
       2,
       Provenance::trivial,
       "h = (0, 0)",
       [](const Point&, const Tangent&) { return VecM{0.0, 0.0}; },
       {{PT::monotone, Provenance::trivial},
        {PT::pseudomonotone, Provenance::trivial},
        {PT::upper_sign_continuous, Provenance::trivial},
        {PT::pos_homogeneous, Provenance::trivial},
        {PT::subadditive, Provenance::trivial}}},
      {"const-pos",
       2,
       Provenance::trivial,
       "h = (1, 1)",
       [](const Point&, const Tangent&) { return VecM{1.0, 1.0}; },
       {{PT::subadditive, Provenance::trivial}}},
      {"const-neg",
       2,
       Provenance::trivial,
       "h = (-1, -1)",
       [](const Point&, const Tangent&) { return VecM{-1.0, -1.0}; },
       {{PT::monotone, Provenance::trivial},
        {PT::pseudomonotone, Provenance::trivial}}},
      {"linear-v",
       2,
       Provenance::derived,
       "h(p, v) = (sum v, sum v)",
       [](const Point&, const Tangent& v) {
         const double s = sum_of(v);
         return VecM{s, s};
       },
       {{PT::monotone, Provenance::derived},
        {PT::pseudomonotone, Provenance::derived},
        {PT::strictly_pseudomonotone, Provenance::derived},
        {PT::upper_sign_continuous, Provenance::derived},
        {PT::pos_homogeneous, Provenance::trivial},
        {PT::subadditive, Provenance::trivial}}},
      {"linear-coef",
       2,
       Provenance::derived,
       "h(p, v) = ((1 + p^2) sum v, sum v / (1 + p^2))",
       [](const Point& p, const Tangent& v) {
         double r2 = 0.0;
         for (double c : p.coords) r2 += c * c;
         const double s = sum_of(v);
         return VecM{(1.0 + r2) * s, s / (1.0 + r2)};
       },
       {{PT::pos_homogeneous, Provenance::trivial},
        {PT::subadditive, Provenance::trivial}}},
      {"abs-v",
       2,
       Provenance::trivial,
       "h(p, v) = (|v|_1, |v|_1)",
       [](const Point&, const Tangent& v) {
         double s = 0.0;
         for (double c : v.components) s += std::abs(c);
         return VecM{s, s};
       },
       {{PT::pos_homogeneous, Provenance::trivial},
        {PT::subadditive, Provenance::trivial}}},
      {"square-v",
       2,
       Provenance::trivial,
       "h(p, v) = (|v|^2, |v|^2)",
       [](const Point&, const Tangent& v) {
         double s = 0.0;
         for (double c : v.components) s += c * c;
         return VecM{s, s};
       },
       {}},
      {"square-v-minus-1",
       2,
       Provenance::trivial,
       "h(p, v) = (|v|^2 - 1, |v|^2 - 1)",
       [](const Point&, const Tangent& v) {
         double s = 0.0;
         for (double c : v.components) s += c * c;
         return VecM{s - 1.0, s - 1.0};
       },
       {}},
  };
  return defs;
}

struct AdapterFamily {
  std::string prefix;
  DiniKind kind;
  double sign;
  double shift;
  std::string description;
};

const std::vector<AdapterFamily>& adapter_families() {
  static const std::vector<AdapterFamily> fams = {
      {"dini-upper", DiniKind::upper, 1.0, 0.0, "upper Dini estimate of Phi"},
      {"dini-lower", DiniKind::lower, 1.0, 0.0, "lower Dini estimate of Phi"},
      {"dini-upper+1", DiniKind::upper, 1.0, 1.0, "upper Dini estimate + 1"},
      {"dini-upper-1", DiniKind::upper, 1.0, -1.0, "upper Dini estimate - 1"},
      {"neg-dini-upper", DiniKind::upper, -1.0, 0.0,
       "negated upper Dini estimate"},
  };
  return fams;
}

std::vector<ProblemInstance> build_instances() {
  const auto box1 = [](double lo, double hi) {
    return std::vector<std::pair<double, double>>{{lo, hi}};
  };
  const auto sampler = [](ManifoldId id,
                          std::vector<std::pair<double, double>> box, int n,
                          Spacing spacing = Spacing::linear) {
    DomainSampler s;
    s.manifold = id;
    s.box = std::move(box);
    s.grid_n = n;
    s.spacing = spacing;
    return s;
  };
  const auto H = ManifoldId::hyperbola_curve();
  const auto O1 = ManifoldId::positive_orthant(1);
  const auto E1 = ManifoldId::euclidean(1);
  std::vector<ProblemInstance> v;
  v.push_back({"example-3.3", H, sampler(H, box1(-1, 1), 21),
               "example-3.3-phi", "dini-upper/example-3.3-phi",
               GeodesicMode::paper, Provenance::paper,
               "Phi(x, y) = (x^2, y^2) on the hyperbola curve, chart-affine "
               "geodesics"});
  v.push_back({"paper-monotone", O1,
               sampler(O1, box1(0.5, 4), 64, Spacing::log), "",
               "paper-monotone", GeodesicMode::paper, Provenance::paper,
               "monotone bifunction (-p, (ln p - 1)/p d) on R_++"});
  v.push_back({"biobjective-quadratic", O1, sampler(O1, box1(0.5, 5), 91),
               "biobjective-quadratic", "dini-upper/biobjective-quadratic",
               GeodesicMode::paper, Provenance::derived,
               "((p-2)^2, (p-3)^2) on R_++, grid step 0.05"});
  v.push_back({"linear-ez", E1, sampler(E1, box1(0, 1), 51), "identity2",
               "linear-v", GeodesicMode::paper, Provenance::derived,
               "h(p, v) = (v, v) with Phi = (p, p) on [0, 1], step 0.02"});
  v.push_back({"bimodal-qc", O1, sampler(O1, box1(0.5, 4), 36), "bimodal",
               "dini-upper/bimodal", GeodesicMode::paper, Provenance::derived,
               "bimodal first component; quasiconvexity fails"});
  v.push_back({"log-square", O1, sampler(O1, box1(0.5, 4), 36), "log-square",
               "dini-upper/log-square", GeodesicMode::paper,
               Provenance::derived, "((ln p)^2, (ln p)^2) on R_++"});
  v.push_back({"shifted-square", O1, sampler(O1, box1(0.5, 4), 36),
               "shifted-square", "dini-upper/shifted-square",
               GeodesicMode::paper, Provenance::derived,
               "((p-2)^2, (p-2)^2) on R_++"});
  v.push_back({"constant-zero", E1, sampler(E1, box1(-1, 1), 21), "constant2",
               "zero2", GeodesicMode::paper, Provenance::trivial,
               "constant objective with h = 0"});
  v.push_back({"broken-upper-dini", O1, sampler(O1, box1(0.5, 4), 36),
               "shifted-square", "dini-upper+1/shifted-square",
               GeodesicMode::paper, Provenance::derived,
               "h exceeds the upper Dini derivative by 1"});
  v.push_back({"orthant2-log", ManifoldId::positive_orthant(2),
               sampler(ManifoldId::positive_orthant(2),
                       {{0.5, 3.0}, {0.5, 3.0}}, 6),
               "orthant2-log", "dini-upper/orthant2-log", GeodesicMode::paper,
               Provenance::derived, "log-quadratic pair on the 2-D orthant"});
  v.push_back({"euclid2-quad", ManifoldId::euclidean(2),
               sampler(ManifoldId::euclidean(2), {{-1.0, 1.0}, {-1.0, 1.0}},
                       5),
               "euclid2-quad", "dini-upper/euclid2-quad", GeodesicMode::paper,
               Provenance::derived, "two quadratics on the euclidean plane"});
  v.push_back({"hyperbola-constant-speed", H, sampler(H, box1(-1, 1), 21),
               "example-3.3-phi", "dini-upper/example-3.3-phi",
               GeodesicMode::constant_speed, Provenance::derived,
               "example-3.3 objective with arclength-affine geodesics"});
  v.push_back({"linear-coef-ez", E1, sampler(E1, box1(-1, 1), 21), "",
               "linear-coef", GeodesicMode::paper, Provenance::derived,
               "linear-in-v bifunction with point-dependent coefficients"});
  return v;
}

}  // namespace

const std::vector<std::string>& objective_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& d : objective_defs()) v.push_back(d.id);
    return v;
  }();
  return ids;
}

ObjectiveFn find_objective(std::string_view id) {
  for (const auto& d : objective_defs()) {
    if (d.id == id) return d.make();
  }
  throw UnknownIdError("unknown objective: " + std::string(id));
}

const std::vector<std::string>& bifunction_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& d : bifunction_defs()) v.push_back(d.id);
    for (const auto& f : adapter_families()) v.push_back(f.prefix + "/<objective>");
    return v;
  }();
  return ids;
}

Bifunction make_bifunction(std::string_view id, const Manifold& M,
                           const LimitSchedule& sched) {
  for (const auto& d : bifunction_defs()) {
    if (d.id == id) return Bifunction{d.id, d.m, d.eval, d.declared};
  }
  const auto slash = id.find('/');
  if (slash != std::string_view::npos) {
    const std::string_view prefix = id.substr(0, slash);
    for (const auto& fam : adapter_families()) {
      if (fam.prefix != prefix) continue;
      ObjectiveFn phi = find_objective(id.substr(slash + 1));
      sched.validate();
      Bifunction h;
      h.id = std::string(id);
      h.m = phi.m;
      h.eval = [M, phi, sched, fam](const Point& p, const Tangent& v) {
        VecM d = dini_vector(M, phi, p, v, sched, fam.kind);
        for (double& x : d) x = fam.sign * x + fam.shift;
        return d;
      };
      return h;
    }
  }
  throw UnknownIdError("unknown bifunction: " + std::string(id));
}

VecM eval_catalog(std::string_view id, const Manifold& M, const Point& p,
                  const Tangent& v, const LimitSchedule& sched) {
  return make_bifunction(id, M, sched)(p, v);
}

const std::vector<ProblemInstance>& instances() {
  static const std::vector<ProblemInstance> all = build_instances();
  return all;
}

const ProblemInstance& find_instance(std::string_view id) {
  for (const auto& inst : instances()) {
    if (inst.id == id) return inst;
  }
  throw UnknownIdError("unknown instance: " + std::string(id));
}

std::vector<CatalogEntry> catalog_listing() {
  std::vector<CatalogEntry> out;
  for (const auto& inst : instances()) {
    out.push_back({inst.id, "instance", inst.provenance, inst.description});
  }
  for (const auto& d : objective_defs()) {
    out.push_back({d.id, "objective", d.provenance, d.description});
  }
  for (const auto& d : bifunction_defs()) {
    std::string desc = d.description;
    if (!d.declared.empty()) {
      desc += "; declared:";
      for (const auto& p : d.declared) {
        desc += " " + to_string(p.tag) + "[" + to_string(p.provenance) + "]";
      }
    }
    out.push_back({d.id, "bifunction", d.provenance, desc});
  }
  for (const auto& f : adapter_families()) {
    out.push_back({f.prefix + "/<objective>", "bifunction",
                   f.shift == 0.0 && f.sign > 0 ? Provenance::trivial
                                                : Provenance::derived,
                   f.description});
  }
  return out;
}

void ProblemInstance::validate() const {
  if (objective.empty() && bifunction.empty()) {
    throw DomainError("instance '" + id +
                      "' needs an objective or a bifunction");
  }
  if (!(feasible.manifold == manifold)) {
    throw DomainError("instance '" + id + "' grid is on a different manifold");
  }
  feasible.validate();
}

ResolvedInstance resolve(const ProblemInstance& inst,
                         const LimitSchedule& sched) {
  inst.validate();
  ResolvedInstance r{inst, Manifold(inst.manifold, inst.mode), std::nullopt,
                     std::nullopt};
  if (!inst.objective.empty()) r.objective = find_objective(inst.objective);
  if (!inst.bifunction.empty()) {
    r.bifunction = make_bifunction(inst.bifunction, r.manifold, sched);
  }
  return r;
}

}  // namespace vvilab
