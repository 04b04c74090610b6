#include "vvilab/differential.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace vvilab {

VecM ObjectiveFn::operator()(const Point& p) const {
  if (!eval) throw EvaluationError("objective '" + id + "' has no evaluator");
  VecM out = eval(p);
  if (out.size() != m) {
    throw EvaluationError("objective '" + id + "' returned " +
                          std::to_string(out.size()) + " values, expected " +
                          std::to_string(m));
  }
  for (double x : out) {
    if (std::isnan(x)) {
      throw EvaluationError("objective '" + id + "' evaluated to NaN");
    }
  }
  return out;
}

bool ObjectiveFn::feasible(const Manifold& M, const Point& p) const {
  return M.contains(p.coords) && (!domain || domain(p));
}

void LimitSchedule::validate() const {
  if (!(t0 > 0.0) || !std::isfinite(t0)) {
    throw DomainError("dini t0 must be positive");
  }
  if (!(ratio > 0.0 && ratio < 1.0)) {
    throw DomainError("dini ratio must lie in (0, 1)");
  }
  if (steps < 1) throw DomainError("dini steps must be >= 1");
}

double LimitSchedule::t(int k) const { return t0 * std::pow(ratio, k); }

std::string to_string(DiniKind kind) {
  return kind == DiniKind::upper ? "upper" : "lower";
}

namespace {

// Quotient rows ordered by decreasing t; only the tail is kept.
std::vector<VecM> tail_quotients(const Manifold& M, const ObjectiveFn& f,
                                 const Point& p, const Tangent& v,
                                 const LimitSchedule& sched) {
  sched.validate();
  const VecM f0 = f(p);
  for (double x : f0) {
    if (!std::isfinite(x)) {
      throw EvaluationError("objective '" + f.id + "' is not finite at p");
    }
  }
  std::vector<VecM> rows;
  for (int k = 0; k < sched.steps; ++k) {
    const double t = sched.t(k);
    const Point pk = M.exp(p, t * v);
    if (!f.feasible(M, pk)) continue;
    const VecM fk = f(pk);
    VecM row(f.m);
    for (std::size_t i = 0; i < f.m; ++i) row[i] = (fk[i] - f0[i]) / t;
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    throw EvaluationError("every schedule step left the feasible set for '" +
                          f.id + "'");
  }
  const std::size_t keep =
      std::min(rows.size(), static_cast<std::size_t>((sched.steps + 1) / 2));
  rows.erase(rows.begin(), rows.end() - static_cast<std::ptrdiff_t>(keep));
  return rows;
}

double reduce_component(const std::vector<VecM>& rows, std::size_t i,
                        DiniKind kind) {
  // Monotone divergence past the threshold is reported as an infinite limit.
  if (rows.size() >= 2) {
    const double last = rows.back()[i];
    bool diverging = std::abs(last) > kDiniDivergence;
    for (std::size_t k = 1; diverging && k < rows.size(); ++k) {
      const double a = rows[k - 1][i];
      const double b = rows[k][i];
      diverging = std::signbit(a) == std::signbit(b) &&
                  std::abs(b) > std::abs(a);
    }
    if (diverging) {
      return last > 0 ? std::numeric_limits<double>::infinity()
                      : -std::numeric_limits<double>::infinity();
    }
  }
  double acc = rows.front()[i];
  for (const VecM& row : rows) {
    acc = kind == DiniKind::upper ? std::max(acc, row[i])
                                  : std::min(acc, row[i]);
  }
  return acc;
}

double dini_component(const Manifold& M, const ObjectiveFn& f,
                      std::size_t component, const Point& p, const Tangent& v,
                      const LimitSchedule& sched, DiniKind kind) {
  if (component >= f.m) {
    throw DimensionError("component index out of range for '" + f.id + "'");
  }
  return reduce_component(tail_quotients(M, f, p, v, sched), component, kind);
}

}  // namespace

double dini_upper(const Manifold& M, const ObjectiveFn& f,
                  std::size_t component, const Point& p, const Tangent& v,
                  const LimitSchedule& sched) {
  return dini_component(M, f, component, p, v, sched, DiniKind::upper);
}

double dini_lower(const Manifold& M, const ObjectiveFn& f,
                  std::size_t component, const Point& p, const Tangent& v,
                  const LimitSchedule& sched) {
  return dini_component(M, f, component, p, v, sched, DiniKind::lower);
}

VecM dini_vector(const Manifold& M, const ObjectiveFn& f, const Point& p,
                 const Tangent& v, const LimitSchedule& sched, DiniKind kind) {
  const auto rows = tail_quotients(M, f, p, v, sched);
  VecM out(f.m);
  for (std::size_t i = 0; i < f.m; ++i) out[i] = reduce_component(rows, i, kind);
  return out;
}

}  // namespace vvilab
