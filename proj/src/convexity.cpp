#include "vvilab/convexity.hpp"

#include <algorithm>
#include <cmath>

#include "probes.hpp"
#include "vvilab/properties.hpp"

namespace vvilab {
namespace detail {

const ObjectiveFn& Env::objective() const {
  if (phi == nullptr) throw DomainError("property requires an objective");
  return *phi;
}

const Bifunction& Env::bifun() const {
  if (h == nullptr) throw DomainError("property requires a bifunction");
  return *h;
}

Witness start_witness(Property prop, const Probe& pr) {
  Witness w;
  w.property = to_string(prop);
  w.points.emplace("p", pr.p);
  w.points.emplace("q", pr.q);
  if (pr.r) w.points.emplace("r", *pr.r);
  return w;
}

ProbeResult probe_geodesic_convex(const Env& env, const Probe& pr) {
  const auto& M = env.M();
  const auto& phi = env.objective();
  const auto along = [&](double s) {
    return phi(M.geodesic_point(pr.p, pr.q, std::clamp(s, 0.0, 1.0)));
  };
  const double s = pr.t * pr.a + (1.0 - pr.t) * pr.b;
  const VecM mid = along(s);
  const VecM fa = along(pr.a);
  const VecM fb = along(pr.b);
  const VecM gap = mid - pr.t * fa - (1.0 - pr.t) * fb;
  const ConeStatus st = classify(gap, env.tol());
  if (st == ConeStatus::zero || st == ConeStatus::negative_dominated ||
      st == ConeStatus::strictly_negative) {
    return std::nullopt;
  }
  Witness w = start_witness(Property::geodesic_convex, pr);
  w.params = {{"a", pr.a}, {"b", pr.b}, {"t", pr.t}};
  w.values = {{"gap", gap}, {"phi_mix", mid}, {"phi_a", fa}, {"phi_b", fb}};
  w.margin = max_entry(gap);
  w.threshold = env.tol();
  return w;
}

ProbeResult probe_geodesic_quasiconvex(const Env& env, const Probe& pr) {
  const auto& phi = env.objective();
  const Point w_pt = env.M().geodesic_point(pr.q, pr.p, pr.t);
  const VecM fw = phi(w_pt);
  const VecM fp = phi(pr.p);
  const VecM fq = phi(pr.q);
  VecM excess(fw.size());
  for (std::size_t i = 0; i < fw.size(); ++i) {
    excess[i] = fw[i] - std::max(fp[i], fq[i]);
  }
  const double margin = max_entry(excess);
  if (!(margin > env.tol())) return std::nullopt;
  Witness w = start_witness(Property::geodesic_quasiconvex, pr);
  w.points.emplace("w", w_pt);
  w.params = {{"t", pr.t}};
  w.values = {{"phi_w", fw}, {"phi_p", fp}, {"phi_q", fq}, {"excess", excess}};
  w.margin = margin;
  w.threshold = env.tol();
  return w;
}

ProbeResult probe_h_convex(const Env& env, const Probe& pr) {
  const auto& phi = env.objective();
  const VecM hv = env.bifun()(pr.p, env.M().log(pr.p, pr.q));
  const VecM dphi = phi(pr.q) - phi(pr.p);
  const VecM gap = hv - dphi;
  bool violated = false;
  if (env.ctx.hconvex_form == HConvexForm::componentwise) {
    violated = max_entry(gap) > env.tol();
  } else {
    violated = in_set(gap, ConeSet::pos_cone_minus_zero, env.tol());
  }
  if (!violated) return std::nullopt;
  Witness w = start_witness(Property::h_convex, pr);
  w.values = {{"h", hv}, {"phi_diff", dphi}, {"gap", gap}};
  w.margin = max_entry(gap);
  w.threshold = env.tol();
  return w;
}

ProbeResult probe_h_pseudoconvex(const Env& env, const Probe& pr) {
  const auto& phi = env.objective();
  const VecM dphi = phi(pr.q) - phi(pr.p);
  if (classify(dphi, env.tol()) != ConeStatus::strictly_negative) {
    return std::nullopt;
  }
  const VecM hv = env.bifun()(pr.p, env.M().log(pr.p, pr.q));
  if (in_set(hv, ConeSet::neg_interior, env.tol())) return std::nullopt;
  Witness w = start_witness(Property::h_pseudoconvex, pr);
  w.values = {{"h", hv}, {"phi_diff", dphi}};
  w.margin = max_entry(hv);
  w.threshold = -env.tol();
  w.inclusive = true;
  return w;
}

ProbeResult probe_h_quasiconvex(const Env& env, const Probe& pr) {
  const auto& phi = env.objective();
  const VecM dphi = phi(pr.q) - phi(pr.p);
  if (!in_set(dphi, ConeSet::neg_cone_minus_zero, env.tol())) {
    return std::nullopt;
  }
  const VecM hv = env.bifun()(pr.p, env.M().log(pr.p, pr.q));
  if (!in_set(hv, ConeSet::pos_cone_minus_zero, env.tol())) {
    return std::nullopt;
  }
  Witness w = start_witness(Property::h_quasiconvex, pr);
  w.values = {{"h", hv}, {"phi_diff", dphi}};
  w.margin = max_entry(hv);
  w.threshold = env.tol();
  return w;
}

namespace {

ProbeResult dini_bound(const Env& env, const Probe& pr, DiniKind kind) {
  const Tangent v = env.M().log(pr.p, pr.q);
  const VecM hv = env.bifun()(pr.p, v);
  const VecM d =
      dini_vector(env.M(), env.objective(), pr.p, v, env.ctx.sched, kind);
  // upper: h <= D^+ ; lower: D_- <= h
  const VecM excess = kind == DiniKind::upper ? hv - d : d - hv;
  const double margin = max_entry(excess);
  if (!(margin > env.tol())) return std::nullopt;
  Witness w = start_witness(kind == DiniKind::upper ? Property::upper_dini_bound
                                                    : Property::lower_dini_bound,
                            pr);
  w.values = {{"h", hv}, {"dini", d}, {"excess", excess}};
  w.margin = margin;
  w.threshold = env.tol();
  return w;
}

}  // namespace

ProbeResult probe_upper_dini_bound(const Env& env, const Probe& pr) {
  return dini_bound(env, pr, DiniKind::upper);
}

ProbeResult probe_lower_dini_bound(const Env& env, const Probe& pr) {
  return dini_bound(env, pr, DiniKind::lower);
}

ProbeResult homogeneity_clause(const Env& env, Property prop, const Probe& pr,
                               const Tangent& v) {
  const auto& h = env.bifun();
  const VecM hv = h(pr.p, v);
  const VecM hav = h(pr.p, pr.alpha * v);
  const VecM diff = hav - pr.alpha * hv;
  double norm = 0.0;
  for (double x : diff) norm = std::max(norm, std::abs(x));
  const double bound = env.tol() * (1.0 + std::abs(pr.alpha));
  if (!(norm > bound) && !std::isnan(norm)) return std::nullopt;
  Witness w = start_witness(prop, pr);
  w.params = {{"alpha", pr.alpha}, {"clause", 1.0}};
  w.values = {{"h_v", hv}, {"h_alpha_v", hav}, {"homogeneity_defect", diff}};
  w.margin = norm;
  w.threshold = bound;
  return w;
}

ProbeResult probe_odd_homogeneous(const Env& env, const Probe& pr) {
  const auto& h = env.bifun();
  const Tangent v = env.M().log(pr.p, pr.q);
  const VecM hv = h(pr.p, v);
  const VecM hneg = h(pr.p, -v);
  const VecM sum = hv + hneg;
  // h(p, v) >= -h(p, -v)  <=>  sum >= 0
  const double deficit = max_neg_entry(sum);
  if (deficit > env.tol()) {
    Witness w = start_witness(Property::odd_homogeneous, pr);
    w.params = {{"alpha", pr.alpha}, {"clause", 0.0}};
    w.values = {{"h_v", hv}, {"h_minus_v", hneg}, {"sum", sum}};
    w.margin = deficit;
    w.threshold = env.tol();
    return w;
  }
  return homogeneity_clause(env, Property::odd_homogeneous, pr, v);
}

ProbeResult probe_strict_gap(const Env& env, const Probe& pr) {
  const auto& phi = env.objective();
  const VecM hv = env.bifun()(pr.p, env.M().log(pr.p, pr.q));
  const VecM gap = hv - phi(pr.q) + phi(pr.p);
  if (in_set(gap, ConeSet::pos_interior, env.tol())) return std::nullopt;
  Witness w = start_witness(Property::strict_gap, pr);
  w.values = {{"h", hv}, {"gap", gap}};
  w.margin = max_neg_entry(gap);
  w.threshold = -env.tol();
  w.inclusive = true;
  return w;
}

}  // namespace detail

CheckOutcome check_geodesic_convex(const ObjectiveFn& phi,
                                   const DomainSampler& sampler,
                                   const CheckContext& ctx) {
  return run_check(Property::geodesic_convex, ctx, sampler, &phi, nullptr);
}

CheckOutcome check_geodesic_quasiconvex(const ObjectiveFn& phi,
                                        const DomainSampler& sampler,
                                        const CheckContext& ctx) {
  return run_check(Property::geodesic_quasiconvex, ctx, sampler, &phi,
                   nullptr);
}

CheckOutcome check_h_convex(const ObjectiveFn& phi, const Bifunction& h,
                            const DomainSampler& sampler,
                            const CheckContext& ctx) {
  return run_check(Property::h_convex, ctx, sampler, &phi, &h);
}

CheckOutcome check_h_pseudoconvex(const ObjectiveFn& phi, const Bifunction& h,
                                  const DomainSampler& sampler,
                                  const CheckContext& ctx) {
  return run_check(Property::h_pseudoconvex, ctx, sampler, &phi, &h);
}

CheckOutcome check_h_quasiconvex(const ObjectiveFn& phi, const Bifunction& h,
                                 const DomainSampler& sampler,
                                 const CheckContext& ctx) {
  return run_check(Property::h_quasiconvex, ctx, sampler, &phi, &h);
}

CheckOutcome check_upper_dini_bound(const ObjectiveFn& phi,
                                    const Bifunction& h,
                                    const DomainSampler& sampler,
                                    const CheckContext& ctx) {
  return run_check(Property::upper_dini_bound, ctx, sampler, &phi, &h);
}

CheckOutcome check_lower_dini_bound(const ObjectiveFn& phi,
                                    const Bifunction& h,
                                    const DomainSampler& sampler,
                                    const CheckContext& ctx) {
  return run_check(Property::lower_dini_bound, ctx, sampler, &phi, &h);
}

CheckOutcome check_odd_homogeneous(const Bifunction& h,
                                   const DomainSampler& sampler,
                                   const CheckContext& ctx) {
  return run_check(Property::odd_homogeneous, ctx, sampler, nullptr, &h);
}

CheckOutcome check_strict_gap(const ObjectiveFn& phi, const Bifunction& h,
                              const DomainSampler& sampler,
                              const CheckContext& ctx) {
  return run_check(Property::strict_gap, ctx, sampler, &phi, &h);
}

}  // namespace vvilab
