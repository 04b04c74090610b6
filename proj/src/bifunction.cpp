#include "vvilab/bifunction.hpp"

#include <cmath>

#include "probes.hpp"
#include "vvilab/properties.hpp"

namespace vvilab {

std::string to_string(PropertyTag t) {
  switch (t) {
    case PropertyTag::monotone:
      return "monotone";
    case PropertyTag::pseudomonotone:
      return "pseudomonotone";
    case PropertyTag::strictly_pseudomonotone:
      return "strictly_pseudomonotone";
    case PropertyTag::upper_sign_continuous:
      return "upper_sign_continuous";
    case PropertyTag::pos_homogeneous:
      return "pos_homogeneous";
    case PropertyTag::subadditive:
      return "subadditive";
  }
  return "?";
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::paper:
      return "paper";
    case Provenance::derived:
      return "derived";
    case Provenance::trivial:
      return "trivial";
  }
  return "?";
}

VecM Bifunction::operator()(const Point& p, const Tangent& v) const {
  if (!(v.base == p)) {
    throw DimensionError("bifunction '" + id +
                         "' evaluated with a tangent based elsewhere");
  }
  if (!eval) throw EvaluationError("bifunction '" + id + "' has no evaluator");
  VecM out = eval(p, v);
  if (out.size() != m) {
    throw EvaluationError("bifunction '" + id + "' returned " +
                          std::to_string(out.size()) + " values, expected " +
                          std::to_string(m));
  }
  for (double x : out) {
    if (std::isnan(x)) {
      throw EvaluationError("bifunction '" + id + "' evaluated to NaN");
    }
  }
  return out;
}

namespace detail {

ProbeResult probe_monotone(const Env& env, const Probe& pr) {
  const auto& M = env.M();
  const auto& h = env.bifun();
  const VecM hpq = h(pr.p, M.log(pr.p, pr.q));
  const VecM hqp = h(pr.q, M.log(pr.q, pr.p));
  const VecM sum = hpq + hqp;
  if (!in_set(sum, ConeSet::pos_cone_minus_zero, env.tol())) {
    return std::nullopt;
  }
  Witness w = start_witness(Property::monotone, pr);
  w.values = {{"h_pq", hpq}, {"h_qp", hqp}, {"sum", sum}};
  w.margin = max_entry(sum);
  w.threshold = env.tol();
  return w;
}

namespace {

// Shared antecedent of (strict) pseudomonotonicity.
std::optional<std::pair<VecM, VecM>> pseudo_pair(const Env& env,
                                                 const Probe& pr) {
  const auto& M = env.M();
  const auto& h = env.bifun();
  VecM hpq = h(pr.p, M.log(pr.p, pr.q));
  if (in_set(hpq, ConeSet::neg_cone_minus_zero, env.tol())) {
    return std::nullopt;
  }
  VecM hqp = h(pr.q, M.log(pr.q, pr.p));
  return std::make_pair(std::move(hpq), std::move(hqp));
}

}  // namespace

ProbeResult probe_pseudomonotone(const Env& env, const Probe& pr) {
  const auto pair = pseudo_pair(env, pr);
  if (!pair) return std::nullopt;
  const auto& [hpq, hqp] = *pair;
  if (!in_set(hqp, ConeSet::pos_cone_minus_zero, env.tol())) {
    return std::nullopt;
  }
  Witness w = start_witness(Property::pseudomonotone, pr);
  w.values = {{"h_pq", hpq}, {"h_qp", hqp}};
  w.margin = max_entry(hqp);
  w.threshold = env.tol();
  return w;
}

ProbeResult probe_strictly_pseudomonotone(const Env& env, const Probe& pr) {
  const auto pair = pseudo_pair(env, pr);
  if (!pair) return std::nullopt;
  const auto& [hpq, hqp] = *pair;
  if (in_set(hqp, ConeSet::neg_interior, env.tol())) return std::nullopt;
  Witness w = start_witness(Property::strictly_pseudomonotone, pr);
  w.values = {{"h_pq", hpq}, {"h_qp", hqp}};
  w.margin = max_entry(hqp);
  w.threshold = -env.tol();
  w.inclusive = true;
  return w;
}

ProbeResult probe_upper_sign_continuous(const Env& env, const Probe& pr) {
  const auto& M = env.M();
  const auto& h = env.bifun();
  const Tangent from_q = M.log(pr.q, pr.p);
  for (double t : env.ctx.usc_t_set) {
    const Point wt = M.geodesic_point(pr.p, pr.q, t);
    const VecM hw = h(wt, M.transport(pr.q, wt, from_q));
    if (in_set(hw, ConeSet::pos_cone_minus_zero, env.tol())) {
      return std::nullopt;  // antecedent fails at this t
    }
  }
  const VecM hpq = h(pr.p, M.log(pr.p, pr.q));
  if (!in_set(hpq, ConeSet::neg_cone_minus_zero, env.tol())) {
    return std::nullopt;
  }
  Witness w = start_witness(Property::upper_sign_continuous, pr);
  w.values = {{"h_pq", hpq}};
  w.margin = max_neg_entry(hpq);
  w.threshold = env.tol();
  return w;
}

ProbeResult probe_subadditive_poshom(const Env& env, const Probe& pr) {
  const auto& M = env.M();
  const auto& h = env.bifun();
  if (!pr.r) throw DomainError("subadditivity probe needs a third point");
  const Tangent u = M.log(pr.p, pr.q);
  const Tangent v = M.log(pr.p, *pr.r);
  const VecM hu = h(pr.p, u);
  const VecM hv = h(pr.p, v);
  const VecM huv = h(pr.p, u + v);
  const VecM excess = huv - hu - hv;
  const double margin = max_entry(excess);
  if (margin > env.tol()) {
    Witness w = start_witness(Property::subadditive_poshom, pr);
    w.params = {{"alpha", pr.alpha}, {"clause", 0.0}};
    w.values = {{"h_u", hu}, {"h_v", hv}, {"h_u_plus_v", huv},
                {"excess", excess}};
    w.margin = margin;
    w.threshold = env.tol();
    return w;
  }
  return homogeneity_clause(env, Property::subadditive_poshom, pr, u);
}

ProbeResult probe_pos_homogeneous(const Env& env, const Probe& pr) {
  return homogeneity_clause(env, Property::pos_homogeneous, pr,
                            env.M().log(pr.p, pr.q));
}

}  // namespace detail

CheckOutcome check_monotone(const Bifunction& h, const DomainSampler& sampler,
                            const CheckContext& ctx) {
  return run_check(Property::monotone, ctx, sampler, nullptr, &h);
}

CheckOutcome check_pseudomonotone(const Bifunction& h,
                                  const DomainSampler& sampler,
                                  const CheckContext& ctx) {
  return run_check(Property::pseudomonotone, ctx, sampler, nullptr, &h);
}

CheckOutcome check_strictly_pseudomonotone(const Bifunction& h,
                                           const DomainSampler& sampler,
                                           const CheckContext& ctx) {
  return run_check(Property::strictly_pseudomonotone, ctx, sampler, nullptr,
                   &h);
}

CheckOutcome check_upper_sign_continuous(const Bifunction& h,
                                         const DomainSampler& sampler,
                                         const CheckContext& ctx) {
  return run_check(Property::upper_sign_continuous, ctx, sampler, nullptr, &h);
}

CheckOutcome check_subadditive_poshom(const Bifunction& h,
                                      const DomainSampler& sampler,
                                      const CheckContext& ctx) {
  return run_check(Property::subadditive_poshom, ctx, sampler, nullptr, &h);
}

CheckOutcome check_pos_homogeneous(const Bifunction& h,
                                   const DomainSampler& sampler,
                                   const CheckContext& ctx) {
  return run_check(Property::pos_homogeneous, ctx, sampler, nullptr, &h);
}

}  // namespace vvilab
