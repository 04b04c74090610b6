#include "vvilab/vi_lab.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <memory>
#include <sstream>

#include "vvilab/properties.hpp"

namespace vvilab {

std::string to_string(Problem p) {
  switch (p) {
    case Problem::nvvip:
      return "nvvip";
    case Problem::mnvvip:
      return "mnvvip";
    case Problem::nvop_efficient:
      return "nvop-eff";
    case Problem::nvop_weak:
      return "nvop-weak";
  }
  return "?";
}

Problem parse_problem(std::string_view token) {
  for (Problem p : {Problem::nvvip, Problem::mnvvip, Problem::nvop_efficient,
                    Problem::nvop_weak}) {
    if (token == to_string(p)) return p;
  }
  throw UnknownIdError("unknown problem: " + std::string(token));
}

std::string to_string(InclusionVerdict v) {
  return v == InclusionVerdict::confirmed_on_grid ? "confirmed_on_grid"
                                                  : "violated";
}

bool SolutionSet::contains(const Point& p) const {
  return std::find(points.begin(), points.end(), p) != points.end();
}

namespace {

constexpr const char* kWeakNote =
    "weak efficiency uses the reading: no grid q with Phi(q) - Phi(p) in "
    "-int R^m_+";

std::string coords_text(const Point& p) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    if (i) out << ", ";
    out << p.coords[i];
  }
  out << ')';
  return out.str();
}

// Vector whose cone membership rules a candidate out, and that membership.
struct Predicate {
  std::function<VecM(std::size_t cand, std::size_t q)> value;
  ConeSet forbidden;
  bool skip_self;
};

Predicate make_predicate(const ResolvedInstance& inst, Problem problem,
                         const std::vector<Point>& grid) {
  const Manifold& M = inst.manifold;
  switch (problem) {
    case Problem::nvvip:
    case Problem::mnvvip: {
      if (!inst.h()) {
        throw DomainError(to_string(problem) + " needs a bifunction");
      }
      const Bifunction& h = *inst.h();
      if (problem == Problem::nvvip) {
        return {[&, &h = h](std::size_t c, std::size_t q) {
                  return h(grid[c], M.log(grid[c], grid[q]));
                },
                ConeSet::neg_cone_minus_zero, true};
      }
      return {[&, &h = h](std::size_t c, std::size_t q) {
                return h(grid[q], M.log(grid[q], grid[c]));
              },
              ConeSet::pos_cone_minus_zero, true};
    }
    case Problem::nvop_efficient:
    case Problem::nvop_weak: {
      if (!inst.phi()) {
        throw DomainError(to_string(problem) + " needs an objective");
      }
      auto values = std::make_shared<std::vector<VecM>>();
      for (const Point& p : grid) values->push_back((*inst.phi())(p));
      return {[values](std::size_t c, std::size_t q) {
                return (*values)[q] - (*values)[c];
              },
              problem == Problem::nvop_efficient ? ConeSet::neg_cone_minus_zero
                                                 : ConeSet::neg_interior,
              false};
    }
  }
  throw DomainError("unknown problem");
}

}  // namespace

SolutionSet solve(const ResolvedInstance& inst, Problem problem, double tol) {
  if (!(tol >= 0.0)) throw DomainError("tolerance must be >= 0");
  const std::vector<Point> grid = inst.spec.feasible.samples();
  const Predicate pred = make_predicate(inst, problem, grid);

  SolutionSet out;
  out.problem = problem;
  out.tol = tol;
  out.grid_size = grid.size();
  if (problem == Problem::nvop_weak) out.notes.emplace_back(kWeakNote);

  const std::array<double, 2> probe_tols{0.0, 2.0 * tol};
  for (std::size_t c = 0; c < grid.size(); ++c) {
    std::optional<Exclusion> excluded;
    bool marginal = false;
    for (std::size_t q = 0; q < grid.size(); ++q) {
      if (pred.skip_self && (q == c || grid[q].coords == grid[c].coords)) {
        continue;
      }
      VecM v;
      try {
        v = pred.value(c, q);
      } catch (const Error& e) {
        throw EvaluationError(to_string(problem) + " failed at pair p = " +
                              coords_text(grid[c]) + ", q = " +
                              coords_text(grid[q]) + ": " + e.what());
      }
      if (in_set(v, pred.forbidden, tol)) {
        excluded = Exclusion{grid[c], grid[q], std::move(v)};
        break;
      }
      for (double t : probe_tols) {
        if (in_set(v, pred.forbidden, t)) marginal = true;
      }
    }
    if (excluded) {
      out.excluded.push_back(std::move(*excluded));
    } else {
      out.points.push_back(grid[c]);
      if (marginal) out.marginal.push_back(grid[c]);
    }
  }
  return out;
}

SolutionSet solve_nvvip(const ResolvedInstance& inst, double tol) {
  return solve(inst, Problem::nvvip, tol);
}

SolutionSet solve_mnvvip(const ResolvedInstance& inst, double tol) {
  return solve(inst, Problem::mnvvip, tol);
}

SolutionSet solve_nvop(const ResolvedInstance& inst, NvopKind kind,
                       double tol) {
  return solve(inst,
               kind == NvopKind::efficient ? Problem::nvop_efficient
                                           : Problem::nvop_weak,
               tol);
}

WSetOutcome check_w_set_convex(const ResolvedInstance& inst, const Point& p,
                               const CheckContext& ctx) {
  if (!inst.h()) throw DomainError("w-set check needs a bifunction");
  const Bifunction& h = *inst.h();
  const Manifold& M = ctx.manifold;
  WSetOutcome out;
  out.hypothesis = check_subadditive_poshom(h, inst.spec.feasible, ctx);
  if (!out.hypothesis.holds()) {
    out.hypothesis.notes.emplace_back(
        "hypothesis violated: h is not subadditive and positively "
        "homogeneous on samples");
  }

  const auto in_w = [&](const Point& q, VecM* value) {
    VecM v = h(p, M.log(p, q));
    const bool inside = in_set(v, ConeSet::neg_interior, ctx.tol);
    if (value) *value = std::move(v);
    return inside;
  };
  std::vector<Point> W;
  for (const Point& q : inst.spec.feasible.samples()) {
    if (q.coords == p.coords) continue;
    if (in_w(q, nullptr)) W.push_back(q);
  }
  out.w_size = W.size();
  out.conclusion.property = "w-set-convex";
  if (W.empty()) {
    out.conclusion.notes.emplace_back("W is empty on the grid; vacuous pass");
    return out;
  }
  for (std::size_t i = 0; i < W.size(); ++i) {
    for (std::size_t j = 0; j < W.size(); ++j) {
      if (i == j) continue;
      const Tangent u1 = M.log(p, W[i]);
      const Tangent u2 = M.log(p, W[j]);
      for (double t : {0.25, 0.5, 0.75}) {
        ++out.conclusion.samples_checked;
        const Point mix = M.exp(p, (1.0 - t) * u1 + t * u2);
        VecM value;
        if (in_w(mix, &value)) continue;
        Witness w;
        w.property = "w-set-convex";
        w.points = {{"p", p}, {"q", W[i]}, {"r", W[j]}, {"mix", mix}};
        w.params = {{"t", t}};
        w.values = {{"h_mix", value}};
        double worst = value.front();
        for (double x : value) worst = std::max(worst, x);
        w.margin = worst;
        w.threshold = -ctx.tol;
        w.inclusive = true;
        out.conclusion.verdict = Verdict::counterexample;
        out.conclusion.witness = std::move(w);
        return out;
      }
    }
  }
  return out;
}

bool TheoremReport::hypotheses_hold() const {
  return std::all_of(hypotheses.begin(), hypotheses.end(),
                     [](const HypothesisResult& r) { return r.outcome.holds(); });
}

namespace {

struct TheoremDef {
  std::string id;
  std::vector<std::string> aliases;
  bool needs_objective;
  bool needs_bifunction;
  std::vector<Property> hypotheses;
  std::function<void(TheoremReport&, const ResolvedInstance&,
                     const CheckContext&)>
      conclude;
};

InclusionCheck subset(const std::string& claim, const SolutionSet& a,
                      const SolutionSet& b) {
  InclusionCheck c{claim, InclusionVerdict::confirmed_on_grid, std::nullopt,
                   ""};
  for (const Point& p : a.points) {
    if (!b.contains(p)) {
      c.verdict = InclusionVerdict::violated;
      c.witness = p;
      c.detail = coords_text(p) + " is in " + to_string(a.problem) +
                 " but not in " + to_string(b.problem);
      return c;
    }
  }
  c.detail = std::to_string(a.points.size()) + " point(s) checked";
  return c;
}

// A grid-optimal point can fail the variational form only because the grid
// is coarse: some point strictly between it and the excluding grid point may
// dominate it. Searches the Dini schedule along that geodesic.
void explain_by_grid(InclusionCheck& c, const ResolvedInstance& inst,
                     const SolutionSet& optimal, const SolutionSet& vi,
                     const CheckContext& ctx) {
  if (c.verdict != InclusionVerdict::violated || !inst.phi()) return;
  const Manifold& M = inst.manifold;
  const ObjectiveFn& phi = *inst.phi();
  const ConeSet better = optimal.problem == Problem::nvop_weak
                             ? ConeSet::neg_interior
                             : ConeSet::neg_cone_minus_zero;
  for (const Point& p : optimal.points) {
    if (vi.contains(p)) continue;
    const auto ex = std::find_if(vi.excluded.begin(), vi.excluded.end(),
                                 [&](const Exclusion& e) { return e.point == p; });
    if (ex == vi.excluded.end()) return;
    bool dominated = false;
    for (int k = 0; k < ctx.sched.steps && !dominated; ++k) {
      const double t = ctx.sched.t(k);
      if (t >= 1.0) continue;
      const Point w = M.geodesic_point(p, ex->by, t);
      dominated = in_set(phi(w) - phi(p), better, ctx.tol);
    }
    if (!dominated) return;
  }
  c.explained_by_grid = true;
  c.detail += "; every such point is dominated by a point on the geodesic "
              "toward its excluding grid point, so it is not optimal on S";
}

InclusionCheck from_outcome(const std::string& claim, const CheckOutcome& o) {
  InclusionCheck c{claim, InclusionVerdict::confirmed_on_grid, std::nullopt,
                   std::to_string(o.samples_checked) + " tuples checked"};
  if (!o.holds()) {
    c.verdict = InclusionVerdict::violated;
    c.witness = o.witness->points.at("p");
    c.detail = o.property + " fails at p = " + coords_text(*c.witness);
  }
  return c;
}

SolutionSet& solved(TheoremReport& r, const ResolvedInstance& inst,
                    Problem problem, const CheckContext& ctx) {
  const std::string key = to_string(problem);
  auto it = r.solutions.find(key);
  if (it == r.solutions.end()) {
    it = r.solutions.emplace(key, solve(inst, problem, ctx.tol)).first;
  }
  return it->second;
}

const std::vector<TheoremDef>& theorem_defs() {
  static const std::vector<TheoremDef> defs = {
      {"h-quasiconvexity",
       {"thm3.6"},
       true,
       true,
       {Property::geodesic_quasiconvex, Property::upper_dini_bound},
       [](TheoremReport& r, const ResolvedInstance& inst,
          const CheckContext& ctx) {
         r.inclusion = from_outcome(
             "Phi is geodesic h-quasiconvex on the samples",
             run_check(Property::h_quasiconvex, ctx, inst.spec.feasible,
                       inst.phi(), inst.h()));
       }},
      {"pseudoconvex-quasiconvex",
       {"cor3.7"},
       true,
       true,
       {Property::upper_dini_bound, Property::odd_homogeneous,
        Property::h_pseudoconvex},
       [](TheoremReport& r, const ResolvedInstance& inst,
          const CheckContext& ctx) {
         r.inclusion = from_outcome(
             "Phi is geodesic quasiconvex on the samples",
             run_check(Property::geodesic_quasiconvex, ctx, inst.spec.feasible,
                       inst.phi(), nullptr));
         r.auxiliary.push_back(from_outcome(
             "Phi is geodesic h-quasiconvex on the samples",
             run_check(Property::h_quasiconvex, ctx, inst.spec.feasible,
                       inst.phi(), inst.h())));
         r.notes.emplace_back(
             "empirical inclusion only: equality Phi_i(w) = max{Phi_i(p), "
             "Phi_i(q)} need not trigger the strict antecedent of "
             "h-pseudoconvexity");
       }},
      {"uniqueness",
       {},
       false,
       true,
       {Property::strictly_pseudomonotone},
       [](TheoremReport& r, const ResolvedInstance& inst,
          const CheckContext& ctx) {
         const SolutionSet& s = solved(r, inst, Problem::nvvip, ctx);
         r.inclusion = {"|NVVIP| <= 1", InclusionVerdict::confirmed_on_grid,
                        std::nullopt,
                        std::to_string(s.points.size()) + " solution(s)"};
         if (s.points.size() > 1) {
           r.inclusion.verdict = InclusionVerdict::violated;
           r.inclusion.witness = s.points[1];
         }
       }},
      {"minty-equivalence",
       {"thm4.4"},
       false,
       true,
       {Property::pseudomonotone, Property::upper_sign_continuous,
        Property::pos_homogeneous},
       [](TheoremReport& r, const ResolvedInstance& inst,
          const CheckContext& ctx) {
         const SolutionSet& a = solved(r, inst, Problem::nvvip, ctx);
         const SolutionSet& b = solved(r, inst, Problem::mnvvip, ctx);
         InclusionCheck fwd = subset("NVVIP subset of MNVVIP", a, b);
         InclusionCheck bwd = subset("MNVVIP subset of NVVIP", b, a);
         r.inclusion = {"NVVIP = MNVVIP", InclusionVerdict::confirmed_on_grid,
                        std::nullopt,
                        std::to_string(a.points.size()) + " = " +
                            std::to_string(b.points.size()) + " point(s)"};
         for (const auto* part : {&fwd, &bwd}) {
           if (part->verdict == InclusionVerdict::violated &&
               r.inclusion.verdict == InclusionVerdict::confirmed_on_grid) {
             r.inclusion.verdict = InclusionVerdict::violated;
             r.inclusion.witness = part->witness;
             r.inclusion.detail = part->detail;
           }
         }
         r.auxiliary.push_back(std::move(fwd));
         r.auxiliary.push_back(std::move(bwd));
       }},
      {"descent-cone-convex",
       {"thm4.5", "p4.5"},
       false,
       true,
       {Property::subadditive_poshom},
       [](TheoremReport& r, const ResolvedInstance& inst,
          const CheckContext& ctx) {
         r.inclusion = {"exp_p^{-1} W is geodesic convex for every grid p",
                        InclusionVerdict::confirmed_on_grid, std::nullopt, ""};
         std::size_t nonempty = 0;
         for (const Point& p : inst.spec.feasible.samples()) {
           const WSetOutcome w = check_w_set_convex(inst, p, ctx);
           if (!w.vacuous()) ++nonempty;
           if (!w.conclusion.holds()) {
             r.inclusion.verdict = InclusionVerdict::violated;
             r.inclusion.witness = p;
             r.inclusion.detail = "combination of W points leaves W at p = " +
                                  coords_text(p);
             return;
           }
         }
         r.inclusion.detail =
             std::to_string(nonempty) + " grid point(s) with nonempty W";
       }},
      {"efficient-nvvip",
       {},
       true,
       true,
       {Property::lower_dini_bound},
       [](TheoremReport& r, const ResolvedInstance& inst,
          const CheckContext& ctx) {
         const SolutionSet& eff = solved(r, inst, Problem::nvop_efficient, ctx);
         const SolutionSet& vi = solved(r, inst, Problem::nvvip, ctx);
         r.inclusion = subset("efficient NVOP subset of NVVIP", eff, vi);
         explain_by_grid(r.inclusion, inst, eff, vi, ctx);
       }},
      {"weak-nvvip",
       {},
       true,
       true,
       {Property::strict_gap},
       [](TheoremReport& r, const ResolvedInstance& inst,
          const CheckContext& ctx) {
         const SolutionSet& weak = solved(r, inst, Problem::nvop_weak, ctx);
         const SolutionSet& vi = solved(r, inst, Problem::nvvip, ctx);
         r.inclusion = subset("weakly efficient NVOP subset of NVVIP", weak, vi);
         explain_by_grid(r.inclusion, inst, weak, vi, ctx);
         r.auxiliary.push_back(
             subset("NVVIP subset of weakly efficient NVOP", vi, weak));
         r.notes.emplace_back(kWeakNote);
       }},
      {"weak-mnvvip",
       {},
       true,
       true,
       {Property::h_convex},
       [](TheoremReport& r, const ResolvedInstance& inst,
          const CheckContext& ctx) {
         const SolutionSet& minty = solved(r, inst, Problem::mnvvip, ctx);
         const SolutionSet& weak = solved(r, inst, Problem::nvop_weak, ctx);
         const SolutionSet& eff = solved(r, inst, Problem::nvop_efficient, ctx);
         r.inclusion =
             subset("weakly efficient NVOP subset of MNVVIP", weak, minty);
         explain_by_grid(r.inclusion, inst, weak, minty, ctx);
         r.auxiliary.push_back(
             subset("efficient NVOP subset of MNVVIP", eff, minty));
         explain_by_grid(r.auxiliary.back(), inst, eff, minty, ctx);
         r.notes.emplace_back(kWeakNote);
         r.notes.emplace_back("h-convexity form: " +
                              to_string(ctx.hconvex_form));
       }},
      {"efficient-mnvvip",
       {"thm3.13"},
       true,
       true,
       {Property::h_pseudoconvex, Property::upper_dini_bound,
        Property::odd_homogeneous},
       [](TheoremReport& r, const ResolvedInstance& inst,
          const CheckContext& ctx) {
         const SolutionSet& eff = solved(r, inst, Problem::nvop_efficient, ctx);
         const SolutionSet& minty = solved(r, inst, Problem::mnvvip, ctx);
         r.inclusion = subset("efficient NVOP subset of MNVVIP", eff, minty);
         explain_by_grid(r.inclusion, inst, eff, minty, ctx);
       }},
  };
  return defs;
}

const TheoremDef& find_theorem(std::string_view id) {
  for (const auto& d : theorem_defs()) {
    if (d.id == id) return d;
    for (const auto& a : d.aliases) {
      if (a == id) return d;
    }
  }
  throw UnknownIdError("unknown theorem: " + std::string(id));
}

}  // namespace

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& d : theorem_defs()) v.push_back(d.id);
    return v;
  }();
  return ids;
}

std::string canonical_theorem_id(std::string_view id) {
  return find_theorem(id).id;
}

TheoremReport verify_theorem(std::string_view theorem_id,
                             const ResolvedInstance& inst,
                             const CheckContext& ctx) {
  const TheoremDef& def = find_theorem(theorem_id);
  if (def.needs_objective && !inst.phi()) {
    throw DomainError("theorem '" + def.id + "' needs an objective");
  }
  if (def.needs_bifunction && !inst.h()) {
    throw DomainError("theorem '" + def.id + "' needs a bifunction");
  }
  TheoremReport r;
  r.theorem_id = def.id;
  for (Property p : def.hypotheses) {
    r.hypotheses.push_back(
        {to_string(p),
         run_check(p, ctx, inst.spec.feasible, inst.phi(), inst.h())});
  }
  def.conclude(r, inst, ctx);
  if (!r.hypotheses_hold()) {
    r.notes.emplace_back(
        "hypotheses fail on the samples: claim evaluated but not covered by "
        "the theorem");
  }
  return r;
}

}  // namespace vvilab
