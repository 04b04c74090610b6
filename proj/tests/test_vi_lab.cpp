#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "oracles.hpp"
#include "support.hpp"
#include "vvilab/catalog.hpp"
#include "vvilab/properties.hpp"
#include "vvilab/vi_lab.hpp"

namespace vvilab {
namespace {

using testing::Gen;

ResolvedInstance catalog_instance(std::string_view id) {
  return resolve(find_instance(id));
}

ResolvedInstance custom(const ProblemInstance& base, const DomainSampler& grid,
                        std::optional<ObjectiveFn> phi,
                        std::optional<Bifunction> h) {
  ResolvedInstance r{base, Manifold(grid.manifold, base.mode), std::move(phi),
                     std::move(h)};
  r.spec.feasible = grid;
  r.spec.manifold = grid.manifold;
  return r;
}

std::vector<double> coords_of(const SolutionSet& s) {
  std::vector<double> out;
  for (const auto& p : s.points) out.push_back(p.coords[0]);
  return out;
}

TEST(Problem, Tokens) {
  for (Problem p : {Problem::nvvip, Problem::mnvvip, Problem::nvop_efficient,
                    Problem::nvop_weak}) {
    EXPECT_EQ(parse_problem(to_string(p)), p);
  }
  EXPECT_THROW(parse_problem("vip"), UnknownIdError);
}

TEST(Solve, LinearBifunctionSelectsLeftEndpoint) {
  const auto inst = catalog_instance("linear-ez");
  const auto nv = solve_nvvip(inst);
  const auto mv = solve_mnvvip(inst);
  EXPECT_EQ(coords_of(nv), (std::vector<double>{0.0}));
  EXPECT_EQ(coords_of(mv), (std::vector<double>{0.0}));
  EXPECT_EQ(nv.grid_size, 51u);
  EXPECT_EQ(nv.excluded.size(), 50u);
  EXPECT_EQ(coords_of(solve_nvop(inst, NvopKind::efficient)),
            (std::vector<double>{0.0}));
  EXPECT_EQ(coords_of(solve_nvop(inst, NvopKind::weak)),
            (std::vector<double>{0.0}));
}

TEST(Solve, ZeroBifunctionKeepsEverything) {
  const auto inst = catalog_instance("constant-zero");
  const auto n = inst.spec.feasible.grid().size();
  EXPECT_EQ(solve_nvvip(inst).points.size(), n);
  EXPECT_EQ(solve_mnvvip(inst).points.size(), n);
  EXPECT_EQ(solve_nvop(inst, NvopKind::efficient).points.size(), n);
}

TEST(Solve, MissingFunctionIsDomainError) {
  const auto inst = catalog_instance("paper-monotone");
  EXPECT_THROW((void)solve_nvop(inst, NvopKind::efficient), DomainError);
  EXPECT_NO_THROW((void)solve_mnvvip(inst));
}

TEST(Solve, WeakReadingIsFlagged) {
  const auto s = solve_nvop(catalog_instance("linear-ez"), NvopKind::weak);
  EXPECT_FALSE(s.notes.empty());
}

TEST(Biobjective, EfficientSetMatchesDominanceOracle) {
  const auto inst = catalog_instance("biobjective-quadratic");
  const auto grid = inst.spec.feasible.grid();
  ASSERT_EQ(grid.size(), 91u);
  std::vector<std::vector<double>> values;
  for (const auto& p : grid) {
    const double x = p.coords[0];
    values.push_back({(x - 2) * (x - 2), (x - 3) * (x - 3)});
  }
  std::vector<double> want;
  for (auto i : oracle::efficient_indices(values)) {
    want.push_back(grid[i].coords[0]);
  }
  std::vector<double> interval;
  for (const auto& p : grid) {
    if (p.coords[0] >= 2 - 1e-12 && p.coords[0] <= 3 + 1e-12) {
      interval.push_back(p.coords[0]);
    }
  }
  EXPECT_EQ(want, interval);
  const auto eff = solve_nvop(inst, NvopKind::efficient);
  EXPECT_EQ(coords_of(eff), want);
  const auto nv = solve_nvvip(inst);
  EXPECT_EQ(coords_of(nv), want);
  const auto mv = solve_mnvvip(inst);
  for (const auto& p : eff.points) EXPECT_TRUE(mv.contains(p));
  const auto weak = solve_nvop(inst, NvopKind::weak);
  for (const auto& p : eff.points) EXPECT_TRUE(weak.contains(p));
}

// Re-evaluates the defining predicate over the grid without the solver.
bool satisfies(const ResolvedInstance& inst, Problem prob, const Point& p,
               const std::vector<Point>& grid, double tol) {
  const auto& M = inst.manifold;
  for (const auto& q : grid) {
    if (q == p && (prob == Problem::nvvip || prob == Problem::mnvvip)) continue;
    VecM v;
    bool bad = false;
    switch (prob) {
      case Problem::nvvip:
        v = (*inst.h())(p, M.log(p, q));
        bad = in_set(v, ConeSet::neg_cone_minus_zero, tol);
        break;
      case Problem::mnvvip:
        v = (*inst.h())(q, M.log(q, p));
        bad = in_set(v, ConeSet::pos_cone_minus_zero, tol);
        break;
      case Problem::nvop_efficient:
        v = (*inst.phi())(q) - (*inst.phi())(p);
        bad = in_set(v, ConeSet::neg_cone_minus_zero, tol);
        break;
      case Problem::nvop_weak:
        v = (*inst.phi())(q) - (*inst.phi())(p);
        bad = in_set(v, ConeSet::neg_interior, tol);
        break;
    }
    if (bad) return false;
  }
  return true;
}

TEST(SolveProperty, SoundAgainstIndependentRecheck) {
  for (const auto& spec : instances()) {
    const auto inst = resolve(spec);
    const auto grid = spec.feasible.grid();
    for (Problem prob : {Problem::nvvip, Problem::mnvvip,
                         Problem::nvop_efficient, Problem::nvop_weak}) {
      const bool needs_phi =
          prob == Problem::nvop_efficient || prob == Problem::nvop_weak;
      if (needs_phi ? !inst.phi() : !inst.h()) continue;
      const auto s = solve(inst, prob);
      std::size_t hits = 0;
      for (const auto& p : grid) {
        const bool ok = satisfies(inst, prob, p, grid, s.tol);
        EXPECT_EQ(ok, s.contains(p)) << spec.id << " " << to_string(prob);
        hits += ok;
      }
      EXPECT_EQ(hits, s.points.size());
      for (const auto& ex : s.excluded) {
        EXPECT_FALSE(satisfies(inst, prob, ex.point, {ex.by}, s.tol))
            << spec.id << " " << to_string(prob);
      }
    }
  }
}

TEST(SolveProperty, RefinementOnlyAddsWitnesses) {
  for (const char* id : {"biobjective-quadratic", "log-square", "linear-ez",
                         "paper-monotone", "bimodal-qc"}) {
    const auto base = catalog_instance(id);
    auto fine_spec = base.spec;
    fine_spec.feasible.grid_n = 2 * base.spec.feasible.grid_n - 1;
    const auto fine = resolve(fine_spec);
    for (Problem prob : {Problem::nvvip, Problem::mnvvip}) {
      if (!base.h()) continue;
      const auto coarse = solve(base, prob);
      const auto refined = solve(fine, prob);
      for (const auto& p : base.spec.feasible.grid()) {
        if (refined.contains(p)) EXPECT_TRUE(coarse.contains(p)) << id;
      }
    }
  }
}

TEST(Theorems, IdsAndAliases) {
  EXPECT_EQ(canonical_theorem_id("thm4.4"), "minty-equivalence");
  EXPECT_EQ(canonical_theorem_id("thm3.6"), "h-quasiconvexity");
  for (const auto& id : theorem_ids()) {
    EXPECT_EQ(canonical_theorem_id(id), id);
  }
  EXPECT_THROW(canonical_theorem_id("thm9.9"), UnknownIdError);
}

TEST(Theorems, MintyEquivalenceOnLinearInstance) {
  const auto inst = catalog_instance("linear-ez");
  const auto r = verify_theorem("minty-equivalence", inst, testing::context(
                                                    inst.spec.manifold));
  EXPECT_TRUE(r.hypotheses_hold());
  EXPECT_EQ(r.inclusion.verdict, InclusionVerdict::confirmed_on_grid);
  EXPECT_EQ(coords_of(r.solutions.at("nvvip")), (std::vector<double>{0.0}));
  EXPECT_EQ(coords_of(r.solutions.at("mnvvip")), (std::vector<double>{0.0}));
}

TEST(Theorems, UniquenessOnLinearInstance) {
  const auto inst = catalog_instance("linear-ez");
  const auto r = verify_theorem("uniqueness", inst,
                                testing::context(inst.spec.manifold));
  EXPECT_TRUE(r.hypotheses_hold());
  EXPECT_EQ(r.inclusion.verdict, InclusionVerdict::confirmed_on_grid);
}

TEST(Theorems, HQuasiconvexityVacuousOnConstant) {
  const auto inst = catalog_instance("constant-zero");
  const auto r = verify_theorem("h-quasiconvexity", inst,
                                testing::context(inst.spec.manifold));
  EXPECT_TRUE(r.hypotheses_hold());
  EXPECT_EQ(r.inclusion.verdict, InclusionVerdict::confirmed_on_grid);
}

TEST(Theorems, BrokenDiniBoundIsHypothesisFailure) {
  const auto inst = catalog_instance("broken-upper-dini");
  const auto r = verify_theorem("h-quasiconvexity", inst,
                                testing::context(inst.spec.manifold));
  EXPECT_FALSE(r.hypotheses_hold());
  EXPECT_FALSE(r.theorem_violated());
  EXPECT_FALSE(r.notes.empty());
}

TEST(Theorems, MissingComponentThrows) {
  const auto inst = catalog_instance("paper-monotone");
  EXPECT_THROW((void)verify_theorem("efficient-nvvip", inst,
                                    testing::context(inst.spec.manifold)),
               DomainError);
}

TEST(TheoremProperty, NoCatalogTheoremViolation) {
  for (const auto& spec : instances()) {
    if (spec.id == "biobjective-quadratic") continue;  // covered below
    const auto inst = resolve(spec);
    auto ctx = testing::context(spec.manifold, spec.mode);
    for (const auto& id : theorem_ids()) {
      if (id == "descent-cone-convex") continue;
      try {
        const auto r = verify_theorem(id, inst, ctx);
        EXPECT_FALSE(r.theorem_violated()) << spec.id << " " << id;
        if (r.inclusion.verdict == InclusionVerdict::violated) {
          EXPECT_TRUE(r.inclusion.witness.has_value());
        }
      } catch (const DomainError&) {
      }
    }
  }
}

TEST(TheoremProperty, UniquenessUnderStrictPseudomonotonicity) {
  int covered = 0;
  for (const auto& spec : instances()) {
    const auto inst = resolve(spec);
    if (!inst.h()) continue;
    const auto ctx = testing::context(spec.manifold, spec.mode);
    if (!check_strictly_pseudomonotone(*inst.h(), spec.feasible, ctx)
             .holds()) {
      continue;
    }
    ++covered;
    EXPECT_LE(solve_nvvip(inst).points.size(), 1u) << spec.id;
  }
  EXPECT_GE(covered, 2);
}

// Random affine-in-v bifunctions on a line: when pseudomonotonicity and
// upper sign continuity pass, the Stampacchia and Minty grid sets agree.
TEST(TheoremProperty, MintyEquivalenceOnRandomLinearFamilies) {
  Gen g(51);
  const auto base = catalog_instance("linear-ez");
  const auto grid = testing::line_sampler(ManifoldId::euclidean(1), -1, 1, 21);
  int covered = 0;
  for (int k = 0; k < 80; ++k) {
    const double c = g.uniform(-1.5, 1.5);
    const double s1 = g.integer(0, 1) ? 1.0 : -1.0;
    const double s2 = g.integer(0, 2) == 0 ? -s1 : s1;
    const double w = g.uniform(0.2, 2);
    auto h = testing::bifunction(
        "affine", 2, [=](const Point& p, const Tangent& v) {
          const double d = v.components[0];
          return VecM{s1 * (p.coords[0] - c) * d, s2 * w * (p.coords[0] - c) * d};
        });
    const auto inst = custom(base.spec, grid, std::nullopt, h);
    const auto r = verify_theorem("minty-equivalence", inst,
                                  testing::context(grid.manifold));
    if (!r.hypotheses_hold()) continue;
    ++covered;
    EXPECT_EQ(r.inclusion.verdict, InclusionVerdict::confirmed_on_grid);
    EXPECT_EQ(coords_of(r.solutions.at("nvvip")),
              coords_of(r.solutions.at("mnvvip")));
  }
  EXPECT_GE(covered, 5);
}

TEST(WSet, LinearBifunctionIsConvex) {
  const auto inst = catalog_instance("linear-ez");
  const auto ctx = testing::context(inst.spec.manifold);
  const auto out = check_w_set_convex(inst, inst.manifold.point({0.5}), ctx);
  EXPECT_TRUE(out.hypothesis.holds());
  EXPECT_TRUE(out.conclusion.holds());
  EXPECT_EQ(out.w_size, 25u);
}

TEST(WSet, EmptyIsVacuous) {
  const auto inst = catalog_instance("linear-ez");
  const auto ctx = testing::context(inst.spec.manifold);
  const auto out = check_w_set_convex(inst, inst.manifold.point({0.0}), ctx);
  EXPECT_TRUE(out.vacuous());
  EXPECT_TRUE(out.conclusion.holds());
  EXPECT_FALSE(out.conclusion.notes.empty());
}

TEST(WSet, NonHomogeneousHypothesisFails) {
  const auto base = catalog_instance("linear-ez");
  const Manifold M(ManifoldId::euclidean(1));
  const auto grid = testing::line_sampler(ManifoldId::euclidean(1), -1, 1, 11);
  const auto inst = custom(base.spec, grid, std::nullopt,
                           make_bifunction("square-v-minus-1", M));
  const auto out = check_w_set_convex(inst, M.point({0.0}),
                                      testing::context(grid.manifold));
  EXPECT_FALSE(out.hypothesis.holds());
}

}  // namespace
}  // namespace vvilab
