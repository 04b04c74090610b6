#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vvilab/check.hpp"
#include "vvilab/instance.hpp"

namespace vvilab {

enum class Problem { nvvip, mnvvip, nvop_efficient, nvop_weak };

/// "nvvip", "mnvvip", "nvop-eff", "nvop-weak".
std::string to_string(Problem p);
Problem parse_problem(std::string_view token);

/// A grid point that fails the defining predicate, with the first grid point
/// q that rules it out and the offending vector.
struct Exclusion {
  Point point;
  Point by;
  VecM value;
};

/// Grid solution set of one problem. "for all q in S" ranges over the
/// instance grid.
struct SolutionSet {
  Problem problem = Problem::nvvip;
  std::vector<Point> points;
  /// Solutions that stop being solutions when the zero band is removed or
  /// doubled.
  std::vector<Point> marginal;
  std::vector<Exclusion> excluded;
  double tol = kDefaultTol;
  std::size_t grid_size = 0;
  std::vector<std::string> notes;

  [[nodiscard]] bool contains(const Point& p) const;
};

/// Stampacchia form: h(p, log_p q) not in -R^m_+ \ {0} for every grid q != p.
SolutionSet solve_nvvip(const ResolvedInstance& inst, double tol = kDefaultTol);

/// Minty form: h(q, log_q p) not in R^m_+ \ {0} for every grid q != p.
SolutionSet solve_mnvvip(const ResolvedInstance& inst,
                         double tol = kDefaultTol);

enum class NvopKind { efficient, weak };

/// Efficient: Phi(q) - Phi(p) not in -R^m_+ \ {0} for all grid q.
/// Weak: Phi(q) - Phi(p) not in -int R^m_+ for all grid q.
SolutionSet solve_nvop(const ResolvedInstance& inst, NvopKind kind,
                       double tol = kDefaultTol);

SolutionSet solve(const ResolvedInstance& inst, Problem problem,
                  double tol = kDefaultTol);

/// Convexity of exp_p^{-1} W, W = {q in grid : h(p, log_p q) in -int R^m_+}.
struct WSetOutcome {
  CheckOutcome hypothesis;  // subadditivity + positive homogeneity
  CheckOutcome conclusion;
  std::size_t w_size = 0;

  [[nodiscard]] bool vacuous() const { return w_size == 0; }
};

WSetOutcome check_w_set_convex(const ResolvedInstance& inst, const Point& p,
                               const CheckContext& ctx);

enum class InclusionVerdict { confirmed_on_grid, violated };

std::string to_string(InclusionVerdict v);

struct InclusionCheck {
  std::string claim;
  InclusionVerdict verdict = InclusionVerdict::confirmed_on_grid;
  std::optional<Point> witness;
  std::string detail;
  /// The witness is grid-optimal but a point on the geodesic toward its
  /// excluding grid point dominates it, so it is not optimal on S.
  bool explained_by_grid = false;
};

struct HypothesisResult {
  std::string property;
  CheckOutcome outcome;
};

struct TheoremReport {
  std::string theorem_id;
  std::vector<HypothesisResult> hypotheses;
  /// The main claim; witness present iff violated.
  InclusionCheck inclusion;
  /// Further directions or companion claims checked alongside.
  std::vector<InclusionCheck> auxiliary;
  std::map<std::string, SolutionSet> solutions;
  std::vector<std::string> notes;

  [[nodiscard]] bool hypotheses_hold() const;
  /// Hypotheses passed, so the claim is expected to hold.
  [[nodiscard]] bool covered_by_theorem() const { return hypotheses_hold(); }
  /// Covered, violated and not explained by grid coarseness.
  [[nodiscard]] bool theorem_violated() const {
    return covered_by_theorem() &&
           inclusion.verdict == InclusionVerdict::violated &&
           !inclusion.explained_by_grid;
  }
};

/// Canonical theorem ids in listing order. parse accepts aliases such as
/// "thm4.4" for "minty-equivalence".
const std::vector<std::string>& theorem_ids();
std::string canonical_theorem_id(std::string_view id);

/// Runs the hypothesis checkers, computes the solution sets and evaluates
/// the claim on the grid. Failing hypotheses are reported; the claim is still
/// evaluated and marked not covered. Throws DomainError when the instance
/// lacks a function the theorem mentions.
TheoremReport verify_theorem(std::string_view theorem_id,
                             const ResolvedInstance& inst,
                             const CheckContext& ctx);

}  // namespace vvilab
