#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "vvilab/check.hpp"
#include "vvilab/manifold.hpp"
#include "vvilab/order_cone.hpp"
#include "vvilab/sampler.hpp"

namespace vvilab {

enum class PropertyTag {
  monotone,
  pseudomonotone,
  strictly_pseudomonotone,
  upper_sign_continuous,
  pos_homogeneous,
  subadditive,
};

/// Where a catalog claim comes from: stated in the source example, checked
/// by an exhaustive grid oracle, or immediate from the formula.
enum class Provenance { paper, derived, trivial };

std::string to_string(PropertyTag t);
std::string to_string(Provenance p);

struct DeclaredProperty {
  PropertyTag tag;
  Provenance provenance;
};

/// A vector bifunction h: S x TH -> (R*)^m.
struct Bifunction {
  std::string id;
  std::size_t m = 1;
  std::function<VecM(const Point&, const Tangent&)> eval;
  std::vector<DeclaredProperty> declared;

  /// Checks v.base == p, output length and NaN-freeness.
  [[nodiscard]] VecM operator()(const Point& p, const Tangent& v) const;
};

/// Monotone: h(p, log_p q) + h(q, log_q p) not in R^m_+ \ {0}.
CheckOutcome check_monotone(const Bifunction& h, const DomainSampler& sampler,
                            const CheckContext& ctx);

/// Pseudomonotone: h(p, log_p q) not in -R^m_+ \ {0}
///   => h(q, log_q p) not in R^m_+ \ {0}.
CheckOutcome check_pseudomonotone(const Bifunction& h,
                                  const DomainSampler& sampler,
                                  const CheckContext& ctx);

/// Strictly pseudomonotone: same antecedent, consequent
/// h(q, log_q p) in -int R^m_+.
CheckOutcome check_strictly_pseudomonotone(const Bifunction& h,
                                           const DomainSampler& sampler,
                                           const CheckContext& ctx);

/// Geodesic upper sign continuity. The antecedent
/// h(w_t, P_{w_t <- q} log_q p) not in R^m_+ \ {0} must hold for every t in
/// ctx.usc_t_set (w_t = geodesic_point(p, q, t)); then the consequent
/// h(p, log_p q) not in -R^m_+ \ {0} is required.
CheckOutcome check_upper_sign_continuous(const Bifunction& h,
                                         const DomainSampler& sampler,
                                         const CheckContext& ctx);

/// h(p, u + v) <= h(p, u) + h(p, v) componentwise and
/// |h(p, a v) - a h(p, v)|_inf <= tol (1 + |a|) for a in {0.5, 2}.
CheckOutcome check_subadditive_poshom(const Bifunction& h,
                                      const DomainSampler& sampler,
                                      const CheckContext& ctx);

/// Positive homogeneity in the second argument alone.
CheckOutcome check_pos_homogeneous(const Bifunction& h,
                                   const DomainSampler& sampler,
                                   const CheckContext& ctx);

}  // namespace vvilab
