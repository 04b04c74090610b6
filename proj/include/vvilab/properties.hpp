#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vvilab/bifunction.hpp"
#include "vvilab/check.hpp"
#include "vvilab/differential.hpp"
#include "vvilab/sampler.hpp"

namespace vvilab {

/// Every sample-checkable property, keyed by its CLI token.
enum class Property {
  geodesic_convex,
  geodesic_quasiconvex,
  h_convex,
  h_pseudoconvex,
  h_quasiconvex,
  upper_dini_bound,
  lower_dini_bound,
  odd_homogeneous,
  strict_gap,
  monotone,
  pseudomonotone,
  strictly_pseudomonotone,
  upper_sign_continuous,
  subadditive_poshom,
  pos_homogeneous,
};

std::string to_string(Property p);
Property parse_property(std::string_view token);
const std::vector<Property>& all_properties();

bool needs_objective(Property p);
bool needs_bifunction(Property p);

/// Dispatches to the matching checker. Throws DomainError when a required
/// function is missing.
CheckOutcome run_check(Property prop, const CheckContext& ctx,
                       const DomainSampler& sampler, const ObjectiveFn* phi,
                       const Bifunction* h);

/// Re-evaluates a witness tuple from scratch. Returns the recomputed witness
/// when the tuple still violates the property, std::nullopt otherwise.
std::optional<Witness> replay_witness(const Witness& w,
                                      const CheckContext& ctx,
                                      const ObjectiveFn* phi,
                                      const Bifunction* h);

}  // namespace vvilab
