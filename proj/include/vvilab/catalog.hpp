#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "vvilab/bifunction.hpp"
#include "vvilab/differential.hpp"
#include "vvilab/instance.hpp"

namespace vvilab {

struct CatalogEntry {
  std::string id;
  std::string kind;  // "objective", "bifunction", "instance"
  Provenance provenance;
  std::string description;
};

/// Registered objective ids, in listing order.
const std::vector<std::string>& objective_ids();
ObjectiveFn find_objective(std::string_view id);

/// Registered bifunction ids. Adapter families are listed with a
/// "<objective>" placeholder: "dini-upper/<objective>", "dini-lower/...",
/// "dini-upper+1/...", "dini-upper-1/...", "neg-dini-upper/...".
const std::vector<std::string>& bifunction_ids();

/// Builds a catalog bifunction. Dini adapters evaluate the objective's Dini
/// estimate along geodesics of `M` with schedule `sched`.
Bifunction make_bifunction(std::string_view id, const Manifold& M,
                           const LimitSchedule& sched = {});

/// Catalog lookup h(p, v) by id.
VecM eval_catalog(std::string_view id, const Manifold& M, const Point& p,
                  const Tangent& v, const LimitSchedule& sched = {});

const std::vector<ProblemInstance>& instances();
const ProblemInstance& find_instance(std::string_view id);

/// Every catalog entry with its provenance, for `vvilab catalog`.
std::vector<CatalogEntry> catalog_listing();

}  // namespace vvilab
