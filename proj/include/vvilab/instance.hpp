#pragma once

#include <optional>
#include <string>

#include "vvilab/bifunction.hpp"
#include "vvilab/differential.hpp"
#include "vvilab/manifold.hpp"
#include "vvilab/sampler.hpp"

namespace vvilab {

/// A manifold, a candidate grid over the feasible set and catalog ids of the
/// objective and/or bifunction. Empty ids mean "absent".
struct ProblemInstance {
  std::string id;
  ManifoldId manifold;
  DomainSampler feasible;
  std::string objective;
  std::string bifunction;
  GeodesicMode mode = GeodesicMode::paper;
  Provenance provenance = Provenance::derived;
  std::string description;

  /// Throws DomainError unless at least one function id is set and the grid
  /// is valid for the manifold.
  void validate() const;
};

/// An instance with its functions materialized.
struct ResolvedInstance {
  ProblemInstance spec;
  Manifold manifold;
  std::optional<ObjectiveFn> objective;
  std::optional<Bifunction> bifunction;

  [[nodiscard]] const ObjectiveFn* phi() const {
    return objective ? &*objective : nullptr;
  }
  [[nodiscard]] const Bifunction* h() const {
    return bifunction ? &*bifunction : nullptr;
  }
};

ResolvedInstance resolve(const ProblemInstance& inst,
                         const LimitSchedule& sched = {});

}  // namespace vvilab
