#include "vvilab/properties.hpp"

#include <array>
#include <functional>

#include "probes.hpp"

namespace vvilab {

std::string to_string(Verdict v) {
  return v == Verdict::holds_on_samples ? "holds_on_samples" : "counterexample";
}

std::string to_string(HConvexForm f) {
  return f == HConvexForm::componentwise ? "componentwise" : "cone";
}

HConvexForm parse_hconvex_form(std::string_view text) {
  if (text == "componentwise") return HConvexForm::componentwise;
  if (text == "cone") return HConvexForm::cone;
  throw UnknownIdError("unknown h-convexity form: " + std::string(text));
}

namespace {

struct PropertyInfo {
  Property prop;
  const char* token;
  bool objective;
  bool bifunction;
  detail::ProbeResult (*probe)(const detail::Env&, const detail::Probe&);
};

constexpr std::array kProperties{
    PropertyInfo{Property::geodesic_convex, "geodesic-convex", true, false,
                 &detail::probe_geodesic_convex},
    PropertyInfo{Property::geodesic_quasiconvex, "geodesic-quasiconvex", true,
                 false, &detail::probe_geodesic_quasiconvex},
    PropertyInfo{Property::h_convex, "h-convex", true, true,
                 &detail::probe_h_convex},
    PropertyInfo{Property::h_pseudoconvex, "h-pseudoconvex", true, true,
                 &detail::probe_h_pseudoconvex},
    PropertyInfo{Property::h_quasiconvex, "h-quasiconvex", true, true,
                 &detail::probe_h_quasiconvex},
    PropertyInfo{Property::upper_dini_bound, "upper-dini-bound", true, true,
                 &detail::probe_upper_dini_bound},
    PropertyInfo{Property::lower_dini_bound, "lower-dini-bound", true, true,
                 &detail::probe_lower_dini_bound},
    PropertyInfo{Property::odd_homogeneous, "odd-homogeneous", false, true,
                 &detail::probe_odd_homogeneous},
    PropertyInfo{Property::strict_gap, "strict-gap", true, true,
                 &detail::probe_strict_gap},
    PropertyInfo{Property::monotone, "monotone", false, true,
                 &detail::probe_monotone},
    PropertyInfo{Property::pseudomonotone, "pseudomonotone", false, true,
                 &detail::probe_pseudomonotone},
    PropertyInfo{Property::strictly_pseudomonotone, "strictly-pseudomonotone",
                 false, true, &detail::probe_strictly_pseudomonotone},
    PropertyInfo{Property::upper_sign_continuous, "upper-sign-continuous",
                 false, true, &detail::probe_upper_sign_continuous},
    PropertyInfo{Property::subadditive_poshom, "subadditive-poshom", false,
                 true, &detail::probe_subadditive_poshom},
    PropertyInfo{Property::pos_homogeneous, "pos-homogeneous", false, true,
                 &detail::probe_pos_homogeneous},
};

const PropertyInfo& info(Property p) {
  for (const auto& i : kProperties) {
    if (i.prop == p) return i;
  }
  throw UnknownIdError("unregistered property");
}

constexpr std::array kLattice{0.0, 0.25, 0.5, 0.75, 1.0};
constexpr std::array kInterior{0.25, 0.5, 0.75};
constexpr std::array kAlphas{0.5, 2.0};
constexpr int kRandomTriples = 8;

using Visitor = std::function<bool(const detail::Probe&)>;  // true = stop

// Visits every probe of `prop` in deterministic order.
void enumerate(Property prop, const std::vector<Point>& samples,
               std::uint64_t seed, const Visitor& visit) {
  const std::size_t n = samples.size();
  std::uint64_t pair_index = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || samples[i].coords == samples[j].coords) continue;
      detail::Probe pr{samples[i], samples[j], std::nullopt};
      ++pair_index;
      switch (prop) {
        case Property::geodesic_convex: {
          for (double a : kLattice) {
            for (double b : kLattice) {
              for (double t : kLattice) {
                pr.a = a;
                pr.b = b;
                pr.t = t;
                if (visit(pr)) return;
              }
            }
          }
          auto gen = stream_rng(seed, pair_index);
          for (int k = 0; k < kRandomTriples; ++k) {
            pr.a = unit_uniform(gen);
            pr.b = unit_uniform(gen);
            pr.t = unit_uniform(gen);
            if (visit(pr)) return;
          }
          break;
        }
        case Property::geodesic_quasiconvex:
          for (double t : kInterior) {
            pr.t = t;
            if (visit(pr)) return;
          }
          break;
        case Property::odd_homogeneous:
        case Property::pos_homogeneous:
          for (double alpha : kAlphas) {
            pr.alpha = alpha;
            if (visit(pr)) return;
          }
          break;
        case Property::subadditive_poshom: {
          // Third point: next sample after q that differs from p.
          std::size_t k = (j + 1) % n;
          while (k == i || samples[k].coords == samples[i].coords) {
            k = (k + 1) % n;
          }
          pr.r = samples[k];
          for (double alpha : kAlphas) {
            pr.alpha = alpha;
            if (visit(pr)) return;
          }
          break;
        }
        default:
          if (visit(pr)) return;
          break;
      }
    }
  }
}

void require_functions(Property prop, const ObjectiveFn* phi,
                       const Bifunction* h) {
  const auto& i = info(prop);
  if (i.objective && phi == nullptr) {
    throw DomainError(std::string("property '") + i.token +
                      "' needs an objective");
  }
  if (i.bifunction && h == nullptr) {
    throw DomainError(std::string("property '") + i.token +
                      "' needs a bifunction");
  }
}

}  // namespace

std::string to_string(Property p) { return info(p).token; }

Property parse_property(std::string_view token) {
  for (const auto& i : kProperties) {
    if (token == i.token) return i.prop;
  }
  throw UnknownIdError("unknown property: " + std::string(token));
}

const std::vector<Property>& all_properties() {
  static const std::vector<Property> all = [] {
    std::vector<Property> v;
    for (const auto& i : kProperties) v.push_back(i.prop);
    return v;
  }();
  return all;
}

bool needs_objective(Property p) { return info(p).objective; }
bool needs_bifunction(Property p) { return info(p).bifunction; }

CheckOutcome run_check(Property prop, const CheckContext& ctx,
                       const DomainSampler& sampler, const ObjectiveFn* phi,
                       const Bifunction* h) {
  require_functions(prop, phi, h);
  sampler.validate();
  if (!(sampler.manifold == ctx.manifold.id())) {
    throw DimensionError("sampler manifold " + to_string(sampler.manifold) +
                         " differs from context manifold " +
                         to_string(ctx.manifold.id()));
  }
  if (!(ctx.tol >= 0.0)) throw DomainError("tolerance must be >= 0");
  for (double t : ctx.usc_t_set) {
    if (!(t > 0.0 && t < 1.0)) {
      throw DomainError("upper-sign t values must lie in (0, 1)");
    }
  }
  ctx.sched.validate();

  const detail::Env env{ctx, phi, h};
  const auto probe = info(prop).probe;
  CheckOutcome out;
  out.property = to_string(prop);
  const std::vector<Point> samples = sampler.samples();
  enumerate(prop, samples, ctx.seed, [&](const detail::Probe& pr) {
    ++out.samples_checked;
    if (auto w = probe(env, pr)) {
      out.verdict = Verdict::counterexample;
      out.witness = std::move(w);
      return true;
    }
    return false;
  });
  if (out.samples_checked == 0) {
    out.notes.push_back("no distinct sample pairs; verdict is vacuous");
  }
  if (prop == Property::upper_sign_continuous) {
    out.notes.push_back(
        "antecedent required at every t in the upper-sign t set");
  }
  if (prop == Property::h_convex) {
    out.notes.push_back("h-convexity form: " + to_string(ctx.hconvex_form));
  }
  return out;
}

std::optional<Witness> replay_witness(const Witness& w,
                                      const CheckContext& ctx,
                                      const ObjectiveFn* phi,
                                      const Bifunction* h) {
  const Property prop = parse_property(w.property);
  require_functions(prop, phi, h);
  const auto point = [&](const char* key) -> const Point& {
    const auto it = w.points.find(key);
    if (it == w.points.end()) {
      throw DomainError(std::string("witness lacks point '") + key + "'");
    }
    return it->second;
  };
  const auto param = [&](const char* key) {
    const auto it = w.params.find(key);
    return it == w.params.end() ? 0.0 : it->second;
  };
  detail::Probe pr{point("p"), point("q"), std::nullopt};
  if (w.points.count("r") != 0) pr.r = point("r");
  pr.a = param("a");
  pr.b = param("b");
  pr.t = param("t");
  pr.alpha = param("alpha");
  const detail::Env env{ctx, phi, h};
  return info(prop).probe(env, pr);
}

}  // namespace vvilab
