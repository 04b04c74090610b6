#pragma once

#include "vvilab/bifunction.hpp"
#include "vvilab/check.hpp"
#include "vvilab/differential.hpp"
#include "vvilab/sampler.hpp"

namespace vvilab {

// Sample-based falsification of the geodesic convexity classes. Every
// checker walks the sample pairs (p, q), p != q, in deterministic order and
// returns the first violation as a replayable witness.

/// Phi o gamma_pq convex on [0, 1]: on the lattice a, b, t in
/// {0, .25, .5, .75, 1} plus 8 seeded random triples per pair,
/// Phi(g(ta + (1-t)b)) - t Phi(g(a)) - (1-t) Phi(g(b)) in -R^m_+ u {0}.
CheckOutcome check_geodesic_convex(const ObjectiveFn& phi,
                                   const DomainSampler& sampler,
                                   const CheckContext& ctx);

/// Phi_i(w) <= max(Phi_i(p), Phi_i(q)) for w = exp_q(t log_q p),
/// t in {.25, .5, .75}.
CheckOutcome check_geodesic_quasiconvex(const ObjectiveFn& phi,
                                        const DomainSampler& sampler,
                                        const CheckContext& ctx);

/// Geodesic h-convexity in the form selected by ctx.hconvex_form.
CheckOutcome check_h_convex(const ObjectiveFn& phi, const Bifunction& h,
                            const DomainSampler& sampler,
                            const CheckContext& ctx);

/// Phi(q) - Phi(p) in -int R^m_+  =>  h(p, log_p q) in -int R^m_+.
CheckOutcome check_h_pseudoconvex(const ObjectiveFn& phi, const Bifunction& h,
                                  const DomainSampler& sampler,
                                  const CheckContext& ctx);

/// Phi(q) - Phi(p) in -R^m_+ \ {0}  =>  h(p, log_p q) not in R^m_+ \ {0}.
CheckOutcome check_h_quasiconvex(const ObjectiveFn& phi, const Bifunction& h,
                                 const DomainSampler& sampler,
                                 const CheckContext& ctx);

/// h_i(p, log_p q) <= upper Dini derivative of Phi_i (+ tol).
CheckOutcome check_upper_dini_bound(const ObjectiveFn& phi,
                                    const Bifunction& h,
                                    const DomainSampler& sampler,
                                    const CheckContext& ctx);

/// lower Dini derivative of Phi_i <= h_i(p, log_p q) (+ tol).
CheckOutcome check_lower_dini_bound(const ObjectiveFn& phi,
                                    const Bifunction& h,
                                    const DomainSampler& sampler,
                                    const CheckContext& ctx);

/// h(p, v) >= -h(p, -v) - tol and |h(p, a v) - a h(p, v)|_inf <= tol (1 + a)
/// for v = log_p q and a in {0.5, 2}.
CheckOutcome check_odd_homogeneous(const Bifunction& h,
                                   const DomainSampler& sampler,
                                   const CheckContext& ctx);

/// h(p, log_p q) - Phi(q) + Phi(p) in int R^m_+ for all p != q.
CheckOutcome check_strict_gap(const ObjectiveFn& phi, const Bifunction& h,
                              const DomainSampler& sampler,
                              const CheckContext& ctx);

}  // namespace vvilab
