#pragma once

#include "hncomb/coneorder.hpp"
#include "hncomb/rootdata.hpp"

namespace hncomb {

// Outcome of the Langlands retraction: mu is the least dominant coweight
// above the input, reached as input + sum of c_i * alpha_i over `support`.
// mu pairs to zero with every simple root in `support` and all c_i are >= 0.
struct RetractionResult {
    Coweight mu;
    std::vector<int> support;
    RatVec coefficients;  // indexed like support
};

/// Least dominant coweight >= the input in the dominance order. Enumerates
/// subsets I of Gamma, solves the I-Cartan subsystem, keeps sign-valid
/// solutions, and audits that a single value of mu arises. Central
/// coordinates pass through unchanged.
RetractionResult retract(const GroupData& group, const Coweight& lam);

/// Exact membership in the retraction fiber over a dominant mu: true iff
/// lam = mu - sum of d_i * alpha_i with d_i >= 0 over I = {i : <mu, a_i> = 0}.
bool fiber_contains(const GroupData& group, const Coweight& mu, const Coweight& lam);

/// Shifted retraction: retract(lam - eta) + eta. Requires eta and lam
/// dominant; the result lies in eta + (dominant cone).
Coweight retract_shifted(const GroupData& group, const Coweight& eta, const Coweight& lam);

}  // namespace hncomb
