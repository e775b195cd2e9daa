#pragma once

#include "hncomb/rootdata.hpp"

#include <map>
#include <tuple>
#include <vector>

namespace hncomb {

// The block of root spaces attached to a Levi subset and a root outside it:
// all roots whose coefficients agree with `root` away from the Levi, i.e.
// whose difference from `root` lies in the Levi's root lattice.
struct RootModule {
    std::vector<int> levi;
    Root root;
    std::vector<Root> members;
};

RootModule root_module(const GroupData& group, const std::vector<int>& gamma_mp, const Root& alpha);

// User-supplied degree-bound invariants per (Levi, root, dual?) triple.
// Values are nonnegative; missing entries default to 0, matching the
// characteristic-zero situation. The invariant itself is a statement about
// moduli of semistable bundles and is never computed here.
struct StrangenessTable {
    long genus = 1;
    std::map<std::tuple<std::vector<int>, std::vector<int>, bool>, Rat> entries;

    void set(std::vector<int> levi, std::vector<int> root_coefs, bool dual, Rat value);
    const Rat& value(const std::vector<int>& levi, const Root& root, bool dual) const;
};

struct MinimalConstants {
    RatVec c_prime;        // per simple root: H1-vanishing thresholds
    RatVec c_double_prime; // per simple root: H0-vanishing thresholds, clamped at 0
    std::vector<long> constraint_counts;
};

/// Smallest constants satisfying every inequality
///   coef_i(a) * c'_i  >= 2g - 2 + strangeness(M', dual module at a)
///   coef_i(a) * c''_i >= strangeness(M', module at -a)
/// over all Levi subsets M' avoiding i and all roots a with coef_i(a) > 0.
MinimalConstants minimal_constants(const GroupData& group, const StrangenessTable& table);

/// {i in gamma_M : <lam, a_i> = 0}, the Levi of the canonical reduction
/// inside M. Requires lam to pair nonnegatively on gamma_M.
std::vector<int> canonical_levi(const GroupData& group, const std::vector<int>& gamma_m, const Coweight& lam);

}  // namespace hncomb
