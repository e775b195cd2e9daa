#pragma once

#include "hncomb/coneorder.hpp"
#include "hncomb/rootdata.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hncomb {

// Finitely described subset of the dominant cone. The three canonical
// constructors cover every set this library reasons about:
//   down_levi(gamma_M, apex): dominant coweights <=_M apex (apex dominant);
//   fiber(gamma_M, mu):       dominant coweights projecting to mu under the
//                             gamma_M face projection (mu in the face);
//   singleton(mu):            one dominant point.
// Arbitrary predicate sets are deliberately not representable: the downward
// closure condition quantifies over the whole dominant cone and cannot be
// decided for black-box membership.
class AdmissibleSet {
  public:
    enum class Kind { DownLevi, Fiber, Singleton };

    static AdmissibleSet down_levi(const GroupData& group, std::vector<int> gamma_m, Coweight apex);
    static AdmissibleSet fiber(const GroupData& group, std::vector<int> gamma_m, Coweight mu);
    static AdmissibleSet singleton(const GroupData& group, Coweight mu);

    Kind kind() const { return kind_; }
    const std::vector<int>& gamma_m() const { return gamma_m_; }
    const Coweight& base() const { return base_; }  // apex or mu

  private:
    AdmissibleSet(Kind kind, std::vector<int> gamma_m, Coweight base)
        : kind_(kind), gamma_m_(std::move(gamma_m)), base_(std::move(base)) {}

    Kind kind_;
    std::vector<int> gamma_m_;
    Coweight base_;
};

bool member(const GroupData& group, const AdmissibleSet& set, const Coweight& lam);

struct AdmissibilityFailure {
    std::string stage;  // "projection-constant" | "regularity" | "downward-closure"
    Coweight witness;
};

struct AdmissibilityReport {
    long checked = 0;
    std::vector<AdmissibilityFailure> failures;

    bool admissible() const { return failures.empty(); }
};

/// Checks the three defining conditions of a P-admissible set for the
/// parabolic given by gamma_M. The projection-constancy and regularity
/// conditions are decided exactly (regularity of a fiber set via a cone
/// feasibility probe per wall); downward closure holds by construction for
/// the canonical kinds and is additionally falsification-tested on `samples`
/// random pairs.
AdmissibilityReport check_admissible(const GroupData& group, const AdmissibleSet& set,
                                     const std::vector<int>& gamma_m, long samples, std::uint64_t seed);

/// The unique parabolic whose regular face contains the dominant coweight:
/// gamma_M = {i : <lam, a_i> = 0}.
std::vector<int> hn_parabolic(const GroupData& group, const Coweight& lam);

struct CoveringSet {
    std::vector<int> gamma_m;
    AdmissibleSet set;
};

/// The covering construction at a dominant index lam for a curve of the given
/// genus: gamma_M = {i : <lam, a_i> <= 2g-2} and the down-set of lam for that
/// Levi. Requires genus >= 1; at genus 0 every quasi-compact open is already
/// co-truncative and no covering certificate is needed.
CoveringSet covering_set(const GroupData& group, long genus, const Coweight& lam);

/// Cone problem deciding whether some dominant lam' satisfies lam' <=_G theta
/// and lam' <=_M lam. Variables: the pairing and central coordinates of lam',
/// then full-coroot coefficients for theta - lam', then gamma_M coefficients
/// for lam - lam'.
ConeProblem empty_intersection_problem(const GroupData& group, const Coweight& theta, const Coweight& lam,
                                       const std::vector<int>& gamma_m);

/// Certificate for the index-level emptiness claim: infeasible means no
/// common index below theta (for <=_G) and below lam (for <=_M) exists.
Certificate empty_intersection(const GroupData& group, const Coweight& theta, const Coweight& lam,
                               const std::vector<int>& gamma_m);

/// Reconstructs the coweight encoded in the first coordinates of a feasible
/// point of empty_intersection_problem.
Coweight coweight_from_point(const GroupData& group, const RatVec& point);

struct CoverFailure {
    Coweight lambda;
    std::string stage;  // "lambda-in-set" | "admissible" | "depth" | "emptiness" | "certificate"
    Coweight witness;
};

struct CoverReport {
    long requested = 0;
    long checked = 0;
    long skipped = 0;  // sampled indices already below theta
    std::vector<CoverFailure> failures;

    bool ok() const { return failures.empty(); }
};

/// Samples dominant indices not below theta and checks, for each, that the
/// covering construction yields an admissible set containing the index,
/// meeting the strict depth condition, and disjoint (at index level) from the
/// region below theta, with an arithmetically verified certificate. Requires
/// <theta, a_i> >= 2g-2 for every simple root.
CoverReport check_theorem_cover(const GroupData& group, long genus, const Coweight& theta, long samples,
                                std::uint64_t seed);

struct StratumIndex {
    Coweight lam;
    std::vector<int> gamma_m;
};

/// The stratum of the eta-shifted stratification through lam (which must lie
/// in eta + dominant cone): gamma_M = {i : <lam - eta, a_i> = 0} and the
/// down-set of lam for that Levi. Membership agrees with the fiber of the
/// shifted retraction over lam.
std::pair<StratumIndex, AdmissibleSet> eta_stratum(const GroupData& group, const Coweight& eta, const Coweight& lam);

/// All candidate stratum indices below theta: for each parabolic, the lattice
/// points of the projected coweight lattice that lie in the regular face and
/// below theta. Finite; sorted by coordinates. Which candidates are realized
/// by actual bundles is not decided here. Requires semisimple rank <= 4.
std::vector<StratumIndex> enumerate_candidates(const GroupData& group, const Coweight& theta);

}  // namespace hncomb
