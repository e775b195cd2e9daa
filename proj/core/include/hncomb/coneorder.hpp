#pragma once

#include "hncomb/rootdata.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace hncomb {

// Result of a dominance-order comparison a <=_M b. When it holds, `coroot_coeffs`
// are the unique coefficients c_j >= 0, indexed like gamma_M, with
// b - a = sum_j c_j * alpha_j.
struct LeqResult {
    bool holds = false;
    RatVec coroot_coeffs;

    explicit operator bool() const { return holds; }
};

/// Solves the gamma_M principal Cartan subsystem A_MM x = rhs exactly. The
/// subsystem is invertible for every subset of a valid root datum.
RatVec solve_levi_system(const GroupData& group, const std::vector<int>& gamma_m, const RatVec& rhs_on_subset);

/// Decides a <=_M b for the standard Levi given by gamma_M (full Gamma gives
/// the dominance order of the group). Central coordinates must agree exactly.
LeqResult leq(const GroupData& group, const std::vector<int>& gamma_m, const Coweight& a, const Coweight& b);

/// a <=_G b, i.e. leq over the full vertex set.
LeqResult leq_full(const GroupData& group, const Coweight& a, const Coweight& b);

bool is_dominant(const GroupData& group, const Coweight& cw);

/// Projection onto the face attached to gamma_M: kills the span of the
/// gamma_M coroots, fixes central coordinates, and the image pairs to zero
/// with every simple root in gamma_M.
Coweight face_projection(const GroupData& group, const std::vector<int>& gamma_m, const Coweight& cw);

enum class FaceMembership {
    Linear,    // zero pairing on gamma_M
    Dominant,  // additionally >= 0 off gamma_M
    Regular,   // additionally > 0 off gamma_M
    None,
};

FaceMembership face_membership(const GroupData& group, const std::vector<int>& gamma_m, const Coweight& cw);

// An exact rational linear feasibility problem: equalities row.x = rhs and
// inequalities row.x >= rhs.
struct ConeProblem {
    int dimension = 0;
    std::vector<std::pair<RatVec, Rat>> equalities;
    std::vector<std::pair<RatVec, Rat>> inequalities;

    void add_equal(RatVec row, Rat rhs);
    void add_at_least(RatVec row, Rat rhs);
};

// Machine-checkable outcome. Feasible: a point satisfying every constraint.
// Infeasible: nonnegative multipliers over the expanded constraint list
// (each equality contributes the two rows +row >= +rhs and -row >= -rhs, in
// order, followed by the inequalities) combining to 0 >= positive.
struct Certificate {
    bool feasible = false;
    RatVec point;
    RatVec farkas;
};

/// Decides feasibility by exact Fourier-Motzkin elimination.
Certificate cone_feasible(const ConeProblem& problem);

/// Re-checks a certificate against the problem by plain arithmetic, with no
/// reliance on how it was produced.
bool verify_certificate(const ConeProblem& problem, const Certificate& cert);

// Exact range of a single variable over the solution set, computed by
// eliminating all other variables. Unset bounds mean unbounded.
struct VariableBounds {
    bool feasible = false;
    std::optional<Rat> lower;
    std::optional<Rat> upper;
};

VariableBounds variable_bounds(const ConeProblem& problem, int variable);

}  // namespace hncomb
