#include "hncomb/langlands.hpp"

#include "hncomb/errors.hpp"

namespace hncomb {

namespace {

std::vector<int> mask_to_subset(unsigned mask, int rank) {
    std::vector<int> subset;
    for (int i = 0; i < rank; ++i)
        if (mask & (1u << i))
            subset.push_back(i);
    return subset;
}

}  // namespace

RetractionResult retract(const GroupData& group, const Coweight& lam) {
    require_same_shape(group, lam, "retract");
    if (group.rank > 30)
        throw DomainError("retract: subset enumeration supports rank <= 30");

    bool found = false;
    RetractionResult result;
    for (unsigned mask = 0; mask < (1u << group.rank); ++mask) {
        const auto subset = mask_to_subset(mask, group.rank);
        RatVec rhs(subset.size());
        for (std::size_t i = 0; i < subset.size(); ++i)
            rhs[i] = -lam.pairings[subset[i]];
        RatVec coeffs = solve_levi_system(group, subset, rhs);
        bool valid = true;
        for (const Rat& c : coeffs)
            if (c < 0) {
                valid = false;
                break;
            }
        if (!valid)
            continue;
        Coweight mu = lam;
        for (int i = 0; i < group.rank; ++i) {
            Rat acc = 0;
            for (std::size_t j = 0; j < subset.size(); ++j)
                acc += group.cartan.at(i, subset[j]) * coeffs[j];
            mu.pairings[i] += acc;
        }
        if (!is_dominant(group, mu))
            continue;
        if (!found) {
            found = true;
            result = RetractionResult{std::move(mu), subset, std::move(coeffs)};
        } else if (mu != result.mu) {
            // would contradict the least-element property; treat as a bug
            throw DomainError("retraction uniqueness audit failed for " + coweight_to_string(lam));
        }
    }
    if (!found)
        throw DomainError("retraction found no valid subset for " + coweight_to_string(lam));
    return result;
}

bool fiber_contains(const GroupData& group, const Coweight& mu, const Coweight& lam) {
    require_same_shape(group, mu, "fiber_contains");
    require_same_shape(group, lam, "fiber_contains");
    if (!is_dominant(group, mu))
        throw DomainError("fiber_contains: mu must be dominant");

    const Coweight diff = mu - lam;
    for (const Rat& c : diff.central)
        if (c != 0)
            return false;

    std::vector<int> support;
    for (int i = 0; i < group.rank; ++i)
        if (mu.pairings[i] == 0)
            support.push_back(i);

    RatVec rhs(support.size());
    for (std::size_t i = 0; i < support.size(); ++i)
        rhs[i] = diff.pairings[support[i]];
    const RatVec coeffs = solve_levi_system(group, support, rhs);
    for (const Rat& c : coeffs)
        if (c < 0)
            return false;
    for (int i = 0; i < group.rank; ++i) {
        Rat acc = 0;
        for (std::size_t j = 0; j < support.size(); ++j)
            acc += group.cartan.at(i, support[j]) * coeffs[j];
        if (acc != diff.pairings[i])
            return false;
    }
    return true;
}

Coweight retract_shifted(const GroupData& group, const Coweight& eta, const Coweight& lam) {
    require_same_shape(group, eta, "retract_shifted");
    require_same_shape(group, lam, "retract_shifted");
    if (!is_dominant(group, eta))
        throw DomainError("retract_shifted: eta must be dominant");
    if (!is_dominant(group, lam))
        throw DomainError("retract_shifted: lam must be dominant");
    return retract(group, lam - eta).mu + eta;
}

}  // namespace hncomb
