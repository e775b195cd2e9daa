#pragma once

#include "hncomb/coneorder.hpp"
#include "hncomb/rootdata.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hncomb::testing {

inline GroupData make_group(const std::string& spec) { return build_group(parse_group_spec(spec)); }

inline Coweight cw(const GroupData& group, const std::string& literal) { return parse_coweight(literal, group); }

inline std::vector<int> sub(const GroupData& group, const std::string& literal) {
    return parse_subset(literal, group.rank);
}

inline std::vector<int> full_subset(const GroupData& group) {
    std::vector<int> all(group.rank);
    for (int i = 0; i < group.rank; ++i)
        all[i] = i;
    return all;
}

// Brute-force feasibility oracle: scans the grid of points with numerators in
// [-max_num, max_num] over the given denominators. Finding a point proves
// feasibility; an exhausted scan proves there is no solution on the grid
// (which refutes an "infeasible" answer whenever the grid meets the region).
std::optional<RatVec> grid_search(const ConeProblem& problem, long max_num,
                                  const std::vector<long>& denominators = {1, 2});

// Same scan restricted to dominant coweights of the group, used as a
// membership oracle for described subsets of the dominant cone.
std::vector<Coweight> grid_dominant_coweights(const GroupData& group, long max_num,
                                              const std::vector<long>& denominators = {1, 2});

}  // namespace hncomb::testing
