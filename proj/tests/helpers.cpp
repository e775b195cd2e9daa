#include "helpers.hpp"

#include <algorithm>

namespace hncomb::testing {

namespace {

// all grid values n/d, deduplicated, sorted
std::vector<Rat> grid_values(long max_num, const std::vector<long>& denominators) {
    std::vector<Rat> values;
    for (long den : denominators)
        for (long num = -max_num * den; num <= max_num * den; ++num)
            values.push_back(Rat(num, den));
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

}  // namespace

std::optional<RatVec> grid_search(const ConeProblem& problem, long max_num, const std::vector<long>& denominators) {
    const auto values = grid_values(max_num, denominators);
    const int dim = problem.dimension;
    std::vector<std::size_t> cursor(dim, 0);
    RatVec point(dim);
    while (true) {
        for (int v = 0; v < dim; ++v)
            point[v] = values[cursor[v]];
        bool ok = true;
        for (const auto& [row, rhs] : problem.equalities) {
            Rat acc = 0;
            for (int v = 0; v < dim; ++v)
                acc += row[v] * point[v];
            if (acc != rhs) {
                ok = false;
                break;
            }
        }
        if (ok)
            for (const auto& [row, rhs] : problem.inequalities) {
                Rat acc = 0;
                for (int v = 0; v < dim; ++v)
                    acc += row[v] * point[v];
                if (acc < rhs) {
                    ok = false;
                    break;
                }
            }
        if (ok)
            return point;
        int v = 0;
        while (v < dim && cursor[v] + 1 == values.size()) {
            cursor[v] = 0;
            ++v;
        }
        if (v == dim)
            return std::nullopt;
        ++cursor[v];
    }
}

std::vector<Coweight> grid_dominant_coweights(const GroupData& group, long max_num,
                                              const std::vector<long>& denominators) {
    std::vector<Rat> values;
    for (long den : denominators)
        for (long num = 0; num <= max_num * den; ++num)
            values.push_back(Rat(num, den));
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());

    std::vector<Coweight> out;
    std::vector<std::size_t> cursor(group.rank, 0);
    while (true) {
        Coweight cw = zero_coweight(group);
        for (int i = 0; i < group.rank; ++i)
            cw.pairings[i] = values[cursor[i]];
        out.push_back(cw);
        int v = 0;
        while (v < group.rank && cursor[v] + 1 == values.size()) {
            cursor[v] = 0;
            ++v;
        }
        if (v == group.rank)
            break;
        ++cursor[v];
    }
    return out;
}

}  // namespace hncomb::testing
