#include "hncomb/vanishing.hpp"

#include "hncomb/errors.hpp"

#include <algorithm>

namespace hncomb {

RootModule root_module(const GroupData& group, const std::vector<int>& gamma_mp, const Root& alpha) {
    validate_subset(gamma_mp, group.rank);
    if (static_cast<int>(alpha.coefs.size()) != group.rank)
        throw DomainError("root_module: root does not match the group rank");
    std::vector<bool> inside(group.rank, false);
    for (int i : gamma_mp)
        inside[i] = true;
    bool supported = true;
    for (int i = 0; i < group.rank; ++i)
        if (alpha.coefs[i] != 0 && !inside[i]) {
            supported = false;
            break;
        }
    if (supported)
        throw DomainError("root_module: the root lies in the Levi root system");

    RootModule out{gamma_mp, alpha, {}};
    for (const Root& beta : enumerate_roots(group)) {
        bool same_class = true;
        for (int i = 0; i < group.rank; ++i)
            if (!inside[i] && beta.coefs[i] != alpha.coefs[i]) {
                same_class = false;
                break;
            }
        if (same_class)
            out.members.push_back(beta);
    }
    return out;
}

void StrangenessTable::set(std::vector<int> levi, std::vector<int> root_coefs, bool dual, Rat value) {
    if (value < 0)
        throw DomainError("strangeness values are nonnegative");
    entries[{std::move(levi), std::move(root_coefs), dual}] = std::move(value);
}

const Rat& StrangenessTable::value(const std::vector<int>& levi, const Root& root, bool dual) const {
    static const Rat zero = 0;
    auto it = entries.find({levi, root.coefs, dual});
    return it == entries.end() ? zero : it->second;
}

MinimalConstants minimal_constants(const GroupData& group, const StrangenessTable& table) {
    const int r = group.rank;
    if (r > 16)
        throw DomainError("minimal_constants: Levi enumeration supports rank <= 16");
    const auto roots = enumerate_roots(group);
    const Rat base = Rat(2 * table.genus - 2);

    MinimalConstants out;
    out.c_prime.resize(r);
    out.c_double_prime.resize(r);
    out.constraint_counts.assign(r, 0);

    for (int i = 0; i < r; ++i) {
        bool any = false;
        Rat best_prime = 0, best_dblprime = 0;
        for (unsigned mask = 0; mask < (1u << r); ++mask) {
            if (mask & (1u << i))
                continue;  // the Levi must avoid i
            std::vector<int> levi;
            for (int v = 0; v < r; ++v)
                if (mask & (1u << v))
                    levi.push_back(v);
            for (const Root& alpha : roots) {
                if (alpha.coefs[i] <= 0)
                    continue;
                ++out.constraint_counts[i];
                const Rat coef = alpha.coefs[i];
                const Rat cand_prime = (base + table.value(levi, alpha, true)) / coef;
                const Rat cand_dblprime = table.value(levi, alpha.negated(), false) / coef;
                if (!any || cand_prime > best_prime)
                    best_prime = cand_prime;
                if (!any || cand_dblprime > best_dblprime)
                    best_dblprime = cand_dblprime;
                any = true;
            }
        }
        // a simple root always contributes a constraint with coefficient 1
        out.c_prime[i] = any ? best_prime : base;
        out.c_double_prime[i] = std::max(any ? best_dblprime : Rat(0), Rat(0));
    }
    return out;
}

std::vector<int> canonical_levi(const GroupData& group, const std::vector<int>& gamma_m, const Coweight& lam) {
    require_same_shape(group, lam, "canonical_levi");
    validate_subset(gamma_m, group.rank);
    for (int i : gamma_m)
        if (lam.pairings[i] < 0)
            throw DomainError("canonical_levi: lam must pair nonnegatively on gamma_M");
    std::vector<int> out;
    for (int i : gamma_m)
        if (lam.pairings[i] == 0)
            out.push_back(i);
    return out;
}

}  // namespace hncomb
