#include "hncomb/posettop.hpp"

#include "hncomb/coneorder.hpp"
#include "hncomb/errors.hpp"
#include "hncomb/sampling.hpp"

#include <algorithm>

namespace hncomb {

FinitePoset::FinitePoset(std::vector<std::string> elements, std::vector<std::vector<bool>> leq)
    : elements_(std::move(elements)), leq_(std::move(leq)) {
    const std::size_t n = elements_.size();
    if (leq_.size() != n)
        throw DomainError("finite preorder: relation matrix does not match the element count");
    for (const auto& row : leq_)
        if (row.size() != n)
            throw DomainError("finite preorder: relation matrix is not square");
    for (std::size_t i = 0; i < n; ++i)
        if (!leq_[i][i])
            throw DomainError("finite preorder: relation is not reflexive");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!leq_[i][j])
                continue;
            for (std::size_t k = 0; k < n; ++k)
                if (leq_[j][k] && !leq_[i][k])
                    throw DomainError("finite preorder: relation is not transitive");
        }
}

int FinitePoset::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < elements_.size(); ++i)
        if (elements_[i] == name)
            return static_cast<int>(i);
    return -1;
}

std::string top_class_name(TopClass cls) {
    switch (cls) {
        case TopClass::Open: return "open";
        case TopClass::Closed: return "closed";
        case TopClass::Clopen: return "clopen";
        case TopClass::LocallyClosed: return "locally_closed";
        case TopClass::None: return "none";
    }
    return "none";
}

TopClass classify_finite(const FinitePoset& poset, const std::vector<bool>& subset) {
    const int n = poset.size();
    if (static_cast<int>(subset.size()) != n)
        throw DomainError("classify_finite: subset mask does not match the poset");

    bool down_closed = true, up_closed = true;
    for (int x = 0; x < n && (down_closed || up_closed); ++x) {
        if (!subset[x])
            continue;
        for (int y = 0; y < n; ++y) {
            if (subset[y])
                continue;
            if (poset.leq(y, x))
                down_closed = false;
            if (poset.leq(x, y))
                up_closed = false;
        }
    }
    if (down_closed && up_closed)
        return TopClass::Clopen;
    if (down_closed)
        return TopClass::Open;
    if (up_closed)
        return TopClass::Closed;

    for (int x1 = 0; x1 < n; ++x1) {
        if (!subset[x1])
            continue;
        for (int x2 = 0; x2 < n; ++x2) {
            if (!subset[x2])
                continue;
            for (int y = 0; y < n; ++y)
                if (!subset[y] && poset.leq(x1, y) && poset.leq(y, x2))
                    return TopClass::None;
        }
    }
    return TopClass::LocallyClosed;
}

bool is_monotone_map_continuous(const FinitePoset& source, const FinitePoset& target, const std::vector<int>& map) {
    const int n = source.size();
    const int m = target.size();
    if (static_cast<int>(map.size()) != n)
        throw DomainError("is_monotone_map_continuous: map must be total on the source");
    for (int v : map)
        if (v < 0 || v >= m)
            throw DomainError("is_monotone_map_continuous: map image out of range");
    if (m > 20)
        throw DomainError("is_monotone_map_continuous: target too large for the open-set scan");

    bool monotone = true;
    for (int a = 0; a < n && monotone; ++a)
        for (int b = 0; b < n; ++b)
            if (source.leq(a, b) && !target.leq(map[a], map[b])) {
                monotone = false;
                break;
            }

    // preimages of down-closed sets must be down-closed
    bool continuous = true;
    for (std::uint32_t mask = 0; mask < (1u << m) && continuous; ++mask) {
        bool open_in_target = true;
        for (int x = 0; x < m && open_in_target; ++x) {
            if (!(mask & (1u << x)))
                continue;
            for (int y = 0; y < m; ++y)
                if (!(mask & (1u << y)) && target.leq(y, x)) {
                    open_in_target = false;
                    break;
                }
        }
        if (!open_in_target)
            continue;
        std::vector<bool> preimage(n, false);
        for (int v = 0; v < n; ++v)
            preimage[v] = (mask & (1u << map[v])) != 0;
        for (int x = 0; x < n && continuous; ++x) {
            if (!preimage[x])
                continue;
            for (int y = 0; y < n; ++y)
                if (!preimage[y] && source.leq(y, x)) {
                    continuous = false;
                    break;
                }
        }
    }
    if (monotone != continuous)
        throw DomainError("monotonicity and continuity disagreed; preorder topology is broken");
    return monotone;
}

SetDescription SetDescription::down_closure(std::vector<Coweight> generators) {
    return SetDescription{Kind::DownClosure, std::move(generators), {}};
}
SetDescription SetDescription::up_closure(std::vector<Coweight> generators) {
    return SetDescription{Kind::UpClosure, std::move(generators), {}};
}
SetDescription SetDescription::interval_union(std::vector<std::pair<Coweight, Coweight>> intervals) {
    return SetDescription{Kind::IntervalUnion, {}, std::move(intervals)};
}
SetDescription SetDescription::explicit_set(std::vector<Coweight> points) {
    return SetDescription{Kind::Explicit, std::move(points), {}};
}

namespace {

// The strictly-below part of the principal down-set of lam in the dominant
// cone is empty iff every coroot coefficient is forced to zero.
bool principal_downset_is_singleton(const GroupData& group, const Coweight& lam) {
    const int r = group.rank;
    ConeProblem polytope;
    polytope.dimension = r;
    for (int j = 0; j < r; ++j) {
        RatVec row(r);
        row[j] = 1;
        polytope.add_at_least(std::move(row), Rat(0));
    }
    for (int i = 0; i < r; ++i) {
        RatVec row(r);
        for (int j = 0; j < r; ++j)
            row[j] = -group.cartan.at(i, j);
        polytope.add_at_least(std::move(row), -lam.pairings[i]);  // lam - sum c alpha stays dominant
    }
    for (int j = 0; j < r; ++j) {
        const VariableBounds bounds = variable_bounds(polytope, j);
        if (!bounds.feasible)
            return true;  // cannot happen for dominant lam (c = 0 is inside)
        if (!bounds.upper || *bounds.upper > 0)
            return false;
    }
    return true;
}

}  // namespace

ConeClassification classify_cone(const GroupData& group, const SetDescription& description, std::uint64_t seed,
                                 long samples) {
    switch (description.kind) {
        case SetDescription::Kind::DownClosure: {
            for (const auto& gen : description.generators)
                require_same_shape(group, gen, "classify_cone");
            if (description.generators.empty())
                return {TopClass::Clopen, "empty set"};
            return {TopClass::Open, "union of principal down-sets"};
        }
        case SetDescription::Kind::UpClosure: {
            for (const auto& gen : description.generators)
                require_same_shape(group, gen, "classify_cone");
            if (description.generators.empty())
                return {TopClass::Clopen, "empty set"};
            return {TopClass::Closed, "union of principal up-sets"};
        }
        case SetDescription::Kind::IntervalUnion: {
            std::vector<std::pair<Coweight, Coweight>> nonempty;
            for (const auto& [lo, hi] : description.intervals) {
                require_same_shape(group, lo, "classify_cone");
                require_same_shape(group, hi, "classify_cone");
                if (leq_full(group, lo, hi).holds)
                    nonempty.push_back({lo, hi});
            }
            if (nonempty.empty())
                return {TopClass::Clopen, "empty set"};
            // coherent: every bridging interval [lo_a, hi_b] sits inside one
            // of the listed intervals, so the interval criterion is exact
            for (const auto& [lo_a, hi_a] : nonempty)
                for (const auto& [lo_b, hi_b] : nonempty) {
                    if (!leq_full(group, lo_a, hi_b).holds)
                        continue;
                    bool covered = false;
                    for (const auto& [lo_k, hi_k] : nonempty)
                        if (leq_full(group, lo_k, lo_a).holds && leq_full(group, hi_b, hi_k).holds) {
                            covered = true;
                            break;
                        }
                    if (!covered)
                        throw DomainError("classify_cone: interval union is not pairwise coherent");
                }
            return {TopClass::LocallyClosed, "pairwise coherent intervals"};
        }
        case SetDescription::Kind::Explicit: {
            for (const auto& point : description.generators)
                require_same_shape(group, point, "classify_cone");
            if (description.generators.empty())
                return {TopClass::Clopen, "empty set"};

            bool open = true;
            for (const auto& point : description.generators)
                if (!principal_downset_is_singleton(group, point)) {
                    open = false;
                    break;
                }
            if (open)
                return {TopClass::Open, "principal down-sets are singletons"};

            // a finite nonempty set is never closed here: principal up-sets
            // of the dominant cone contain rays
            Sampler sampler(seed);
            auto contains = [&](const Coweight& cw) {
                return std::find(description.generators.begin(), description.generators.end(), cw) !=
                       description.generators.end();
            };
            for (const auto& lower : description.generators)
                for (const auto& upper : description.generators) {
                    const LeqResult between = leq_full(group, lower, upper);
                    if (!between.holds)
                        continue;
                    for (long s = 0; s < samples; ++s) {
                        Coweight y = lower;
                        for (int j = 0; j < group.rank; ++j) {
                            const Rat& reach = between.coroot_coeffs[j];
                            if (reach == 0)
                                continue;
                            const Rat t = Rat(sampler.integer(0, 12), 12) * reach;
                            for (int i = 0; i < group.rank; ++i)
                                y.pairings[i] += t * group.cartan.at(i, j);
                        }
                        if (is_dominant(group, y) && !contains(y))
                            return {TopClass::None, "interval point outside the set"};
                    }
                }
            return {TopClass::LocallyClosed, "sampled interval points (not exhaustive)"};
        }
    }
    throw DomainError("classify_cone: unsupported description");
}

}  // namespace hncomb
