#include "hncomb/strata.hpp"

#include "hncomb/errors.hpp"
#include "hncomb/langlands.hpp"
#include "hncomb/sampling.hpp"

#include <algorithm>
#include <set>

namespace hncomb {

namespace {

std::vector<int> complement(const std::vector<int>& subset, int rank) {
    std::vector<bool> inside(rank, false);
    for (int i : subset)
        inside[i] = true;
    std::vector<int> out;
    for (int i = 0; i < rank; ++i)
        if (!inside[i])
            out.push_back(i);
    return out;
}

Coweight add_coroot_combo(const GroupData& group, const Coweight& base, const std::vector<int>& gamma_m,
                          const RatVec& coeffs) {
    Coweight out = base;
    for (std::size_t j = 0; j < gamma_m.size(); ++j) {
        if (coeffs[j] == 0)
            continue;
        for (int i = 0; i < group.rank; ++i)
            out.pairings[i] += coeffs[j] * group.cartan.at(i, gamma_m[j]);
    }
    return out;
}

}  // namespace

AdmissibleSet AdmissibleSet::down_levi(const GroupData& group, std::vector<int> gamma_m, Coweight apex) {
    require_same_shape(group, apex, "down_levi");
    validate_subset(gamma_m, group.rank);
    if (!is_dominant(group, apex))
        throw DomainError("down_levi: apex must be dominant");
    return AdmissibleSet(Kind::DownLevi, std::move(gamma_m), std::move(apex));
}

AdmissibleSet AdmissibleSet::fiber(const GroupData& group, std::vector<int> gamma_m, Coweight mu) {
    require_same_shape(group, mu, "fiber");
    validate_subset(gamma_m, group.rank);
    for (int i : gamma_m)
        if (mu.pairings[i] != 0)
            throw DomainError("fiber: mu must pair to zero with the gamma_M simple roots");
    return AdmissibleSet(Kind::Fiber, std::move(gamma_m), std::move(mu));
}

AdmissibleSet AdmissibleSet::singleton(const GroupData& group, Coweight mu) {
    require_same_shape(group, mu, "singleton");
    if (!is_dominant(group, mu))
        throw DomainError("singleton: mu must be dominant");
    return AdmissibleSet(Kind::Singleton, {}, std::move(mu));
}

bool member(const GroupData& group, const AdmissibleSet& set, const Coweight& lam) {
    require_same_shape(group, lam, "member");
    switch (set.kind()) {
        case AdmissibleSet::Kind::DownLevi:
            return is_dominant(group, lam) && leq(group, set.gamma_m(), lam, set.base()).holds;
        case AdmissibleSet::Kind::Fiber:
            return is_dominant(group, lam) && face_projection(group, set.gamma_m(), lam) == set.base();
        case AdmissibleSet::Kind::Singleton:
            return lam == set.base();
    }
    return false;
}

namespace {

// Dominant fiber elements with the probed wall pairing <= 0, parameterized by
// the gamma_M coroot coefficients.
Certificate probe_fiber_wall(const GroupData& group, const std::vector<int>& gamma_m, const Coweight& mu,
                             int wall) {
    const int k = static_cast<int>(gamma_m.size());
    ConeProblem problem;
    problem.dimension = k;
    for (int i = 0; i < group.rank; ++i) {
        RatVec row(k);
        for (int j = 0; j < k; ++j)
            row[j] = group.cartan.at(i, gamma_m[j]);
        problem.add_at_least(row, -mu.pairings[i]);  // dominance of mu + sum t_j alpha_j
    }
    RatVec probe(k);
    for (int j = 0; j < k; ++j)
        probe[j] = -group.cartan.at(wall, gamma_m[j]);
    problem.add_at_least(std::move(probe), mu.pairings[wall]);  // wall pairing <= 0
    return cone_feasible(problem);
}

}  // namespace

AdmissibilityReport check_admissible(const GroupData& group, const AdmissibleSet& set,
                                     const std::vector<int>& gamma_m, long samples, std::uint64_t seed) {
    require_same_shape(group, set.base(), "check_admissible");
    validate_subset(gamma_m, group.rank);
    if (set.kind() != AdmissibleSet::Kind::Singleton && set.gamma_m() != gamma_m)
        throw DomainError("check_admissible: the set was built for a different Levi subset");

    AdmissibilityReport report;
    const auto off = complement(gamma_m, group.rank);

    // projection constancy: all three kinds describe subsets of a single
    // projection fiber; verify the projected base lies in the face
    {
        const Coweight projected = face_projection(group, gamma_m, set.base());
        ++report.checked;
        for (int i : gamma_m)
            if (projected.pairings[i] != 0)
                report.failures.push_back({"projection-constant", set.base()});
    }

    // strict positivity off gamma_M over the whole set
    switch (set.kind()) {
        case AdmissibleSet::Kind::Singleton: {
            ++report.checked;
            if (face_membership(group, gamma_m, set.base()) != FaceMembership::Regular)
                report.failures.push_back({"regularity", set.base()});
            break;
        }
        case AdmissibleSet::Kind::DownLevi: {
            // members are <=_M the apex, so their off-wall pairings dominate
            // the apex's; checking the apex is exact
            ++report.checked;
            for (int i : off)
                if (set.base().pairings[i] <= 0) {
                    report.failures.push_back({"regularity", set.base()});
                    break;
                }
            break;
        }
        case AdmissibleSet::Kind::Fiber: {
            for (int i : off) {
                ++report.checked;
                const Certificate probe = probe_fiber_wall(group, gamma_m, set.base(), i);
                if (probe.feasible) {
                    Coweight witness = add_coroot_combo(group, set.base(), gamma_m, probe.point);
                    report.failures.push_back({"regularity", std::move(witness)});
                }
            }
            break;
        }
    }

    // downward closure: analytic for the canonical kinds (transitivity of
    // <=_M resp. projection invariance); falsification-tested regardless
    Sampler sampler(seed);
    for (long n = 0; n < samples; ++n) {
        Coweight inside = set.base();
        if (set.kind() != AdmissibleSet::Kind::Singleton) {
            RatVec coeffs(gamma_m.size());
            for (auto& c : coeffs)
                c = set.kind() == AdmissibleSet::Kind::Fiber ? sampler.rational(4) : -sampler.nonneg_rational(4);
            const Coweight candidate = add_coroot_combo(group, set.base(), gamma_m, coeffs);
            if (is_dominant(group, candidate) && member(group, set, candidate))
                inside = candidate;
            else if (!is_dominant(group, inside))
                continue;  // empty fiber; nothing to sample
        }
        RatVec down(gamma_m.size());
        for (auto& c : down)
            c = -sampler.nonneg_rational(4);
        const Coweight lower = add_coroot_combo(group, inside, gamma_m, down);
        ++report.checked;
        if (is_dominant(group, lower) && !member(group, set, lower))
            report.failures.push_back({"downward-closure", lower});
    }
    return report;
}

std::vector<int> hn_parabolic(const GroupData& group, const Coweight& lam) {
    require_same_shape(group, lam, "hn_parabolic");
    if (!is_dominant(group, lam))
        throw DomainError("hn_parabolic: lam must be dominant");
    std::vector<int> gamma_m;
    for (int i = 0; i < group.rank; ++i)
        if (lam.pairings[i] == 0)
            gamma_m.push_back(i);
    return gamma_m;
}

CoveringSet covering_set(const GroupData& group, long genus, const Coweight& lam) {
    require_same_shape(group, lam, "covering_set");
    if (!is_dominant(group, lam))
        throw DomainError("covering_set: lam must be dominant");
    if (genus < 1)
        throw DomainError(
            "covering_set: genus 0 needs no covering certificates (every quasi-compact open is "
            "already co-truncative); genus >= 1 required");
    const Rat threshold = Rat(2 * genus - 2);
    std::vector<int> gamma_m;
    for (int i = 0; i < group.rank; ++i)
        if (lam.pairings[i] <= threshold)
            gamma_m.push_back(i);
    AdmissibleSet set = AdmissibleSet::down_levi(group, gamma_m, lam);
    return CoveringSet{std::move(gamma_m), std::move(set)};
}

ConeProblem empty_intersection_problem(const GroupData& group, const Coweight& theta, const Coweight& lam,
                                       const std::vector<int>& gamma_m) {
    require_same_shape(group, theta, "empty_intersection");
    require_same_shape(group, lam, "empty_intersection");
    validate_subset(gamma_m, group.rank);

    const int r = group.rank;
    const int zc = group.central_rank;
    const int k = static_cast<int>(gamma_m.size());
    // variables: pairings of lam', central of lam', full coroot coefficients
    // for theta - lam', gamma_M coroot coefficients for lam - lam'
    ConeProblem problem;
    problem.dimension = r + zc + r + k;
    const int central0 = r;
    const int coroot0 = r + zc;
    const int levi0 = r + zc + r;

    for (int i = 0; i < r; ++i) {
        RatVec row(problem.dimension);
        row[i] = 1;
        problem.add_at_least(std::move(row), Rat(0));  // lam' dominant
    }
    for (int j = 0; j < r; ++j) {
        RatVec row(problem.dimension);
        row[coroot0 + j] = 1;
        problem.add_at_least(std::move(row), Rat(0));
    }
    for (int j = 0; j < k; ++j) {
        RatVec row(problem.dimension);
        row[levi0 + j] = 1;
        problem.add_at_least(std::move(row), Rat(0));
    }
    for (int i = 0; i < r; ++i) {
        // theta - lam' equals the full coroot combination
        RatVec row(problem.dimension);
        row[i] = 1;
        for (int j = 0; j < r; ++j)
            row[coroot0 + j] = group.cartan.at(i, j);
        problem.add_equal(std::move(row), theta.pairings[i]);
    }
    for (int i = 0; i < r; ++i) {
        // lam - lam' equals the gamma_M coroot combination
        RatVec row(problem.dimension);
        row[i] = 1;
        for (int j = 0; j < k; ++j)
            row[levi0 + j] = group.cartan.at(i, gamma_m[j]);
        problem.add_equal(std::move(row), lam.pairings[i]);
    }
    for (int c = 0; c < zc; ++c) {
        RatVec row(problem.dimension);
        row[central0 + c] = 1;
        problem.add_equal(row, theta.central[c]);
        problem.add_equal(std::move(row), lam.central[c]);
    }
    return problem;
}

Certificate empty_intersection(const GroupData& group, const Coweight& theta, const Coweight& lam,
                               const std::vector<int>& gamma_m) {
    return cone_feasible(empty_intersection_problem(group, theta, lam, gamma_m));
}

Coweight coweight_from_point(const GroupData& group, const RatVec& point) {
    if (static_cast<int>(point.size()) < group.dim())
        throw DomainError("coweight_from_point: point too short");
    Coweight cw = zero_coweight(group);
    for (int i = 0; i < group.rank; ++i)
        cw.pairings[i] = point[i];
    for (int c = 0; c < group.central_rank; ++c)
        cw.central[c] = point[group.rank + c];
    return cw;
}

CoverReport check_theorem_cover(const GroupData& group, long genus, const Coweight& theta, long samples,
                                std::uint64_t seed) {
    require_same_shape(group, theta, "check_theorem_cover");
    if (!is_dominant(group, theta))
        throw DomainError("check_theorem_cover: theta must be dominant");
    if (genus < 1)
        throw DomainError(
            "check_theorem_cover: genus 0 needs no covering certificates (every quasi-compact open "
            "is already co-truncative); genus >= 1 required");
    const Rat threshold = Rat(2 * genus - 2);
    for (int i = 0; i < group.rank; ++i)
        if (theta.pairings[i] < threshold)
            throw DomainError("check_theorem_cover: depth condition fails at simple root " + std::to_string(i + 1) +
                              " (pairing " + rat_to_string(theta.pairings[i]) + " < " + rat_to_string(threshold) +
                              ")");

    CoverReport report;
    report.requested = samples;
    Sampler sampler(seed);
    for (long n = 0; n < samples; ++n) {
        Coweight lam = sampler.dominant(group);
        lam.central = theta.central;  // stay in theta's component
        if (leq_full(group, lam, theta).holds) {
            ++report.skipped;
            continue;
        }
        ++report.checked;
        const CoveringSet cover = covering_set(group, genus, lam);

        if (!member(group, cover.set, lam)) {
            report.failures.push_back({lam, "lambda-in-set", lam});
            continue;
        }
        bool deep = true;
        for (int i : complement(cover.gamma_m, group.rank))
            if (lam.pairings[i] <= threshold) {
                deep = false;
                break;
            }
        if (!deep) {
            report.failures.push_back({lam, "depth", lam});
            continue;
        }
        const AdmissibilityReport adm = check_admissible(group, cover.set, cover.gamma_m, 8, sampler.raw());
        if (!adm.admissible()) {
            report.failures.push_back({lam, "admissible", adm.failures.front().witness});
            continue;
        }
        const ConeProblem problem = empty_intersection_problem(group, theta, lam, cover.gamma_m);
        const Certificate cert = cone_feasible(problem);
        if (cert.feasible) {
            report.failures.push_back({lam, "emptiness", coweight_from_point(group, cert.point)});
            continue;
        }
        if (!verify_certificate(problem, cert))
            report.failures.push_back({lam, "certificate", lam});
    }
    return report;
}

std::pair<StratumIndex, AdmissibleSet> eta_stratum(const GroupData& group, const Coweight& eta,
                                                   const Coweight& lam) {
    require_same_shape(group, eta, "eta_stratum");
    require_same_shape(group, lam, "eta_stratum");
    if (!is_dominant(group, eta))
        throw DomainError("eta_stratum: eta must be dominant");
    const Coweight shifted = lam - eta;
    if (!is_dominant(group, shifted))
        throw DomainError("eta_stratum: lam must lie in eta + dominant cone");
    std::vector<int> gamma_m;
    for (int i = 0; i < group.rank; ++i)
        if (shifted.pairings[i] == 0)
            gamma_m.push_back(i);
    AdmissibleSet set = AdmissibleSet::down_levi(group, gamma_m, lam);
    return {StratumIndex{lam, std::move(gamma_m)}, std::move(set)};
}

namespace {

struct CandidateOrder {
    bool operator()(const Coweight& a, const Coweight& b) const {
        if (a.pairings != b.pairings)
            return a.pairings < b.pairings;
        return a.central < b.central;
    }
};

}  // namespace

std::vector<StratumIndex> enumerate_candidates(const GroupData& group, const Coweight& theta) {
    require_same_shape(group, theta, "enumerate_candidates");
    if (!is_dominant(group, theta))
        throw DomainError("enumerate_candidates: theta must be dominant");
    if (group.rank > 4)
        throw DomainError("enumerate_candidates: supported up to semisimple rank 4");

    const int r = group.rank;
    const int zc = group.central_rank;
    std::map<Coweight, std::vector<int>, CandidateOrder> found;

    for (unsigned mask = 0; mask < (1u << r); ++mask) {
        std::vector<int> gamma_m;
        for (int i = 0; i < r; ++i)
            if (mask & (1u << i))
                gamma_m.push_back(i);
        const auto off = complement(gamma_m, r);
        const int d = static_cast<int>(off.size()) + zc;

        // basis of the projected coweight lattice in face coordinates
        // (pairings off gamma_M, then central)
        RatMatrix generators(d, group.dim());
        for (int col = 0; col < group.dim(); ++col) {
            Coweight basis_vector = zero_coweight(group);
            for (int i = 0; i < r; ++i)
                basis_vector.pairings[i] = group.lattice_basis.at(i, col);
            for (int c = 0; c < zc; ++c)
                basis_vector.central[c] = group.lattice_basis.at(r + c, col);
            const Coweight projected = face_projection(group, gamma_m, basis_vector);
            for (std::size_t q = 0; q < off.size(); ++q)
                generators.at(static_cast<int>(q), col) = projected.pairings[off[q]];
            for (int c = 0; c < zc; ++c)
                generators.at(static_cast<int>(off.size()) + c, col) = projected.central[c];
        }
        auto basis = lattice_basis_from_generators(generators);
        if (!basis)
            throw DomainError("enumerate_candidates: degenerate projected lattice");

        // relaxation of { mu in the regular face, mu <=_G theta } in integer
        // lattice coordinates n: face pairings >= 0, central pinned, and the
        // solved full-coroot coefficients of theta - mu nonnegative
        ConeProblem relax;
        relax.dimension = d;
        for (std::size_t q = 0; q < off.size(); ++q) {
            RatVec row(d);
            for (int s = 0; s < d; ++s)
                row[s] = basis->at(static_cast<int>(q), s);
            relax.add_at_least(std::move(row), Rat(0));
        }
        for (int c = 0; c < zc; ++c) {
            RatVec row(d);
            for (int s = 0; s < d; ++s)
                row[s] = basis->at(static_cast<int>(off.size()) + c, s);
            relax.add_equal(std::move(row), theta.central[c]);
        }
        for (int j = 0; j < r; ++j) {
            RatVec row(d, Rat(0));
            Rat rhs = 0;
            for (int m = 0; m < r; ++m)
                rhs -= group.cartan_inverse.at(j, m) * theta.pairings[m];
            for (std::size_t q = 0; q < off.size(); ++q) {
                const Rat weight = group.cartan_inverse.at(j, off[q]);
                for (int s = 0; s < d; ++s)
                    row[s] -= weight * basis->at(static_cast<int>(q), s);
            }
            relax.add_at_least(std::move(row), std::move(rhs));
        }

        std::vector<Int> lo(d), hi(d);
        bool empty_region = false;
        for (int v = 0; v < d; ++v) {
            const VariableBounds bounds = variable_bounds(relax, v);
            if (!bounds.feasible) {
                empty_region = true;
                break;
            }
            if (!bounds.lower || !bounds.upper)
                throw DomainError("enumerate_candidates: unbounded candidate region");
            lo[v] = rat_ceil(*bounds.lower);
            hi[v] = rat_floor(*bounds.upper);
            if (hi[v] < lo[v]) {
                empty_region = true;
                break;
            }
        }
        if (empty_region)
            continue;

        std::vector<Int> n(d);
        for (int v = 0; v < d; ++v)
            n[v] = lo[v];
        while (true) {
            // face coordinates of the lattice point
            RatVec face(d, Rat(0));
            for (int row = 0; row < d; ++row)
                for (int s = 0; s < d; ++s)
                    face[row] += basis->at(row, s) * Rat(n[s]);

            Coweight mu = zero_coweight(group);
            for (std::size_t q = 0; q < off.size(); ++q)
                mu.pairings[off[q]] = face[q];
            for (int c = 0; c < zc; ++c)
                mu.central[c] = face[off.size() + c];

            bool keep = mu.central == theta.central;
            for (std::size_t q = 0; keep && q < off.size(); ++q)
                if (mu.pairings[off[q]] <= 0)
                    keep = false;
            if (keep && !leq_full(group, mu, theta).holds)
                keep = false;
            if (keep)
                found.emplace(std::move(mu), gamma_m);

            int v = 0;
            while (v < d && n[v] == hi[v]) {
                n[v] = lo[v];
                ++v;
            }
            if (v == d)
                break;  // d == 0 visits the single origin point once
            ++n[v];
        }
    }

    std::vector<StratumIndex> out;
    out.reserve(found.size());
    for (auto& [mu, gamma_m] : found)
        out.push_back(StratumIndex{mu, gamma_m});
    return out;
}

}  // namespace hncomb
