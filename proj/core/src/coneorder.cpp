#include "hncomb/coneorder.hpp"

#include "hncomb/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hncomb {

RatVec solve_levi_system(const GroupData& group, const std::vector<int>& gamma_m, const RatVec& rhs_on_subset) {
    const int k = static_cast<int>(gamma_m.size());
    if (static_cast<int>(rhs_on_subset.size()) != k)
        throw DomainError("solve_levi_system: rhs does not match the subset");
    if (k == 0)
        return {};
    RatMatrix sub(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            sub.at(i, j) = group.cartan.at(gamma_m[i], gamma_m[j]);
    auto solution = solve_linear(sub, rhs_on_subset);
    if (!solution)
        throw DomainError("singular Levi Cartan subsystem");  // excluded by root-datum validity
    return *solution;
}

LeqResult leq(const GroupData& group, const std::vector<int>& gamma_m, const Coweight& a, const Coweight& b) {
    require_same_shape(group, a, "leq");
    require_same_shape(group, b, "leq");
    validate_subset(gamma_m, group.rank);

    const Coweight diff = b - a;
    for (const Rat& c : diff.central)
        if (c != 0)
            return {};

    RatVec rhs(gamma_m.size());
    for (std::size_t i = 0; i < gamma_m.size(); ++i)
        rhs[i] = diff.pairings[gamma_m[i]];
    RatVec coeffs = solve_levi_system(group, gamma_m, rhs);

    // the candidate coroot combination must reproduce diff on all of Gamma
    for (int i = 0; i < group.rank; ++i) {
        Rat acc = 0;
        for (std::size_t j = 0; j < gamma_m.size(); ++j)
            acc += group.cartan.at(i, gamma_m[j]) * coeffs[j];
        if (acc != diff.pairings[i])
            return {};
    }
    for (const Rat& c : coeffs)
        if (c < 0)
            return {};
    return LeqResult{true, std::move(coeffs)};
}

LeqResult leq_full(const GroupData& group, const Coweight& a, const Coweight& b) {
    std::vector<int> full(group.rank);
    for (int i = 0; i < group.rank; ++i)
        full[i] = i;
    return leq(group, full, a, b);
}

bool is_dominant(const GroupData& group, const Coweight& cw) {
    require_same_shape(group, cw, "is_dominant");
    for (const Rat& p : cw.pairings)
        if (p < 0)
            return false;
    return true;
}

Coweight face_projection(const GroupData& group, const std::vector<int>& gamma_m, const Coweight& cw) {
    require_same_shape(group, cw, "face_projection");
    validate_subset(gamma_m, group.rank);
    RatVec rhs(gamma_m.size());
    for (std::size_t i = 0; i < gamma_m.size(); ++i)
        rhs[i] = cw.pairings[gamma_m[i]];
    const RatVec coeffs = solve_levi_system(group, gamma_m, rhs);
    Coweight out = cw;
    for (int i = 0; i < group.rank; ++i) {
        Rat acc = 0;
        for (std::size_t j = 0; j < gamma_m.size(); ++j)
            acc += group.cartan.at(i, gamma_m[j]) * coeffs[j];
        out.pairings[i] -= acc;
    }
    return out;
}

FaceMembership face_membership(const GroupData& group, const std::vector<int>& gamma_m, const Coweight& cw) {
    require_same_shape(group, cw, "face_membership");
    validate_subset(gamma_m, group.rank);
    std::vector<bool> inside(group.rank, false);
    for (int i : gamma_m)
        inside[i] = true;
    for (int i : gamma_m)
        if (cw.pairings[i] != 0)
            return FaceMembership::None;
    bool all_nonneg = true, all_positive = true;
    for (int i = 0; i < group.rank; ++i) {
        if (inside[i])
            continue;
        if (cw.pairings[i] < 0)
            all_nonneg = false;
        if (cw.pairings[i] <= 0)
            all_positive = false;
    }
    if (all_positive)
        return FaceMembership::Regular;
    if (all_nonneg)
        return FaceMembership::Dominant;
    return FaceMembership::Linear;
}

void ConeProblem::add_equal(RatVec row, Rat rhs) {
    if (static_cast<int>(row.size()) != dimension)
        throw DomainError("constraint row does not match the problem dimension");
    equalities.emplace_back(std::move(row), std::move(rhs));
}

void ConeProblem::add_at_least(RatVec row, Rat rhs) {
    if (static_cast<int>(row.size()) != dimension)
        throw DomainError("constraint row does not match the problem dimension");
    inequalities.emplace_back(std::move(row), std::move(rhs));
}

namespace {

// A derived inequality a.x >= b together with the combination of the original
// constraints that produced it: nonnegative multipliers over the problem's
// inequalities, signed multipliers over its equalities.
struct WorkRow {
    RatVec a;
    Rat b;
    RatVec ineq_mult;
    RatVec eq_mult;
};

void scale_row(WorkRow& row, const Rat& factor) {
    for (auto& v : row.a)
        v *= factor;
    row.b *= factor;
    for (auto& v : row.ineq_mult)
        v *= factor;
    for (auto& v : row.eq_mult)
        v *= factor;
}

// scale by a positive rational so the direction vector is a primitive integer
// vector; parallel constraints then share the same direction key
void normalize_row(WorkRow& row) {
    Int lcm = 1;
    for (const auto& v : row.a) {
        const Int den = denominator(v);
        lcm = lcm / gcd(lcm, den) * den;
    }
    Int common = 0;
    for (const auto& v : row.a)
        common = gcd(common, numerator(Rat(v * lcm)));
    if (common == 0)
        return;  // zero direction; nothing to normalize
    scale_row(row, Rat(lcm, common));
}

std::string direction_key(const RatVec& a) {
    std::ostringstream out;
    for (const auto& v : a)
        out << rat_to_string(v) << '|';
    return out.str();
}

WorkRow combine(const WorkRow& lower, const WorkRow& upper, int var) {
    // lower has a[var] > 0, upper has a[var] < 0; the combination removes var
    const Rat lower_mult = -upper.a[var];
    const Rat upper_mult = lower.a[var];
    WorkRow out;
    const std::size_t n = lower.a.size();
    out.a.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        out.a[i] = lower_mult * lower.a[i] + upper_mult * upper.a[i];
    out.a[var] = 0;
    out.b = lower_mult * lower.b + upper_mult * upper.b;
    out.ineq_mult.resize(lower.ineq_mult.size());
    for (std::size_t i = 0; i < out.ineq_mult.size(); ++i)
        out.ineq_mult[i] = lower_mult * lower.ineq_mult[i] + upper_mult * upper.ineq_mult[i];
    out.eq_mult.resize(lower.eq_mult.size());
    for (std::size_t i = 0; i < out.eq_mult.size(); ++i)
        out.eq_mult[i] = lower_mult * lower.eq_mult[i] + upper_mult * upper.eq_mult[i];
    return out;
}

RatVec expanded_farkas(const WorkRow& row, std::size_t eq_count, std::size_t ineq_count, bool flip) {
    const Rat sign = flip ? Rat(-1) : Rat(1);
    RatVec farkas(2 * eq_count + ineq_count);
    for (std::size_t j = 0; j < eq_count; ++j) {
        const Rat w = sign * row.eq_mult[j];
        if (w > 0)
            farkas[2 * j] = w;
        else
            farkas[2 * j + 1] = -w;
    }
    for (std::size_t i = 0; i < ineq_count; ++i)
        farkas[2 * eq_count + i] = sign * row.ineq_mult[i];
    return farkas;
}

struct EliminationLevel {
    int var;
    std::vector<WorkRow> lowers;  // a[var] > 0
    std::vector<WorkRow> uppers;  // a[var] < 0
};

struct Pipeline {
    std::size_t eq_count = 0;
    std::size_t ineq_count = 0;
    std::vector<WorkRow> rows;
    std::vector<std::pair<int, WorkRow>> eq_pivots;  // Gauss order
    std::vector<EliminationLevel> levels;
    std::optional<Certificate> early;  // set when infeasibility is detected

    void load(const ConeProblem& problem, bool use_equalities);
    void eliminate_equalities(const ConeProblem& problem);
    void run_fm(const std::vector<bool>& keep);
    RatVec reconstruct_point(int dimension) const;
};

void Pipeline::load(const ConeProblem& problem, bool use_equalities) {
    eq_count = problem.equalities.size();
    ineq_count = problem.inequalities.size();
    rows.reserve(ineq_count + (use_equalities ? 0 : 2 * eq_count));
    for (std::size_t i = 0; i < ineq_count; ++i) {
        WorkRow row{problem.inequalities[i].first, problem.inequalities[i].second, RatVec(ineq_count),
                    RatVec(eq_count)};
        row.ineq_mult[i] = 1;
        rows.push_back(std::move(row));
    }
    if (!use_equalities) {
        // represent each equality by its two one-sided rows
        for (std::size_t j = 0; j < eq_count; ++j) {
            WorkRow ge{problem.equalities[j].first, problem.equalities[j].second, RatVec(ineq_count),
                       RatVec(eq_count)};
            ge.eq_mult[j] = 1;
            rows.push_back(ge);
            WorkRow le = ge;
            scale_row(le, Rat(-1));
            rows.push_back(std::move(le));
        }
    }
}

void Pipeline::eliminate_equalities(const ConeProblem& problem) {
    std::vector<WorkRow> pending;
    pending.reserve(eq_count);
    for (std::size_t j = 0; j < eq_count; ++j) {
        WorkRow row{problem.equalities[j].first, problem.equalities[j].second, RatVec(ineq_count), RatVec(eq_count)};
        row.eq_mult[j] = 1;
        pending.push_back(std::move(row));
    }
    for (std::size_t k = 0; k < pending.size(); ++k) {
        WorkRow& eq = pending[k];
        int pivot = -1;
        for (std::size_t v = 0; v < eq.a.size(); ++v)
            if (eq.a[v] != 0) {
                pivot = static_cast<int>(v);
                break;
            }
        if (pivot < 0) {
            if (eq.b != 0) {
                Certificate cert;
                cert.feasible = false;
                cert.farkas = expanded_farkas(eq, eq_count, ineq_count, eq.b < 0);
                early = cert;
                return;
            }
            continue;  // redundant 0 = 0
        }
        auto substitute = [&](WorkRow& target) {
            if (target.a[pivot] == 0)
                return;
            const Rat factor = target.a[pivot] / eq.a[pivot];
            for (std::size_t v = 0; v < target.a.size(); ++v)
                target.a[v] -= factor * eq.a[v];
            target.a[pivot] = 0;
            target.b -= factor * eq.b;
            for (std::size_t v = 0; v < eq_count; ++v)
                target.eq_mult[v] -= factor * eq.eq_mult[v];
        };
        for (std::size_t other = k + 1; other < pending.size(); ++other)
            substitute(pending[other]);
        for (auto& row : rows)
            substitute(row);
        eq_pivots.emplace_back(pivot, eq);
    }
}

// Fourier-Motzkin elimination of every variable not marked in `keep`.
void Pipeline::run_fm(const std::vector<bool>& keep) {
    const int dimension = static_cast<int>(keep.size());
    std::vector<bool> active(dimension, true);
    for (const auto& [pivot, row] : eq_pivots)
        active[pivot] = false;

    auto compact = [&]() -> bool {
        std::vector<WorkRow> next;
        std::map<std::string, std::size_t> by_direction;
        for (auto& row : rows) {
            bool zero = true;
            for (const auto& v : row.a)
                if (v != 0) {
                    zero = false;
                    break;
                }
            if (zero) {
                if (row.b > 0) {
                    Certificate cert;
                    cert.feasible = false;
                    cert.farkas = expanded_farkas(row, eq_count, ineq_count, false);
                    early = cert;
                    return false;
                }
                continue;  // trivially satisfied
            }
            normalize_row(row);
            const std::string key = direction_key(row.a);
            auto it = by_direction.find(key);
            if (it == by_direction.end()) {
                by_direction.emplace(key, next.size());
                next.push_back(std::move(row));
            } else if (row.b > next[it->second].b) {
                next[it->second] = std::move(row);  // keep the tighter of parallel rows
            }
        }
        rows = std::move(next);
        return true;
    };

    if (!compact())
        return;
    while (true) {
        // pick the active variable with the fewest lower*upper combinations
        int best_var = -1;
        long best_cost = 0;
        for (int v = 0; v < dimension; ++v) {
            if (!active[v] || keep[v])
                continue;
            long lowers = 0, uppers = 0, any = 0;
            for (const auto& row : rows) {
                if (row.a[v] > 0)
                    ++lowers;
                else if (row.a[v] < 0)
                    ++uppers;
            }
            any = lowers + uppers;
            const long cost = lowers * uppers;
            if (best_var < 0 || cost < best_cost || (cost == best_cost && any > 0)) {
                best_var = v;
                best_cost = cost;
            }
        }
        if (best_var < 0)
            break;
        active[best_var] = false;

        EliminationLevel level;
        level.var = best_var;
        std::vector<WorkRow> untouched;
        for (auto& row : rows) {
            if (row.a[best_var] > 0)
                level.lowers.push_back(std::move(row));
            else if (row.a[best_var] < 0)
                level.uppers.push_back(std::move(row));
            else
                untouched.push_back(std::move(row));
        }
        rows = std::move(untouched);
        for (const auto& lower : level.lowers)
            for (const auto& upper : level.uppers)
                rows.push_back(combine(lower, upper, best_var));
        levels.push_back(std::move(level));
        if (!compact())
            return;
    }
}

RatVec Pipeline::reconstruct_point(int dimension) const {
    RatVec x(dimension, Rat(0));
    // explicit return type: expression templates must not outlive acc
    auto residual = [&](const WorkRow& row, int var) -> Rat {
        Rat acc = row.b;
        for (int v = 0; v < dimension; ++v)
            if (v != var && row.a[v] != 0)
                acc -= row.a[v] * x[v];
        return Rat(acc / row.a[var]);
    };
    for (auto level = levels.rbegin(); level != levels.rend(); ++level) {
        std::optional<Rat> lo, hi;
        for (const auto& row : level->lowers) {
            const Rat bound = residual(row, level->var);
            if (!lo || bound > *lo)
                lo = bound;
        }
        for (const auto& row : level->uppers) {
            const Rat bound = residual(row, level->var);
            if (!hi || bound < *hi)
                hi = bound;
        }
        Rat value = 0;
        if (lo && *lo > 0)
            value = *lo;
        if (hi && *hi < value)
            value = *hi;
        x[level->var] = value;
    }
    // equality pivots, in reverse Gauss order
    for (auto it = eq_pivots.rbegin(); it != eq_pivots.rend(); ++it)
        x[it->first] = residual(it->second, it->first);
    return x;
}

}  // namespace

Certificate cone_feasible(const ConeProblem& problem) {
    Pipeline pipe;
    pipe.load(problem, /*use_equalities=*/true);
    pipe.eliminate_equalities(problem);
    if (pipe.early)
        return *pipe.early;
    pipe.run_fm(std::vector<bool>(problem.dimension, false));
    if (pipe.early)
        return *pipe.early;
    Certificate cert;
    cert.feasible = true;
    cert.point = pipe.reconstruct_point(problem.dimension);
    return cert;
}

bool verify_certificate(const ConeProblem& problem, const Certificate& cert) {
    const std::size_t eq_count = problem.equalities.size();
    const std::size_t ineq_count = problem.inequalities.size();
    if (cert.feasible) {
        if (static_cast<int>(cert.point.size()) != problem.dimension)
            return false;
        auto dot = [&](const RatVec& row) {
            Rat acc = 0;
            for (int v = 0; v < problem.dimension; ++v)
                acc += row[v] * cert.point[v];
            return acc;
        };
        for (const auto& [row, rhs] : problem.equalities)
            if (dot(row) != rhs)
                return false;
        for (const auto& [row, rhs] : problem.inequalities)
            if (dot(row) < rhs)
                return false;
        return true;
    }
    if (cert.farkas.size() != 2 * eq_count + ineq_count)
        return false;
    for (const auto& y : cert.farkas)
        if (y < 0)
            return false;
    RatVec total(problem.dimension, Rat(0));
    Rat total_rhs = 0;
    auto accumulate = [&](const RatVec& row, const Rat& rhs, const Rat& mult) {
        if (mult == 0)
            return;
        for (int v = 0; v < problem.dimension; ++v)
            total[v] += mult * row[v];
        total_rhs += mult * rhs;
    };
    for (std::size_t j = 0; j < eq_count; ++j) {
        accumulate(problem.equalities[j].first, problem.equalities[j].second, cert.farkas[2 * j]);
        RatVec negated = problem.equalities[j].first;
        for (auto& v : negated)
            v = -v;
        accumulate(negated, -problem.equalities[j].second, cert.farkas[2 * j + 1]);
    }
    for (std::size_t i = 0; i < ineq_count; ++i)
        accumulate(problem.inequalities[i].first, problem.inequalities[i].second, cert.farkas[2 * eq_count + i]);
    for (const auto& v : total)
        if (v != 0)
            return false;
    return total_rhs > 0;
}

VariableBounds variable_bounds(const ConeProblem& problem, int variable) {
    if (variable < 0 || variable >= problem.dimension)
        throw DomainError("variable_bounds: index out of range");
    Pipeline pipe;
    // equalities enter as inequality pairs so the tracked variable survives
    pipe.load(problem, /*use_equalities=*/false);
    std::vector<bool> keep(problem.dimension, false);
    keep[variable] = true;
    pipe.run_fm(keep);
    if (pipe.early)
        return VariableBounds{false, std::nullopt, std::nullopt};
    VariableBounds bounds;
    bounds.feasible = true;
    for (const auto& row : pipe.rows) {
        const Rat& c = row.a[variable];
        if (c > 0) {
            const Rat bound = row.b / c;
            if (!bounds.lower || bound > *bounds.lower)
                bounds.lower = bound;
        } else if (c < 0) {
            const Rat bound = row.b / c;
            if (!bounds.upper || bound < *bounds.upper)
                bounds.upper = bound;
        }
    }
    return bounds;
}

}  // namespace hncomb
