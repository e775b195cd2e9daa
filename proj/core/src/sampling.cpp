#include "hncomb/sampling.hpp"

#include "hncomb/errors.hpp"

namespace hncomb {

namespace {
constexpr long kDenominators[] = {1, 2, 3, 4, 6};
}

long Sampler::integer(long lo, long hi) {
    if (hi < lo)
        throw DomainError("Sampler::integer: empty range");
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(engine_() % span);
}

Rat Sampler::rational(long max_numerator) {
    const long num = integer(-max_numerator, max_numerator);
    const long den = kDenominators[integer(0, 4)];
    return Rat(num, den);
}

Rat Sampler::nonneg_rational(long max_numerator) {
    const long num = integer(0, max_numerator);
    const long den = kDenominators[integer(0, 4)];
    return Rat(num, den);
}

Coweight Sampler::coweight(const GroupData& group, long max_numerator) {
    Coweight cw = zero_coweight(group);
    for (auto& p : cw.pairings)
        p = rational(max_numerator);
    for (auto& c : cw.central)
        c = rational(max_numerator);
    return cw;
}

Coweight Sampler::dominant(const GroupData& group, long max_numerator) {
    Coweight cw = zero_coweight(group);
    for (auto& p : cw.pairings)
        p = nonneg_rational(max_numerator);
    for (auto& c : cw.central)
        c = rational(max_numerator);
    return cw;
}

Coweight Sampler::nonneg_coroot_combo(const GroupData& group, const std::vector<int>& gamma_m, long max_numerator) {
    validate_subset(gamma_m, group.rank);
    Coweight combo = zero_coweight(group);
    for (int j : gamma_m) {
        const Rat coeff = nonneg_rational(max_numerator);
        if (coeff == 0)
            continue;
        for (int i = 0; i < group.rank; ++i)
            combo.pairings[i] += coeff * group.cartan.at(i, j);
    }
    return combo;
}

std::vector<int> Sampler::subset(int rank) {
    std::vector<int> out;
    for (int i = 0; i < rank; ++i)
        if (engine_() & 1u)
            out.push_back(i);
    return out;
}

}  // namespace hncomb
