#pragma once

#include "hncomb/rootdata.hpp"

#include <cstdint>
#include <random>

namespace hncomb {

// Seeded generator for random rational coweights. Numerators are uniform in
// [-N, N] (or [0, N] for the nonnegative variants), denominators drawn from
// {1, 2, 3, 4, 6} to exercise walls and the denominators produced by Cartan
// inverses. All draws go through the raw engine so results are stable across
// standard library implementations.
class Sampler {
  public:
    explicit Sampler(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t raw() { return engine_(); }

    long integer(long lo, long hi);  // uniform-ish in [lo, hi]

    Rat rational(long max_numerator = 12);
    Rat nonneg_rational(long max_numerator = 12);

    Coweight coweight(const GroupData& group, long max_numerator = 12);
    Coweight dominant(const GroupData& group, long max_numerator = 12);

    /// Random nonnegative combination of the gamma_M simple coroots.
    Coweight nonneg_coroot_combo(const GroupData& group, const std::vector<int>& gamma_m, long max_numerator = 6);

    std::vector<int> subset(int rank);

  private:
    std::mt19937_64 engine_;
};

}  // namespace hncomb
