#pragma once

#include "hncomb/linalg.hpp"
#include "hncomb/rational.hpp"

#include <string>
#include <vector>

namespace hncomb {

enum class SimpleType : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct Factor {
    SimpleType type;
    int rank;
};

enum class Isogeny { SimplyConnected, Adjoint };

// Textual grammar:  spec := factor ("x" factor)* (" " isogeny)? ("+Z" int)?
//                   factor := letter in {A..G} followed by the rank
//                   isogeny := "sc" | "ad"           (default "sc")
struct GroupSpec {
    std::vector<Factor> factors;
    Isogeny isogeny = Isogeny::SimplyConnected;
    int central_rank = 0;

    int semisimple_rank() const;
    std::string to_string() const;
};

GroupSpec parse_group_spec(const std::string& text);

// A rational coweight in internal coordinates: entry i of `pairings` is the
// value of the coweight on the i-th simple root; `central` holds the
// coordinates along the central torus directions.
struct Coweight {
    RatVec pairings;
    RatVec central;

    bool operator==(const Coweight& other) const = default;
};

Coweight operator+(const Coweight& a, const Coweight& b);
Coweight operator-(const Coweight& a, const Coweight& b);
Coweight operator*(const Rat& scalar, const Coweight& cw);

// A root written in the basis of simple roots: coefs[i] is the coefficient of
// the i-th simple root. Either all coefficients are >= 0 (positive root) or
// all are <= 0.
struct Root {
    std::vector<int> coefs;

    bool is_positive() const;
    bool is_simple() const;
    Root negated() const;
    int height() const;

    bool operator==(const Root& other) const = default;
};

struct GroupData {
    GroupSpec spec;
    int rank = 0;          // semisimple rank, |Gamma|
    int central_rank = 0;
    RatMatrix cartan;          // cartan(i, j) = value of simple root i on simple coroot j
    RatMatrix cartan_inverse;  // rank = 0 gives the empty matrix
    RatMatrix lattice_basis;   // columns = integral basis of the coweight lattice

    int dim() const { return rank + central_rank; }
};

GroupData build_group(const GroupSpec& spec);

/// Full root set, closed under negation, generated from the simple roots by
/// closure under simple reflections. Sorted: positive roots by height then
/// lexicographically, then the negatives in matching order.
std::vector<Root> enumerate_roots(const GroupData& group);

/// Roots supported on the sub-diagram gamma_M, i.e. the root system of the
/// standard Levi attached to gamma_M.
std::vector<Root> levi_roots(const GroupData& group, const std::vector<int>& gamma_m);

/// Closed-form count of roots per simple type; used to validate enumeration.
long expected_root_count(SimpleType type, int rank);

Coweight zero_coweight(const GroupData& group);
Coweight simple_coroot(const GroupData& group, int index);

/// Value of the coweight on the (possibly non-simple) root: the coefficient
/// expansion of the root makes this a plain dot product with the pairings.
Rat pair_with_root(const Coweight& cw, const Root& root);

/// Literal form "p,p,...;c,c,..." with exact rationals; the central block and
/// the semicolon are omitted/optional when central_rank is zero.
Coweight parse_coweight(const std::string& text, const GroupData& group);
std::string coweight_to_string(const Coweight& cw);

/// Subsets of Gamma are sorted 0-based index vectors internally; the textual
/// form ("1,3") is 1-based.
std::vector<int> parse_subset(const std::string& text, int rank);
std::string subset_to_string(const std::vector<int>& subset);
void validate_subset(const std::vector<int>& subset, int rank);

void require_same_shape(const GroupData& group, const Coweight& cw, const char* where);

}  // namespace hncomb
