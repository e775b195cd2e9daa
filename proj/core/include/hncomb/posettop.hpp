#pragma once

#include "hncomb/rootdata.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hncomb {

// Finite preordered set. The attached topology declares a set open when it is
// downward closed; this is the only convention offered, to keep signs out of
// the way.
class FinitePoset {
  public:
    FinitePoset(std::vector<std::string> elements, std::vector<std::vector<bool>> leq);

    int size() const { return static_cast<int>(elements_.size()); }
    const std::vector<std::string>& elements() const { return elements_; }
    bool leq(int a, int b) const { return leq_[a][b]; }

    int index_of(const std::string& name) const;  // -1 when absent

  private:
    std::vector<std::string> elements_;
    std::vector<std::vector<bool>> leq_;
};

enum class TopClass { Open, Closed, Clopen, LocallyClosed, None };

std::string top_class_name(TopClass cls);

/// Classifies a subset: downward closed means open, upward closed means
/// closed, both means clopen; locally closed (order-interval condition) is
/// reported only when the set is neither open nor closed.
TopClass classify_finite(const FinitePoset& poset, const std::vector<bool>& subset);

/// True iff the map is monotone; equivalently, preimages of open sets are
/// open. Both are computed and must agree.
bool is_monotone_map_continuous(const FinitePoset& source, const FinitePoset& target, const std::vector<int>& map);

// Description of a subset of the dominant cone under the dominance preorder.
struct SetDescription {
    enum class Kind { DownClosure, UpClosure, IntervalUnion, Explicit };

    Kind kind;
    std::vector<Coweight> generators;                      // down/up/explicit
    std::vector<std::pair<Coweight, Coweight>> intervals;  // interval union

    static SetDescription down_closure(std::vector<Coweight> generators);
    static SetDescription up_closure(std::vector<Coweight> generators);
    static SetDescription interval_union(std::vector<std::pair<Coweight, Coweight>> intervals);
    static SetDescription explicit_set(std::vector<Coweight> points);
};

struct ConeClassification {
    TopClass cls;
    std::string method;
};

/// Classifies described subsets of the dominant cone. Down-closures are open
/// and up-closures closed by construction. Interval unions are locally closed
/// when the intervals cohere pairwise (exact check). Explicit finite sets use
/// an exact emptiness test of the strictly-below region for openness and
/// sampled intermediate points for the interval condition, so a "locally
/// closed" verdict on the explicit path is evidence, not proof.
ConeClassification classify_cone(const GroupData& group, const SetDescription& description,
                                 std::uint64_t seed = 0, long samples = 64);

}  // namespace hncomb
