#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"
#include "hncomb/errors.hpp"
#include "hncomb/serialize.hpp"
#include "hncomb/vanishing.hpp"

#include <set>

using namespace hncomb;
using namespace hncomb::testing;

namespace {

std::set<std::vector<int>> coef_set(const std::vector<Root>& roots) {
    std::set<std::vector<int>> out;
    for (const auto& r : roots)
        out.insert(r.coefs);
    return out;
}

}  // namespace

TEST_CASE("root space blocks") {
    auto a2 = make_group("A2");

    // empty Levi: each block is the root alone
    auto lone = root_module(a2, {}, Root{{0, 1}});
    CHECK(coef_set(lone.members) == std::set<std::vector<int>>{{0, 1}});

    auto block = root_module(a2, sub(a2, "1"), Root{{0, 1}});
    CHECK(coef_set(block.members) == std::set<std::vector<int>>{{0, 1}, {1, 1}});
    // a different representative of the same class gives the same block
    auto same = root_module(a2, sub(a2, "1"), Root{{1, 1}});
    CHECK(coef_set(same.members) == coef_set(block.members));

    CHECK_THROWS_AS(root_module(a2, sub(a2, "1"), Root{{1, 0}}), DomainError);  // inside the Levi
}

TEST_CASE("blocks partition the roots outside the Levi") {
    for (const char* name : {"A2", "B2", "G2", "A3", "B3"}) {
        auto g = make_group(name);
        auto roots = enumerate_roots(g);
        for (unsigned mask = 0; mask < (1u << g.rank); ++mask) {
            std::vector<int> levi;
            std::vector<bool> inside(g.rank, false);
            for (int i = 0; i < g.rank; ++i)
                if (mask & (1u << i)) {
                    levi.push_back(i);
                    inside[i] = true;
                }
            std::set<std::vector<int>> outside;
            for (const auto& r : roots) {
                bool in_levi = true;
                for (int i = 0; i < g.rank; ++i)
                    if (r.coefs[i] != 0 && !inside[i])
                        in_levi = false;
                if (!in_levi)
                    outside.insert(r.coefs);
            }
            std::set<std::vector<int>> covered;
            for (const auto& coefs : outside) {
                auto block = root_module(g, levi, Root{coefs});
                bool fresh = covered.count(coefs) == 0;
                for (const auto& member : block.members) {
                    CHECK(outside.count(member.coefs) == 1);
                    // block of any member reproduces the block
                    if (fresh && member.coefs != coefs)
                        CHECK(coef_set(root_module(g, levi, member).members) == coef_set(block.members));
                    covered.insert(member.coefs);
                }
                CHECK(coef_set(block.members).count(coefs) == 1);
            }
            CHECK(covered == outside);
        }
    }
}

TEST_CASE("zero table gives the classical constants") {
    for (const char* name : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D3", "D4", "F4", "G2"}) {
        auto g = make_group(name);
        for (long genus : {1L, 2L, 3L}) {
            StrangenessTable table;
            table.genus = genus;
            auto constants = minimal_constants(g, table);
            for (int i = 0; i < g.rank; ++i) {
                CHECK_MESSAGE(constants.c_prime[i] == Rat(2 * genus - 2), name, " i=", i, " g=", genus);
                CHECK(constants.c_double_prime[i] == 0);
            }
        }
    }
}

TEST_CASE("genus zero constants divide by the largest coefficient") {
    StrangenessTable table;
    table.genus = 0;

    // type A roots have coefficients 0 or 1, so the best ratio is -2
    for (const char* name : {"A1", "A2", "A3"}) {
        auto g = make_group(name);
        auto constants = minimal_constants(g, table);
        for (int i = 0; i < g.rank; ++i)
            CHECK(constants.c_prime[i] == -2);
    }

    // independent oracle: explicit maximum over the enumerated constraints
    for (const char* name : {"B2", "G2", "B3"}) {
        auto g = make_group(name);
        auto constants = minimal_constants(g, table);
        for (int i = 0; i < g.rank; ++i) {
            int max_coef = 0;
            for (const auto& r : enumerate_roots(g))
                max_coef = std::max(max_coef, r.coefs[i]);
            CHECK(constants.c_prime[i] == Rat(-2, max_coef));
            CHECK(constants.c_double_prime[i] == 0);
        }
    }
}

TEST_CASE("a single strangeness entry lifts the threshold") {
    // one nonzero dual entry at a coefficient-one root reproduces the failure
    // of the classical constant in small characteristic
    auto c2 = make_group("C2");
    for (long genus : {2L, 3L}) {
        StrangenessTable table;
        table.genus = genus;
        table.set({}, {0, 1}, true, Rat(genus - 1));
        auto constants = minimal_constants(c2, table);
        CHECK(constants.c_prime[1] == Rat(2 * genus - 2) + Rat(genus - 1));
        CHECK(constants.c_prime[1] > Rat(2 * genus - 2));
        CHECK(constants.c_prime[0] == Rat(2 * genus - 2));  // other vertex untouched
        CHECK(constants.c_double_prime[0] == 0);
        CHECK(constants.c_double_prime[1] == 0);
    }

    // non-dual entries feed the second family instead
    StrangenessTable table;
    table.genus = 2;
    table.set({}, {0, -1}, false, Rat(3, 2));
    auto constants = minimal_constants(c2, table);
    CHECK(constants.c_double_prime[1] == Rat(3, 2));
    CHECK(constants.c_prime[1] == 2);
}

TEST_CASE("constants are monotone in the table") {
    auto b2 = make_group("B2");
    StrangenessTable small;
    small.genus = 2;
    small.set(sub(b2, "1"), {1, 1}, true, Rat(1, 2));
    StrangenessTable large = small;
    large.set(sub(b2, "1"), {1, 1}, true, Rat(5, 2));
    large.set({}, {0, 1}, false, Rat(1));

    auto base = minimal_constants(b2, small);
    auto lifted = minimal_constants(b2, large);
    for (int i = 0; i < b2.rank; ++i) {
        CHECK(lifted.c_prime[i] >= base.c_prime[i]);
        CHECK(lifted.c_double_prime[i] >= base.c_double_prime[i]);
    }
}

TEST_CASE("constraint counts match the root statistics") {
    for (const char* name : {"A2", "B2", "G2", "B3"}) {
        auto g = make_group(name);
        StrangenessTable table;
        auto constants = minimal_constants(g, table);
        for (int i = 0; i < g.rank; ++i) {
            long with_positive_coef = 0;
            for (const auto& r : enumerate_roots(g))
                if (r.coefs[i] > 0)
                    ++with_positive_coef;
            const long levis_avoiding_i = 1L << (g.rank - 1);
            CHECK(constants.constraint_counts[i] == levis_avoiding_i * with_positive_coef);
        }
    }
}

TEST_CASE("strangeness values must be nonnegative") {
    StrangenessTable table;
    CHECK_THROWS_AS(table.set({}, {1, 0}, true, Rat(-1)), DomainError);
}

TEST_CASE("canonical reduction Levi") {
    auto a2 = make_group("A2");
    CHECK(canonical_levi(a2, full_subset(a2), cw(a2, "2,1")).empty());
    CHECK(canonical_levi(a2, full_subset(a2), cw(a2, "0,0")) == full_subset(a2));
    CHECK(canonical_levi(a2, full_subset(a2), cw(a2, "0,1")) == sub(a2, "1"));
    CHECK(canonical_levi(a2, sub(a2, "1"), cw(a2, "0,-5")) == sub(a2, "1"));  // only gamma_M matters
    CHECK_THROWS_AS(canonical_levi(a2, full_subset(a2), cw(a2, "0,-1")), DomainError);
}

TEST_CASE("strangeness tables load from json") {
    auto c2 = make_group("C2");
    auto doc = nlohmann::json::parse(R"({
        "genus": 2,
        "entries": [
            {"levi": [], "root_coefs": [0, 1], "dual": true, "value": "1"},
            {"levi": [1], "root_coefs": [0, -1], "dual": false, "value": "3/2"}
        ]
    })");
    auto table = strangeness_table_from_json(doc, c2);
    CHECK(table.genus == 2);
    CHECK(table.value({}, Root{{0, 1}}, true) == 1);
    CHECK(table.value({0}, Root{{0, -1}}, false) == Rat(3, 2));
    CHECK(table.value({}, Root{{1, 0}}, true) == 0);  // default

    auto bad = nlohmann::json::parse(R"({"genus": 2, "entries": [
        {"levi": [9], "root_coefs": [0, 1], "dual": true, "value": "1"}]})");
    CHECK_THROWS_AS(strangeness_table_from_json(bad, c2), ParseError);
}
