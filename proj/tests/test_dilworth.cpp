// Copyright (c) orderkit contributors.
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <random>

#include "orderkit/dilworth.hpp"
#include "orderkit/error.hpp"
#include "support/brute_force.hpp"
#include "support/generators.hpp"

using namespace orderkit;
using namespace orderkit::testing;

namespace {

bool pairwise_disjoint(const ChainCover& c) {
    ElementSet seen;
    for (const auto& chain : c.chains)
        for (const auto& e : chain)
            if (!seen.insert(e).second) return false;
    return true;
}

}  // namespace

TEST_CASE("width examples") {
    CHECK(width(p3()) == SizedWitness{{"a", "c"}, 2});
    CHECK(width(total_order(4)).size == 1);
    CHECK(width(antichain_poset(4)) == SizedWitness{antichain_poset(4).carrier(), 4});
}

TEST_CASE("perles_chain_cover examples") {
    const auto c3 = perles_chain_cover(p3());
    CHECK(c3.width == 2);
    CHECK(c3.cover.chains == std::vector<ElementSet>{{"a", "b"}, {"c"}});
    // Hand trace: both size-2 antichains are extremal, so a remove step runs.
    CHECK(c3.trace.split_steps == 0);
    CHECK(c3.cover.chains == min_chain_cover(p3()).chains);

    const auto one = perles_chain_cover(singleton());
    CHECK(one.width == 1);
    CHECK(one.cover.chains == std::vector<ElementSet>{{"a"}});

    // Hand trace: {b,c} splits the grid; halves glue into {a,b,d} and {c}.
    const auto grid = perles_chain_cover(grid2x2());
    CHECK(grid.width == 2);
    CHECK(grid.cover.chains == std::vector<ElementSet>{{"a", "b", "d"}, {"c"}});
    CHECK(grid.trace.split_steps == 1);
    CHECK(min_chain_cover(grid2x2()).size() == 2);
}

TEST_CASE("split_around on the grid") {
    const auto s = split_around(grid2x2(), {"b", "c"});
    CHECK(s.above == ElementSet{"b", "c", "d"});
    CHECK(s.below == ElementSet{"a", "b", "c"});
}

TEST_CASE("Perles equals both oracles on every small poset") {
    for (std::size_t n = 1; n <= 5; ++n)
        for (const auto& p : enumerate_posets(n)) {
            const auto cert = perles_chain_cover(p);
            CHECK(verify_chain_cover(p, cert.cover));
            CHECK(pairwise_disjoint(cert.cover));
            CHECK(cert.cover.size() == cert.width);
            CHECK(cert.width == max_antichain(p).size);
            CHECK(cert.cover.size() == min_chain_cover(p).size());
            CHECK(is_antichain(p, cert.antichain_witness));
            CHECK(cert.trace.max_depth <= p.size());
        }
}

TEST_CASE("Perles on random posets of six to nine elements") {
    std::mt19937_64 rng(2024);
    for (std::size_t n = 6; n <= 9; ++n)
        for (int round = 0; round < 200; ++round) {
            const auto p = random_poset(n, rng, 0.05 + 0.6 * (round % 10) / 10.0);
            const auto cert = perles_chain_cover(p);
            REQUIRE(verify_chain_cover(p, cert.cover));
            CHECK(cert.cover.size() == bf_width(p));
            CHECK(cert.cover.size() == min_chain_cover(p).size());
            CHECK(cert.trace.max_depth <= p.size());
        }
}

TEST_CASE("split step assertions hold whenever a split is possible") {
    std::mt19937_64 rng(5);
    int splits = 0;
    for (int round = 0; round < 300; ++round) {
        const auto p = random_poset(4 + round % 5, rng, 0.35);
        const auto w = max_antichain(p).size;
        const auto mins = minimal_elements(p);
        const auto maxs = maximal_elements(p);
        for_each_antichain_of_size(p, w, [&](const ElementSet& a) {
            if (a == mins || a == maxs) return true;
            ++splits;
            const auto s = split_around(p, a);
            ElementSet both = s.above;
            both.insert(s.below.begin(), s.below.end());
            CHECK(both == p.carrier());
            CHECK(std::includes(s.above.begin(), s.above.end(), a.begin(), a.end()));
            CHECK(std::includes(s.below.begin(), s.below.end(), a.begin(), a.end()));
            CHECK(s.above.size() < p.size());
            CHECK(s.below.size() < p.size());
            return true;
        });
    }
    CHECK(splits > 50);
}

TEST_CASE("a largest antichain stays largest in any restriction containing it") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int round = 0; round < 300; ++round) {
        const auto p = random_poset(3 + round % 6, rng, 0.3);
        const auto a = max_antichain(p);
        ElementSet s = a.witness;
        for (const auto& e : p.elements())
            if (coin(rng)) s.insert(e);
        CHECK(max_antichain(restrict_to(p, s)).size == a.size);
        CHECK(is_antichain(restrict_to(p, s), a.witness));
    }
}

TEST_CASE("disjointify_cover") {
    const auto p = p3();
    const auto same = disjointify_cover(p, {{{"a", "b"}, {"c"}}});
    CHECK(same.cover.chains == std::vector<ElementSet>{{"a", "b"}, {"c"}});
    CHECK(same.minimality_checked);

    try {
        (void)disjointify_cover(p, {{{"a"}, {"b"}, {"c"}, {"a", "b"}}});
        FAIL("expected NotASmallestCover");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotASmallestCover);
    }

    CHECK(disjointify_cover(total_order(2), {{{"a", "b"}}}).cover.chains == std::vector<ElementSet>{{"a", "b"}});

    // Overlapping smallest cover: both chains share a.
    const std::vector<ElementPair> e{{"a", "b"}, {"b", "c"}, {"a", "d"}};
    const auto q = build_poset({"a", "b", "c", "d"}, e);
    const auto out = disjointify_cover(q, {{{"a", "b", "c"}, {"a", "d"}}});
    CHECK(out.cover.chains == std::vector<ElementSet>{{"a", "b", "c"}, {"d"}});
    try {
        (void)disjointify_cover(q, {{{"a", "b", "c"}}});
        FAIL("expected InvalidCover");
    } catch (const Error& err) {
        CHECK(err.code() == Errc::InvalidCover);
    }

    // Above the oracle cap the precondition is trusted.
    const auto trusted = disjointify_cover(p, {{{"a", "b"}, {"c"}}}, Caps{.oracle = 2});
    CHECK_FALSE(trusted.minimality_checked);
}

TEST_CASE("disjointify keeps size and shrinks chains") {
    std::mt19937_64 rng(31);
    for (int round = 0; round < 200; ++round) {
        const auto p = random_poset(2 + round % 7, rng, 0.4);
        auto cert = perles_chain_cover(p);
        // Grow each chain greedily so the cover overlaps.
        ChainCover smeared = cert.cover;
        for (auto& chain : smeared.chains)
            for (const auto& x : p.elements()) {
                ElementSet grown = chain;
                grown.insert(x);
                if (is_chain(p, grown)) chain = grown;
            }
        REQUIRE(verify_chain_cover(p, smeared));
        const auto out = disjointify_cover(p, smeared);
        CHECK(out.cover.size() == smeared.size());
        CHECK(pairwise_disjoint(out.cover));
        CHECK(verify_chain_cover(p, out.cover));
        for (const auto& c : out.cover.chains)
            CHECK(std::any_of(smeared.chains.begin(), smeared.chains.end(), [&](const ElementSet& big) {
                return std::includes(big.begin(), big.end(), c.begin(), c.end());
            }));
    }
}

TEST_CASE("check_dilworth") {
    const auto r = check_dilworth(p3());
    CHECK(r.width == 2);
    CHECK(r.cover_size == 2);
    CHECK(r.equal);
    const auto s = check_dilworth(singleton());
    CHECK((s.width == 1 && s.cover_size == 1 && s.equal));
    for (std::size_t n = 1; n <= 5; ++n)
        for (const auto& p : enumerate_posets(n)) CHECK(check_dilworth(p).equal);
}
