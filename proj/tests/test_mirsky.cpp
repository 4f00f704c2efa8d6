// Copyright (c) orderkit contributors.
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <random>

#include "orderkit/mirsky.hpp"
#include "support/brute_force.hpp"
#include "support/generators.hpp"

using namespace orderkit;
using namespace orderkit::testing;

TEST_CASE("height examples") {
    CHECK(height(p3()) == SizedWitness{{"a", "b"}, 2});
    CHECK(height(total_order(5)) == SizedWitness{total_order(5).carrier(), 5});
    CHECK(height(antichain_poset(3)) == SizedWitness{{"a"}, 1});
}

TEST_CASE("mirsky_antichain_cover examples") {
    const auto c = mirsky_antichain_cover(p3());
    CHECK(c.height == 2);
    CHECK(c.layers.antichains == std::vector<ElementSet>{{"b", "c"}, {"a"}});
    CHECK(c.chain_witness == ElementSet{"a", "b"});
    CHECK(c.chain_source == ChainSource::Oracle);

    const auto t = mirsky_antichain_cover(total_order(4));
    CHECK(t.layers.antichains == std::vector<ElementSet>{{"d"}, {"c"}, {"b"}, {"a"}});

    const auto a = mirsky_antichain_cover(antichain_poset(4));
    CHECK(a.layers.antichains == std::vector<ElementSet>{antichain_poset(4).carrier()});
    CHECK(a.height == 1);
}

TEST_CASE("layer walk is used above the oracle cap") {
    const auto c = mirsky_antichain_cover(p3(), Caps{.oracle = 2});
    CHECK(c.chain_source == ChainSource::LayerWalk);
    CHECK(c.chain_witness == ElementSet{"a", "b"});

    ElementSet els;
    std::vector<ElementPair> edges;
    for (int i = 0; i < 80; ++i) {
        els.insert(Element(i));
        if (i >= 2) edges.emplace_back(Element(i - 2), Element(i));
    }
    const auto big = build_poset(els, edges);
    const auto cert = mirsky_antichain_cover(big);
    CHECK(cert.chain_source == ChainSource::LayerWalk);
    CHECK(cert.height == 40);
    CHECK(is_chain(big, cert.chain_witness));
    CHECK(cert.chain_witness.size() == 40);
    CHECK(verify_antichain_cover(big, cert.layers));
}

TEST_CASE("Mirsky equality and layer structure on every small poset") {
    for (std::size_t n = 1; n <= 5; ++n)
        for (const auto& p : enumerate_posets(n)) {
            const auto cert = mirsky_antichain_cover(p);
            CHECK(verify_antichain_cover(p, cert.layers));
            CHECK(cert.layers.size() == max_chain(p).size);
            CHECK(cert.layers.size() == min_antichain_cover(p).size());
            CHECK(cert.layers.size() <= p.size());
            CHECK(is_chain(p, cert.chain_witness));
            CHECK(cert.chain_witness.size() == cert.height);

            ElementSet seen;
            ElementSet remaining = p.carrier();
            for (const auto& layer : cert.layers.antichains) {
                CHECK(layer == maximal_elements(restrict_to(p, remaining)));
                for (const auto& e : layer) {
                    CHECK(seen.insert(e).second);
                    remaining.erase(e);
                }
            }

            const auto walked = chain_through_layers(p, cert.layers);
            CHECK(is_chain(p, walked));
            CHECK(walked.size() == cert.layers.size());
        }
}

TEST_CASE("largest chains meet the maximal and minimal sets") {
    for (std::size_t n = 1; n <= 5; ++n)
        for (const auto& p : enumerate_posets(n)) {
            const auto maxs = maximal_elements(p);
            const auto mins = minimal_elements(p);
            for (const auto& c : bf_largest_chains(p)) {
                CHECK(std::any_of(c.begin(), c.end(), [&](const Element& e) { return maxs.contains(e); }));
                CHECK(std::any_of(c.begin(), c.end(), [&](const Element& e) { return mins.contains(e); }));
            }
        }
}

TEST_CASE("every chain has a greatest element") {
    for (std::size_t n = 1; n <= 5; ++n)
        for (const auto& p : enumerate_posets(n))
            for (const auto& s : all_subsets(p)) {
                if (!is_chain(p, s)) continue;
                const auto top = maximal_elements(restrict_to(p, s));
                REQUIRE(top.size() == 1);
                for (const auto& x : s) CHECK(p.le(x, *top.begin()));
            }
}

TEST_CASE("check_mirsky") {
    const auto r = check_mirsky(p3());
    CHECK((r.height == 2 && r.cover_size == 2 && r.equal));
    const auto s = check_mirsky(singleton());
    CHECK((s.height == 1 && s.cover_size == 1 && s.equal));
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) CHECK(check_mirsky(random_poset(1 + i % 9, rng, 0.3)).equal);
}
