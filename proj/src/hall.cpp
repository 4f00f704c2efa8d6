// Copyright (c) orderkit contributors.
// SPDX-License-Identifier: Apache-2.0
#include "orderkit/hall.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "orderkit/dilworth.hpp"
#include "orderkit/error.hpp"

namespace orderkit {

BipartiteGraph BipartiteGraph::build(ElementSet left, ElementSet right, std::span<const ElementPair> edges) {
    if (left.empty() || right.empty()) throw Error(Errc::InvalidGraph, "both vertex sides must be inhabited");
    for (const auto& v : left)
        if (right.contains(v)) throw Error(Errc::InvalidGraph, "vertex " + v.to_string() + " is on both sides");
    std::set<ElementPair> e;
    for (const auto& [l, r] : edges) {
        if (!left.contains(l) || !right.contains(r))
            throw Error(Errc::InvalidGraph,
                        "edge (" + l.to_string() + "," + r.to_string() + ") does not run left to right");
        e.emplace(l, r);
    }
    return BipartiteGraph(std::move(left), std::move(right), std::move(e));
}

ElementSet neighborhood(const BipartiteGraph& g, const ElementSet& s) {
    for (const auto& v : s)
        if (!g.left().contains(v)) throw Error(Errc::NotASubsetOfLeft, v.to_string() + " is not a left vertex");
    ElementSet out;
    for (const auto& [l, r] : g.edges())
        if (s.contains(l)) out.insert(r);
    return out;
}

HallCheck hall_condition(const BipartiteGraph& g, const Caps& caps) {
    const std::vector<Element> left(g.left().begin(), g.left().end());
    const std::size_t n = left.size();
    if (n > caps.subset)
        throw Error(Errc::InstanceTooLarge, "hall_condition: " + std::to_string(n) + " left vertices exceeds cap " +
                                                std::to_string(caps.subset));

    // Combinations of each size in lexicographic order.
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::size_t> pick(k);
        for (std::size_t i = 0; i < k; ++i) pick[i] = i;
        while (true) {
            ElementSet s;
            for (auto i : pick) s.insert(left[i]);
            const auto nbrs = neighborhood(g, s).size();
            if (nbrs < k) return HallViolation{std::move(s), k - nbrs};

            std::size_t i = k;
            while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return HallOk{};
}

FinitePoset graph_to_poset(const BipartiteGraph& g) {
    ElementSet vertices = g.left();
    vertices.insert(g.right().begin(), g.right().end());
    const std::vector<ElementPair> edges(g.edges().begin(), g.edges().end());
    return FinitePoset::build(vertices, edges);
}

std::variant<Matching, HallViolation> find_l_perfect_matching(const BipartiteGraph& g, const Caps& caps) {
    if (auto check = hall_condition(g, caps); auto* v = std::get_if<HallViolation>(&check)) return *v;

    const FinitePoset p = graph_to_poset(g);
    const auto cert = perles_chain_cover(p, caps);
    if (cert.width != g.right().size()) throw std::logic_error("right side is not a largest antichain");
    const auto disjoint = disjointify_cover(p, cert.cover, caps);

    Matching m;
    for (const auto& chain : disjoint.cover.chains) {
        if (chain.size() != 2) continue;
        const Element& lo = *chain.begin();
        const Element& hi = *chain.rbegin();
        if (g.has_edge(lo, hi))
            m.pairs.emplace(lo, hi);
        else
            m.pairs.emplace(hi, lo);
    }
    if (!verify_matching(g, m, true)) throw std::logic_error("chain cover did not yield an L-perfect matching");
    return m;
}

bool verify_matching(const BipartiteGraph& g, const Matching& m, bool require_l_perfect) {
    ElementSet used_left, used_right;
    for (const auto& [l, r] : m.pairs) {
        if (!g.has_edge(l, r)) return false;
        if (!used_left.insert(l).second || !used_right.insert(r).second) return false;
    }
    return !require_l_perfect || used_left == g.left();
}

BipartiteGraph family_to_graph(const SetFamily& f) {
    ElementSet left, right;
    std::vector<ElementPair> edges;
    for (const auto& [name, members] : f.members) {
        left.insert(name.with_tag(kMemberTag));
        for (const auto& x : members) {
            right.insert(x.with_tag(kGroundTag));
            edges.emplace_back(name.with_tag(kMemberTag), x.with_tag(kGroundTag));
        }
    }
    return BipartiteGraph::build(std::move(left), std::move(right), edges);
}

namespace {

Element untag(const Element& e) { return e.with_tag(0); }

}  // namespace

std::variant<SdrAssignment, SdrViolation> find_sdr(const SetFamily& f, const Caps& caps) {
    if (f.members.empty()) return SdrAssignment{};
    const bool all_empty = std::all_of(f.members.begin(), f.members.end(),
                                       [](const auto& kv) { return kv.second.empty(); });
    // No ground elements at all: the first member alone already has an empty union.
    if (all_empty) return SdrViolation{{f.members.begin()->first}};

    const auto result = find_l_perfect_matching(family_to_graph(f), caps);
    if (const auto* v = std::get_if<HallViolation>(&result)) {
        SdrViolation out;
        for (const auto& e : v->set) out.subfamily.insert(untag(e));
        return out;
    }
    SdrAssignment out;
    for (const auto& [l, r] : std::get<Matching>(result).pairs) out.choice.emplace(untag(l), untag(r));
    return out;
}

bool verify_sdr(const SetFamily& f, const SdrAssignment& a) {
    if (a.choice.size() != f.members.size()) return false;
    ElementSet used;
    for (const auto& [name, members] : f.members) {
        auto it = a.choice.find(name);
        if (it == a.choice.end() || !members.contains(it->second)) return false;
        if (!used.insert(it->second).second) return false;
    }
    return true;
}

bool is_sdr_violation(const SetFamily& f, const SdrViolation& v) {
    if (v.subfamily.empty()) return false;
    ElementSet uni;
    for (const auto& name : v.subfamily) {
        auto it = f.members.find(name);
        if (it == f.members.end()) return false;
        uni.insert(it->second.begin(), it->second.end());
    }
    return uni.size() < v.subfamily.size();
}

}  // namespace orderkit
