// Copyright (c) orderkit contributors.
// SPDX-License-Identifier: Apache-2.0
#include "support/brute_force.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace orderkit::testing {

bool bf_is_chain(const FinitePoset& p, const ElementSet& s) {
    if (s.empty()) return false;
    for (const auto& x : s) {
        if (!p.contains(x)) return false;
        for (const auto& y : s)
            if (!p.le(x, y) && !p.le(y, x)) return false;
    }
    return true;
}

bool bf_is_antichain(const FinitePoset& p, const ElementSet& s) {
    if (s.empty()) return false;
    for (const auto& x : s) {
        if (!p.contains(x)) return false;
        for (const auto& y : s)
            if (x != y && (p.le(x, y) || p.le(y, x))) return false;
    }
    return true;
}

std::vector<ElementSet> all_subsets(const FinitePoset& p) {
    const auto n = p.size();
    std::vector<ElementSet> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        ElementSet s;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) s.insert(p.elements()[i]);
        out.push_back(std::move(s));
    }
    return out;
}

namespace {

std::vector<ElementSet> largest(const FinitePoset& p, bool (*pred)(const FinitePoset&, const ElementSet&)) {
    std::vector<ElementSet> best;
    std::size_t size = 0;
    for (auto& s : all_subsets(p)) {
        if (!pred(p, s)) continue;
        if (s.size() > size) {
            size = s.size();
            best.clear();
        }
        if (s.size() == size) best.push_back(std::move(s));
    }
    return best;
}

}  // namespace

std::vector<ElementSet> bf_largest_antichains(const FinitePoset& p) { return largest(p, bf_is_antichain); }
std::vector<ElementSet> bf_largest_chains(const FinitePoset& p) { return largest(p, bf_is_chain); }
std::size_t bf_width(const FinitePoset& p) { return bf_largest_antichains(p).front().size(); }
std::size_t bf_height(const FinitePoset& p) { return bf_largest_chains(p).front().size(); }

bool bf_hall_ok(const BipartiteGraph& g) {
    const std::vector<Element> left(g.left().begin(), g.left().end());
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << left.size()); ++mask) {
        ElementSet nbrs;
        std::size_t k = 0;
        for (std::size_t i = 0; i < left.size(); ++i) {
            if (!(mask >> i & 1)) continue;
            ++k;
            for (const auto& r : g.right())
                if (g.has_edge(left[i], r)) nbrs.insert(r);
        }
        if (nbrs.size() < k) return false;
    }
    return true;
}

bool bf_has_l_perfect_matching(const BipartiteGraph& g) {
    const std::vector<Element> left(g.left().begin(), g.left().end());
    ElementSet used;
    std::function<bool(std::size_t)> place = [&](std::size_t i) {
        if (i == left.size()) return true;
        for (const auto& r : g.right()) {
            if (used.contains(r) || !g.has_edge(left[i], r)) continue;
            used.insert(r);
            if (place(i + 1)) return true;
            used.erase(r);
        }
        return false;
    };
    return place(0);
}

bool bf_has_sdr(const SetFamily& f) {
    std::vector<const ElementSet*> sets;
    for (const auto& [_, s] : f.members) sets.push_back(&s);
    ElementSet used;
    std::function<bool(std::size_t)> choose = [&](std::size_t i) {
        if (i == sets.size()) return true;
        for (const auto& x : *sets[i]) {
            if (used.contains(x)) continue;
            used.insert(x);
            if (choose(i + 1)) return true;
            used.erase(x);
        }
        return false;
    };
    return choose(0);
}

namespace {

template <typename Cmp>
std::size_t longest_monotone(const std::vector<std::int64_t>& xs, Cmp ok) {
    std::size_t best = 0;
    const auto n = xs.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<std::int64_t> picked;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) picked.push_back(xs[i]);
        bool mono = true;
        for (std::size_t i = 1; i < picked.size() && mono; ++i) mono = ok(picked[i - 1], picked[i]);
        if (mono) best = std::max(best, picked.size());
    }
    return best;
}

template <typename Cmp>
bool monotone_subset(const std::vector<std::int64_t>& xs, const ElementSet& values, Cmp ok) {
    std::vector<std::int64_t> picked;
    for (auto x : xs)
        if (values.contains(Element(x))) picked.push_back(x);
    if (picked.size() != values.size() || picked.empty()) return false;
    for (std::size_t i = 1; i < picked.size(); ++i)
        if (!ok(picked[i - 1], picked[i])) return false;
    return true;
}

}  // namespace

std::size_t bf_longest_increasing(const std::vector<std::int64_t>& xs) {
    return longest_monotone(xs, std::less<>{});
}
std::size_t bf_longest_decreasing(const std::vector<std::int64_t>& xs) {
    return longest_monotone(xs, std::greater<>{});
}
bool bf_is_increasing_subset(const std::vector<std::int64_t>& xs, const ElementSet& values) {
    return monotone_subset(xs, values, std::less<>{});
}
bool bf_is_decreasing_subset(const std::vector<std::int64_t>& xs, const ElementSet& values) {
    return monotone_subset(xs, values, std::greater<>{});
}

}  // namespace orderkit::testing
