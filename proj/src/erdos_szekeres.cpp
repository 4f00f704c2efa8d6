// Copyright (c) orderkit contributors.
// SPDX-License-Identifier: Apache-2.0
#include "orderkit/erdos_szekeres.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "orderkit/dilworth.hpp"
#include "orderkit/error.hpp"

namespace orderkit {

IntSeq::IntSeq(std::vector<std::int64_t> order) : order_(std::move(order)) {
    for (std::size_t i = 0; i < order_.size(); ++i) position_.emplace(order_[i], i);
}

IntSeq IntSeq::from_list(std::span<const std::int64_t> xs) {
    if (xs.empty()) throw Error(Errc::EmptyInput, "sequence is empty");
    std::set<std::int64_t> seen;
    for (auto x : xs)
        if (!seen.insert(x).second) throw Error(Errc::DuplicateValue, "value " + std::to_string(x) + " repeats");
    return IntSeq(std::vector<std::int64_t>(xs.begin(), xs.end()));
}

bool IntSeq::precedes(std::int64_t a, std::int64_t b) const {
    auto ia = position_.find(a);
    auto ib = position_.find(b);
    if (ia == position_.end() || ib == position_.end()) return false;
    return ia->second < ib->second;
}

FinitePoset seq_to_poset(const IntSeq& s) {
    ElementSet carrier;
    std::vector<ElementPair> edges;
    const auto& xs = s.in_order();
    for (auto x : xs) carrier.insert(Element(x));
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j)
            if (xs[i] < xs[j]) edges.emplace_back(Element(xs[i]), Element(xs[j]));
    return FinitePoset::build(carrier, edges);
}

namespace {

std::size_t checked_cardinality(std::size_t r, std::size_t s) {
    if (s != 0 && r > (std::numeric_limits<std::size_t>::max() - 1) / s)
        throw Error(Errc::WrongCardinality, "r*s+1 overflows");
    return r * s + 1;
}

}  // namespace

ChainOrAntichain pre_es(const FinitePoset& p, std::size_t r, std::size_t s, const Caps& caps) {
    const std::size_t want = checked_cardinality(r, s);
    if (p.size() != want)
        throw Error(Errc::WrongCardinality, "expected " + std::to_string(want) + " elements, got " +
                                                std::to_string(p.size()));

    const auto w = width(p, caps);
    if (w.size >= s + 1) return {ChainOrAntichain::Kind::Antichain, w.witness};

    // At most s chains over r*s+1 elements: one of them has r+1.
    const auto cert = perles_chain_cover(p, caps);
    for (const auto& chain : cert.cover.chains)
        if (chain.size() >= r + 1) return {ChainOrAntichain::Kind::Chain, chain};
    throw std::logic_error("pigeonhole failed: no chain of size r+1");
}

SubseqWitness es_subsequence(const IntSeq& s, std::size_t m, std::size_t n, const Caps& caps) {
    const auto found = pre_es(seq_to_poset(s), m, n, caps);
    const bool increasing = found.kind == ChainOrAntichain::Kind::Chain;
    const std::size_t keep = increasing ? m + 1 : n + 1;

    std::vector<std::int64_t> picked;
    for (auto x : s.in_order())
        if (found.elements.contains(Element(x))) picked.push_back(x);
    picked.resize(keep);
    return {increasing ? Monotone::Increasing : Monotone::Decreasing, IntSeq::from_list(picked)};
}

bool is_sub_seq(const IntSeq& sub, const IntSeq& parent) {
    const auto& xs = sub.in_order();
    if (!std::all_of(xs.begin(), xs.end(), [&](auto x) { return parent.contains(x); })) return false;
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j)
            if (!parent.precedes(xs[i], xs[j])) return false;
    return true;
}

bool is_increasing(const IntSeq& s) {
    const auto& xs = s.in_order();
    return std::adjacent_find(xs.begin(), xs.end(), std::greater_equal<>{}) == xs.end();
}

bool is_decreasing(const IntSeq& s) {
    const auto& xs = s.in_order();
    return std::adjacent_find(xs.begin(), xs.end(), std::less_equal<>{}) == xs.end();
}

bool verify_subseq(const IntSeq& parent, const SubseqWitness& w) {
    if (!is_sub_seq(w.subsequence, parent)) return false;
    return w.kind == Monotone::Increasing ? is_increasing(w.subsequence) : is_decreasing(w.subsequence);
}

}  // namespace orderkit
