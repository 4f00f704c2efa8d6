// Copyright (c) orderkit contributors.
// SPDX-License-Identifier: Apache-2.0
#include "orderkit/poset.hpp"

#include <algorithm>

#include "orderkit/error.hpp"

namespace orderkit {

FinitePoset FinitePoset::build(const ElementSet& elements, std::span<const ElementPair> strict_edges,
                               const Caps& caps) {
    if (elements.empty()) throw Error(Errc::EmptyCarrier, "poset carrier is empty");

    std::vector<Element> sorted(elements.begin(), elements.end());
    const std::size_t n = sorted.size();
    auto index = [&](const Element& e) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), e);
        if (it == sorted.end() || *it != e)
            throw Error(Errc::ElementNotInCarrier, "edge endpoint " + e.to_string() + " is not an element");
        return static_cast<std::size_t>(it - sorted.begin());
    };

    std::vector<std::uint8_t> le(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) le[i * n + i] = 1;
    for (const auto& [x, y] : strict_edges) le[index(x) * n + index(y)] = 1;

    // Warshall closure.
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            if (!le[i * n + k]) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (le[k * n + j]) le[i * n + j] = 1;
        }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (le[i * n + j] && le[j * n + i])
                throw Error(Errc::CycleDetected, "order is not antisymmetric: " + sorted[i].to_string() +
                                                     " and " + sorted[j].to_string() + " lie on a cycle");

    return FinitePoset(std::move(sorted), std::move(le), caps.carrier_soft);
}

bool FinitePoset::contains(const Element& e) const {
    return std::binary_search(elements_.begin(), elements_.end(), e);
}

std::size_t FinitePoset::index_of(const Element& e) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), e);
    if (it == elements_.end() || *it != e)
        throw Error(Errc::ElementNotInCarrier, e.to_string() + " is not in the carrier");
    return static_cast<std::size_t>(it - elements_.begin());
}

bool FinitePoset::le(const Element& x, const Element& y) const {
    if (!contains(x) || !contains(y)) return false;
    return le_at(index_of(x), index_of(y));
}

std::vector<ElementPair> FinitePoset::relation() const {
    std::vector<ElementPair> out;
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < size(); ++j)
            if (le_at(i, j)) out.emplace_back(elements_[i], elements_[j]);
    return out;
}

std::vector<ElementPair> FinitePoset::strict_pairs() const {
    std::vector<ElementPair> out;
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < size(); ++j)
            if (lt_at(i, j)) out.emplace_back(elements_[i], elements_[j]);
    return out;
}

void canonicalize(std::vector<ElementSet>& members) { std::sort(members.begin(), members.end()); }

namespace {

// False when s escapes the carrier.
bool indices_of(const FinitePoset& p, const ElementSet& s, std::vector<std::size_t>& out) {
    out.clear();
    for (const auto& e : s) {
        if (!p.contains(e)) return false;
        out.push_back(p.index_of(e));
    }
    return true;
}

}  // namespace

bool is_chain(const FinitePoset& p, const ElementSet& s) {
    std::vector<std::size_t> idx;
    if (s.empty() || !indices_of(p, s, idx)) return false;
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = a + 1; b < idx.size(); ++b)
            if (!p.comparable_at(idx[a], idx[b])) return false;
    return true;
}

bool is_antichain(const FinitePoset& p, const ElementSet& s) {
    std::vector<std::size_t> idx;
    if (s.empty() || !indices_of(p, s, idx)) return false;
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = a + 1; b < idx.size(); ++b)
            if (p.comparable_at(idx[a], idx[b])) return false;
    return true;
}

ElementSet minimal_elements(const FinitePoset& p) {
    ElementSet out;
    for (std::size_t a = 0; a < p.size(); ++a) {
        bool minimal = true;
        for (std::size_t b = 0; b < p.size() && minimal; ++b) minimal = !p.lt_at(b, a);
        if (minimal) out.insert(p.elements()[a]);
    }
    return out;
}

ElementSet maximal_elements(const FinitePoset& p) {
    ElementSet out;
    for (std::size_t a = 0; a < p.size(); ++a) {
        bool maximal = true;
        for (std::size_t b = 0; b < p.size() && maximal; ++b) maximal = !p.lt_at(a, b);
        if (maximal) out.insert(p.elements()[a]);
    }
    return out;
}

Element minimal_below(const FinitePoset& p, const Element& y) {
    const std::size_t yi = p.index_of(y);
    for (const auto& m : minimal_elements(p))
        if (p.le_at(p.index_of(m), yi)) return m;
    throw std::logic_error("no minimal element below " + y.to_string());
}

Element maximal_above(const FinitePoset& p, const Element& x) {
    const std::size_t xi = p.index_of(x);
    for (const auto& m : maximal_elements(p))
        if (p.le_at(xi, p.index_of(m))) return m;
    throw std::logic_error("no maximal element above " + x.to_string());
}

FinitePoset restrict_to(const FinitePoset& p, const ElementSet& s) {
    if (s.empty()) throw Error(Errc::EmptyCarrier, "restriction to the empty set");
    std::vector<std::size_t> idx;
    if (!indices_of(p, s, idx)) throw Error(Errc::NotASubset, to_string(s) + " is not a subset of the carrier");

    const std::size_t n = idx.size();
    std::vector<std::uint8_t> le(n * n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) le[a * n + b] = p.le_at(idx[a], idx[b]) ? 1 : 0;
    return FinitePoset(std::vector<Element>(s.begin(), s.end()), std::move(le), p.soft_cap_);
}

namespace {

template <typename Pred>
bool covers_with(const FinitePoset& p, const std::vector<ElementSet>& members, Pred member_ok) {
    ElementSet covered;
    for (const auto& m : members) {
        if (!member_ok(m)) return false;
        covered.insert(m.begin(), m.end());
    }
    return std::all_of(p.elements().begin(), p.elements().end(),
                       [&](const Element& e) { return covered.contains(e); });
}

}  // namespace

bool verify_chain_cover(const FinitePoset& p, const ChainCover& cover) {
    return covers_with(p, cover.chains, [&](const ElementSet& s) { return is_chain(p, s); });
}

bool verify_antichain_cover(const FinitePoset& p, const AntichainCover& cover) {
    return covers_with(p, cover.antichains, [&](const ElementSet& s) { return is_antichain(p, s); });
}

}  // namespace orderkit
