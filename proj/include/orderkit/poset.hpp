// Copyright (c) orderkit contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "orderkit/caps.hpp"
#include "orderkit/element.hpp"

namespace orderkit {

/// A validated finite partial order. The order relation is materialized as
/// the full reflexive n*n matrix over the carrier sorted by element id, so
/// comparisons are O(1). Immutable after construction.
class FinitePoset {
  public:
    /// Reflexive-transitive closure of `strict_edges` over `elements`.
    /// Throws EmptyCarrier, ElementNotInCarrier (dangling endpoint) or
    /// CycleDetected (closure not antisymmetric).
    static FinitePoset build(const ElementSet& elements, std::span<const ElementPair> strict_edges,
                             const Caps& caps = {});

    [[nodiscard]] std::size_t size() const { return elements_.size(); }
    /// Carrier in ascending id order; positions are the indices used by *_at.
    [[nodiscard]] const std::vector<Element>& elements() const { return elements_; }
    [[nodiscard]] ElementSet carrier() const { return {elements_.begin(), elements_.end()}; }
    [[nodiscard]] bool contains(const Element& e) const;
    /// Throws ElementNotInCarrier.
    [[nodiscard]] std::size_t index_of(const Element& e) const;

    /// False when either side is outside the carrier.
    [[nodiscard]] bool le(const Element& x, const Element& y) const;
    [[nodiscard]] bool lt(const Element& x, const Element& y) const { return x != y && le(x, y); }
    [[nodiscard]] bool comparable(const Element& x, const Element& y) const {
        return le(x, y) || le(y, x);
    }

    [[nodiscard]] bool le_at(std::size_t i, std::size_t j) const { return le_[i * size() + j] != 0; }
    [[nodiscard]] bool lt_at(std::size_t i, std::size_t j) const { return i != j && le_at(i, j); }
    [[nodiscard]] bool comparable_at(std::size_t i, std::size_t j) const {
        return le_at(i, j) || le_at(j, i);
    }

    /// All (x, y) with x <= y, including the diagonal.
    [[nodiscard]] std::vector<ElementPair> relation() const;
    /// Strict pairs x < y.
    [[nodiscard]] std::vector<ElementPair> strict_pairs() const;

    [[nodiscard]] bool over_soft_cap() const { return size() > soft_cap_; }

    friend bool operator==(const FinitePoset& a, const FinitePoset& b) {
        return a.elements_ == b.elements_ && a.le_ == b.le_;
    }

  private:
    FinitePoset(std::vector<Element> elements, std::vector<std::uint8_t> le, std::size_t soft_cap)
        : elements_(std::move(elements)), le_(std::move(le)), soft_cap_(soft_cap) {}

    friend FinitePoset restrict_to(const FinitePoset&, const ElementSet&);

    std::vector<Element> elements_;
    std::vector<std::uint8_t> le_;
    std::size_t soft_cap_ = 64;
};

struct ChainCover {
    std::vector<ElementSet> chains;
    [[nodiscard]] std::size_t size() const { return chains.size(); }
    friend bool operator==(const ChainCover&, const ChainCover&) = default;
};

struct AntichainCover {
    std::vector<ElementSet> antichains;
    [[nodiscard]] std::size_t size() const { return antichains.size(); }
    friend bool operator==(const AntichainCover&, const AntichainCover&) = default;
};

/// Sorts members lexicographically by their sorted ids (smallest element first).
void canonicalize(std::vector<ElementSet>& members);

inline FinitePoset build_poset(const ElementSet& elements, std::span<const ElementPair> strict_edges,
                               const Caps& caps = {}) {
    return FinitePoset::build(elements, strict_edges, caps);
}

/// Non-empty subset of the carrier whose elements are pairwise comparable.
bool is_chain(const FinitePoset& p, const ElementSet& s);
/// Non-empty subset of the carrier with no two distinct comparable elements.
bool is_antichain(const FinitePoset& p, const ElementSet& s);

ElementSet minimal_elements(const FinitePoset& p);
ElementSet maximal_elements(const FinitePoset& p);

/// Smallest-id minimal element below y. Throws ElementNotInCarrier.
Element minimal_below(const FinitePoset& p, const Element& y);
/// Smallest-id maximal element above x. Throws ElementNotInCarrier.
Element maximal_above(const FinitePoset& p, const Element& x);

/// Same relation on a smaller carrier. Throws EmptyCarrier or NotASubset.
FinitePoset restrict_to(const FinitePoset& p, const ElementSet& s);

bool verify_chain_cover(const FinitePoset& p, const ChainCover& cover);
bool verify_antichain_cover(const FinitePoset& p, const AntichainCover& cover);

}  // namespace orderkit
