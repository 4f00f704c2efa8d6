// Copyright (c) orderkit contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Exhaustive ground truth for width, height and smallest covers. These are
// exponential searches kept deliberately separate from the constructive
// solvers they are used to check.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "orderkit/caps.hpp"
#include "orderkit/poset.hpp"

namespace orderkit {

struct SizedWitness {
    ElementSet witness;
    std::size_t size = 0;
    friend bool operator==(const SizedWitness&, const SizedWitness&) = default;
};

/// Largest antichain; among equals, the lexicographically smallest id sequence.
SizedWitness max_antichain(const FinitePoset& p, const Caps& caps = {});
/// Largest chain, same tie-break.
SizedWitness max_chain(const FinitePoset& p, const Caps& caps = {});

/// Visits every antichain with exactly k elements in lexicographic order of
/// sorted ids until the visitor returns false.
void for_each_antichain_of_size(const FinitePoset& p, std::size_t k,
                                const std::function<bool(const ElementSet&)>& visit, const Caps& caps = {});

/// Smallest chain cover by partition search (bounded below by the width).
/// Ties resolve to the first partition in restricted-growth order.
ChainCover min_chain_cover(const FinitePoset& p, const Caps& caps = {});
AntichainCover min_antichain_cover(const FinitePoset& p, const Caps& caps = {});

/// Every labeled partial order on {e1..en}, n <= 5, each exactly once.
class PosetEnumerator {
  public:
    explicit PosetEnumerator(std::size_t n);
    std::optional<FinitePoset> next();

  private:
    bool advance();

    std::size_t n_;
    std::vector<std::pair<std::size_t, std::size_t>> pairs_;
    std::vector<int> state_;  // per unordered pair: 0 incomparable, 1 i<j, 2 j<i
    bool exhausted_ = false;
};

std::vector<FinitePoset> enumerate_posets(std::size_t n);

}  // namespace orderkit
