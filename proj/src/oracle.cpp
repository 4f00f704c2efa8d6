// Copyright (c) orderkit contributors.
// SPDX-License-Identifier: Apache-2.0
#include "orderkit/oracle.hpp"

#include <bit>
#include <cstdint>
#include <string>

#include "orderkit/error.hpp"

namespace orderkit {

namespace {

using Mask = std::uint64_t;

void require_within(std::size_t n, std::size_t cap, const char* what) {
    const std::size_t limit = std::min(cap, kMaskBits);
    if (n > limit)
        throw Error(Errc::InstanceTooLarge, std::string(what) + ": " + std::to_string(n) +
                                                " elements exceeds cap " + std::to_string(limit));
}

Mask bit(std::size_t i) { return Mask{1} << i; }

// compat[i]: elements that may share a block with i (i itself excluded).
std::vector<Mask> incomparable_masks(const FinitePoset& p) {
    std::vector<Mask> out(p.size(), 0);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j)
            if (i != j && !p.comparable_at(i, j)) out[i] |= bit(j);
    return out;
}

std::vector<Mask> comparable_masks(const FinitePoset& p) {
    std::vector<Mask> out(p.size(), 0);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j)
            if (i != j && p.comparable_at(i, j)) out[i] |= bit(j);
    return out;
}

Mask full_mask(std::size_t n) { return n == kMaskBits ? ~Mask{0} : bit(n) - 1; }

ElementSet to_set(const FinitePoset& p, Mask m) {
    ElementSet out;
    while (m) {
        out.insert(p.elements()[static_cast<std::size_t>(std::countr_zero(m))]);
        m &= m - 1;
    }
    return out;
}

// Include-first search over ascending indices: among sets of equal size the
// first one reached is the lexicographically smallest, so only strict
// improvements replace the incumbent.
class CliqueSearch {
  public:
    explicit CliqueSearch(const std::vector<Mask>& compat) : compat_(compat) {}

    Mask run(Mask candidates) {
        descend(0, 0, candidates);
        return best_;
    }

  private:
    void descend(Mask current, int size, Mask candidates) {
        if (candidates == 0) {
            if (size > best_size_) {
                best_size_ = size;
                best_ = current;
            }
            return;
        }
        if (size + std::popcount(candidates) <= best_size_) return;
        const auto i = static_cast<std::size_t>(std::countr_zero(candidates));
        descend(current | bit(i), size + 1, candidates & compat_[i]);
        descend(current, size, candidates & ~bit(i));
    }

    const std::vector<Mask>& compat_;
    Mask best_ = 0;
    int best_size_ = 0;
};

SizedWitness largest_clique(const FinitePoset& p, const std::vector<Mask>& compat) {
    CliqueSearch search(compat);
    const Mask best = search.run(full_mask(p.size()));
    return {to_set(p, best), static_cast<std::size_t>(std::popcount(best))};
}

// Partition into blocks, each block pairwise compatible. Element i goes into
// an existing block (in order) or opens a new one.
class PartitionSearch {
  public:
    PartitionSearch(const std::vector<Mask>& compat, std::size_t n, std::size_t lower_bound)
        : compat_(compat), n_(n), lower_bound_(lower_bound) {
        best_size_ = n + 1;
    }

    std::vector<Mask> run() {
        std::vector<Mask> blocks;
        descend(0, blocks);
        return best_;
    }

  private:
    void descend(std::size_t i, std::vector<Mask>& blocks) {
        if (done_) return;
        if (i == n_) {
            if (blocks.size() < best_size_) {
                best_size_ = blocks.size();
                best_ = blocks;
                done_ = best_size_ <= lower_bound_;
            }
            return;
        }
        for (std::size_t b = 0; b < blocks.size() && !done_; ++b) {
            if ((blocks[b] & ~compat_[i]) != 0) continue;
            blocks[b] |= bit(i);
            descend(i + 1, blocks);
            blocks[b] &= ~bit(i);
        }
        if (!done_ && blocks.size() + 1 < best_size_) {
            blocks.push_back(bit(i));
            descend(i + 1, blocks);
            blocks.pop_back();
        }
    }

    const std::vector<Mask>& compat_;
    std::size_t n_;
    std::size_t lower_bound_;
    std::size_t best_size_;
    std::vector<Mask> best_;
    bool done_ = false;
};

std::vector<ElementSet> smallest_partition(const FinitePoset& p, const std::vector<Mask>& compat,
                                           std::size_t lower_bound) {
    PartitionSearch search(compat, p.size(), lower_bound);
    std::vector<ElementSet> out;
    for (Mask m : search.run()) out.push_back(to_set(p, m));
    canonicalize(out);
    return out;
}

}  // namespace

SizedWitness max_antichain(const FinitePoset& p, const Caps& caps) {
    require_within(p.size(), caps.oracle, "max_antichain");
    return largest_clique(p, incomparable_masks(p));
}

SizedWitness max_chain(const FinitePoset& p, const Caps& caps) {
    require_within(p.size(), caps.oracle, "max_chain");
    return largest_clique(p, comparable_masks(p));
}

void for_each_antichain_of_size(const FinitePoset& p, std::size_t k,
                                const std::function<bool(const ElementSet&)>& visit, const Caps& caps) {
    require_within(p.size(), caps.oracle, "antichain enumeration");
    const auto compat = incomparable_masks(p);
    bool stop = false;
    const auto want = static_cast<int>(k);
    auto descend = [&](auto&& self, Mask current, int size, Mask candidates) -> void {
        if (stop) return;
        if (size == want) {
            stop = !visit(to_set(p, current));
            return;
        }
        if (size + std::popcount(candidates) < want) return;
        const auto i = static_cast<std::size_t>(std::countr_zero(candidates));
        self(self, current | bit(i), size + 1, candidates & compat[i]);
        self(self, current, size, candidates & ~bit(i));
    };
    if (k == 0) return;
    descend(descend, 0, 0, full_mask(p.size()));
}

ChainCover min_chain_cover(const FinitePoset& p, const Caps& caps) {
    require_within(p.size(), caps.cover_oracle, "min_chain_cover");
    const auto bound = largest_clique(p, incomparable_masks(p)).size;
    return {smallest_partition(p, comparable_masks(p), bound)};
}

AntichainCover min_antichain_cover(const FinitePoset& p, const Caps& caps) {
    require_within(p.size(), caps.cover_oracle, "min_antichain_cover");
    const auto bound = largest_clique(p, comparable_masks(p)).size;
    return {smallest_partition(p, incomparable_masks(p), bound)};
}

PosetEnumerator::PosetEnumerator(std::size_t n) : n_(n) {
    if (n == 0) throw Error(Errc::EmptyCarrier, "posets need at least one element");
    if (n > 5) throw Error(Errc::InstanceTooLarge, "poset enumeration is limited to n <= 5");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) pairs_.emplace_back(i, j);
    state_.assign(pairs_.size(), 0);
}

bool PosetEnumerator::advance() {
    for (auto& s : state_) {
        if (++s < 3) return true;
        s = 0;
    }
    return false;
}

std::optional<FinitePoset> PosetEnumerator::next() {
    while (!exhausted_) {
        std::vector<std::uint8_t> lt(n_ * n_, 0);
        for (std::size_t k = 0; k < pairs_.size(); ++k) {
            const auto [i, j] = pairs_[k];
            if (state_[k] == 1) lt[i * n_ + j] = 1;
            if (state_[k] == 2) lt[j * n_ + i] = 1;
        }
        exhausted_ = !advance();

        bool transitive = true;
        for (std::size_t i = 0; i < n_ && transitive; ++i)
            for (std::size_t j = 0; j < n_ && transitive; ++j)
                for (std::size_t k = 0; k < n_ && transitive; ++k)
                    if (lt[i * n_ + j] && lt[j * n_ + k] && !lt[i * n_ + k]) transitive = false;
        if (!transitive) continue;

        ElementSet elements;
        std::vector<ElementPair> edges;
        auto label = [](std::size_t i) { return Element("e" + std::to_string(i + 1)); };
        for (std::size_t i = 0; i < n_; ++i) elements.insert(label(i));
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                if (lt[i * n_ + j]) edges.emplace_back(label(i), label(j));
        auto poset = FinitePoset::build(elements, edges);
        // The closure must add nothing to an already transitive relation.
        if (poset.strict_pairs().size() != edges.size())
            throw std::logic_error("enumerated relation was not closed");
        return poset;
    }
    return std::nullopt;
}

std::vector<FinitePoset> enumerate_posets(std::size_t n) {
    std::vector<FinitePoset> out;
    PosetEnumerator gen(n);
    while (auto p = gen.next()) out.push_back(std::move(*p));
    return out;
}

}  // namespace orderkit
