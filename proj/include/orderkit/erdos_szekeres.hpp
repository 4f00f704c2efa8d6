// Copyright (c) orderkit contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <vector>

#include "orderkit/caps.hpp"
#include "orderkit/poset.hpp"

namespace orderkit {

/// Finite sequence of distinct integers: a value set plus the strict total
/// "comes before" order given by positions.
class IntSeq {
  public:
    /// Throws EmptyInput or DuplicateValue.
    static IntSeq from_list(std::span<const std::int64_t> xs);

    [[nodiscard]] std::size_t size() const { return order_.size(); }
    /// Values in positional order.
    [[nodiscard]] const std::vector<std::int64_t>& in_order() const { return order_; }
    [[nodiscard]] std::set<std::int64_t> values() const { return {order_.begin(), order_.end()}; }
    [[nodiscard]] bool contains(std::int64_t v) const { return position_.contains(v); }
    /// Strict and irreflexive; false when either value is absent.
    [[nodiscard]] bool precedes(std::int64_t a, std::int64_t b) const;
    [[nodiscard]] std::size_t position(std::int64_t v) const { return position_.at(v); }

    friend bool operator==(const IntSeq& a, const IntSeq& b) { return a.order_ == b.order_; }

  private:
    explicit IntSeq(std::vector<std::int64_t> order);

    std::vector<std::int64_t> order_;
    std::map<std::int64_t, std::size_t> position_;
};

inline IntSeq seq_from_list(std::span<const std::int64_t> xs) { return IntSeq::from_list(xs); }

enum class Monotone { Increasing, Decreasing };

struct SubseqWitness {
    Monotone kind;
    IntSeq subsequence;
};

/// x <= y iff x comes no later than y and is numerically no larger.
FinitePoset seq_to_poset(const IntSeq& s);

struct ChainOrAntichain {
    enum class Kind { Chain, Antichain } kind;
    ElementSet elements;
};

/// For |P| = r*s + 1: an antichain of at least s+1 elements when the width
/// allows, else a chain of at least r+1 elements from the Perles cover.
/// Throws WrongCardinality or InstanceTooLarge.
ChainOrAntichain pre_es(const FinitePoset& p, std::size_t r, std::size_t s, const Caps& caps = {});

/// Increasing run of exactly m+1 values or decreasing run of exactly n+1,
/// trimmed to the earliest positions. Requires |s| = m*n + 1.
SubseqWitness es_subsequence(const IntSeq& s, std::size_t m, std::size_t n, const Caps& caps = {});

bool is_sub_seq(const IntSeq& sub, const IntSeq& parent);
bool is_increasing(const IntSeq& s);
bool is_decreasing(const IntSeq& s);
bool verify_subseq(const IntSeq& parent, const SubseqWitness& w);

}  // namespace orderkit
