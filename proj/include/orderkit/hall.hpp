// Copyright (c) orderkit contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <variant>
#include <vector>

#include "orderkit/caps.hpp"
#include "orderkit/element.hpp"
#include "orderkit/poset.hpp"

namespace orderkit {

/// Two disjoint non-empty vertex sets with edges running left to right.
class BipartiteGraph {
  public:
    /// Throws InvalidGraph naming the broken condition.
    static BipartiteGraph build(ElementSet left, ElementSet right, std::span<const ElementPair> edges);

    [[nodiscard]] const ElementSet& left() const { return left_; }
    [[nodiscard]] const ElementSet& right() const { return right_; }
    [[nodiscard]] const std::set<ElementPair>& edges() const { return edges_; }
    [[nodiscard]] bool has_edge(const Element& l, const Element& r) const { return edges_.contains({l, r}); }

  private:
    BipartiteGraph(ElementSet left, ElementSet right, std::set<ElementPair> edges)
        : left_(std::move(left)), right_(std::move(right)), edges_(std::move(edges)) {}

    ElementSet left_;
    ElementSet right_;
    std::set<ElementPair> edges_;
};

struct Matching {
    std::set<ElementPair> pairs;
    friend bool operator==(const Matching&, const Matching&) = default;
};

struct HallOk {};
/// A left subset with fewer neighbours than members; deficiency = |S| - |N(S)|.
struct HallViolation {
    ElementSet set;
    std::size_t deficiency = 0;
    friend bool operator==(const HallViolation&, const HallViolation&) = default;
};
using HallCheck = std::variant<HallOk, HallViolation>;

/// Right vertices adjacent to some member of s. Throws NotASubsetOfLeft.
ElementSet neighborhood(const BipartiteGraph& g, const ElementSet& s);

/// Checks |N(S)| >= |S| for every left subset, smallest subsets first and
/// lexicographically within a size, so the reported violation is canonical.
/// Throws InstanceTooLarge above caps.subset left vertices.
HallCheck hall_condition(const BipartiteGraph& g, const Caps& caps = {});

/// Vertices with the reflexive closure of the edge relation; height <= 2.
FinitePoset graph_to_poset(const BipartiteGraph& g);

/// L-perfect matching read off the two-element chains of a disjoint
/// minimum chain cover of graph_to_poset(g), or the Hall violation.
std::variant<Matching, HallViolation> find_l_perfect_matching(const BipartiteGraph& g, const Caps& caps = {});

bool verify_matching(const BipartiteGraph& g, const Matching& m, bool require_l_perfect);

struct SetFamily {
    std::map<Element, ElementSet> members;
};

struct SdrAssignment {
    std::map<Element, Element> choice;
    friend bool operator==(const SdrAssignment&, const SdrAssignment&) = default;
};

/// Members whose union is smaller than their number.
struct SdrViolation {
    ElementSet subfamily;
    friend bool operator==(const SdrViolation&, const SdrViolation&) = default;
};

/// Tags that keep member names and ground elements apart in one vertex space.
inline constexpr std::uint8_t kMemberTag = 1;
inline constexpr std::uint8_t kGroundTag = 2;

/// Member names on the left, ground elements on the right, membership edges.
/// Requires at least one member and a non-empty union.
BipartiteGraph family_to_graph(const SetFamily& f);

std::variant<SdrAssignment, SdrViolation> find_sdr(const SetFamily& f, const Caps& caps = {});

bool verify_sdr(const SetFamily& f, const SdrAssignment& a);
/// True when the union of the named members is smaller than their count.
bool is_sdr_violation(const SetFamily& f, const SdrViolation& v);

}  // namespace orderkit
