// Copyright (c) orderkit contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>

#include "orderkit/caps.hpp"
#include "orderkit/oracle.hpp"
#include "orderkit/poset.hpp"

namespace orderkit {

/// Counters from one run of the Perles recursion.
struct PerlesTrace {
    std::size_t split_steps = 0;   // a maximum antichain avoided both extremal sets
    std::size_t remove_steps = 0;  // min/max pair peeled off
    std::size_t max_depth = 0;
};

/// Width plus a chain cover of exactly that many chains. The antichain
/// witness and the cover certify each other: no cover can be smaller than
/// an antichain, so both are optimal.
struct DilworthCertificate {
    std::size_t width = 0;
    ElementSet antichain_witness;
    ChainCover cover;
    PerlesTrace trace;
};

SizedWitness width(const FinitePoset& p, const Caps& caps = {});

/// Elements above and below an antichain.
struct AboveBelow {
    ElementSet above;
    ElementSet below;
};
AboveBelow split_around(const FinitePoset& p, const ElementSet& antichain);

/// Chain cover of size width(P), built by recursing on strictly smaller
/// restrictions: either split around a maximum antichain that is neither
/// the minimal nor the maximal set and glue the two halves' chains through
/// it, or remove a minimal element together with a maximal element above it.
/// The cover is pairwise disjoint and canonically ordered.
DilworthCertificate perles_chain_cover(const FinitePoset& p, const Caps& caps = {});

struct DisjointCover {
    ChainCover cover;
    bool minimality_checked = false;
};

/// Rewrites a smallest chain cover as a pairwise disjoint one of the same
/// size. Minimality is checked against the width when the carrier is within
/// the oracle cap (NotASmallestCover on failure) and trusted above it.
/// Throws InvalidCover if `cover` does not cover P with chains.
DisjointCover disjointify_cover(const FinitePoset& p, const ChainCover& cover, const Caps& caps = {});

struct DilworthReport {
    std::size_t width = 0;
    std::size_t cover_size = 0;
    bool equal = false;
};
DilworthReport check_dilworth(const FinitePoset& p, const Caps& caps = {});

}  // namespace orderkit
