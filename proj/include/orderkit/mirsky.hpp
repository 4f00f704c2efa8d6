// Copyright (c) orderkit contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>

#include "orderkit/caps.hpp"
#include "orderkit/oracle.hpp"
#include "orderkit/poset.hpp"

namespace orderkit {

enum class ChainSource { Oracle, LayerWalk };

/// Height plus an antichain cover with exactly that many layers. Layers are
/// kept in peel order: layer 0 is maximal(P), layer k is the maximal set of
/// whatever remains after removing layers 0..k-1.
struct MirskyCertificate {
    std::size_t height = 0;
    ElementSet chain_witness;
    AntichainCover layers;
    ChainSource chain_source = ChainSource::Oracle;
};

SizedWitness height(const FinitePoset& p, const Caps& caps = {});

/// Polynomial. The chain witness comes from the oracle when the carrier is
/// within the oracle cap and from chain_through_layers otherwise.
MirskyCertificate mirsky_antichain_cover(const FinitePoset& p, const Caps& caps = {});

/// One element per layer, walking from the last layer back to the first and
/// always stepping to the smallest-id element strictly above the previous pick.
ElementSet chain_through_layers(const FinitePoset& p, const AntichainCover& layers);

struct MirskyReport {
    std::size_t height = 0;
    std::size_t cover_size = 0;
    bool equal = false;
};
MirskyReport check_mirsky(const FinitePoset& p, const Caps& caps = {});

}  // namespace orderkit
