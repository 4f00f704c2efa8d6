// Copyright (c) orderkit contributors.
// SPDX-License-Identifier: Apache-2.0
#include "orderkit/mirsky.hpp"

#include <stdexcept>

namespace orderkit {

SizedWitness height(const FinitePoset& p, const Caps& caps) { return max_chain(p, caps); }

namespace {

std::vector<ElementSet> peel_maximal_layers(const FinitePoset& p) {
    std::vector<ElementSet> layers;
    std::vector<bool> alive(p.size(), true);
    std::size_t remaining = p.size();
    while (remaining > 0) {
        std::vector<std::size_t> layer;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (!alive[i]) continue;
            bool maximal = true;
            for (std::size_t j = 0; j < p.size() && maximal; ++j) maximal = !(alive[j] && p.lt_at(i, j));
            if (maximal) layer.push_back(i);
        }
        if (layer.empty()) throw std::logic_error("finite poset without a maximal element");
        ElementSet out;
        for (auto i : layer) {
            alive[i] = false;
            out.insert(p.elements()[i]);
        }
        remaining -= layer.size();
        layers.push_back(std::move(out));
    }
    return layers;
}

}  // namespace

ElementSet chain_through_layers(const FinitePoset& p, const AntichainCover& layers) {
    ElementSet chain;
    if (layers.antichains.empty()) return chain;
    Element prev = *layers.antichains.back().begin();
    chain.insert(prev);
    for (auto it = layers.antichains.rbegin() + 1; it != layers.antichains.rend(); ++it) {
        bool found = false;
        for (const auto& y : *it)
            if (p.lt(prev, y)) {
                prev = y;
                found = true;
                break;
            }
        if (!found) throw std::logic_error("layer has no element above " + prev.to_string());
        chain.insert(prev);
    }
    return chain;
}

MirskyCertificate mirsky_antichain_cover(const FinitePoset& p, const Caps& caps) {
    MirskyCertificate cert;
    cert.layers.antichains = peel_maximal_layers(p);
    cert.height = cert.layers.size();
    if (p.size() <= std::min(caps.oracle, kMaskBits)) {
        cert.chain_witness = max_chain(p, caps).witness;
        cert.chain_source = ChainSource::Oracle;
    } else {
        cert.chain_witness = chain_through_layers(p, cert.layers);
        cert.chain_source = ChainSource::LayerWalk;
    }
    return cert;
}

MirskyReport check_mirsky(const FinitePoset& p, const Caps& caps) {
    const auto h = height(p, caps).size;
    const auto cert = mirsky_antichain_cover(p, caps);
    return {h, cert.layers.size(), h == cert.layers.size() && verify_antichain_cover(p, cert.layers)};
}

}  // namespace orderkit
