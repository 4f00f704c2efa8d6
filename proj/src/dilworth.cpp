// Copyright (c) orderkit contributors.
// SPDX-License-Identifier: Apache-2.0
#include "orderkit/dilworth.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "orderkit/error.hpp"

namespace orderkit {

namespace {

void ensure(bool condition, const char* what) {
    if (!condition) throw std::logic_error(std::string("Perles invariant violated: ") + what);
}

ElementSet without(const ElementSet& s, const ElementSet& drop) {
    ElementSet out;
    std::set_difference(s.begin(), s.end(), drop.begin(), drop.end(), std::inserter(out, out.end()));
    return out;
}

// For each chain, its unique element of `antichain`.
std::map<Element, const ElementSet*> index_by_antichain(const std::vector<ElementSet>& chains,
                                                        const ElementSet& antichain) {
    std::map<Element, const ElementSet*> out;
    for (const auto& c : chains) {
        std::vector<Element> shared;
        std::set_intersection(c.begin(), c.end(), antichain.begin(), antichain.end(), std::back_inserter(shared));
        ensure(shared.size() == 1, "each chain of a half meets the antichain exactly once");
        ensure(out.emplace(shared.front(), &c).second, "antichain element claimed by two chains");
    }
    return out;
}

class Perles {
  public:
    Perles(const Caps& caps, PerlesTrace& trace) : caps_(caps), trace_(trace) {}

    std::vector<ElementSet> cover(const FinitePoset& p, std::size_t depth) {
        trace_.max_depth = std::max(trace_.max_depth, depth);
        const std::size_t m = max_antichain(p, caps_).size;
        const ElementSet minimal = minimal_elements(p);
        const ElementSet maximal = maximal_elements(p);

        std::optional<ElementSet> inner;
        for_each_antichain_of_size(
            p, m,
            [&](const ElementSet& a) {
                if (a == minimal || a == maximal) return true;
                inner = a;
                return false;
            },
            caps_);

        std::vector<ElementSet> out = inner ? split(p, *inner, m, depth) : peel(p, minimal, maximal, m, depth);
        ensure(out.size() == m, "cover size equals width");
        return out;
    }

  private:
    std::vector<ElementSet> split(const FinitePoset& p, const ElementSet& a, std::size_t m, std::size_t depth) {
        ++trace_.split_steps;
        const auto [above, below] = split_around(p, a);
        ElementSet both = above;
        both.insert(below.begin(), below.end());
        ensure(both == p.carrier(), "above and below together cover the carrier");
        ensure(std::includes(above.begin(), above.end(), a.begin(), a.end()) &&
                   std::includes(below.begin(), below.end(), a.begin(), a.end()),
               "antichain lies in both halves");
        ensure(above.size() < p.size() && below.size() < p.size(), "both halves are strictly smaller");

        const auto upper = cover(restrict_to(p, above), depth + 1);
        const auto lower = cover(restrict_to(p, below), depth + 1);
        ensure(upper.size() == m && lower.size() == m, "each half keeps the width");

        const auto up = index_by_antichain(upper, a);
        const auto down = index_by_antichain(lower, a);
        std::vector<ElementSet> joined;
        for (const auto& x : a) {
            ElementSet chain = *up.at(x);
            chain.insert(down.at(x)->begin(), down.at(x)->end());
            joined.push_back(std::move(chain));
        }
        return joined;
    }

    std::vector<ElementSet> peel(const FinitePoset& p, const ElementSet& minimal, const ElementSet& maximal,
                                 std::size_t m, std::size_t depth) {
        ++trace_.remove_steps;
        const Element x = *minimal.begin();
        const Element y = maximal_above(p, x);
        ElementSet pair{x, y};
        ensure(maximal.contains(y), "partner is maximal");

        const ElementSet rest = without(p.carrier(), pair);
        if (rest.empty()) return {pair};
        auto out = cover(restrict_to(p, rest), depth + 1);
        ensure(out.size() + 1 == m, "remainder has width one less");
        out.push_back(std::move(pair));
        return out;
    }

    const Caps& caps_;
    PerlesTrace& trace_;
};

}  // namespace

SizedWitness width(const FinitePoset& p, const Caps& caps) { return max_antichain(p, caps); }

AboveBelow split_around(const FinitePoset& p, const ElementSet& antichain) {
    AboveBelow out;
    for (const auto& x : p.elements())
        for (const auto& y : antichain) {
            if (p.le(y, x)) out.above.insert(x);
            if (p.le(x, y)) out.below.insert(x);
        }
    return out;
}

DilworthCertificate perles_chain_cover(const FinitePoset& p, const Caps& caps) {
    const auto top = max_antichain(p, caps);
    DilworthCertificate cert;
    cert.width = top.size;
    cert.antichain_witness = top.witness;
    Perles solver(caps, cert.trace);
    cert.cover.chains = solver.cover(p, 0);
    canonicalize(cert.cover.chains);
    return cert;
}

DisjointCover disjointify_cover(const FinitePoset& p, const ChainCover& cover, const Caps& caps) {
    if (!verify_chain_cover(p, cover)) throw Error(Errc::InvalidCover, "input is not a chain cover");

    DisjointCover out;
    if (p.size() <= std::min(caps.oracle, kMaskBits)) {
        out.minimality_checked = true;
        const auto w = max_antichain(p, caps).size;
        if (cover.size() != w)
            throw Error(Errc::NotASmallestCover, "cover has " + std::to_string(cover.size()) +
                                                     " chains but the smallest has " + std::to_string(w));
    }

    std::vector<ElementSet> sorted = cover.chains;
    canonicalize(sorted);
    ElementSet taken;
    for (const auto& chain : sorted) {
        ElementSet fresh = without(chain, taken);
        taken.insert(fresh.begin(), fresh.end());
        if (!fresh.empty()) out.cover.chains.push_back(std::move(fresh));
    }
    canonicalize(out.cover.chains);
    return out;
}

DilworthReport check_dilworth(const FinitePoset& p, const Caps& caps) {
    const auto w = width(p, caps).size;
    const auto cert = perles_chain_cover(p, caps);
    return {w, cert.cover.size(), w == cert.cover.size() && verify_chain_cover(p, cert.cover)};
}

}  // namespace orderkit
