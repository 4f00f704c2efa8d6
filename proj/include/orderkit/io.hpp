// Copyright (c) orderkit contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// JSON instance files and solver certificates. Sets are written in
// ascending id order and covers sorted by their smallest member, so equal
// results serialize to identical bytes.

#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "orderkit/caps.hpp"
#include "orderkit/dilworth.hpp"
#include "orderkit/erdos_szekeres.hpp"
#include "orderkit/hall.hpp"
#include "orderkit/mirsky.hpp"
#include "orderkit/poset.hpp"

namespace orderkit {

using Json = nlohmann::json;

enum class InstanceKind { Poset, Bigraph, Family, Sequence };
std::string_view to_string(InstanceKind kind);

struct Instance {
    InstanceKind kind;
    std::variant<FinitePoset, BipartiteGraph, SetFamily, IntSeq> body;
};

/// Throws ParseError for malformed JSON and ValidationError naming the
/// offending location for anything that fails the instance invariants.
Instance parse_instance(std::string_view text, const Caps& caps = {});
Json instance_to_json(const Instance& instance);

Json to_json(const Element& e);
Json to_json(const ElementSet& s);
Json to_json(std::vector<ElementSet> members);  // canonical order

Json width_certificate(const SizedWitness& w);
Json height_certificate(const SizedWitness& h);
Json chain_cover_certificate(const DilworthCertificate& cert);
Json antichain_cover_certificate(const MirskyCertificate& cert);
Json dilworth_report(const DilworthReport& r);
Json mirsky_report(const MirskyReport& r);
Json matching_certificate(const std::variant<Matching, HallViolation>& result);
Json sdr_certificate(const std::variant<SdrAssignment, SdrViolation>& result);
Json es_certificate(std::size_t m, std::size_t n, const SubseqWitness& w);

struct VerifyOutcome {
    bool ok = false;
    std::string reason;
};

/// Re-checks a certificate against its instance. Throws ParseError when the
/// certificate is structurally unreadable; semantic failures come back as
/// ok == false.
VerifyOutcome verify_certificate(const Instance& instance, const Json& cert, const Caps& caps = {});

}  // namespace orderkit
