// Copyright (c) orderkit contributors.
// SPDX-License-Identifier: Apache-2.0
#include "orderkit/io.hpp"

#include <algorithm>

#include "orderkit/error.hpp"
#include "orderkit/oracle.hpp"

namespace orderkit {

std::string_view to_string(InstanceKind kind) {
    switch (kind) {
        case InstanceKind::Poset: return "poset";
        case InstanceKind::Bigraph: return "bigraph";
        case InstanceKind::Family: return "family";
        case InstanceKind::Sequence: return "sequence";
    }
    return "unknown";
}

namespace {

[[noreturn]] void invalid(const std::string& where, const std::string& what) {
    throw Error(Errc::ValidationError, where + ": " + what);
}

const Json& field(const Json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key)) invalid(where, std::string("missing \"") + key + "\"");
    return obj.at(key);
}

const Json& array_field(const Json& obj, const char* key, const std::string& where) {
    const Json& v = field(obj, key, where);
    if (!v.is_array()) invalid(where + "." + key, "expected an array");
    return v;
}

Element read_element(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Element(j.get<std::int64_t>());
    if (j.is_string()) return Element(j.get<std::string>());
    invalid(where, "element ids are integers or strings");
}

ElementSet read_id_list(const Json& arr, const std::string& where) {
    ElementSet out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string at = where + "[" + std::to_string(i) + "]";
        if (!out.insert(read_element(arr[i], at)).second) invalid(at, "duplicate id " + arr[i].dump());
    }
    return out;
}

std::vector<ElementPair> read_pairs(const Json& arr, const std::string& where) {
    std::vector<ElementPair> out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string at = where + "[" + std::to_string(i) + "]";
        if (!arr[i].is_array() || arr[i].size() != 2) invalid(at, "expected a two-element array");
        out.emplace_back(read_element(arr[i][0], at + "[0]"), read_element(arr[i][1], at + "[1]"));
    }
    return out;
}

InstanceKind infer_kind(const Json& j) {
    if (j.contains("kind")) {
        if (!j["kind"].is_string()) invalid("kind", "expected a string");
        const auto k = j["kind"].get<std::string>();
        if (k == "poset") return InstanceKind::Poset;
        if (k == "bigraph") return InstanceKind::Bigraph;
        if (k == "family") return InstanceKind::Family;
        if (k == "sequence") return InstanceKind::Sequence;
        invalid("kind", "unknown instance kind \"" + k + "\"");
    }
    if (j.contains("elements")) return InstanceKind::Poset;
    if (j.contains("left")) return InstanceKind::Bigraph;
    if (j.contains("members")) return InstanceKind::Family;
    if (j.contains("values")) return InstanceKind::Sequence;
    invalid("$", "cannot tell the instance kind");
}

FinitePoset read_poset(const Json& j, const Caps& caps) {
    const ElementSet elements = read_id_list(array_field(j, "elements", "$"), "elements");
    if (elements.empty()) invalid("elements", "carrier must be non-empty");
    std::vector<ElementPair> edges;
    if (j.contains("edges")) {
        edges = read_pairs(array_field(j, "edges", "$"), "edges");
        for (std::size_t i = 0; i < edges.size(); ++i)
            for (const auto* e : {&edges[i].first, &edges[i].second})
                if (!elements.contains(*e))
                    invalid("edges[" + std::to_string(i) + "]", "endpoint " + e->to_string() + " is not an element");
    }
    try {
        return FinitePoset::build(elements, edges, caps);
    } catch (const Error& e) {
        invalid("edges", e.what());
    }
}

BipartiteGraph read_bigraph(const Json& j) {
    const ElementSet left = read_id_list(array_field(j, "left", "$"), "left");
    const ElementSet right = read_id_list(array_field(j, "right", "$"), "right");
    if (left.empty()) invalid("left", "must be non-empty");
    if (right.empty()) invalid("right", "must be non-empty");
    for (const auto& v : left)
        if (right.contains(v)) invalid("right", "vertex " + v.to_string() + " is also a left vertex");
    std::vector<ElementPair> edges;
    if (j.contains("edges")) {
        edges = read_pairs(array_field(j, "edges", "$"), "edges");
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (!left.contains(edges[i].first) || !right.contains(edges[i].second))
                invalid("edges[" + std::to_string(i) + "]", "edge must run from a left to a right vertex");
    }
    return BipartiteGraph::build(left, right, edges);
}

SetFamily read_family(const Json& j) {
    const Json& members = field(j, "members", "$");
    if (!members.is_object()) invalid("members", "expected an object of name -> id list");
    SetFamily f;
    for (const auto& [name, ids] : members.items()) {
        const std::string at = "members." + name;
        if (!ids.is_array()) invalid(at, "expected an array");
        f.members.emplace(Element(name), read_id_list(ids, at));
    }
    return f;
}

IntSeq read_sequence(const Json& j) {
    const Json& arr = array_field(j, "values", "$");
    if (arr.empty()) invalid("values", "sequence must be non-empty");
    std::vector<std::int64_t> xs;
    std::set<std::int64_t> seen;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string at = "values[" + std::to_string(i) + "]";
        if (!arr[i].is_number_integer()) invalid(at, "expected an integer");
        const auto v = arr[i].get<std::int64_t>();
        if (!seen.insert(v).second) invalid(at, "duplicate value " + std::to_string(v) + " (values must be distinct)");
        xs.push_back(v);
    }
    return IntSeq::from_list(xs);
}

Json parse_json(std::string_view text, const char* what) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw Error(Errc::ParseError, std::string(what) + ": " + e.what());
    }
}

}  // namespace

Instance parse_instance(std::string_view text, const Caps& caps) {
    const Json j = parse_json(text, "instance");
    if (!j.is_object()) invalid("$", "instance must be a JSON object");
    const InstanceKind kind = infer_kind(j);
    switch (kind) {
        case InstanceKind::Poset: return {kind, read_poset(j, caps)};
        case InstanceKind::Bigraph: return {kind, read_bigraph(j)};
        case InstanceKind::Family: return {kind, read_family(j)};
        case InstanceKind::Sequence: return {kind, read_sequence(j)};
    }
    invalid("kind", "unreachable");
}

Json to_json(const Element& e) {
    if (e.is_int()) return e.as_int();
    return e.to_string();
}

Json to_json(const ElementSet& s) {
    Json out = Json::array();
    for (const auto& e : s) out.push_back(to_json(e));
    return out;
}

Json to_json(std::vector<ElementSet> members) {
    canonicalize(members);
    Json out = Json::array();
    for (const auto& m : members) out.push_back(to_json(m));
    return out;
}

namespace {

Json pairs_json(const std::vector<ElementPair>& pairs) {
    Json out = Json::array();
    for (const auto& [a, b] : pairs) out.push_back(Json::array({to_json(a), to_json(b)}));
    return out;
}

}  // namespace

Json instance_to_json(const Instance& instance) {
    Json out{{"kind", std::string(to_string(instance.kind))}};
    std::visit(
        [&](const auto& body) {
            using T = std::decay_t<decltype(body)>;
            if constexpr (std::is_same_v<T, FinitePoset>) {
                out["elements"] = to_json(body.carrier());
                out["edges"] = pairs_json(body.strict_pairs());
            } else if constexpr (std::is_same_v<T, BipartiteGraph>) {
                out["left"] = to_json(body.left());
                out["right"] = to_json(body.right());
                out["edges"] = pairs_json({body.edges().begin(), body.edges().end()});
            } else if constexpr (std::is_same_v<T, SetFamily>) {
                Json members = Json::object();
                for (const auto& [name, set] : body.members) members[name.to_string()] = to_json(set);
                out["members"] = members;
            } else {
                out["values"] = body.in_order();
            }
        },
        instance.body);
    return out;
}

Json width_certificate(const SizedWitness& w) {
    return {{"kind", "width"}, {"width", w.size}, {"antichain", to_json(w.witness)}};
}

Json height_certificate(const SizedWitness& h) {
    return {{"kind", "height"}, {"height", h.size}, {"chain", to_json(h.witness)}};
}

Json chain_cover_certificate(const DilworthCertificate& cert) {
    return {{"kind", "chain-cover"},
            {"width", cert.width},
            {"antichain", to_json(cert.antichain_witness)},
            {"cover", to_json(cert.cover.chains)},
            {"solver",
             {{"algorithm", "perles"},
              {"tie_break", "lexicographic-id"},
              {"disjoint", true},
              {"split_steps", cert.trace.split_steps},
              {"remove_steps", cert.trace.remove_steps},
              {"max_depth", cert.trace.max_depth}}}};
}

Json antichain_cover_certificate(const MirskyCertificate& cert) {
    Json layers = Json::array();
    for (const auto& layer : cert.layers.antichains) layers.push_back(to_json(layer));
    return {{"kind", "antichain-cover"},
            {"height", cert.height},
            {"chain", to_json(cert.chain_witness)},
            {"layers", layers},
            {"solver",
             {{"algorithm", "maximal-layer-peel"},
              {"tie_break", "lexicographic-id"},
              {"chain_witness", cert.chain_source == ChainSource::Oracle ? "oracle" : "layer-walk"}}}};
}

Json dilworth_report(const DilworthReport& r) {
    return {{"kind", "check-dilworth"}, {"width", r.width}, {"cover_size", r.cover_size}, {"equal", r.equal}};
}

Json mirsky_report(const MirskyReport& r) {
    return {{"kind", "check-mirsky"}, {"height", r.height}, {"cover_size", r.cover_size}, {"equal", r.equal}};
}

Json matching_certificate(const std::variant<Matching, HallViolation>& result) {
    if (const auto* v = std::get_if<HallViolation>(&result))
        return {{"kind", "matching"}, {"violation", {{"set", to_json(v->set)}, {"deficiency", v->deficiency}}}};
    const auto& m = std::get<Matching>(result);
    return {{"kind", "matching"},
            {"matching", pairs_json({m.pairs.begin(), m.pairs.end()})},
            {"solver", {{"algorithm", "perles-disjoint-cover"}, {"precondition_check", "checked"}}}};
}

Json sdr_certificate(const std::variant<SdrAssignment, SdrViolation>& result) {
    if (const auto* v = std::get_if<SdrViolation>(&result))
        return {{"kind", "sdr"}, {"violation", {{"subfamily", to_json(v->subfamily)}}}};
    const auto& a = std::get<SdrAssignment>(result);
    return {{"kind", "sdr"}, {"assignment", pairs_json({a.choice.begin(), a.choice.end()})}};
}

Json es_certificate(std::size_t m, std::size_t n, const SubseqWitness& w) {
    return {{"kind", "es"},
            {"m", m},
            {"n", n},
            {"direction", w.kind == Monotone::Increasing ? "increasing" : "decreasing"},
            {"subsequence", w.subsequence.in_order()}};
}

namespace {

[[noreturn]] void unreadable(const std::string& what) {
    throw Error(Errc::ParseError, "certificate: " + what);
}

const Json& cert_field(const Json& c, const char* key) {
    if (!c.contains(key)) unreadable(std::string("missing \"") + key + "\"");
    return c.at(key);
}

std::size_t cert_size(const Json& c, const char* key) {
    const Json& v = cert_field(c, key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
        unreadable(std::string("\"") + key + "\" must be a non-negative integer");
    return v.get<std::size_t>();
}

Element cert_element(const Json& j) {
    if (j.is_number_integer()) return Element(j.get<std::int64_t>());
    if (j.is_string()) return Element(j.get<std::string>());
    unreadable("element ids are integers or strings");
}

// Keeps duplicates visible: a listed id appearing twice is a malformed set.
std::optional<ElementSet> cert_set(const Json& j) {
    if (!j.is_array()) unreadable("expected an id array");
    ElementSet out;
    for (const auto& e : j)
        if (!out.insert(cert_element(e)).second) return std::nullopt;
    return out;
}

std::vector<ElementSet> cert_sets(const Json& j, bool& clean) {
    if (!j.is_array()) unreadable("expected an array of id arrays");
    std::vector<ElementSet> out;
    clean = true;
    for (const auto& s : j) {
        auto set = cert_set(s);
        if (!set) clean = false;
        out.push_back(set.value_or(ElementSet{}));
    }
    return out;
}

std::vector<ElementPair> cert_pairs(const Json& j) {
    if (!j.is_array()) unreadable("expected an array of pairs");
    std::vector<ElementPair> out;
    for (const auto& p : j) {
        if (!p.is_array() || p.size() != 2) unreadable("pairs have two entries");
        out.emplace_back(cert_element(p[0]), cert_element(p[1]));
    }
    return out;
}

VerifyOutcome fail(std::string why) { return {false, std::move(why)}; }
VerifyOutcome pass() { return {true, "ok"}; }

const FinitePoset& need_poset(const Instance& inst, std::optional<FinitePoset>& holder) {
    if (const auto* p = std::get_if<FinitePoset>(&inst.body)) return *p;
    if (const auto* s = std::get_if<IntSeq>(&inst.body)) return holder.emplace(seq_to_poset(*s));
    unreadable("certificate kind needs a poset or sequence instance");
}

template <typename T>
const T& need(const Instance& inst, const char* what) {
    if (const auto* v = std::get_if<T>(&inst.body)) return *v;
    unreadable(std::string("certificate kind needs a ") + what + " instance");
}

bool within(const FinitePoset& p, const Caps& caps) { return p.size() <= std::min(caps.oracle, kMaskBits); }

VerifyOutcome verify_width(const FinitePoset& p, const Json& c, const Caps& caps) {
    const auto w = cert_size(c, "width");
    const auto a = cert_set(cert_field(c, "antichain"));
    if (!a || !is_antichain(p, *a)) return fail("witness is not an antichain");
    if (a->size() != w) return fail("witness size differs from the claimed width");
    if (within(p, caps) && max_antichain(p, caps).size != w) return fail("a larger antichain exists");
    return pass();
}

VerifyOutcome verify_height(const FinitePoset& p, const Json& c, const Caps& caps) {
    const auto h = cert_size(c, "height");
    const auto ch = cert_set(cert_field(c, "chain"));
    if (!ch || !is_chain(p, *ch)) return fail("witness is not a chain");
    if (ch->size() != h) return fail("witness size differs from the claimed height");
    if (within(p, caps) && max_chain(p, caps).size != h) return fail("a longer chain exists");
    return pass();
}

VerifyOutcome verify_chain_cover_cert(const FinitePoset& p, const Json& c) {
    const auto w = cert_size(c, "width");
    const auto a = cert_set(cert_field(c, "antichain"));
    bool clean = false;
    const ChainCover cover{cert_sets(cert_field(c, "cover"), clean)};
    if (!clean || !verify_chain_cover(p, cover)) return fail("cover is not a chain cover");
    if (!a || !is_antichain(p, *a)) return fail("witness is not an antichain");
    if (a->size() != w || cover.size() != w) return fail("antichain, cover and width sizes disagree");
    return pass();
}

VerifyOutcome verify_antichain_cover_cert(const FinitePoset& p, const Json& c) {
    const auto h = cert_size(c, "height");
    const auto ch = cert_set(cert_field(c, "chain"));
    bool clean = false;
    const AntichainCover layers{cert_sets(cert_field(c, "layers"), clean)};
    if (!clean || !verify_antichain_cover(p, layers)) return fail("layers are not an antichain cover");
    if (!ch || !is_chain(p, *ch)) return fail("witness is not a chain");
    if (ch->size() != h || layers.size() != h) return fail("chain, layer count and height disagree");
    return pass();
}

VerifyOutcome verify_matching_cert(const BipartiteGraph& g, const Json& c) {
    if (c.contains("violation")) {
        const Json& v = c.at("violation");
        const auto s = cert_set(cert_field(v, "set"));
        const auto d = cert_size(v, "deficiency");
        if (!s || s->empty()) return fail("violation set is malformed");
        for (const auto& x : *s)
            if (!g.left().contains(x)) return fail("violation set leaves the left side");
        const auto nbrs = neighborhood(g, *s).size();
        if (nbrs >= s->size()) return fail("violation set satisfies Hall's condition");
        if (s->size() - nbrs != d) return fail("deficiency does not match");
        return pass();
    }
    const auto pairs = cert_pairs(cert_field(c, "matching"));
    Matching m{{pairs.begin(), pairs.end()}};
    if (m.pairs.size() != pairs.size()) return fail("matching lists a pair twice");
    if (!verify_matching(g, m, true)) return fail("not an L-perfect matching");
    return pass();
}

VerifyOutcome verify_sdr_cert(const SetFamily& f, const Json& c) {
    if (c.contains("violation")) {
        const auto s = cert_set(cert_field(c.at("violation"), "subfamily"));
        if (!s || !is_sdr_violation(f, SdrViolation{*s})) return fail("subfamily union is not too small");
        return pass();
    }
    SdrAssignment a;
    const auto pairs = cert_pairs(cert_field(c, "assignment"));
    for (const auto& [name, pick] : pairs)
        if (!a.choice.emplace(name, pick).second) return fail("member assigned twice");
    if (!verify_sdr(f, a)) return fail("not a system of distinct representatives");
    return pass();
}

VerifyOutcome verify_es_cert(const IntSeq& s, const Json& c) {
    const auto m = cert_size(c, "m");
    const auto n = cert_size(c, "n");
    const Json& dir = cert_field(c, "direction");
    if (!dir.is_string() || (dir != "increasing" && dir != "decreasing")) unreadable("bad direction");
    const Json& sub = cert_field(c, "subsequence");
    if (!sub.is_array()) unreadable("subsequence must be an array");
    std::vector<std::int64_t> xs;
    for (const auto& x : sub) {
        if (!x.is_number_integer()) unreadable("subsequence entries are integers");
        xs.push_back(x.get<std::int64_t>());
    }
    if (n != 0 && m > (s.size() - 1) / n) return fail("sequence length is not m*n+1");
    if (s.size() != m * n + 1) return fail("sequence length is not m*n+1");
    const bool inc = dir == "increasing";
    if (xs.size() != (inc ? m + 1 : n + 1)) return fail("subsequence has the wrong length");
    std::set<std::int64_t> distinct(xs.begin(), xs.end());
    if (xs.empty() || distinct.size() != xs.size()) return fail("subsequence repeats a value");
    const SubseqWitness w{inc ? Monotone::Increasing : Monotone::Decreasing, IntSeq::from_list(xs)};
    if (!verify_subseq(s, w)) return fail("not a monotone subsequence of the input");
    return pass();
}

}  // namespace

VerifyOutcome verify_certificate(const Instance& instance, const Json& cert, const Caps& caps) {
    if (!cert.is_object()) unreadable("expected a JSON object");
    const Json& kind_json = cert_field(cert, "kind");
    if (!kind_json.is_string()) unreadable("\"kind\" must be a string");
    const auto kind = kind_json.get<std::string>();
    std::optional<FinitePoset> holder;

    if (kind == "width") return verify_width(need_poset(instance, holder), cert, caps);
    if (kind == "height") return verify_height(need_poset(instance, holder), cert, caps);
    if (kind == "chain-cover") return verify_chain_cover_cert(need_poset(instance, holder), cert);
    if (kind == "antichain-cover") return verify_antichain_cover_cert(need_poset(instance, holder), cert);
    if (kind == "check-dilworth") {
        const auto r = check_dilworth(need_poset(instance, holder), caps);
        if (cert_size(cert, "width") != r.width || cert_size(cert, "cover_size") != r.cover_size)
            return fail("report does not match a recomputation");
        if (!cert_field(cert, "equal").is_boolean() || cert["equal"].get<bool>() != r.equal)
            return fail("equality flag does not match a recomputation");
        return r.equal ? pass() : fail("width and cover size differ");
    }
    if (kind == "check-mirsky") {
        const auto r = check_mirsky(need_poset(instance, holder), caps);
        if (cert_size(cert, "height") != r.height || cert_size(cert, "cover_size") != r.cover_size)
            return fail("report does not match a recomputation");
        if (!cert_field(cert, "equal").is_boolean() || cert["equal"].get<bool>() != r.equal)
            return fail("equality flag does not match a recomputation");
        return r.equal ? pass() : fail("height and cover size differ");
    }
    if (kind == "matching") return verify_matching_cert(need<BipartiteGraph>(instance, "bigraph"), cert);
    if (kind == "sdr") return verify_sdr_cert(need<SetFamily>(instance, "family"), cert);
    if (kind == "es") return verify_es_cert(need<IntSeq>(instance, "sequence"), cert);
    unreadable("unknown certificate kind \"" + kind + "\"");
}

}  // namespace orderkit
