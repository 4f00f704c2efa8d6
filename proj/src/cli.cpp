// Copyright (c) orderkit contributors.
// SPDX-License-Identifier: Apache-2.0
#include "orderkit/cli.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "orderkit/error.hpp"
#include "orderkit/io.hpp"

namespace orderkit {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::ParseError, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct Options {
    Caps caps;
    std::string instance_path;
    std::string certificate_path;
    std::size_t m = 0;
    std::size_t n = 0;
};

FinitePoset poset_of(const Instance& inst) {
    if (const auto* p = std::get_if<FinitePoset>(&inst.body)) return *p;
    if (const auto* s = std::get_if<IntSeq>(&inst.body)) return seq_to_poset(*s);
    throw Error(Errc::ValidationError, "command needs a poset or sequence instance, got " +
                                           std::string(to_string(inst.kind)));
}

template <typename T>
const T& body_of(const Instance& inst, InstanceKind want) {
    if (const auto* v = std::get_if<T>(&inst.body)) return *v;
    throw Error(Errc::ValidationError, "command needs a " + std::string(to_string(want)) + " instance, got " +
                                           std::string(to_string(inst.kind)));
}

int emit(std::ostream& out, const Json& j, int code) {
    out << j.dump() << '\n';
    return code;
}

int dispatch(const std::string& command, const Options& opt, std::ostream& out, std::ostream& err) {
    const Instance inst = parse_instance(read_file(opt.instance_path), opt.caps);
    if (const auto* p = std::get_if<FinitePoset>(&inst.body); p && p->over_soft_cap())
        err << "warning: " << p->size() << " elements exceeds the carrier cap of " << opt.caps.carrier_soft << '\n';

    if (command == "width") return emit(out, width_certificate(width(poset_of(inst), opt.caps)), kExitOk);
    if (command == "height") return emit(out, height_certificate(height(poset_of(inst), opt.caps)), kExitOk);
    if (command == "chain-cover")
        return emit(out, chain_cover_certificate(perles_chain_cover(poset_of(inst), opt.caps)), kExitOk);
    if (command == "antichain-cover")
        return emit(out, antichain_cover_certificate(mirsky_antichain_cover(poset_of(inst), opt.caps)), kExitOk);
    if (command == "check-dilworth") {
        const auto r = check_dilworth(poset_of(inst), opt.caps);
        return emit(out, dilworth_report(r), r.equal ? kExitOk : kExitViolation);
    }
    if (command == "check-mirsky") {
        const auto r = check_mirsky(poset_of(inst), opt.caps);
        return emit(out, mirsky_report(r), r.equal ? kExitOk : kExitViolation);
    }
    if (command == "matching") {
        const auto r = find_l_perfect_matching(body_of<BipartiteGraph>(inst, InstanceKind::Bigraph), opt.caps);
        return emit(out, matching_certificate(r), std::holds_alternative<Matching>(r) ? kExitOk : kExitViolation);
    }
    if (command == "sdr") {
        const auto r = find_sdr(body_of<SetFamily>(inst, InstanceKind::Family), opt.caps);
        return emit(out, sdr_certificate(r), std::holds_alternative<SdrAssignment>(r) ? kExitOk : kExitViolation);
    }
    if (command == "es") {
        const auto& s = body_of<IntSeq>(inst, InstanceKind::Sequence);
        return emit(out, es_certificate(opt.m, opt.n, es_subsequence(s, opt.m, opt.n, opt.caps)), kExitOk);
    }
    if (command == "verify") {
        const std::string text = read_file(opt.certificate_path);
        Json cert;
        try {
            cert = Json::parse(text);
        } catch (const Json::parse_error& e) {
            throw Error(Errc::ParseError, std::string("certificate: ") + e.what());
        }
        const auto outcome = verify_certificate(inst, cert, opt.caps);
        Json report{{"kind", "verify"}, {"valid", outcome.ok}, {"reason", outcome.reason}};
        return emit(out, report, outcome.ok ? kExitOk : kExitViolation);
    }
    throw Error(Errc::ParseError, "unknown command " + command);
}

}  // namespace

int run_command(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Certified chain/antichain covers, matchings and monotone subsequences", "orderkit"};
    app.require_subcommand(1);
    Options opt;

    auto add_caps = [&](CLI::App* sub) {
        sub->add_option("--oracle-cap", opt.caps.oracle, "largest antichain/chain search limit (max 64)")
            ->capture_default_str()
            ->check(CLI::Range(std::size_t{1}, kMaskBits));
        sub->add_option("--subset-cap", opt.caps.subset, "Hall subset enumeration limit (left vertices)")
            ->capture_default_str();
        sub->add_option("--carrier-cap", opt.caps.carrier_soft, "carrier size above which a warning is printed")
            ->capture_default_str();
    };

    const std::vector<std::pair<const char*, const char*>> instance_commands = {
        {"width", "largest antichain of a poset"},
        {"height", "largest chain of a poset"},
        {"chain-cover", "chain cover of size width (Perles recursion)"},
        {"antichain-cover", "antichain cover of size height (maximal layers)"},
        {"check-dilworth", "compare width with the constructed chain cover"},
        {"check-mirsky", "compare height with the constructed antichain cover"},
        {"matching", "L-perfect matching or Hall violation of a bipartite graph"},
        {"sdr", "system of distinct representatives of a set family"},
        {"es", "monotone subsequence of a distinct integer sequence"},
    };
    for (const auto& [name, help] : instance_commands) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("instance", opt.instance_path, "instance JSON file")->required();
        add_caps(sub);
        if (std::string_view(name) == "es") {
            sub->add_option("-m,--m", opt.m, "increasing run length minus one")->required();
            sub->add_option("-n,--n", opt.n, "decreasing run length minus one")->required();
        }
    }
    auto* verify = app.add_subcommand("verify", "re-check a certificate against its instance");
    verify->add_option("instance", opt.instance_path, "instance JSON file")->required();
    verify->add_option("certificate", opt.certificate_path, "certificate JSON file")->required();
    add_caps(verify);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitInputError;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        return dispatch(command, opt, out, err);
    } catch (const Error& e) {
        err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
        return kExitInputError;
    }
}

}  // namespace orderkit
