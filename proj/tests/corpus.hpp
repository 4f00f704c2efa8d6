// Copyright (c) orderkit contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Instance files shipped under tests/data and the commands that apply to each.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace orderkit::testing {

inline std::string data_path(const std::string& name) { return std::string(ORDERKIT_TEST_DATA) + "/" + name; }

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct CorpusEntry {
    std::string file;
    std::vector<std::vector<std::string>> commands;  // extra args after "<cmd> <file>"
};

inline std::vector<CorpusEntry> corpus() {
    const std::vector<std::vector<std::string>> poset_cmds{{"width"},          {"height"},         {"chain-cover"},
                                                           {"antichain-cover"}, {"check-dilworth"}, {"check-mirsky"}};
    return {
        {"p3.json", poset_cmds},
        {"grid.json", poset_cmds},
        {"poset8.json", poset_cmds},
        {"badgraph.json", {{"matching"}}},
        {"goodgraph.json", {{"matching"}}},
        {"family.json", {{"sdr"}}},
        {"family_bad.json", {{"sdr"}}},
        {"seq.json", {{"es", "--m", "2", "--n", "2"}, {"chain-cover"}, {"antichain-cover"}}},
        {"seq10.json", {{"es", "--m", "3", "--n", "3"}, {"width"}, {"height"}}},
    };
}

}  // namespace orderkit::testing
