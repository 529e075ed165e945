#pragma once

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cli.hpp"
#include "dfd/dfd.hpp"
#include "dfd/testing/testkit.hpp"

namespace dfd::testing {

inline std::string fixture_path(const std::string& name) { return std::string(DFD_FIXTURE_DIR) + "/" + name; }
inline std::string golden_path(const std::string& name) { return std::string(DFD_GOLDEN_DIR) + "/" + name; }

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

inline Project parse_or_throw(std::string_view text) {
    auto parsed = dsl::parse_project(text);
    if (!parsed) {
        std::string msg;
        for (const auto& e : parsed.errors()) msg += dsl::format(e) + "\n";
        throw std::runtime_error(msg);
    }
    return std::move(parsed).value();
}

inline Project load_fixture(const std::string& name) { return parse_or_throw(read_file(fixture_path(name))); }

inline std::set<Code> error_codes(const Diagnostics& diags) {
    std::set<Code> out;
    for (const auto& d : diags)
        if (is_error(d)) out.insert(d.code);
    return out;
}

inline std::set<Code> codes(const Diagnostics& diags) {
    std::set<Code> out;
    for (const auto& d : diags) out.insert(d.code);
    return out;
}

inline std::size_t count_code(const Diagnostics& diags, Code code) {
    std::size_t n = 0;
    for (const auto& d : diags) n += d.code == code;
    return n;
}

struct CliResult {
    int status;
    std::string out;
    std::string err;
};

inline CliResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int status = cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

/// Varied but always feasible generator settings for a seed.
inline GenParams params_for(std::uint64_t seed) {
    std::mt19937_64 rng(seed * 7919 + 13);
    GenParams p;
    p.seed = seed;
    p.n_entities = 1 + static_cast<int>(rng() % 3);
    p.n_level0_processes = 2 + static_cast<int>(rng() % 3);
    p.n_stores = static_cast<int>(rng() % 3);
    p.n_internal_flows = static_cast<int>(rng() % 4);
    p.depth = 1 + static_cast<int>(rng() % 3);
    return p;
}

/// Every (parent, child) pair in a project that has a resolvable parent.
inline std::vector<std::pair<const Diagram*, const Diagram*>> balancing_pairs(const Project& project) {
    std::vector<std::pair<const Diagram*, const Diagram*>> out;
    for (const auto& d : project.diagrams()) {
        if (d.is_context()) continue;
        if (const Diagram* parent = resolve_parent(project, d)) out.emplace_back(parent, &d);
    }
    return out;
}

}  // namespace dfd::testing
