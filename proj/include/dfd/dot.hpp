#pragma once

#include <string>
#include <string_view>

#include "dfd/model.hpp"

namespace dfd {

namespace detail {

inline std::string dot_quote(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out + "\"";
}

// Record labels additionally treat these as field syntax.
inline std::string record_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (c == '{' || c == '}' || c == '|' || c == '<' || c == '>') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

inline std::string node_id(const Diagram& d, const Endpoint& e) {
    const char* kind = is_process(e) ? "process" : is_entity(e) ? "entity" : "store";
    return dot_quote(d.title().str() + "/" + kind + "/" + endpoint_key(e));
}

}  // namespace detail

/// Graphviz rendering, one digraph per diagram. Processes are rounded
/// boxes, entities plain boxes, stores records labelled "Dn | name". Flows
/// with unresolved endpoints are left out.
inline std::string export_dot(const Project& project) {
    std::string out = "// dfdlint graph export\n";
    for (const auto& d : project.diagrams()) {
        out += "digraph " + detail::dot_quote(d.title().str()) + " {\n";
        out += "  rankdir=LR;\n";
        for (const auto& p : d.processes())
            out += "  " + detail::node_id(d, ProcessRef{p.id}) + " [shape=box, style=rounded, label=" +
                   detail::dot_quote(p.id.str() + ": " + p.name.str()) + "];\n";
        for (const auto& e : d.entities())
            out += "  " + detail::node_id(d, EntityRef{e.name}) + " [shape=box, label=" +
                   detail::dot_quote(e.name.str()) + "];\n";
        std::size_t n = 0;
        for (const auto& s : d.stores())
            out += "  " + detail::node_id(d, StoreRef{s.name}) + " [shape=record, label=" +
                   detail::dot_quote("D" + std::to_string(++n) + " | " + detail::record_escape(s.name.str())) +
                   "];\n";
        const auto& flows = d.flows();
        for (std::size_t i = 0; i < flows.size(); ++i) {
            if (d.flow_status(i) == FlowStatus::Unresolved) continue;
            out += "  " + detail::node_id(d, flows[i].source) + " -> " + detail::node_id(d, flows[i].target) +
                   " [label=" + detail::dot_quote(flows[i].name.str()) + "];\n";
        }
        out += "}\n";
    }
    return out;
}

}  // namespace dfd
