#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include <nlohmann/json.hpp>

#include "dfd/diagnostic.hpp"

namespace dfd {

/// Plain-text report.
///
/// With findings: an "Error List" header, then "Syntax Errors" (S codes),
/// "Semantics Errors" (C codes) and "Warnings" (W codes), empty sections
/// omitted, one `CODE: message` line per diagnostic in input order.
/// Without findings the output is the single consistency line.
inline std::string render_text(const Diagnostics& diags, std::size_t diagram_count) {
    if (diags.empty())
        return diagram_count == 2 ? "Both diagrams are consistent.\n" : "All diagrams are consistent.\n";

    struct Section {
        char prefix;
        const char* heading;
    };
    static constexpr Section kSections[] = {{'S', "Syntax Errors"}, {'C', "Semantics Errors"}, {'W', "Warnings"}};

    std::string out = "Error List\n";
    for (const auto& section : kSections) {
        std::string lines;
        for (const auto& d : diags) {
            const std::string_view id = to_string(d.code);
            if (id.front() != section.prefix) continue;
            lines.append(id).append(": ").append(d.message).push_back('\n');
        }
        if (lines.empty()) continue;
        out.append("\n").append(section.heading).append("\n").append(lines);
    }
    return out;
}

/// JSON array, one object per diagnostic. Sorted stably by diagram (in order
/// of first appearance, project-level findings first), code, then subjects.
inline std::string render_structured(const Diagnostics& diags) {
    std::map<std::string, std::size_t> rank;
    for (const auto& d : diags)
        if (d.diagram) rank.emplace(d.diagram->str(), rank.size() + 1);
    auto rank_of = [&](const Diagnostic& d) -> std::size_t { return d.diagram ? rank.at(d.diagram->str()) : 0; };

    std::vector<const Diagnostic*> sorted;
    for (const auto& d : diags) sorted.push_back(&d);
    std::stable_sort(sorted.begin(), sorted.end(), [&](const Diagnostic* a, const Diagnostic* b) {
        return std::make_tuple(rank_of(*a), a->code, std::cref(a->subjects)) <
               std::make_tuple(rank_of(*b), b->code, std::cref(b->subjects));
    });

    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const Diagnostic* d : sorted) {
        nlohmann::ordered_json item;
        item["code"] = std::string(to_string(d->code));
        item["severity"] = std::string(to_string(d->severity));
        item["diagram"] = d->diagram ? nlohmann::ordered_json(d->diagram->str()) : nlohmann::ordered_json(nullptr);
        item["subjects"] = nlohmann::ordered_json::array();
        for (const auto& s : d->subjects)
            item["subjects"].push_back({{"kind", std::string(to_string(s.kind))}, {"name", s.value}});
        item["message"] = d->message;
        if (d->span)
            item["span"] = {{"line", d->span->line}, {"column", d->span->column}, {"length", d->span->length}};
        else
            item["span"] = nullptr;
        doc.push_back(std::move(item));
    }
    return doc.dump(2) + "\n";
}

}  // namespace dfd
