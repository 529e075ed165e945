#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "dfd/name.hpp"
#include "dfd/source_span.hpp"

namespace dfd {

enum class Severity : std::uint8_t { Error, Warning };

/// Diagnostic codes in catalog order. The enumerator order is the order in
/// which per-diagram checks report.
enum class Code : std::uint8_t {
    S001,  // unresolved flow endpoint
    S101,  // process without input
    S102,  // process without output
    S103,  // store without input
    S104,  // store without output
    S105,  // entity without flows
    S201,  // entity -> entity
    S202,  // store -> store
    S203,  // entity <-> store
    S205,  // self-loop
    S301,  // duplicate process
    S302,  // duplicate flow
    S303,  // duplicate store
    S304,  // duplicate entity
    S501,  // context process count / id
    S502,  // store in context
    S503,  // context flow not process <-> entity
    W601,  // process shares an input and output flow name
    W701,  // process numbering convention
    C101,  // parent entity missing in child
    C102,  // child entity absent from parent
    C103,  // boundary flow missing in child
    C104,  // boundary flow extra in child
    C105,  // context diagram count != 1
    C106,  // parent-adjacent store missing in child
    C202,  // unresolvable decomposition target
    C203,  // process decomposed more than once
};

struct CatalogEntry {
    Code code;
    std::string_view id;
    Severity severity;
    std::string_view rule;  // rule family the code enforces
    std::string_view summary;
};

inline constexpr std::array<CatalogEntry, 27> kCatalog{{
    {Code::S001, "S001", Severity::Error, "model", "data flow endpoint names no declared element"},
    {Code::S101, "S101", Severity::Error, "connectivity", "process has no input data flow"},
    {Code::S102, "S102", Severity::Error, "connectivity", "process has no output data flow"},
    {Code::S103, "S103", Severity::Error, "connectivity", "data store has no input data flow"},
    {Code::S104, "S104", Severity::Error, "connectivity", "data store has no output data flow"},
    {Code::S105, "S105", Severity::Error, "connectivity", "external entity has no data flow"},
    {Code::S201, "S201", Severity::Error, "illegal connection", "data flow between two external entities"},
    {Code::S202, "S202", Severity::Error, "illegal connection", "data flow between two data stores"},
    {Code::S203, "S203", Severity::Error, "illegal connection", "data flow between an external entity and a data store"},
    {Code::S205, "S205", Severity::Error, "model", "data flow starts and ends at the same element"},
    {Code::S301, "S301", Severity::Error, "name uniqueness", "duplicate process"},
    {Code::S302, "S302", Severity::Error, "name uniqueness", "duplicate data flow name"},
    {Code::S303, "S303", Severity::Error, "name uniqueness", "duplicate data store name"},
    {Code::S304, "S304", Severity::Error, "name uniqueness", "duplicate external entity name"},
    {Code::S501, "S501", Severity::Error, "context shape", "context diagram must hold exactly one process numbered 0"},
    {Code::S502, "S502", Severity::Error, "context shape", "data store in context diagram"},
    {Code::S503, "S503", Severity::Error, "context shape", "context data flow not between the process and an external entity"},
    {Code::W601, "W601", Severity::Warning, "flow naming", "process uses one flow name for input and output"},
    {Code::W701, "W701", Severity::Warning, "process numbering", "process number breaks the numbering convention"},
    {Code::C101, "C101", Severity::Error, "entity balancing", "parent external entity missing in child diagram"},
    {Code::C102, "C102", Severity::Error, "entity balancing", "child external entity not present in parent"},
    {Code::C103, "C103", Severity::Error, "flow balancing", "boundary data flow missing in child diagram"},
    {Code::C104, "C104", Severity::Error, "flow balancing", "child boundary data flow not present in parent"},
    {Code::C105, "C105", Severity::Error, "project shape", "project must have exactly one context diagram"},
    {Code::C106, "C106", Severity::Error, "store balancing", "parent data store missing in child diagram"},
    {Code::C202, "C202", Severity::Error, "project shape", "decomposed process cannot be resolved"},
    {Code::C203, "C203", Severity::Error, "project shape", "process decomposed by more than one diagram"},
}};

inline const CatalogEntry& catalog_entry(Code code) { return kCatalog[static_cast<std::size_t>(code)]; }
inline std::string_view to_string(Code code) { return catalog_entry(code).id; }
inline Severity severity_of(Code code) { return catalog_entry(code).severity; }

inline std::optional<Code> code_from_string(std::string_view id) {
    for (const auto& entry : kCatalog)
        if (entry.id == id) return entry.code;
    return std::nullopt;
}

inline std::string_view to_string(Severity severity) {
    return severity == Severity::Error ? "error" : "warning";
}

enum class SubjectKind : std::uint8_t { Process, Entity, Store, Flow, Diagram };

inline std::string_view to_string(SubjectKind kind) {
    switch (kind) {
        case SubjectKind::Process: return "process";
        case SubjectKind::Entity: return "entity";
        case SubjectKind::Store: return "store";
        case SubjectKind::Flow: return "flow";
        case SubjectKind::Diagram: return "diagram";
    }
    return "?";
}

struct Subject {
    SubjectKind kind;
    std::string value;

    friend bool operator==(const Subject&, const Subject&) = default;
    friend auto operator<=>(const Subject&, const Subject&) = default;
};

struct Diagnostic {
    Code code;
    Severity severity;
    std::optional<Name> diagram;  // empty for project-level findings
    std::vector<Subject> subjects;
    std::string message;
    std::optional<SourceSpan> span;

    friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

using Diagnostics = std::vector<Diagnostic>;

inline Diagnostic make_diagnostic(Code code, std::optional<Name> diagram, std::vector<Subject> subjects,
                                  std::string message, std::optional<SourceSpan> span = std::nullopt) {
    return Diagnostic{code, severity_of(code), std::move(diagram), std::move(subjects), std::move(message), span};
}

inline bool is_error(const Diagnostic& d) { return d.severity == Severity::Error; }

inline std::size_t count_errors(const Diagnostics& diags) {
    return static_cast<std::size_t>(std::count_if(diags.begin(), diags.end(), is_error));
}

/// Sorts into catalog order, then by subjects; message breaks remaining ties.
inline void sort_catalog_order(Diagnostics& diags) {
    std::stable_sort(diags.begin(), diags.end(), [](const Diagnostic& a, const Diagnostic& b) {
        return std::tie(a.code, a.subjects, a.message) < std::tie(b.code, b.subjects, b.message);
    });
}

}  // namespace dfd
