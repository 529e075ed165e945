#pragma once

#include <algorithm>
#include <iterator>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "dfd/diagnostic.hpp"
#include "dfd/model.hpp"
#include "dfd/syntax_rules.hpp"

namespace dfd {

/// Differences between a decomposed process in its parent diagram and the
/// child diagram that decomposes it. Empty iff the pair is balanced.
struct BalancingReport {
    Name parent_title;
    Name child_title;
    ProcessId focus;
    SignatureSet missing_in_child;
    SignatureSet extra_in_child;
    std::set<Name> missing_entities;
    std::set<Name> extra_entities;
    std::set<Name> missing_stores;

    bool empty() const {
        return missing_in_child.empty() && extra_in_child.empty() && missing_entities.empty() &&
               extra_entities.empty() && missing_stores.empty();
    }

    friend bool operator==(const BalancingReport&, const BalancingReport&) = default;
};

struct BalancingResult {
    BalancingReport report;
    Diagnostics diagnostics;
};

/// Entities the child must show: every context entity for a context parent,
/// otherwise the entities connected to `focus`.
inline std::set<Name> adjacent_entities(const Diagram& parent, const ProcessId& focus) {
    std::set<Name> out;
    if (parent.is_context()) {
        for (const auto& e : parent.entities()) out.insert(e.name);
        return out;
    }
    for (const auto& sig : neighbor_signature(parent, focus))
        if (auto* e = std::get_if<EntityRef>(&sig.far_end)) out.insert(e->name);
    return out;
}

inline std::set<Name> adjacent_stores(const Diagram& parent, const ProcessId& focus) {
    std::set<Name> out;
    for (const auto& sig : neighbor_signature(parent, focus))
        if (auto* s = std::get_if<StoreRef>(&sig.far_end)) out.insert(s->name);
    return out;
}

/// "Less data flow: <check list> - To external entity 'Admin Staff'"
inline std::string describe_crossing(std::string_view lead, const BoundarySignature& sig) {
    return std::string(lead) + " data flow: <" + sig.flow_name.str() + "> - " +
           (sig.direction == Direction::OutOfFocus ? "To " : "From ") + describe(sig.far_end);
}

/// Compares a parent diagram with the child decomposing one of its processes.
///
/// Entities: those adjacent to the focus in the parent (all of them for a
/// context parent) against those declared in the child, both directions
/// (C101 / C102). Stores adjacent to the focus must be declared in the child
/// (C106); further child stores are internal. Boundary flows: the focus's
/// signatures in the parent against the child's boundary signatures, both
/// directions (C103 / C104).
inline BalancingResult check_balancing(const Diagram& parent, const Diagram& child) {
    auto focus = child.focus();
    if (!focus) throw Error(ErrorKind::NotADecomposition, "'" + child.title().str() + "' is a context diagram");
    if (!parent.find_process(*focus))
        throw Error(ErrorKind::FocusUnresolved, "process " + focus->str() + " is not declared in '" +
                                                    parent.title().str() + "'");

    BalancingReport report{parent.title(), child.title(), *focus, {}, {}, {}, {}, {}};

    const std::set<Name> parent_entities = adjacent_entities(parent, *focus);
    std::set<Name> child_entities;
    for (const auto& e : child.entities()) child_entities.insert(e.name);
    std::set_difference(parent_entities.begin(), parent_entities.end(), child_entities.begin(),
                        child_entities.end(), std::inserter(report.missing_entities, report.missing_entities.end()));
    std::set_difference(child_entities.begin(), child_entities.end(), parent_entities.begin(),
                        parent_entities.end(), std::inserter(report.extra_entities, report.extra_entities.end()));

    const std::set<Name> boundary_stores = adjacent_stores(parent, *focus);
    for (const auto& s : boundary_stores)
        if (!child.has_store(s)) report.missing_stores.insert(s);

    const SignatureSet expected = neighbor_signature(parent, *focus);
    const SignatureSet actual = child_boundary_signature(child, boundary_stores);
    std::set_difference(expected.begin(), expected.end(), actual.begin(), actual.end(),
                        std::inserter(report.missing_in_child, report.missing_in_child.end()));
    std::set_difference(actual.begin(), actual.end(), expected.begin(), expected.end(),
                        std::inserter(report.extra_in_child, report.extra_in_child.end()));

    Diagnostics diags;
    const Name& at = child.title();
    for (const auto& n : report.missing_entities)
        diags.push_back(make_diagnostic(Code::C101, at, {{SubjectKind::Entity, n.str()}},
                                        "Less external entity: '" + n.str() + "'", child.origin().span));
    for (const auto& n : report.extra_entities)
        diags.push_back(make_diagnostic(Code::C102, at, {{SubjectKind::Entity, n.str()}},
                                        "Extra external entity: '" + n.str() + "'", child.origin().span));
    for (const auto& sig : report.missing_in_child)
        diags.push_back(make_diagnostic(Code::C103, at, {{SubjectKind::Flow, sig.flow_name.str()}, subject_of(sig.far_end)},
                                        describe_crossing("Less", sig), child.origin().span));
    for (const auto& sig : report.extra_in_child)
        diags.push_back(make_diagnostic(Code::C104, at, {{SubjectKind::Flow, sig.flow_name.str()}, subject_of(sig.far_end)},
                                        describe_crossing("Extra", sig), child.origin().span));
    for (const auto& n : report.missing_stores)
        diags.push_back(make_diagnostic(Code::C106, at, {{SubjectKind::Store, n.str()}},
                                        "Less data store: '" + n.str() + "'", child.origin().span));
    sort_catalog_order(diags);
    return {std::move(report), std::move(diags)};
}

/// Diagram that declares `child`'s focus as one of its own processes (not as
/// a replica). The first in declaration order wins; further candidates only
/// arise alongside C105 or C203.
inline const Diagram* resolve_parent(const Project& project, const Diagram& child) {
    auto focus = child.focus();
    if (!focus) return nullptr;
    for (const auto& d : project.diagrams()) {
        if (&d == &child) continue;
        const Process* p = d.find_process(*focus);
        if (p && d.is_internal(*p)) return &d;
    }
    return nullptr;
}

/// Project structure first (C105, C202, C203), then per diagram in
/// declaration order its own checks followed by balancing against its parent.
inline Diagnostics check_project(const Project& project) {
    Diagnostics out;
    const auto& diagrams = project.diagrams();

    const auto contexts = std::count_if(diagrams.begin(), diagrams.end(), [](const Diagram& d) { return d.is_context(); });
    if (contexts != 1)
        out.push_back(make_diagnostic(Code::C105, std::nullopt, {},
                                      "Project must have exactly one context diagram, found " +
                                          std::to_string(contexts)));

    std::vector<const Diagram*> parents(diagrams.size(), nullptr);
    std::map<ProcessId, std::vector<const Diagram*>> decomposed;
    for (std::size_t i = 0; i < diagrams.size(); ++i) {
        const Diagram& d = diagrams[i];
        auto focus = d.focus();
        if (!focus) continue;
        decomposed[*focus].push_back(&d);
        parents[i] = resolve_parent(project, d);
        if (!parents[i])
            out.push_back(make_diagnostic(Code::C202, d.title(), {{SubjectKind::Process, focus->str()}},
                                          "Decomposed process " + focus->str() +
                                              " is not declared as a process in any other diagram",
                                          d.origin().span));
    }
    for (const auto& [id, children] : decomposed) {
        if (children.size() < 2) continue;
        std::vector<Subject> subjects{{SubjectKind::Process, id.str()}};
        std::string titles;
        for (const Diagram* c : children) {
            subjects.push_back({SubjectKind::Diagram, c->title().str()});
            titles += (titles.empty() ? "'" : ", '") + c->title().str() + "'";
        }
        out.push_back(make_diagnostic(Code::C203, children[1]->title(), std::move(subjects),
                                      "Process " + id.str() + " is decomposed by " + std::to_string(children.size()) +
                                          " diagrams: " + titles,
                                      children[1]->origin().span));
    }

    for (std::size_t i = 0; i < diagrams.size(); ++i) {
        const Diagram& d = diagrams[i];
        const Diagram* parent = parents[i];
        std::set<Name> boundary_stores;
        if (parent) boundary_stores = adjacent_stores(*parent, *d.focus());
        Diagnostics own = check_diagram(d, boundary_stores);
        out.insert(out.end(), own.begin(), own.end());
        if (parent) {
            Diagnostics balance = check_balancing(*parent, d).diagnostics;
            out.insert(out.end(), balance.begin(), balance.end());
        }
    }
    return out;
}

}  // namespace dfd
