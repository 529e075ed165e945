#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "dfd/diagnostic.hpp"
#include "dfd/model.hpp"

// Per-diagram rules: connection legality, element degrees, name uniqueness,
// context shape, and the two warning-level conventions.

namespace dfd {

namespace detail {

inline std::string process_label(const Process& p) { return "Process " + p.id.str() + " '" + p.name.str() + "'"; }

inline bool later(const Origin& a, const Origin& b) {
    if (!a.span) return false;
    if (!b.span) return true;
    return std::tie(a.span->line, a.span->column) > std::tie(b.span->line, b.span->column);
}

/// Span of the last-declared member of a duplicate group.
template <typename T>
std::optional<SourceSpan> last_span(const std::vector<const T*>& group) {
    const Origin* best = &group.front()->origin;
    for (const T* item : group)
        if (later(item->origin, *best)) best = &item->origin;
    return best->span;
}

}  // namespace detail

/// Rules 9 and 10: every flow needs a process on at least one end.
inline Diagnostics check_connection_legality(const Diagram& diagram) {
    Diagnostics out;
    const auto& flows = diagram.flows();
    for (std::size_t i = 0; i < flows.size(); ++i) {
        if (!diagram.is_checkable(i)) continue;
        const Flow& f = flows[i];
        std::optional<Code> code;
        if (is_entity(f.source) && is_entity(f.target))
            code = Code::S201;
        else if (is_store(f.source) && is_store(f.target))
            code = Code::S202;
        else if ((is_entity(f.source) && is_store(f.target)) || (is_store(f.source) && is_entity(f.target)))
            code = Code::S203;
        if (!code) continue;
        out.push_back(make_diagnostic(*code, diagram.title(),
                                      {{SubjectKind::Flow, f.name.str()}, subject_of(f.source), subject_of(f.target)},
                                      "Data flow <" + f.name.str() + "> cannot connect " + describe(f.source) + " to " +
                                          describe(f.target),
                                      f.origin.span));
    }
    sort_catalog_order(out);
    return out;
}

/// Input/output requirements for subprocesses and, in decomposition
/// diagrams, for stores not listed in `boundary_stores`; every entity needs
/// at least one flow. Replica processes are exempt.
inline Diagnostics check_degrees(const Diagram& diagram, const std::set<Name>& boundary_stores = {}) {
    std::map<Endpoint, std::pair<int, int>> degree;  // (in, out)
    const auto& flows = diagram.flows();
    for (std::size_t i = 0; i < flows.size(); ++i) {
        if (diagram.flow_status(i) == FlowStatus::SelfLoop) continue;
        ++degree[flows[i].source].second;
        ++degree[flows[i].target].first;
    }
    auto in_of = [&](const Endpoint& e) { return degree.count(e) ? degree[e].first : 0; };
    auto out_of = [&](const Endpoint& e) { return degree.count(e) ? degree[e].second : 0; };

    Diagnostics out;
    for (const auto& p : diagram.processes()) {
        if (!diagram.is_internal(p)) continue;
        const Endpoint e = ProcessRef{p.id};
        const std::vector<Subject> subjects{{SubjectKind::Process, p.id.str()}};
        if (in_of(e) == 0)
            out.push_back(make_diagnostic(Code::S101, diagram.title(), subjects,
                                          detail::process_label(p) + " has no input data flow", p.origin.span));
        if (out_of(e) == 0)
            out.push_back(make_diagnostic(Code::S102, diagram.title(), subjects,
                                          detail::process_label(p) + " has no output data flow", p.origin.span));
    }
    if (!diagram.is_context()) {
        for (const auto& s : diagram.stores()) {
            if (boundary_stores.count(s.name)) continue;
            const Endpoint e = StoreRef{s.name};
            const std::vector<Subject> subjects{{SubjectKind::Store, s.name.str()}};
            if (in_of(e) == 0)
                out.push_back(make_diagnostic(Code::S103, diagram.title(), subjects,
                                              "Data store '" + s.name.str() + "' has no input data flow",
                                              s.origin.span));
            if (out_of(e) == 0)
                out.push_back(make_diagnostic(Code::S104, diagram.title(), subjects,
                                              "Data store '" + s.name.str() + "' has no output data flow",
                                              s.origin.span));
        }
    }
    for (const auto& en : diagram.entities()) {
        const Endpoint e = EntityRef{en.name};
        if (in_of(e) + out_of(e) == 0)
            out.push_back(make_diagnostic(Code::S105, diagram.title(), {{SubjectKind::Entity, en.name.str()}},
                                          "External entity '" + en.name.str() + "' has no data flow",
                                          en.origin.span));
    }
    sort_catalog_order(out);
    return out;
}

/// Rules 3-6: one diagnostic per group of elements sharing a name (or, for
/// processes, a number). Antiparallel flows sharing a name land here too.
inline Diagnostics check_uniqueness(const Diagram& diagram) {
    Diagnostics out;

    std::map<Name, std::vector<const Process*>> by_name;
    std::map<ProcessId, std::vector<const Process*>> by_id;
    for (const auto& p : diagram.processes()) {
        by_name[p.name].push_back(&p);
        by_id[p.id].push_back(&p);
    }
    for (const auto& [name, group] : by_name) {
        if (group.size() < 2) continue;
        std::vector<Subject> subjects;
        std::string ids;
        for (const Process* p : group) {
            subjects.push_back({SubjectKind::Process, p->id.str()});
            ids += (ids.empty() ? "" : ", ") + p->id.str();
        }
        out.push_back(make_diagnostic(Code::S301, diagram.title(), std::move(subjects),
                                      "Process name '" + name.str() + "' is used by " + std::to_string(group.size()) +
                                          " processes: " + ids,
                                      detail::last_span(group)));
    }
    for (const auto& [id, group] : by_id) {
        if (group.size() < 2) continue;
        out.push_back(make_diagnostic(
            Code::S301, diagram.title(), {{SubjectKind::Process, id.str()}},
            "Process number " + id.str() + " is declared " + std::to_string(group.size()) + " times",
            detail::last_span(group)));
    }

    std::map<Name, std::vector<const Flow*>> flows;
    for (const auto& f : diagram.flows()) flows[f.name].push_back(&f);
    for (const auto& [name, group] : flows) {
        if (group.size() < 2) continue;
        std::string where;
        for (const Flow* f : group)
            where += (where.empty() ? "" : "; ") + describe(f->source) + " -> " + describe(f->target);
        out.push_back(make_diagnostic(Code::S302, diagram.title(), {{SubjectKind::Flow, name.str()}},
                                      "Data flow name <" + name.str() + "> is used " + std::to_string(group.size()) +
                                          " times (" + where + ")",
                                      detail::last_span(group)));
    }

    std::map<Name, std::vector<const DataStore*>> stores;
    for (const auto& s : diagram.stores()) stores[s.name].push_back(&s);
    for (const auto& [name, group] : stores) {
        if (group.size() < 2) continue;
        out.push_back(make_diagnostic(
            Code::S303, diagram.title(), {{SubjectKind::Store, name.str()}},
            "Data store name '" + name.str() + "' is declared " + std::to_string(group.size()) + " times",
            detail::last_span(group)));
    }

    std::map<Name, std::vector<const ExternalEntity*>> entities;
    for (const auto& e : diagram.entities()) entities[e.name].push_back(&e);
    for (const auto& [name, group] : entities) {
        if (group.size() < 2) continue;
        out.push_back(make_diagnostic(
            Code::S304, diagram.title(), {{SubjectKind::Entity, name.str()}},
            "External entity name '" + name.str() + "' is declared " + std::to_string(group.size()) + " times",
            detail::last_span(group)));
    }

    sort_catalog_order(out);
    return out;
}

/// Context diagrams: a single process "0", no stores, and only process <-> entity
/// flows. Entity/store-only flows are left to check_connection_legality.
inline Diagnostics check_context_shape(const Diagram& diagram) {
    if (!diagram.is_context())
        throw Error(ErrorKind::NotAContext, "'" + diagram.title().str() + "' is not a context diagram");
    Diagnostics out;

    const auto& processes = diagram.processes();
    if (processes.size() != 1 || !processes.front().id.is_root()) {
        std::vector<Subject> subjects;
        for (const auto& p : processes) subjects.push_back({SubjectKind::Process, p.id.str()});
        if (subjects.empty()) subjects.push_back({SubjectKind::Diagram, diagram.title().str()});
        out.push_back(make_diagnostic(Code::S501, diagram.title(), std::move(subjects),
                                      "Context diagram must contain exactly one process numbered 0, found " +
                                          std::to_string(processes.size()) + " process(es)" +
                                          (processes.size() == 1 ? " numbered " + processes.front().id.str() : ""),
                                      processes.empty() ? diagram.origin().span : processes.front().origin.span));
    }

    for (const auto& s : diagram.stores())
        out.push_back(make_diagnostic(Code::S502, diagram.title(), {{SubjectKind::Store, s.name.str()}},
                                      "Data store '" + s.name.str() + "' cannot appear in a context diagram",
                                      s.origin.span));

    const auto& flows = diagram.flows();
    for (std::size_t i = 0; i < flows.size(); ++i) {
        if (!diagram.is_checkable(i)) continue;
        const Flow& f = flows[i];
        if (!is_process(f.source) && !is_process(f.target)) continue;
        const bool process_entity = (is_process(f.source) && is_entity(f.target)) ||
                                    (is_entity(f.source) && is_process(f.target));
        if (process_entity) continue;
        out.push_back(make_diagnostic(Code::S503, diagram.title(),
                                      {{SubjectKind::Flow, f.name.str()}, subject_of(f.source), subject_of(f.target)},
                                      "Data flow <" + f.name.str() +
                                          "> in a context diagram must connect the process and an external entity",
                                      f.origin.span));
    }
    sort_catalog_order(out);
    return out;
}

/// Warns when a process takes in and sends out flows of the same name.
inline Diagnostics check_name_hygiene(const Diagram& diagram) {
    std::map<ProcessId, std::pair<std::set<Name>, std::set<Name>>> names;  // (in, out)
    const auto& flows = diagram.flows();
    for (std::size_t i = 0; i < flows.size(); ++i) {
        if (!diagram.is_checkable(i)) continue;
        const Flow& f = flows[i];
        if (auto* p = std::get_if<ProcessRef>(&f.target)) names[p->id].first.insert(f.name);
        if (auto* p = std::get_if<ProcessRef>(&f.source)) names[p->id].second.insert(f.name);
    }
    Diagnostics out;
    for (const auto& p : diagram.processes()) {
        auto it = names.find(p.id);
        if (it == names.end()) continue;
        std::string shared;
        for (const auto& n : it->second.first)
            if (it->second.second.count(n)) shared += (shared.empty() ? "<" : ", <") + n.str() + ">";
        if (shared.empty()) continue;
        out.push_back(make_diagnostic(Code::W601, diagram.title(), {{SubjectKind::Process, p.id.str()}},
                                      detail::process_label(p) + " uses data flow name " + shared +
                                          " for both input and output",
                                      p.origin.span));
    }
    sort_catalog_order(out);
    return out;
}

inline Diagnostics check_numbering(const Diagram& diagram) {
    Diagnostics out;
    for (const auto& p : diagram.processes()) {
        if (follows_numbering(p.id, diagram.kind())) continue;
        std::string expected = diagram.is_context()
                                   ? "a context diagram numbers its process 0"
                                   : "expected a subprocess of process " + diagram.focus()->str() +
                                         " or a neighbour of it";
        out.push_back(make_diagnostic(Code::W701, diagram.title(), {{SubjectKind::Process, p.id.str()}},
                                      "Process number " + p.id.str() + " does not follow the numbering convention (" +
                                          expected + ")",
                                      p.origin.span));
    }
    sort_catalog_order(out);
    return out;
}

/// Every per-diagram check applicable to the diagram's kind, in catalog order.
inline Diagnostics check_diagram(const Diagram& diagram, const std::set<Name>& boundary_stores = {}) {
    Diagnostics out = diagram.structural_diagnostics();
    auto append = [&](Diagnostics more) { out.insert(out.end(), more.begin(), more.end()); };
    append(check_degrees(diagram, boundary_stores));
    append(check_connection_legality(diagram));
    append(check_uniqueness(diagram));
    if (diagram.is_context()) append(check_context_shape(diagram));
    append(check_name_hygiene(diagram));
    append(check_numbering(diagram));
    sort_catalog_order(out);
    return out;
}

}  // namespace dfd
