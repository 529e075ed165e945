#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "dfd/diagnostic.hpp"
#include "dfd/error.hpp"
#include "dfd/name.hpp"
#include "dfd/source_span.hpp"

namespace dfd {

struct ProcessRef {
    ProcessId id;
    friend bool operator==(const ProcessRef&, const ProcessRef&) = default;
    friend auto operator<=>(const ProcessRef&, const ProcessRef&) = default;
};

struct EntityRef {
    Name name;
    friend bool operator==(const EntityRef&, const EntityRef&) = default;
    friend auto operator<=>(const EntityRef&, const EntityRef&) = default;
};

struct StoreRef {
    Name name;
    friend bool operator==(const StoreRef&, const StoreRef&) = default;
    friend auto operator<=>(const StoreRef&, const StoreRef&) = default;
};

/// One end of a data flow. Variant order (process, entity, store) is also
/// the canonical sort order of endpoint kinds.
using Endpoint = std::variant<ProcessRef, EntityRef, StoreRef>;

inline bool is_process(const Endpoint& e) { return std::holds_alternative<ProcessRef>(e); }
inline bool is_entity(const Endpoint& e) { return std::holds_alternative<EntityRef>(e); }
inline bool is_store(const Endpoint& e) { return std::holds_alternative<StoreRef>(e); }

/// Process number for process endpoints, name otherwise.
inline const std::string& endpoint_key(const Endpoint& e) {
    return std::visit(
        [](const auto& ref) -> const std::string& {
            if constexpr (std::is_same_v<std::decay_t<decltype(ref)>, ProcessRef>)
                return ref.id.str();
            else
                return ref.name.str();
        },
        e);
}

/// "external entity 'Lecturer'", "data store 'Books'", "process 2".
inline std::string describe(const Endpoint& e) {
    if (is_process(e)) return "process " + endpoint_key(e);
    if (is_entity(e)) return "external entity '" + endpoint_key(e) + "'";
    return "data store '" + endpoint_key(e) + "'";
}

inline Subject subject_of(const Endpoint& e) {
    if (is_process(e)) return {SubjectKind::Process, endpoint_key(e)};
    if (is_entity(e)) return {SubjectKind::Entity, endpoint_key(e)};
    return {SubjectKind::Store, endpoint_key(e)};
}

struct Process {
    ProcessId id;
    Name name;
    std::optional<std::string> description;
    Origin origin;

    friend bool operator==(const Process&, const Process&) = default;
    friend auto operator<=>(const Process&, const Process&) = default;
};

struct ExternalEntity {
    Name name;
    std::optional<std::string> description;
    Origin origin;

    friend bool operator==(const ExternalEntity&, const ExternalEntity&) = default;
    friend auto operator<=>(const ExternalEntity&, const ExternalEntity&) = default;
};

struct DataStore {
    Name name;
    std::optional<std::string> description;
    Origin origin;

    friend bool operator==(const DataStore&, const DataStore&) = default;
    friend auto operator<=>(const DataStore&, const DataStore&) = default;
};

struct Flow {
    Name name;
    Endpoint source;
    Endpoint target;
    std::optional<std::string> description;
    Origin origin;

    friend bool operator==(const Flow&, const Flow&) = default;
    friend auto operator<=>(const Flow&, const Flow&) = default;
};

struct ContextKind {
    friend bool operator==(const ContextKind&, const ContextKind&) = default;
    friend auto operator<=>(const ContextKind&, const ContextKind&) = default;
};

struct Decomposition {
    ProcessId parent;
    friend bool operator==(const Decomposition&, const Decomposition&) = default;
    friend auto operator<=>(const Decomposition&, const Decomposition&) = default;
};

using DiagramKind = std::variant<ContextKind, Decomposition>;

/// Element and flow declarations of one diagram, as produced by a parser or
/// a generator. Input to build_diagram.
struct DiagramDecl {
    Name title;
    DiagramKind kind;
    std::vector<Process> processes;
    std::vector<ExternalEntity> entities;
    std::vector<DataStore> stores;
    std::vector<Flow> flows;
    Origin origin;
};

/// Whether a process of a diagram decomposing `focus` is one of its
/// subprocesses (true) or a replica of a neighbour of `focus` (false).
/// Level 0 cannot contain replicas, since the context holds a single process.
inline bool is_internal_process(const ProcessId& id, const ProcessId& focus) {
    if (focus.is_root()) return true;
    return id == focus || id.is_descendant_of(focus);
}

/// Numbering convention: "0" in a context diagram; p.n (bare n below "0")
/// for subprocesses; a replica may only carry the number of a sibling of the
/// focus or of one of its ancestors.
inline bool follows_numbering(const ProcessId& id, const DiagramKind& kind) {
    if (std::holds_alternative<ContextKind>(kind)) return id.is_root();
    const ProcessId& focus = std::get<Decomposition>(kind).parent;
    const auto& ids = id.segments();
    if (ids.back() == "0") return false;
    if (focus.is_root()) return id.depth() == 1;
    const auto& fs = focus.segments();
    if (id.depth() == focus.depth() + 1 && id.is_descendant_of(focus)) return true;
    if (id.depth() > focus.depth()) return false;
    const std::size_t prefix = id.depth() - 1;
    return std::equal(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(prefix), fs.begin()) &&
           ids.back() != fs[prefix];
}

enum class FlowStatus : std::uint8_t { Ok, Unresolved, SelfLoop };

/// One level of a model: processes, flows, stores and entities.
///
/// Immutable once built. Elements are kept in canonical order (processes by
/// number, everything else by name) so equal declarations in any order
/// produce equal diagrams.
class Diagram {
public:
    const Name& title() const noexcept { return decl_.title; }
    const DiagramKind& kind() const noexcept { return decl_.kind; }
    bool is_context() const noexcept { return std::holds_alternative<ContextKind>(decl_.kind); }

    /// The decomposed process, for decomposition diagrams.
    std::optional<ProcessId> focus() const {
        if (auto* d = std::get_if<Decomposition>(&decl_.kind)) return d->parent;
        return std::nullopt;
    }

    const std::vector<Process>& processes() const noexcept { return decl_.processes; }
    const std::vector<ExternalEntity>& entities() const noexcept { return decl_.entities; }
    const std::vector<DataStore>& stores() const noexcept { return decl_.stores; }
    const std::vector<Flow>& flows() const noexcept { return decl_.flows; }
    const Origin& origin() const noexcept { return decl_.origin; }

    FlowStatus flow_status(std::size_t index) const { return status_.at(index); }

    /// Flows that resolved cleanly; all rules other than S001/S205 only look at these.
    bool is_checkable(std::size_t index) const { return status_.at(index) == FlowStatus::Ok; }

    /// S001 and S205 findings produced while building.
    const Diagnostics& structural_diagnostics() const noexcept { return structural_; }

    const DiagramDecl& declarations() const noexcept { return decl_; }

    const Process* find_process(const ProcessId& id) const {
        for (const auto& p : decl_.processes)
            if (p.id == id) return &p;
        return nullptr;
    }

    bool has_entity(const Name& name) const {
        return std::any_of(decl_.entities.begin(), decl_.entities.end(),
                           [&](const ExternalEntity& e) { return e.name == name; });
    }

    bool has_store(const Name& name) const {
        return std::any_of(decl_.stores.begin(), decl_.stores.end(),
                           [&](const DataStore& s) { return s.name == name; });
    }

    bool declares(const Endpoint& e) const {
        if (auto* p = std::get_if<ProcessRef>(&e)) return find_process(p->id) != nullptr;
        if (auto* en = std::get_if<EntityRef>(&e)) return has_entity(en->name);
        return has_store(std::get<StoreRef>(e).name);
    }

    /// False for boundary replicas of neighbouring processes.
    bool is_internal(const Process& p) const {
        auto f = focus();
        return !f || is_internal_process(p.id, *f);
    }

    friend bool operator==(const Diagram& a, const Diagram& b) {
        return a.decl_.title == b.decl_.title && a.decl_.kind == b.decl_.kind &&
               a.decl_.processes == b.decl_.processes && a.decl_.entities == b.decl_.entities &&
               a.decl_.stores == b.decl_.stores && a.decl_.flows == b.decl_.flows;
    }

private:
    friend std::pair<Diagram, Diagnostics> build_diagram(DiagramDecl decl);

    explicit Diagram(DiagramDecl decl);

    DiagramDecl decl_;
    std::vector<FlowStatus> status_;
    Diagnostics structural_;
};

inline Diagram::Diagram(DiagramDecl decl) : decl_(std::move(decl)) {
    std::sort(decl_.processes.begin(), decl_.processes.end());
    std::sort(decl_.entities.begin(), decl_.entities.end());
    std::sort(decl_.stores.begin(), decl_.stores.end());
    std::sort(decl_.flows.begin(), decl_.flows.end());
    status_.reserve(decl_.flows.size());
    // One S001 per undeclared element, listing every flow that names it.
    std::map<Endpoint, std::vector<const Flow*>> undeclared;
    for (const auto& f : decl_.flows) {
        const bool source_ok = declares(f.source), target_ok = declares(f.target);
        if (!source_ok) undeclared[f.source].push_back(&f);
        if (!target_ok && f.target != f.source) undeclared[f.target].push_back(&f);
        if (!source_ok || !target_ok) {
            status_.push_back(FlowStatus::Unresolved);
        } else if (f.source == f.target) {
            status_.push_back(FlowStatus::SelfLoop);
            structural_.push_back(make_diagnostic(
                Code::S205, decl_.title, {{SubjectKind::Flow, f.name.str()}, subject_of(f.source)},
                "Data flow <" + f.name.str() + "> starts and ends at " + describe(f.source), f.origin.span));
        } else {
            status_.push_back(FlowStatus::Ok);
        }
    }
    for (const auto& [element, flows] : undeclared) {
        std::vector<Subject> subjects{subject_of(element)};
        std::string names;
        for (const Flow* f : flows) {
            subjects.push_back({SubjectKind::Flow, f->name.str()});
            names += (names.empty() ? "<" : ", <") + f->name.str() + ">";
        }
        const bool many = flows.size() > 1;
        structural_.push_back(make_diagnostic(Code::S001, decl_.title, std::move(subjects),
                                              std::string(many ? "Data flows " : "Data flow ") + names +
                                                  (many ? " refer" : " refers") + " to undeclared " + describe(element),
                                              flows.front()->origin.span));
    }
    sort_catalog_order(structural_);
}

/// Builds a diagram from declarations. Total: unresolved endpoints and
/// self-loops are kept in the model, flagged, and reported as S001 / S205.
inline std::pair<Diagram, Diagnostics> build_diagram(DiagramDecl decl) {
    Diagram d(std::move(decl));
    Diagnostics diags = d.structural_diagnostics();
    return {std::move(d), std::move(diags)};
}

/// An ordered collection of diagrams: context, level 0, and deeper levels.
class Project {
public:
    Project() = default;
    explicit Project(std::vector<Diagram> diagrams) : diagrams_(std::move(diagrams)) {}

    const std::vector<Diagram>& diagrams() const noexcept { return diagrams_; }
    std::size_t size() const noexcept { return diagrams_.size(); }
    bool empty() const noexcept { return diagrams_.empty(); }

    const Diagram* find(const Name& title) const {
        for (const auto& d : diagrams_)
            if (d.title() == title) return &d;
        return nullptr;
    }

    friend bool operator==(const Project&, const Project&) = default;

private:
    std::vector<Diagram> diagrams_;
};

enum class Direction : std::uint8_t { IntoFocus, OutOfFocus };

inline std::string_view to_string(Direction d) { return d == Direction::IntoFocus ? "into" : "out"; }

/// One crossing of a decomposition boundary, as seen from the decomposed process.
struct BoundarySignature {
    Name flow_name;
    Direction direction;
    Endpoint far_end;

    friend bool operator==(const BoundarySignature&, const BoundarySignature&) = default;
    friend auto operator<=>(const BoundarySignature&, const BoundarySignature&) = default;
};

using SignatureSet = std::set<BoundarySignature>;

/// Signatures of every checkable flow incident to `focus` in `diagram`.
inline SignatureSet neighbor_signature(const Diagram& diagram, const ProcessId& focus) {
    if (!diagram.find_process(focus))
        throw Error(ErrorKind::UnknownFocus,
                    "process " + focus.str() + " is not declared in '" + diagram.title().str() + "'");
    const Endpoint self = ProcessRef{focus};
    SignatureSet out;
    const auto& flows = diagram.flows();
    for (std::size_t i = 0; i < flows.size(); ++i) {
        if (!diagram.is_checkable(i)) continue;
        const Flow& f = flows[i];
        if (f.target == self)
            out.insert({f.name, Direction::IntoFocus, f.source});
        else if (f.source == self)
            out.insert({f.name, Direction::OutOfFocus, f.target});
    }
    return out;
}

/// Signatures of the flows crossing the boundary of a decomposition diagram:
/// exactly one end is a subprocess, the other an entity, a boundary store
/// (one of `boundary_stores`) or a replica process. Stores not listed are
/// internal to the child.
inline SignatureSet child_boundary_signature(const Diagram& child, const std::set<Name>& boundary_stores = {}) {
    auto focus = child.focus();
    if (!focus)
        throw Error(ErrorKind::NotADecomposition, "'" + child.title().str() + "' is a context diagram");

    auto internal = [&](const Endpoint& e) {
        auto* p = std::get_if<ProcessRef>(&e);
        return p && is_internal_process(p->id, *focus);
    };
    auto outside = [&](const Endpoint& e) {
        if (is_entity(e)) return true;
        if (auto* s = std::get_if<StoreRef>(&e)) return boundary_stores.count(s->name) > 0;
        return !internal(e);
    };

    SignatureSet out;
    const auto& flows = child.flows();
    for (std::size_t i = 0; i < flows.size(); ++i) {
        if (!child.is_checkable(i)) continue;
        const Flow& f = flows[i];
        if (internal(f.target) && outside(f.source))
            out.insert({f.name, Direction::IntoFocus, f.source});
        else if (internal(f.source) && outside(f.target))
            out.insert({f.name, Direction::OutOfFocus, f.target});
    }
    return out;
}

}  // namespace dfd
