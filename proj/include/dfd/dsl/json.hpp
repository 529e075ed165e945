#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "dfd/dsl/parse_error.hpp"
#include "dfd/model.hpp"

// Canonical JSON form of a project:
//
//   { "version": 1,
//     "diagrams": [ { "title": ..., "kind": {"context": true} | {"decomposes": "<pid>"},
//                     "processes": [{"id", "name", "desc"?}], "entities": [{"name", "desc"?}],
//                     "stores": [{"name", "desc"?}],
//                     "flows": [{"name", "from": endpoint, "to": endpoint, "desc"?}] } ] }
//
//   endpoint := {"process": "<pid>"} | {"entity": "<name>"} | {"store": "<name>"}

namespace dfd::dsl {

namespace detail {

using ojson = nlohmann::ordered_json;

inline ojson endpoint_json(const Endpoint& e) {
    if (is_process(e)) return ojson{{"process", endpoint_key(e)}};
    if (is_entity(e)) return ojson{{"entity", endpoint_key(e)}};
    return ojson{{"store", endpoint_key(e)}};
}

inline void put_desc(ojson& obj, const std::optional<std::string>& desc) {
    if (desc) obj["desc"] = *desc;
}

class JsonReader {
public:
    std::vector<ParseError> errors;

    void fail(const std::string& path, const std::string& what) {
        errors.push_back({{1, 1, 0}, (path.empty() ? "/" : path) + ": " + what, {}});
    }

    bool check_keys(const nlohmann::json& obj, const std::string& path, std::initializer_list<std::string_view> required,
                    std::initializer_list<std::string_view> optional = {}) {
        if (!obj.is_object()) {
            fail(path, "expected an object");
            return false;
        }
        bool ok = true;
        for (auto key : required)
            if (!obj.contains(key)) {
                fail(path + "/" + std::string(key), "missing required field");
                ok = false;
            }
        for (const auto& [key, _] : obj.items()) {
            auto known = [&](std::initializer_list<std::string_view> keys) {
                for (auto k : keys)
                    if (k == key) return true;
                return false;
            };
            if (!known(required) && !known(optional)) {
                fail(path + "/" + key, "unknown field");
                ok = false;
            }
        }
        return ok;
    }

    std::optional<std::string> string_at(const nlohmann::json& obj, std::string_view key, const std::string& path) {
        const auto& v = obj.at(std::string(key));
        if (!v.is_string()) {
            fail(path + "/" + std::string(key), "expected a string");
            return std::nullopt;
        }
        return v.get<std::string>();
    }

    std::optional<Name> name_at(const nlohmann::json& obj, std::string_view key, const std::string& path) {
        auto s = string_at(obj, key, path);
        if (!s) return std::nullopt;
        try {
            return normalize_name(*s);
        } catch (const Error&) {
            fail(path + "/" + std::string(key), "name is empty");
            return std::nullopt;
        }
    }

    std::optional<ProcessId> pid_at(const nlohmann::json& obj, std::string_view key, const std::string& path) {
        auto s = string_at(obj, key, path);
        if (!s) return std::nullopt;
        auto id = ProcessId::parse(*s);
        if (!id) fail(path + "/" + std::string(key), "invalid process number '" + *s + "'");
        return id;
    }

    std::optional<std::string> desc_at(const nlohmann::json& obj, const std::string& path, bool& ok) {
        if (!obj.contains("desc")) return std::nullopt;
        auto s = string_at(obj, "desc", path);
        if (!s) ok = false;
        return s;
    }

    const nlohmann::json* array_at(const nlohmann::json& obj, std::string_view key, const std::string& path) {
        const auto& v = obj.at(std::string(key));
        if (!v.is_array()) {
            fail(path + "/" + std::string(key), "expected an array");
            return nullptr;
        }
        return &v;
    }

    std::optional<Endpoint> endpoint(const nlohmann::json& v, const std::string& path) {
        if (!v.is_object() || v.size() != 1) {
            fail(path, "expected an object with exactly one of \"process\", \"entity\", \"store\"");
            return std::nullopt;
        }
        if (v.contains("process")) {
            auto id = pid_at(v, "process", path);
            if (!id) return std::nullopt;
            return ProcessRef{*id};
        }
        if (v.contains("entity")) {
            auto n = name_at(v, "entity", path);
            if (!n) return std::nullopt;
            return EntityRef{*n};
        }
        if (v.contains("store")) {
            auto n = name_at(v, "store", path);
            if (!n) return std::nullopt;
            return StoreRef{*n};
        }
        fail(path + "/" + v.begin().key(), "unknown endpoint kind");
        return std::nullopt;
    }

    std::optional<DiagramKind> kind(const nlohmann::json& v, const std::string& path) {
        if (!v.is_object() || v.size() != 1) {
            fail(path, "expected {\"context\": true} or {\"decomposes\": \"<process>\"}");
            return std::nullopt;
        }
        if (v.contains("context")) {
            if (v["context"] != true) {
                fail(path + "/context", "expected true");
                return std::nullopt;
            }
            return ContextKind{};
        }
        if (v.contains("decomposes")) {
            auto id = pid_at(v, "decomposes", path);
            if (!id) return std::nullopt;
            return Decomposition{*id};
        }
        fail(path + "/" + v.begin().key(), "unknown diagram kind");
        return std::nullopt;
    }

    std::optional<DiagramDecl> diagram(const nlohmann::json& d, const std::string& path) {
        if (!check_keys(d, path, {"title", "kind", "processes", "entities", "stores", "flows"})) return std::nullopt;
        bool ok = true;
        auto title = name_at(d, "title", path);
        auto k = kind(d.at("kind"), path + "/kind");
        ok = title && k;

        std::vector<Process> processes;
        std::vector<ExternalEntity> entities;
        std::vector<DataStore> stores;
        std::vector<Flow> flows;

        if (auto* arr = array_at(d, "processes", path)) {
            for (std::size_t i = 0; i < arr->size(); ++i) {
                const std::string p = path + "/processes/" + std::to_string(i);
                const auto& item = (*arr)[i];
                if (!check_keys(item, p, {"id", "name"}, {"desc"})) { ok = false; continue; }
                auto id = pid_at(item, "id", p);
                auto name = name_at(item, "name", p);
                auto desc = desc_at(item, p, ok);
                if (id && name) processes.push_back({*id, *name, desc, {}});
                else ok = false;
            }
        } else {
            ok = false;
        }
        auto named = [&](std::string_view key, auto& out) {
            auto* arr = array_at(d, key, path);
            if (!arr) { ok = false; return; }
            for (std::size_t i = 0; i < arr->size(); ++i) {
                const std::string p = path + "/" + std::string(key) + "/" + std::to_string(i);
                const auto& item = (*arr)[i];
                if (!check_keys(item, p, {"name"}, {"desc"})) { ok = false; continue; }
                auto name = name_at(item, "name", p);
                auto desc = desc_at(item, p, ok);
                if (name) out.push_back({*name, desc, {}});
                else ok = false;
            }
        };
        named("entities", entities);
        named("stores", stores);
        if (auto* arr = array_at(d, "flows", path)) {
            for (std::size_t i = 0; i < arr->size(); ++i) {
                const std::string p = path + "/flows/" + std::to_string(i);
                const auto& item = (*arr)[i];
                if (!check_keys(item, p, {"name", "from", "to"}, {"desc"})) { ok = false; continue; }
                auto name = name_at(item, "name", p);
                auto from = endpoint(item.at("from"), p + "/from");
                auto to = endpoint(item.at("to"), p + "/to");
                auto desc = desc_at(item, p, ok);
                if (name && from && to) flows.push_back({*name, *from, *to, desc, {}});
                else ok = false;
            }
        } else {
            ok = false;
        }
        if (!ok) return std::nullopt;
        return DiagramDecl{*title, *k, std::move(processes), std::move(entities), std::move(stores), std::move(flows), {}};
    }
};

inline SourceSpan span_at_byte(std::string_view text, std::size_t byte) {
    SourceSpan s{1, 1, 0};
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++s.line;
            s.column = 1;
        } else {
            ++s.column;
        }
    }
    return s;
}

}  // namespace detail

/// Deterministic JSON rendering: fixed key order, elements in the diagram's
/// canonical order, two-space indentation, trailing newline.
inline std::string to_canonical_json(const Project& project) {
    using detail::ojson;
    ojson doc;
    doc["version"] = 1;
    doc["diagrams"] = ojson::array();
    for (const auto& d : project.diagrams()) {
        ojson jd;
        jd["title"] = d.title().str();
        if (auto focus = d.focus())
            jd["kind"] = ojson{{"decomposes", focus->str()}};
        else
            jd["kind"] = ojson{{"context", true}};
        jd["processes"] = ojson::array();
        for (const auto& p : d.processes()) {
            ojson jp{{"id", p.id.str()}, {"name", p.name.str()}};
            detail::put_desc(jp, p.description);
            jd["processes"].push_back(std::move(jp));
        }
        jd["entities"] = ojson::array();
        for (const auto& e : d.entities()) {
            ojson je{{"name", e.name.str()}};
            detail::put_desc(je, e.description);
            jd["entities"].push_back(std::move(je));
        }
        jd["stores"] = ojson::array();
        for (const auto& s : d.stores()) {
            ojson js{{"name", s.name.str()}};
            detail::put_desc(js, s.description);
            jd["stores"].push_back(std::move(js));
        }
        jd["flows"] = ojson::array();
        for (const auto& f : d.flows()) {
            ojson jf{{"name", f.name.str()}, {"from", detail::endpoint_json(f.source)}, {"to", detail::endpoint_json(f.target)}};
            detail::put_desc(jf, f.description);
            jd["flows"].push_back(std::move(jf));
        }
        doc["diagrams"].push_back(std::move(jd));
    }
    return doc.dump(2) + "\n";
}

/// Reads a canonical document back. Schema violations are reported with a
/// JSON-pointer path; flows with undeclared endpoints are kept and surface
/// later as S001.
inline Parsed<Project> from_json(std::string_view document) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(document);
    } catch (const nlohmann::json::parse_error& e) {
        const std::size_t byte = e.byte == 0 ? 0 : e.byte - 1;
        SourceSpan span = detail::span_at_byte(document, byte);
        span.length = byte < document.size() ? 1 : 0;
        return std::vector<ParseError>{{span, std::string("invalid JSON: ") + e.what(), {}}};
    }

    detail::JsonReader reader;
    if (!reader.check_keys(doc, "", {"version", "diagrams"})) return reader.errors;
    if (doc["version"] != 1) reader.fail("/version", "unsupported version, expected 1");
    std::vector<Diagram> diagrams;
    std::set<Name> titles;
    if (auto* arr = reader.array_at(doc, "diagrams", "")) {
        for (std::size_t i = 0; i < arr->size(); ++i) {
            const std::string path = "/diagrams/" + std::to_string(i);
            auto decl = reader.diagram((*arr)[i], path);
            if (!decl) continue;
            if (!titles.insert(decl->title).second) {
                reader.fail(path + "/title", "duplicate diagram title \"" + decl->title.str() + "\"");
                continue;
            }
            diagrams.push_back(build_diagram(std::move(*decl)).first);
        }
    }
    if (!reader.errors.empty()) return reader.errors;
    return Project(std::move(diagrams));
}

}  // namespace dfd::dsl
