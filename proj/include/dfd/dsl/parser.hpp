#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "dfd/dsl/lexer.hpp"
#include "dfd/dsl/parse_error.hpp"
#include "dfd/model.hpp"

// Grammar:
//
//   project    := diagram*
//   diagram    := "diagram" STRING kindclause "{" item* "}"
//   kindclause := "context" | "decomposes" PROCESS_ID
//   item       := process | entity | store | flow
//   process    := "process" PROCESS_ID STRING desc?
//   entity     := "entity" STRING desc?
//   store      := "store" STRING desc?
//   flow       := "flow" STRING "from" endpoint "to" endpoint desc?
//   endpoint   := "process" PROCESS_ID | "entity" STRING | "store" STRING
//   desc       := "desc" STRING
//
// "#" starts a comment that runs to the end of the line.

namespace dfd::dsl {

namespace detail {

class Parser {
public:
    explicit Parser(std::vector<Token> tokens, std::vector<ParseError> errors)
        : tokens_(std::move(tokens)), errors_(std::move(errors)) {}

    Parsed<Project> run() {
        std::vector<Diagram> diagrams;
        std::set<Name> titles;
        while (peek().kind != TokenKind::End) {
            const std::size_t errors_before = errors_.size();
            title_.reset();
            try {
                if (!peek().is_word("diagram")) fail_expected({"'diagram'"});
                auto decl = parse_diagram();
                if (title_ && !titles.insert(*title_).second)
                    errors_.push_back({*title_span_, "duplicate diagram title \"" + title_->str() + "\"", {}});
                else if (decl && errors_.size() == errors_before)
                    diagrams.push_back(build_diagram(std::move(*decl)).first);
            } catch (const Abort&) {
                recover();
            }
        }
        if (!errors_.empty()) return errors_;
        return Project(std::move(diagrams));
    }

private:
    struct Abort {};

    const Token& peek() const { return tokens_[pos_]; }
    const Token& next() {
        const Token& t = tokens_[pos_];
        if (t.kind != TokenKind::End) ++pos_;
        return t;
    }

    [[noreturn]] void fail_expected(std::vector<std::string> expected) {
        std::string list;
        for (std::size_t i = 0; i < expected.size(); ++i)
            list += (i == 0 ? "" : i + 1 == expected.size() ? " or " : ", ") + expected[i];
        errors_.push_back({peek().span, "expected " + list + ", found " + describe(peek()), std::move(expected)});
        throw Abort{};
    }

    /// Skips past the current token to the next "diagram" keyword.
    void recover() {
        next();
        while (peek().kind != TokenKind::End && !peek().is_word("diagram")) next();
    }

    const Token& expect_word(std::string_view w) {
        if (!peek().is_word(w)) fail_expected({"'" + std::string(w) + "'"});
        return next();
    }

    const Token& expect_string() {
        if (peek().kind != TokenKind::String) fail_expected({"string"});
        return next();
    }

    std::optional<Name> name_from(const Token& t) {
        try {
            return normalize_name(t.text);
        } catch (const Error&) {
            errors_.push_back({t.span, "name is empty", {}});
            return std::nullopt;
        }
    }

    std::optional<ProcessId> expect_process_id() {
        if (peek().kind != TokenKind::Number) fail_expected({"process number"});
        const Token& t = next();
        auto id = ProcessId::parse(t.text);
        if (!id) errors_.push_back({t.span, "invalid process number '" + t.text + "'", {}});
        return id;
    }

    std::optional<std::string> maybe_desc() {
        if (!peek().is_word("desc")) return std::nullopt;
        next();
        return expect_string().text;
    }

    SourceSpan span_from(const Token& first) const {
        const Token& last = tokens_[pos_ == 0 ? 0 : pos_ - 1];
        SourceSpan s = first.span;
        if (last.span.line == first.span.line) s.length = last.span.column + last.span.length - first.span.column;
        return s;
    }

    std::optional<Endpoint> parse_endpoint() {
        if (peek().is_word("process")) {
            next();
            auto id = expect_process_id();
            if (!id) return std::nullopt;
            return ProcessRef{*id};
        }
        if (peek().is_word("entity") || peek().is_word("store")) {
            const bool entity = next().text == "entity";
            auto name = name_from(expect_string());
            if (!name) return std::nullopt;
            if (entity) return EntityRef{*name};
            return StoreRef{*name};
        }
        fail_expected({"'process'", "'entity'", "'store'"});
    }

    std::optional<DiagramDecl> parse_diagram() {
        const Token& head = expect_word("diagram");
        const Token& title_tok = expect_string();
        title_span_ = title_tok.span;
        auto title = name_from(title_tok);
        title_ = title;

        std::optional<DiagramKind> kind;
        if (peek().is_word("context")) {
            next();
            kind = ContextKind{};
        } else if (peek().is_word("decomposes")) {
            next();
            if (auto id = expect_process_id()) kind = Decomposition{*id};
        } else {
            fail_expected({"'context'", "'decomposes'"});
        }
        const SourceSpan head_span = span_from(head);
        if (peek().kind != TokenKind::LBrace) fail_expected({"'{'"});
        next();

        std::vector<Process> processes;
        std::vector<ExternalEntity> entities;
        std::vector<DataStore> stores;
        std::vector<Flow> flows;
        bool complete = title && kind;
        while (peek().kind != TokenKind::RBrace) {
            const Token& item = peek();
            if (item.is_word("process")) {
                next();
                auto id = expect_process_id();
                auto name = name_from(expect_string());
                auto desc = maybe_desc();
                if (id && name)
                    processes.push_back({*id, *name, desc, {span_from(item)}});
                else
                    complete = false;
            } else if (item.is_word("entity") || item.is_word("store")) {
                const bool entity = next().text == "entity";
                auto name = name_from(expect_string());
                auto desc = maybe_desc();
                if (!name)
                    complete = false;
                else if (entity)
                    entities.push_back({*name, desc, {span_from(item)}});
                else
                    stores.push_back({*name, desc, {span_from(item)}});
            } else if (item.is_word("flow")) {
                next();
                auto name = name_from(expect_string());
                expect_word("from");
                auto source = parse_endpoint();
                expect_word("to");
                auto target = parse_endpoint();
                auto desc = maybe_desc();
                if (name && source && target)
                    flows.push_back({*name, *source, *target, desc, {span_from(item)}});
                else
                    complete = false;
            } else {
                fail_expected({"'process'", "'entity'", "'store'", "'flow'", "'}'"});
            }
        }
        next();
        if (!complete) return std::nullopt;
        return DiagramDecl{*title,           *kind,          std::move(processes), std::move(entities),
                           std::move(stores), std::move(flows), {head_span}};
    }

    std::vector<Token> tokens_;
    std::vector<ParseError> errors_;
    std::size_t pos_ = 0;
    std::optional<SourceSpan> title_span_;
    std::optional<Name> title_;
};

}  // namespace detail

/// Parses DSL text into a project, diagrams in source order. On failure all
/// errors found are returned; parsing resumes at the next "diagram" keyword
/// after a grammar error.
inline Parsed<Project> parse_project(std::string_view source) {
    std::vector<ParseError> errors;
    auto tokens = tokenize(source, errors);
    return detail::Parser(std::move(tokens), std::move(errors)).run();
}

}  // namespace dfd::dsl
