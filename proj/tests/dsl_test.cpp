#include <gtest/gtest.h>

#include "support.hpp"

using namespace dfd;
using namespace dfd::testing;

namespace {

void expect_spans_in_bounds(std::string_view source) {
    auto parsed = dsl::parse_project(source);
    ASSERT_FALSE(parsed.ok()) << source;
    std::size_t lines = 1;
    for (char c : source) lines += c == '\n';
    for (const auto& e : parsed.errors()) {
        EXPECT_GE(e.span.line, 1u);
        EXPECT_GE(e.span.column, 1u);
        EXPECT_LE(e.span.line, lines) << e.message;
        EXPECT_FALSE(e.message.empty());
    }
}

}  // namespace

TEST(ParseProject, AisFixture) {
    const Project p = load_fixture("ais_ok.dfd");
    ASSERT_EQ(p.size(), 2u);
    const Diagram& ctx = p.diagrams()[0];
    EXPECT_TRUE(ctx.is_context());
    EXPECT_EQ(ctx.processes().size(), 1u);
    EXPECT_EQ(ctx.entities().size(), 1u);
    EXPECT_EQ(ctx.flows().size(), 2u);
    const Diagram& l0 = p.diagrams()[1];
    EXPECT_EQ(l0.focus(), ProcessId::root());
    EXPECT_EQ(l0.processes().size(), 2u);
    EXPECT_EQ(l0.entities().size(), 1u);
    EXPECT_EQ(l0.stores().size(), 1u);
    EXPECT_EQ(l0.flows().size(), 5u);
}

TEST(ParseProject, EmptySource) {
    auto parsed = dsl::parse_project("");
    ASSERT_TRUE(parsed.ok());
    EXPECT_TRUE(parsed->empty());
    EXPECT_TRUE(dsl::parse_project("# only a comment\n\n").ok());
}

TEST(ParseProject, ErrorAtTokenAfterFlow) {
    const std::string src = "diagram \"X\" context { flow }";
    auto parsed = dsl::parse_project(src);
    ASSERT_FALSE(parsed.ok());
    ASSERT_EQ(parsed.errors().size(), 1u);
    const auto& e = parsed.errors()[0];
    EXPECT_EQ(e.span.line, 1u);
    EXPECT_EQ(e.span.column, src.find('}') + 1);
    EXPECT_EQ(e.message, "expected string, found '}'");
}

TEST(ParseProject, RecoversAtNextDiagram) {
    auto parsed = dsl::parse_project(
        "diagram \"A\" context { process }\n"
        "diagram \"B\" context { entity 5 }\n"
        "diagram \"C\" context { }\n");
    ASSERT_FALSE(parsed.ok());
    ASSERT_EQ(parsed.errors().size(), 2u);
    EXPECT_EQ(parsed.errors()[0].span.line, 1u);
    EXPECT_EQ(parsed.errors()[1].span.line, 2u);
}

TEST(ParseProject, NonGrammarErrors) {
    auto parsed = dsl::parse_project(
        "diagram \"A\" context { process 0 \"  \" }\n"
        "diagram \"B\" decomposes 1..2 { }\n"
        "diagram \"A\" context { }\n");
    ASSERT_FALSE(parsed.ok());
    ASSERT_EQ(parsed.errors().size(), 3u);
    EXPECT_EQ(parsed.errors()[0].message, "name is empty");
    EXPECT_EQ(parsed.errors()[1].message, "invalid process number '1..2'");
    EXPECT_EQ(parsed.errors()[2].message, "duplicate diagram title \"A\"");
}

TEST(ParseProject, LexicalErrors) {
    expect_spans_in_bounds("diagram \"unterminated context {");
    expect_spans_in_bounds("diagram \"X\" context { entity \"a\\q\" }");
    expect_spans_in_bounds("diagram \"X\" context { entity \"\xff\" }");
    expect_spans_in_bounds("diagram \"X\" context { @ }");
}

TEST(ParseProject, SpansWithinSource) {
    const char* broken[] = {
        "diagram",
        "diagram \"X\"",
        "diagram \"X\" context",
        "diagram \"X\" context {",
        "diagram \"X\" context {\n  flow \"f\" from\n",
        "diagram \"X\" context {\n  flow \"f\" from entity \"a\" to\n}\n",
        "process 0 \"x\"",
        "}\n\n",
        "diagram \"X\" decomposes {}",
    };
    for (const char* src : broken) expect_spans_in_bounds(src);
}

TEST(ParseProject, TruncatedFixturesFailInBounds) {
    const std::string text = read_file(fixture_path("ls_ok.dfd"));
    for (std::size_t cut = 0; cut < text.size(); cut += 7) {
        const std::string prefix = text.substr(0, cut);
        auto parsed = dsl::parse_project(prefix);
        if (parsed.ok()) continue;
        std::size_t lines = 1;
        for (char c : prefix) lines += c == '\n';
        for (const auto& e : parsed.errors()) {
            EXPECT_GE(e.span.line, 1u);
            EXPECT_GE(e.span.column, 1u);
            EXPECT_LE(e.span.line, lines);
        }
    }
}

TEST(ParseProject, DescriptionsAndEscapes) {
    const Project p = parse_or_throw(
        "diagram \"C\" context {\n"
        "  process 0 \"Sys\" desc \"the \\\"whole\\\" thing\"\n"
        "  entity \"A\\\\B\"\n"
        "}\n");
    const Diagram& d = p.diagrams()[0];
    EXPECT_EQ(d.processes()[0].description, std::optional<std::string>("the \"whole\" thing"));
    EXPECT_EQ(d.entities()[0].name.str(), "A\\B");
}

TEST(ParseProject, ElementSpans) {
    const Project p = load_fixture("ais_ok.dfd");
    const auto& entity = p.diagrams()[0].entities()[0];
    ASSERT_TRUE(entity.origin.span);
    EXPECT_EQ(entity.origin.span->line, 6u);
    EXPECT_EQ(entity.origin.span->column, 3u);
    EXPECT_EQ(entity.origin.span->length, std::string("entity \"Lecturer\"").size());
}

TEST(ParseProject, NamesAreNormalized) {
    const Project p = parse_or_throw("diagram \" Ctx \" context { entity \"  check   list \" }");
    EXPECT_EQ(p.diagrams()[0].title().str(), "Ctx");
    EXPECT_EQ(p.diagrams()[0].entities()[0].name.str(), "check list");
}
