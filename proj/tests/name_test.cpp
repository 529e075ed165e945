#include <gtest/gtest.h>

#include "dfd/name.hpp"
#include "dfd/error.hpp"

using dfd::normalize_name;
using dfd::ProcessId;

TEST(NormalizeName, CollapsesWhitespace) {
    EXPECT_EQ(normalize_name("  check  list ").str(), "check list");
    EXPECT_EQ(normalize_name("a\t\nb").str(), "a b");
}

TEST(NormalizeName, KeepsNormalName) { EXPECT_EQ(normalize_name("Lecturer").str(), "Lecturer"); }

TEST(NormalizeName, RejectsBlank) {
    for (const char* raw : {"", "   ", "\t\n"}) {
        try {
            normalize_name(raw);
            FAIL() << "accepted '" << raw << "'";
        } catch (const dfd::Error& e) {
            EXPECT_EQ(e.kind(), dfd::ErrorKind::EmptyName);
        }
    }
}

TEST(NormalizeName, ComposesToNfc) {
    // "e" + combining acute accent
    EXPECT_EQ(normalize_name("caf\x65\xcc\x81").str(), "caf\xc3\xa9");
    EXPECT_EQ(normalize_name("caf\x65\xcc\x81"), normalize_name("caf\xc3\xa9"));
}

TEST(NormalizeName, IsCaseSensitive) { EXPECT_NE(normalize_name("Lecturer"), normalize_name("lecturer")); }

TEST(NormalizeName, Idempotent) {
    for (const char* raw : {"  check  list ", "Lecturer", " a b ", "x\t\ty", "caf\x65\xcc\x81  bar", "\xc3\x85ngstr\xc3\xb6m"}) {
        const auto once = normalize_name(raw);
        EXPECT_EQ(normalize_name(once.str()), once) << raw;
    }
}

TEST(ProcessIdTest, ParsesDottedNumbers) {
    EXPECT_TRUE(ProcessId::parse("0"));
    EXPECT_TRUE(ProcessId::parse("3"));
    EXPECT_TRUE(ProcessId::parse("2.1.14"));
    EXPECT_FALSE(ProcessId::parse(""));
    EXPECT_FALSE(ProcessId::parse("1."));
    EXPECT_FALSE(ProcessId::parse(".1"));
    EXPECT_FALSE(ProcessId::parse("1..2"));
    EXPECT_FALSE(ProcessId::parse("a"));
    EXPECT_FALSE(ProcessId::parse("-1"));
    EXPECT_THROW(ProcessId::from("x"), dfd::Error);
}

TEST(ProcessIdTest, Structure) {
    const auto id = ProcessId::from("2.1.3");
    EXPECT_EQ(id.depth(), 3u);
    EXPECT_EQ(id.segments(), (std::vector<std::string>{"2", "1", "3"}));
    EXPECT_TRUE(id.is_descendant_of(ProcessId::from("2")));
    EXPECT_TRUE(id.is_descendant_of(ProcessId::from("2.1")));
    EXPECT_FALSE(id.is_descendant_of(ProcessId::from("2.1.3")));
    EXPECT_FALSE(ProcessId::from("21.1").is_descendant_of(ProcessId::from("2")));
    EXPECT_TRUE(ProcessId::root().is_root());
}

TEST(ProcessIdTest, OrdersNumerically) {
    EXPECT_LT(ProcessId::from("2"), ProcessId::from("10"));
    EXPECT_LT(ProcessId::from("1.9"), ProcessId::from("1.10"));
    EXPECT_LT(ProcessId::from("1"), ProcessId::from("1.1"));
}
