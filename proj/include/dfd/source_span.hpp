#pragma once

#include <compare>
#include <cstddef>
#include <optional>

namespace dfd {

/// Position of a token or declaration in DSL source. Line and column are
/// 1-based; column and length count bytes.
struct SourceSpan {
    std::size_t line = 1;
    std::size_t column = 1;
    std::size_t length = 0;

    friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

/// Where a model element was declared. Never participates in equality, so
/// a model parsed from text compares equal to the same model read from JSON.
struct Origin {
    std::optional<SourceSpan> span;

    friend bool operator==(const Origin&, const Origin&) { return true; }
    friend std::strong_ordering operator<=>(const Origin&, const Origin&) {
        return std::strong_ordering::equal;
    }
};

}  // namespace dfd
