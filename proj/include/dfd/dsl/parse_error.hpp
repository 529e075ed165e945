#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dfd/source_span.hpp"

namespace dfd::dsl {

struct ParseError {
    SourceSpan span;
    std::string message;
    std::vector<std::string> expected;

    friend bool operator==(const ParseError&, const ParseError&) = default;
};

/// "3:14: expected string, found '}'"
inline std::string format(const ParseError& e) {
    return std::to_string(e.span.line) + ":" + std::to_string(e.span.column) + ": " + e.message;
}

/// Either a value or the errors that prevented producing one.
template <typename T>
class Parsed {
public:
    Parsed(T value) : state_(std::move(value)) {}
    Parsed(std::vector<ParseError> errors) : state_(std::move(errors)) {}

    bool ok() const noexcept { return std::holds_alternative<T>(state_); }
    explicit operator bool() const noexcept { return ok(); }

    const T& value() const& { return std::get<T>(state_); }
    T&& value() && { return std::get<T>(std::move(state_)); }
    const T& operator*() const& { return value(); }
    const T* operator->() const { return &value(); }

    const std::vector<ParseError>& errors() const {
        static const std::vector<ParseError> none;
        if (auto* e = std::get_if<std::vector<ParseError>>(&state_)) return *e;
        return none;
    }

private:
    std::variant<T, std::vector<ParseError>> state_;
};

}  // namespace dfd::dsl
