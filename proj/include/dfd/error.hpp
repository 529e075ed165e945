#pragma once

#include <stdexcept>
#include <string>

namespace dfd {

enum class ErrorKind {
    EmptyName,
    InvalidProcessId,
    UnknownFocus,
    NotADecomposition,
    NotAContext,
    FocusUnresolved,
    InfeasibleParams,
    NotApplicable,
};

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::EmptyName: return "EmptyName";
        case ErrorKind::InvalidProcessId: return "InvalidProcessId";
        case ErrorKind::UnknownFocus: return "UnknownFocus";
        case ErrorKind::NotADecomposition: return "NotADecomposition";
        case ErrorKind::NotAContext: return "NotAContext";
        case ErrorKind::FocusUnresolved: return "FocusUnresolved";
        case ErrorKind::InfeasibleParams: return "InfeasibleParams";
        case ErrorKind::NotApplicable: return "NotApplicable";
    }
    return "Unknown";
}

/// Thrown when an operation's precondition does not hold.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace dfd
