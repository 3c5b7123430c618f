#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mcolor {

enum class ErrorKind {
    NotFound,
    InvalidParams,
    InvalidElement,
    ParseError,
    TooLarge,
    Infeasible,
    ContractViolation,
    Incomplete,
    RefusedInvalid,
};

constexpr std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotFound: return "NotFound";
        case ErrorKind::InvalidParams: return "InvalidParams";
        case ErrorKind::InvalidElement: return "InvalidElement";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::Infeasible: return "Infeasible";
        case ErrorKind::ContractViolation: return "ContractViolation";
        case ErrorKind::Incomplete: return "Incomplete";
        case ErrorKind::RefusedInvalid: return "RefusedInvalid";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above so that
/// callers (the CLI in particular) can map it to an exit code.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Parse failures also remember the 1-based line they occurred on.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool condition, ErrorKind kind, const std::string& what) {
    if (!condition) fail(kind, what);
}

}  // namespace mcolor
