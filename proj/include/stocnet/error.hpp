#pragma once

#include <stdexcept>
#include <string>

namespace stocnet {

enum class ErrorKind {
    SelfLoop,
    DuplicateEdge,
    IdOutOfRange,
    ParseError,
    TooSmall,
    BadDegree,
    BadProbability,
    BadParameter,
    MismatchedInputs,
    EmptySample,
    BadGeneration,
    NotRegular,
    Overflow,
    ConfigError,
    GenerationFailure,
    IoError,
};

const char* to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries a kind so callers (the CLI, the
// python module) can map it without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace stocnet
