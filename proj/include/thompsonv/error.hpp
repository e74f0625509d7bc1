#pragma once

#include <stdexcept>
#include <string>

namespace thompsonv {

enum class ErrorKind {
    PrefixViolation,
    NotBijective,
    NotMaximal,
    EmptyInput,
    DepthTooSmall,
    UnknownGenerator,
    MalformedEncoding,
    FormatError,
    EmptyOrMaximalCode,
    PrefixHolds,
    EmptyString,
    WidthMismatch,
    NotAFunction,
    NotInjective,
    FlavorMismatch,
    TooLarge,
    ParseError,
};

const char* kind_name(ErrorKind k);

// Every library failure is reported through this one type; callers switch on kind().
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace thompsonv
