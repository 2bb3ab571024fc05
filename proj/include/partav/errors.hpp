#pragma once

#include <stdexcept>
#include <string>

namespace partav {

// Every domain failure carries one of these kinds so callers (and the CLI
// exit-code mapping) can react without string matching.
enum class ErrorKind {
    NotDecreasing,
    BadToken,
    EmptyPartition,
    InvalidDecomp,
    CapExceeded,
    NotStrict,
    NotSuperStrict,
    TooSmall,
    PatternTooSmall,
    StaircaseHasNoHat,
    IndexOutOfRange,
    NotInDomain,
    BadArgument,
    DivisionByZero,
    PoleAtZero,
    NZeroUnsupported,
    HorizonTooSmall,
    DegenerateProduct,
    NoExactSource,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace partav
