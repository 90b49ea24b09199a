#ifndef PLANRAM_ERROR_HPP
#define PLANRAM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace planram {

enum class ErrorKind {
    OutOfRange,
    NotPlanar,
    Disconnected,
    NotC4Free,
    NotACycle,
    InfeasibleScale,
    UnknownSeed,
    PropertyCheckFailed,
    BadFace,
    BadDistance,
    BadVertex,
    BadEdge,
    PropertyViolation,
    UnsupportedOrder,
    ParseError,
};

const char* error_kind_name(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what);
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace planram

#endif
