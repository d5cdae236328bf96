#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cliquebound {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range arguments supplied by a caller.
class InputError : public Error {
public:
    using Error::Error;
};

/// A graph or search space exceeds the fixed vertex capacity.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// An operation was applied outside its mathematical domain,
/// e.g. the weight of a non-edge or a degree bound the graph violates.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A guaranteed structural property failed to hold. Seeing one of these
/// means either a bug or a counterexample; verification drivers record them.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

} // namespace cliquebound
