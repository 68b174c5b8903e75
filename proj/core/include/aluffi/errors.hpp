#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace aluffi {

// Base class of everything thrown on purpose by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input text rejected by the polynomial grammar; carries the byte offset
// of the offending token.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at offset " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// Precondition violation: the operation is mathematically undefined or
// unsupported for the given input (ring mismatch, non-reduced input, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// A configured resource ceiling (pair queue, term count) was hit.
class LimitError : public Error {
public:
    using Error::Error;
};

// Internal invariant breach.  Indicates a bug in the library, never bad
// user input; computations fail loudly rather than return nonsense.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace aluffi
