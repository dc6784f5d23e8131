#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace proofdiag {

/// Base class for all kernel errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed textual input (formula, permutation, derivation, JSON).
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Boundary mismatch or broken typing chain in a diagram.
class TypeError : public Error {
    using Error::Error;
};

/// Violated side condition in a sequent-calculus derivation.
class DerivationError : public Error {
    using Error::Error;
};

}  // namespace proofdiag
