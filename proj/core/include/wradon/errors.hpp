#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wradon {

/// Precondition or configuration violation. Maps to CLI exit status 1.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Request for a phantom kind or feature the built-ins do not provide.
class Unsupported : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A computation produced a non-finite value. Maps to CLI exit status 2.
class NumericalError : public std::runtime_error {
public:
    NumericalError(const std::string& what, std::ptrdiff_t node = -1, std::ptrdiff_t direction = -1)
        : std::runtime_error(what), node_(node), direction_(direction) {}

    /// Flat grid node index, or -1 when not applicable.
    std::ptrdiff_t node() const { return node_; }
    /// Direction (quadrature node) index, or -1 when not applicable.
    std::ptrdiff_t direction() const { return direction_; }

private:
    std::ptrdiff_t node_;
    std::ptrdiff_t direction_;
};

}  // namespace wradon
