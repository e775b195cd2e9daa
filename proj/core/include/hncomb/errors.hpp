#pragma once

#include <stdexcept>
#include <string>

namespace hncomb {

// Malformed textual input (group specs, rationals, coweight literals, JSON).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Structurally valid input that violates a precondition of an operation.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hncomb
