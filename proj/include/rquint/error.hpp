#pragma once

#include <stdexcept>
#include <string>

namespace rquint {

/// Raised when an operation requires an irreducible polynomial.
class ReducibleError : public std::domain_error {
public:
    explicit ReducibleError(const std::string& what) : std::domain_error("Reducible: " + what) {}
};

}  // namespace rquint
