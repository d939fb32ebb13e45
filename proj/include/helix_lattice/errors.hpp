#pragma once

#include <stdexcept>
#include <string>

namespace helix_lattice {

/// Input outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A hypothesis of a checked statement does not hold for the supplied data.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Work would exceed a configured budget; nothing is silently truncated.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace helix_lattice
