#pragma once

#include <stdexcept>
#include <string>

namespace descartes {

// Invalid input to an operation (zero root, ZERO in a pattern that forbids it, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Degree or enumeration budget exceeded.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input outside the families an operation supports (m >= 6 predictor,
// couple whose pattern has a vanishing coefficient, ...).
class UnsupportedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A construction or verification that should have succeeded did not.
class FailureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace descartes
