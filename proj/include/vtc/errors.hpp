#pragma once

#include <stdexcept>
#include <string>

namespace vtc {

// Adaptive quadrature ran out of refinement budget before reaching tol.
struct NonConvergence : std::runtime_error {
    explicit NonConvergence(const std::string& msg) : std::runtime_error(msg) {}
};

// Forward elimination hit a pivot below the configured epsilon.
struct SingularPivot : std::runtime_error {
    explicit SingularPivot(const std::string& msg) : std::runtime_error(msg) {}
};

// Operation called on a model variant it does not apply to.
struct VariantMismatch : std::logic_error {
    explicit VariantMismatch(const std::string& msg) : std::logic_error(msg) {}
};

// Input outside the mathematical domain of the operation.
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

// Config file is syntactically malformed.
struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line(line) {}
    int line;
};

// Config parsed but violates a model invariant.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace vtc
