#pragma once

#include <stdexcept>
#include <string>

namespace codual {

/// Malformed schema, inconsistent matrix shapes, or mismatched base structures.
/// Distinct from an axiom FAIL: a structurally broken input cannot even be checked.
class StructureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Field construction or element parsing problems (non-prime modulus, entry out
/// of range, unsupported characteristic for a builder).
class FieldError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operation whose contract demands certified inputs received one that fails
/// its axioms.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a mathematically guaranteed internal step fails (e.g. a costructure
/// that should restrict to a subspace does not). Indicates a bug, not bad input.
class InternalInvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace codual
