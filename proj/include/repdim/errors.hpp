#pragma once

#include <stdexcept>
#include <string>

namespace repdim {

// Field of one operand differs from the other's.
struct FieldMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Dimensions/shapes incompatible with the requested operation.
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Structure-constant / action validation failed (non-associative constants,
// unit not an identity, action not multiplicative, invalid group action...).
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Radical via the trace form needs char 0 or p > dim.
struct UnsupportedCharacteristic : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A required idempotent/summand could not be produced (division-algebra
// block over the ground field, or search budget exhausted).
struct SplittingFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Minimal-polynomial factorization is not implemented over this field.
struct FactorizationUnsupported : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A desk-scale size guard was exceeded.
struct SizeGuard : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An input value is outside the operation's domain.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace repdim
