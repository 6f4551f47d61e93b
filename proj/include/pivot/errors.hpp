#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pivot {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Two field values (or matrices) from different fields were combined.
struct DescriptorMismatch : Error {
    using Error::Error;
};

/// Multiplicative inverse of zero, or a zero denominator.
struct DivisionByZero : Error {
    using Error::Error;
};

/// A field descriptor that does not describe a field (non-prime or oversized modulus).
struct InvalidDescriptor : Error {
    using Error::Error;
};

/// A label was used against an index set that does not contain it.
struct LabelNotFound : Error {
    using Error::Error;
};

/// Operation requires equal row and column label sets.
struct NotSquare : Error {
    using Error::Error;
};

/// Operand shapes do not compose (product or sum).
struct ShapeMismatch : Error {
    using Error::Error;
};

/// Inverse of a singular matrix.
struct Singular : Error {
    using Error::Error;
};

/// The principal block selected by a pivot set is singular.
/// Carries the offending set and the rank of the block for diagnosis.
struct PivotSingular : Error {
    PivotSingular(const std::string& msg, std::string pivot_set, std::size_t block_rank,
                  std::size_t block_size)
        : Error(msg), pivot_set(std::move(pivot_set)), block_rank(block_rank),
          block_size(block_size) {}
    std::string pivot_set;
    std::size_t block_rank;
    std::size_t block_size;
};

/// An enumeration-based operation was asked to exceed its size cap.
struct SizeCapExceeded : Error {
    using Error::Error;
};

/// Malformed matrix/graph/field text.
struct ParseError : Error {
    using Error::Error;
};

} // namespace pivot
