#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace orbitdual {

enum class ErrorKind {
    InvalidPartition,
    SizeMismatch,
    ParityMismatch,
    EmptyPartition,
    BoundExceeded,
    NoMaximum,
    DomainViolation,
    UnsupportedPreset,
    InvalidType,
    DimensionMismatch,
    InvalidVariant,
    RangeViolation,
    LengthMismatch,
    InvalidDecomposition,
    FactorMismatch,
    NonClassicalType,
    UnboundedBall,
    InvalidLattice,
    ResourceLimit,
};

std::string_view to_string(ErrorKind kind);

/// Raised when an operation is called outside its mathematical domain.
/// The CLI maps these to exit code 2 with a machine-readable error object.
class DomainError : public std::runtime_error {
public:
    DomainError(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    [[nodiscard]] ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace orbitdual
