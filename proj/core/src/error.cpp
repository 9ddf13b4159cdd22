#include "orbitdual/error.hpp"

namespace orbitdual {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::InvalidPartition: return "InvalidPartition";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::ParityMismatch: return "ParityMismatch";
    case ErrorKind::EmptyPartition: return "EmptyPartition";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::NoMaximum: return "NoMaximum";
    case ErrorKind::DomainViolation: return "DomainViolation";
    case ErrorKind::UnsupportedPreset: return "UnsupportedPreset";
    case ErrorKind::InvalidType: return "InvalidType";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidVariant: return "InvalidVariant";
    case ErrorKind::RangeViolation: return "RangeViolation";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::InvalidDecomposition: return "InvalidDecomposition";
    case ErrorKind::FactorMismatch: return "FactorMismatch";
    case ErrorKind::NonClassicalType: return "NonClassicalType";
    case ErrorKind::UnboundedBall: return "UnboundedBall";
    case ErrorKind::InvalidLattice: return "InvalidLattice";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    }
    return "Unknown";
}

} // namespace orbitdual
