#include "abp/error.hpp"

namespace abp {

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::FieldTooLarge: return "FieldTooLarge";
    case ErrorKind::NotIsolating: return "NotIsolating";
    case ErrorKind::Reducible: return "Reducible";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::DensityError: return "DensityError";
    case ErrorKind::NotDisjoint: return "NotDisjoint";
    case ErrorKind::RatioRational: return "RatioRational";
    case ErrorKind::GammaNotLargest: return "GammaNotLargest";
    case ErrorKind::DensitiesNotEqual: return "DensitiesNotEqual";
    case ErrorKind::RoleNotPresent: return "RoleNotPresent";
    case ErrorKind::BFileMalformed: return "BFileMalformed";
    }
    return "Error";
}

bool is_precondition(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::NotDisjoint:
    case ErrorKind::RatioRational:
    case ErrorKind::GammaNotLargest:
    case ErrorKind::DensitiesNotEqual:
    case ErrorKind::DensityError:
        return true;
    default:
        return false;
    }
}

} // namespace abp
