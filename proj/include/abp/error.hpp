#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace abp {

enum class ErrorKind {
    ParseError,
    FieldTooLarge,
    NotIsolating,
    Reducible,
    DomainError,
    DensityError,
    NotDisjoint,
    RatioRational,
    GammaNotLargest,
    DensitiesNotEqual,
    RoleNotPresent,
    BFileMalformed,
};

std::string_view to_string(ErrorKind kind) noexcept;

// True for the kinds that signal a violated construction precondition rather
// than malformed input.
bool is_precondition(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace abp
