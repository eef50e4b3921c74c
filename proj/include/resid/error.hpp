#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace resid {

enum class ErrorKind {
    unknown_label,
    self_cover,
    cycle_detected,
    duplicate_label,
    no_bottom,
    mode_unsatisfiable,
    n_too_small,
    not_a_lattice,
    invalid_involution,
    unbounded,
    limit_zero,
    malformed_document,
    schema_violation,
    invariant_violation,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so that
/// callers (the CLI in particular) can map it to a diagnostic and exit code.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace resid
