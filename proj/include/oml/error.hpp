#pragma once

#include <stdexcept>
#include <string>

namespace oml {

/// Failure categories raised by construction and operation preconditions.
/// Law violations discovered by checkers are reported, not thrown; see
/// CheckReport in report.hpp.
enum class ErrorKind {
    descriptor_mismatch,
    not_square_free,
    division_by_zero,
    no_order,
    dimension_mismatch,
    not_hermitian,
    not_positive_definite,
    zero_vector,
    not_an_atom,
    space_mismatch,
    malformed_table,
    unknown_element,
    cap_exceeded,
    value_not_rational,
    not_a_state,
    not_an_effect,
    not_a_partition,
    norms_unequal,
    not_orthogonal,
    not_invertible,
    identity_fails,
    extension_inconsistent,
    hypotheses_unmet,
    parse_error,
    bad_argument,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace oml
