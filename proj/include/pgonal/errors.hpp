#pragma once

#include <stdexcept>
#include <string>

namespace pgonal {

enum class errc {
    // exact field arithmetic
    reducible_min_poly,
    degree_too_large,
    division_by_zero,
    field_mismatch,
    not_a_group,
    zero_radicand,
    invalid_automorphism,
    primitive_search_failed,
    // curves
    not_prime,
    bad_multiplicity_sum,
    duplicate_branch_point,
    genus_too_small,
    infinity_present,
    degenerate_triple,
    // galois / descent
    not_quasi_rational,
    ambiguous_character,
    no_matching_map,
    non_unique_map,
    cocycle_violation,
    holonomy_not_scalar,
    splitting_failed,
    coefficient_not_in_subfield,
    certificate_invalid,
    exceptional_input,
    // moduli
    not_a_subgroup,
    inconsistent_flags,
    // io
    parse_error,
    schema_error,
    bad_parameter,
};

const char* errc_name(errc c);

/// Library-wide exception. `code()` is stable and is what the CLI maps to
/// machine-readable error documents and exit codes.
class error : public std::runtime_error {
public:
    error(errc code, std::string message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) { throw error(code, message); }

} // namespace pgonal
