#include "pgonal/errors.hpp"

namespace pgonal {

const char* errc_name(errc c) {
    switch (c) {
        case errc::reducible_min_poly: return "ReducibleMinPoly";
        case errc::degree_too_large: return "DegreeTooLarge";
        case errc::division_by_zero: return "DivisionByZero";
        case errc::field_mismatch: return "FieldMismatch";
        case errc::not_a_group: return "NotAGroup";
        case errc::zero_radicand: return "ZeroRadicand";
        case errc::invalid_automorphism: return "InvalidAutomorphism";
        case errc::primitive_search_failed: return "PrimitiveSearchFailed";
        case errc::not_prime: return "NotPrime";
        case errc::bad_multiplicity_sum: return "BadMultiplicitySum";
        case errc::duplicate_branch_point: return "DuplicateBranchPoint";
        case errc::genus_too_small: return "GenusTooSmall";
        case errc::infinity_present: return "InfinityPresent";
        case errc::degenerate_triple: return "DegenerateTriple";
        case errc::not_quasi_rational: return "NotQuasiRational";
        case errc::ambiguous_character: return "AmbiguousCharacter";
        case errc::no_matching_map: return "NoMatchingMap";
        case errc::non_unique_map: return "NonUniqueMap";
        case errc::cocycle_violation: return "CocycleViolation";
        case errc::holonomy_not_scalar: return "HolonomyNotScalar";
        case errc::splitting_failed: return "SplittingFailed";
        case errc::coefficient_not_in_subfield: return "CoefficientNotInSubfield";
        case errc::certificate_invalid: return "CertificateInvalid";
        case errc::exceptional_input: return "ExceptionalInput";
        case errc::not_a_subgroup: return "NotASubgroup";
        case errc::inconsistent_flags: return "InconsistentFlags";
        case errc::parse_error: return "ParseError";
        case errc::schema_error: return "SchemaError";
        case errc::bad_parameter: return "BadParameter";
    }
    return "UnknownError";
}

} // namespace pgonal
