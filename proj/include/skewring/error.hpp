// error.hpp
//
// Structured domain errors. Every failure carries a stable code string
// (surfaced by the CLI as {"error": code, "witness": ...}) plus an optional
// integer-valued witness, e.g. the offending pair of an additivity violation.

#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace skewring {

class skew_error : public std::runtime_error {
public:
    using witness_map = std::map<std::string, long long>;

    skew_error(std::string code, const std::string& what, witness_map witness = {})
        : std::runtime_error(code + ": " + what),
          code_(std::move(code)),
          witness_(std::move(witness)) {}

    const std::string& code() const noexcept { return code_; }
    const witness_map& witness() const noexcept { return witness_; }

private:
    std::string code_;
    witness_map witness_;
};

namespace errc {
// gf
inline constexpr const char* not_prime = "NotPrime";
inline constexpr const char* field_too_large = "FieldTooLarge";
inline constexpr const char* division_by_zero = "DivisionByZero";
inline constexpr const char* log_of_zero = "LogOfZero";
// matfq
inline constexpr const char* dimension_mismatch = "DimensionMismatch";
inline constexpr const char* field_mismatch = "FieldMismatch";
inline constexpr const char* singular = "Singular";
inline constexpr const char* eigenvalue_outside_field = "EigenvalueOutsideField";
inline constexpr const char* not_diagonalizable = "NotDiagonalizable";
// morphism
inline constexpr const char* not_multiplicative_order = "NotMultiplicativeOrder";
inline constexpr const char* additivity_violation = "AdditivityViolation";
inline constexpr const char* multiplicativity_violation = "MultiplicativityViolation";
inline constexpr const char* exponent_out_of_range = "ExponentOutOfRange";
inline constexpr const char* non_commuting_pair = "NonCommutingPair";
inline constexpr const char* leibniz_violation = "LeibnizViolation";
inline constexpr const char* verification_failed = "VerificationFailed";
inline constexpr const char* not_frobenius_eigenvalue = "NotFrobeniusEigenvalue";
// freering
inline constexpr const char* ring_mismatch = "RingMismatch";
inline constexpr const char* zero_conjugator = "ZeroConjugator";
// transform
inline constexpr const char* chain_mismatch = "ChainMismatch";
inline constexpr const char* not_affine = "NotAffine";
inline constexpr const char* singular_linear_part = "SingularLinearPart";
inline constexpr const char* incompatible_derivations = "IncompatibleDerivations";
// classify
inline constexpr const char* search_space_too_large = "SearchSpaceTooLarge";
}  // namespace errc

}  // namespace skewring
