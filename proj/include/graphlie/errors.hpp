#pragma once

#include <stdexcept>
#include <string>

namespace graphlie {

// Machine-readable error codes; the CLI maps these onto exit codes and
// emits them verbatim in JSON error objects.
enum class errc {
    usage,
    parse_error,
    budget_exceeded,
    theorem_disagreement,
    not_special,
    not_droms,
    duplicate_vertex,
    non_integral_dimension,
    bad_constant_term,
    nonpositive_coefficient,
    degree_out_of_range,
    arity_mismatch,
    derivation_law_violated,
    terminus_in_x,
    bad_coefficients,
    kind_mismatch,
    internal,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::usage: return "Usage";
        case errc::parse_error: return "ParseError";
        case errc::budget_exceeded: return "BudgetExceeded";
        case errc::theorem_disagreement: return "TheoremDisagreement";
        case errc::not_special: return "NotSpecial";
        case errc::not_droms: return "NotDroms";
        case errc::duplicate_vertex: return "DuplicateVertex";
        case errc::non_integral_dimension: return "NonIntegralDimension";
        case errc::bad_constant_term: return "BadConstantTerm";
        case errc::nonpositive_coefficient: return "NonpositiveCoefficient";
        case errc::degree_out_of_range: return "DegreeOutOfRange";
        case errc::arity_mismatch: return "ArityMismatch";
        case errc::derivation_law_violated: return "DerivationLawViolated";
        case errc::terminus_in_x: return "TerminusInX";
        case errc::bad_coefficients: return "BadCoefficients";
        case errc::kind_mismatch: return "KindMismatch";
        case errc::internal: return "Internal";
    }
    return "Internal";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    errc code() const { return code_; }
    const char* code_name() const { return errc_name(code_); }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw error(code, msg); }

inline void require(bool cond, errc code, const std::string& msg) {
    if (!cond) fail(code, msg);
}

}  // namespace graphlie
