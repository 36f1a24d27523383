// Exception vocabulary and the yes/no/unknown verdict type used by the
// decision procedures. Every thrown error carries a stable code string so
// the CLI can map failures to exit codes and JSON diagnostics.
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tamecurve {

class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define TAMECURVE_ERROR(Name)                                        \
    class Name : public Error {                                      \
    public:                                                          \
        explicit Name(const std::string& w) : Error(#Name, w) {}     \
    }

TAMECURVE_ERROR(DivisionByZero);       // inverse/divide of a zero element
TAMECURVE_ERROR(FieldMismatch);        // operands from different fields
TAMECURVE_ERROR(DimensionMismatch);    // matrix/linear-map shape clash
TAMECURVE_ERROR(Inconsistent);         // linear system has no solution
TAMECURVE_ERROR(UnsupportedField);     // operation not defined for this base
TAMECURVE_ERROR(InfiniteField);        // enumeration asked of an infinite field
TAMECURVE_ERROR(ReduciblePolynomial);  // modulus/minimal polynomial factors
TAMECURVE_ERROR(NotAssociative);       // structure constants fail associativity
TAMECURVE_ERROR(UnsupportedShape);     // bimodule data outside handled shapes
TAMECURVE_ERROR(ElementInBase);        // primitive-element candidate lies in k
TAMECURVE_ERROR(NonIntegralInvariant); // (f,e) extraction hit a non-integer
TAMECURVE_ERROR(ExactnessFailure);     // claimed exact sequence fails to compose
TAMECURVE_ERROR(PresentationMismatch); // derived relations disagree with claim
TAMECURVE_ERROR(NonTerminating);       // rewriting exceeded its step bound
TAMECURVE_ERROR(DegreeBoundExceeded);  // request above the configured degree cap
TAMECURVE_ERROR(SearchSpaceTooLarge);  // exhaustive pass would not terminate
TAMECURVE_ERROR(IncompletePrimeData);  // point table cut off below requested degree
TAMECURVE_ERROR(NotDefined);           // value queried outside its domain
TAMECURVE_ERROR(NoMatch);              // comparison search exhausted candidates
TAMECURVE_ERROR(ParseError);           // scalar or curve-spec syntax error

#undef TAMECURVE_ERROR

// Three-valued verdict for decision procedures that may give up honestly.
enum class Tri { yes, no, unknown };

inline std::string_view to_string(Tri t) {
    switch (t) {
    case Tri::yes: return "yes";
    case Tri::no: return "no";
    default: return "unknown";
    }
}

} // namespace tamecurve
