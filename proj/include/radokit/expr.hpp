// Surface syntax: linear diophantine equations ("3x1+x2+x3-x4-4x5=0") and
// linear combinations of a single symbolic idempotent ultrafilter
// ("60U (+) 48U (+) 60U (+) 80U"). Equality of combinations is decided
// entirely at the string level: two combinations denote the same
// ultrafilter for every idempotent U exactly when their coefficient
// strings are u-equivalent. The grammar is documented in docs/grammar.md.
#pragma once

#include "radokit/ints.hpp"
#include "radokit/ueq.hpp"
#include "radokit/witness.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace radokit {

// Coefficient string <a_0,...,a_k> of a_0 U (+) a_1 U (+) ... (+) a_k U.
// Coefficients are restricted to nonnegative integers; the string-level
// equality theorem is only available there.
class UltraExpr {
public:
    UltraExpr() = default; // the empty combination (principal ultrafilter)
    explicit UltraExpr(IntString coeffs);

    const IntString& coeffs() const { return coeffs_; }

    friend bool operator==(const UltraExpr&, const UltraExpr&) = default;

private:
    IntString coeffs_;
};

struct ParsedEquation {
    EquationCoeffs eq;
    std::vector<std::string> variables; // order of first appearance
};

// Signed integer-coefficient terms over distinct variable identifiers,
// "= 0" on the right. Implicit coefficient 1, optional '*', whitespace
// insensitive. Throws ParseError (with 1-based column) on grammar
// violations, SemanticError on a repeated variable, a zero coefficient,
// or a nonzero right-hand side.
ParsedEquation parse_equation(std::string_view text);

// Terms "nU", "n*U" or bare "U" joined by "(+)". Only the symbol U is
// accepted; combinations of several distinct ultrafilter symbols are
// rejected at parse time. Throws ParseError on grammar violations,
// SemanticError on a negative coefficient.
UltraExpr parse_combination(std::string_view text);

// True iff the coefficient strings are u-equivalent, i.e. the two
// combinations are equal for every idempotent ultrafilter.
bool combinations_equal(const UltraExpr& lhs, const UltraExpr& rhs);

// The unique representative with no zero and no adjacent equal
// coefficients. The empty result denotes the principal ultrafilter and
// prints as "0U".
UltraExpr canonical_combination(const UltraExpr& e);

// Inverse of parse_combination on canonical nonempty input.
std::string format_combination(const UltraExpr& e);

} // namespace radokit
