#include "radokit/expr.hpp"

#include "radokit/errors.hpp"

#include <cctype>
#include <set>

namespace radokit {

UltraExpr::UltraExpr(IntString coeffs) : coeffs_(std::move(coeffs)) {
    for (const Int& a : coeffs_) {
        if (a < 0)
            throw SemanticError("combination coefficient " + a.str() + " is negative");
    }
}

namespace {

// Character cursor over the input with 1-based column reporting.
class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void advance() { ++pos_; }
    std::size_t column() const { return pos_ + 1; }

    bool consume(char c) {
        if (!at_end() && peek() == c) {
            advance();
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, column()); }

    bool peek_digit() const {
        return !at_end() && std::isdigit(static_cast<unsigned char>(peek()));
    }

    Int read_digits() {
        std::string digits;
        while (peek_digit()) {
            digits.push_back(peek());
            advance();
        }
        return Int(digits);
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

bool identifier_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c));
}

bool identifier_part(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

} // namespace

ParsedEquation parse_equation(std::string_view text) {
    Cursor cur(text);
    std::vector<Int> coeffs;
    std::vector<std::string> variables;
    std::set<std::string, std::less<>> seen;

    cur.skip_ws();
    if (cur.at_end())
        cur.fail("empty equation");

    int sign = 1;
    if (cur.consume('-'))
        sign = -1;
    else
        cur.consume('+');

    for (;;) {
        cur.skip_ws();
        Int magnitude = 1;
        if (cur.peek_digit()) {
            magnitude = cur.read_digits();
            cur.skip_ws();
            cur.consume('*');
            cur.skip_ws();
        }
        if (cur.at_end() || !identifier_start(cur.peek()))
            cur.fail("expected a variable name");
        std::string name;
        while (!cur.at_end() && identifier_part(cur.peek())) {
            name.push_back(cur.peek());
            cur.advance();
        }

        if (magnitude == 0)
            throw SemanticError("variable " + name + " has coefficient 0");
        if (!seen.insert(name).second)
            throw SemanticError("variable " + name + " appears more than once");
        coeffs.push_back(sign > 0 ? magnitude : -magnitude);
        variables.push_back(std::move(name));

        cur.skip_ws();
        if (cur.consume('+')) {
            sign = 1;
            continue;
        }
        if (cur.consume('-')) {
            sign = -1;
            continue;
        }
        break;
    }

    if (!cur.consume('='))
        cur.fail("expected '+', '-' or '='");
    cur.skip_ws();
    if (!cur.peek_digit())
        cur.fail("expected an integer right-hand side");
    Int rhs = cur.read_digits();
    if (rhs != 0)
        throw SemanticError("right-hand side must be 0, got " + rhs.str());
    cur.skip_ws();
    if (!cur.at_end())
        cur.fail("unexpected trailing input");

    return ParsedEquation{EquationCoeffs(std::move(coeffs)), std::move(variables)};
}

UltraExpr parse_combination(std::string_view text) {
    Cursor cur(text);
    IntString coeffs;

    for (;;) {
        cur.skip_ws();
        if (cur.consume('-'))
            throw SemanticError("combination coefficients must be nonnegative");
        Int coeff = 1;
        if (cur.peek_digit()) {
            coeff = cur.read_digits();
            cur.skip_ws();
            cur.consume('*');
            cur.skip_ws();
        }
        if (cur.at_end() || cur.peek() != 'U') {
            if (!cur.at_end() && identifier_start(cur.peek()))
                cur.fail("only the ultrafilter symbol 'U' is supported");
            cur.fail("expected 'U'");
        }
        cur.advance();
        coeffs.push_back(coeff);

        cur.skip_ws();
        if (cur.at_end())
            break;
        // Terms are joined by the literal token "(+)".
        if (!cur.consume('('))
            cur.fail("expected '(+)' between terms");
        if (!cur.consume('+'))
            cur.fail("expected '(+)' between terms");
        if (!cur.consume(')'))
            cur.fail("expected '(+)' between terms");
    }

    return UltraExpr(std::move(coeffs));
}

bool combinations_equal(const UltraExpr& lhs, const UltraExpr& rhs) {
    return u_equiv(lhs.coeffs(), rhs.coeffs());
}

UltraExpr canonical_combination(const UltraExpr& e) {
    return UltraExpr(reduce(e.coeffs()).entries());
}

std::string format_combination(const UltraExpr& e) {
    if (e.coeffs().empty())
        return "0U";
    std::string out;
    for (std::size_t i = 0; i < e.coeffs().size(); ++i) {
        if (i > 0)
            out += " (+) ";
        const Int& a = e.coeffs()[i];
        if (a != 1)
            out += a.str();
        out += 'U';
    }
    return out;
}

} // namespace radokit
