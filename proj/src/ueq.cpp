#include "radokit/ueq.hpp"

#include "radokit/errors.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace radokit {

Int int_from_decimal(const std::string& text) {
    if (text.empty())
        throw InvalidInput("empty integer literal");
    std::size_t start = (text[0] == '-') ? 1 : 0;
    if (start == text.size())
        throw InvalidInput("integer literal '" + text + "' has no digits");
    for (std::size_t i = start; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw InvalidInput("malformed integer literal '" + text + "'");
    }
    return Int(text);
}

CanonicalString reduce(const IntString& s) {
    IntString out;
    out.reserve(s.size());
    for (const Int& entry : s) {
        if (entry == 0)
            continue;
        if (!out.empty() && out.back() == entry)
            continue;
        out.push_back(entry);
    }
    return CanonicalString(std::move(out));
}

bool u_equiv(const IntString& s, const IntString& t) {
    return reduce(s) == reduce(t);
}

IntString concat(const IntString& s, const IntString& t) {
    IntString out = s;
    out.insert(out.end(), t.begin(), t.end());
    return out;
}

IntString scale(const Int& h, const IntString& s) {
    IntString out;
    out.reserve(s.size());
    for (const Int& entry : s)
        out.push_back(h * entry);
    return out;
}

Polynomial::Polynomial(IntString coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    if (other.coeffs_.size() > coeffs_.size())
        coeffs_.resize(other.coeffs_.size(), Int(0));
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
        coeffs_[i] += other.coeffs_[i];
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
    return *this;
}

Polynomial operator*(const Int& scalar, const Polynomial& p) {
    if (scalar == 0)
        return Polynomial();
    IntString out;
    out.reserve(p.coeffs_.size());
    for (const Int& c : p.coeffs_)
        out.push_back(scalar * c);
    return Polynomial(std::move(out));
}

IntString poly_to_string(const Polynomial& p) {
    return p.coeffs();
}

bool u_equiv_poly(const Polynomial& p, const Polynomial& q) {
    return u_equiv(poly_to_string(p), poly_to_string(q));
}

} // namespace radokit
