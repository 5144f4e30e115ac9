// u-equivalence string calculus.
//
// u-equivalence is the smallest equivalence relation on finite integer
// strings that identifies the empty string with <0>, identifies <a> with
// <a,a>, and is coherent with concatenation. Orienting the two generators
// as reductions (drop a zero entry, collapse an adjacent equal pair) gives
// a terminating rewrite system whose critical pairs all join, so every
// string has a unique normal form and equivalence is decided by comparing
// normal forms.
//
// For strings of nonnegative entries the uniqueness of the normal form is
// also backed by a known uniqueness theorem for linear combinations of
// idempotent ultrafilters; for strings with negative entries it is
// validated empirically against the closure oracle (see README).
#pragma once

#include "radokit/ints.hpp"

#include <compare>
#include <cstddef>

namespace radokit {

class CanonicalString;

// Applies the two reduction rules to exhaustion. Single left-to-right
// pass: zeros are dropped and an entry equal to the last kept entry is
// absorbed. Terminates in at most length(s) steps and is idempotent.
CanonicalString reduce(const IntString& s);

// A string that contains no zero entry and no two adjacent equal entries.
// Only constructible through reduce(), so the invariant always holds.
class CanonicalString {
public:
    const IntString& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    friend bool operator==(const CanonicalString&, const CanonicalString&) = default;
    friend auto operator<=>(const CanonicalString&, const CanonicalString&) = default;

private:
    friend CanonicalString reduce(const IntString&);
    explicit CanonicalString(IntString entries) : entries_(std::move(entries)) {}

    IntString entries_;
};

// True iff s and t have the same normal form.
bool u_equiv(const IntString& s, const IntString& t);

IntString concat(const IntString& s, const IntString& t);

// Entrywise product h*s.
IntString scale(const Int& h, const IntString& s);

// Dense polynomial over Int, coefficients stored in ascending degree
// order. Trailing zeros are trimmed on construction, so the zero
// polynomial is the empty coefficient vector.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(IntString coeffs);

    const IntString& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    Polynomial& operator+=(const Polynomial& other);
    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend Polynomial operator*(const Int& scalar, const Polynomial& p);

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    IntString coeffs_;
};

// The coefficient string <a_0,...,a_n> in ascending degree order.
IntString poly_to_string(const Polynomial& p);

// True iff the coefficient strings are u-equivalent.
bool u_equiv_poly(const Polynomial& p, const Polynomial& q);

} // namespace radokit
