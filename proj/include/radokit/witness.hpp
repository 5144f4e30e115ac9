// Witness construction for sum-zero linear diophantine equations.
//
// For c_1 X_1 + ... + c_k X_k = 0 with c_1 + ... + c_k = 0 and k > 2,
// build_witness computes the closed-form coefficient vector a_0..a_{k-2}
// (products of prefix/suffix partial sums of the non-increasingly sorted
// coefficients), build_family expands it into k pairwise-distinct
// polynomials that are all u-equivalent to <a_0,...,a_{k-2}> and whose
// c-weighted sum vanishes identically, and verify_family checks those
// three facts for arbitrary user-supplied families. check_system is an
// independent oracle for the defining linear system.
#pragma once

#include "radokit/ints.hpp"
#include "radokit/ueq.hpp"

#include <cstddef>
#include <vector>

namespace radokit {

// Coefficient vector of a linear diophantine equation. All coefficients
// nonzero, at least two of them. A zero coefficient would mean the
// variable is absent and is rejected rather than dropped.
class EquationCoeffs {
public:
    explicit EquationCoeffs(std::vector<Int> c);

    std::size_t k() const { return c_.size(); }
    const std::vector<Int>& coeffs() const { return c_; }
    Int sum() const;

    // Stable non-increasing rearrangement. permutation[i] is the index in
    // the original vector of the i-th sorted coefficient.
    EquationCoeffs sorted_non_increasing(std::vector<std::size_t>* permutation = nullptr) const;

private:
    std::vector<Int> c_;
};

struct WitnessCombination {
    std::vector<Int> a;                    // a_0..a_{k-2}, all >= 1
    std::vector<Int> sorted_c;             // non-increasing rearrangement used
    std::vector<std::size_t> permutation;  // sorted_c[i] == original c[permutation[i]]
};

struct PolynomialFamily {
    std::vector<Polynomial> members; // P_1..P_k
};

struct VerificationReport {
    bool sum_zero = false;           // sum of c_i * P_i is the zero polynomial
    bool all_u_equivalent = false;   // every P_i u-equivalent to the target
    bool pairwise_distinct = false;  // no two members share a coefficient vector
    bool distinct_required = false;  // whether pairwise_distinct counts toward passed()
    std::vector<Int> witness;
    std::vector<std::size_t> permutation;

    bool passed() const {
        return sum_zero && all_u_equivalent && (!distinct_required || pairwise_distinct);
    }
};

// Closed-form witness for a sum-zero equation with k >= 3.
// Throws InvalidEquation when k < 3, a coefficient is zero, or the
// coefficient sum is nonzero.
WitnessCombination build_witness(const EquationCoeffs& eq);

// Evaluates the k defining equations
//   (c_1+...+c_k) * a_0 = 0
//   (c_1+...+c_{k-1-j}) * a_j + (c_{k-j+1}+...+c_k) * a_{j-1} = 0   (1 <= j <= k-2)
//   (c_1+...+c_k) * a_{k-2} = 0
// against a candidate vector. Expects the equation already sorted
// non-increasing; independent of build_witness and used as its oracle.
// Throws DimensionMismatch when a.size() != k-1.
bool check_system(const EquationCoeffs& sorted_eq, const std::vector<Int>& a);

// The k polynomials of degree k-1 built from a witness vector:
//   P_1 duplicates the last coefficient,
//   P_m (2 <= m <= k-1) inserts a zero at index k-m,
//   P_k duplicates the first coefficient.
// Requires at least two entries and every a_i >= 1 (throws InvalidInput
// otherwise).
PolynomialFamily build_family(const std::vector<Int>& a);

// Checks a family of exactly k polynomials against an equation and a
// target string: exact vanishing of sum c_i * P_i, u-equivalence of every
// member to the target, and pairwise distinctness. The booleans are
// reported independently; require_distinct only affects passed().
// Coefficients pair with members positionally, so pass the sorted
// equation when verifying a constructed family.
// Throws DimensionMismatch when the family size differs from k.
VerificationReport verify_family(const EquationCoeffs& eq, const IntString& target,
                                 const PolynomialFamily& family, bool require_distinct);

} // namespace radokit
