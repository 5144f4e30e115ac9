#include "radokit/witness.hpp"

#include "radokit/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace radokit {

EquationCoeffs::EquationCoeffs(std::vector<Int> c) : c_(std::move(c)) {
    if (c_.size() < 2)
        throw InvalidEquation("an equation needs at least 2 variables, got " +
                              std::to_string(c_.size()));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0)
            throw InvalidEquation("coefficient c_" + std::to_string(i + 1) + " is zero");
    }
}

Int EquationCoeffs::sum() const {
    Int total = 0;
    for (const Int& c : c_)
        total += c;
    return total;
}

EquationCoeffs EquationCoeffs::sorted_non_increasing(std::vector<std::size_t>* permutation) const {
    std::vector<std::size_t> order(c_.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    // Stable: ties keep original index order, so the permutation is
    // deterministic.
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t lhs, std::size_t rhs) { return c_[lhs] > c_[rhs]; });
    std::vector<Int> sorted;
    sorted.reserve(c_.size());
    for (std::size_t idx : order)
        sorted.push_back(c_[idx]);
    if (permutation)
        *permutation = order;
    return EquationCoeffs(std::move(sorted));
}

WitnessCombination build_witness(const EquationCoeffs& eq) {
    const std::size_t k = eq.k();
    if (k < 3)
        throw InvalidEquation("witness construction needs k > 2, got k = " + std::to_string(k));
    if (eq.sum() != 0)
        throw InvalidEquation("coefficient sum is " + eq.sum().str() + ", expected 0");

    WitnessCombination result;
    EquationCoeffs sorted = eq.sorted_non_increasing(&result.permutation);
    const std::vector<Int>& c = sorted.coeffs();

    // prefix[j] = c_1 + ... + c_j, suffix[j] = c_k + ... + c_{k-j}.
    // With the non-increasing arrangement and zero total, prefix[1..k-2]
    // are strictly positive and suffix[0..k-3] strictly negative, which
    // makes every a_i below strictly positive.
    std::vector<Int> prefix(k + 1, Int(0));
    for (std::size_t j = 1; j <= k; ++j)
        prefix[j] = prefix[j - 1] + c[j - 1];
    std::vector<Int> suffix(k, Int(0));
    suffix[0] = c[k - 1];
    for (std::size_t j = 1; j < k; ++j)
        suffix[j] = suffix[j - 1] + c[k - 1 - j];

    auto prefix_product = [&](std::size_t upto) {
        Int p = 1;
        for (std::size_t j = 1; j <= upto; ++j)
            p *= prefix[j];
        return p;
    };
    auto suffix_product = [&](std::size_t count) {
        Int p = 1;
        for (std::size_t j = 0; j < count; ++j)
            p *= suffix[j];
        return p;
    };

    result.a.resize(k - 1);
    result.a[0] = prefix_product(k - 2);
    for (std::size_t i = 1; i + 1 < k - 1; ++i) {
        Int b = prefix_product(k - 2 - i);
        Int b_prime = suffix_product(i);
        if (i % 2 == 1)
            b_prime = -b_prime;
        result.a[i] = b * b_prime;
    }
    Int last = suffix_product(k - 2);
    if ((k - 2) % 2 == 1)
        last = -last;
    result.a[k - 2] = last;

    for (const Int& a : result.a) {
        if (a < 1)
            throw Error("internal error: witness coefficient " + a.str() + " is not positive");
    }
    result.sorted_c = c;
    return result;
}

bool check_system(const EquationCoeffs& sorted_eq, const std::vector<Int>& a) {
    const std::size_t k = sorted_eq.k();
    if (a.size() + 1 != k)
        throw DimensionMismatch("witness length " + std::to_string(a.size()) +
                                " does not match k-1 = " + std::to_string(k - 1));
    const std::vector<Int>& c = sorted_eq.coeffs();

    auto partial = [&](std::size_t from, std::size_t to) { // 1-based inclusive
        Int s = 0;
        for (std::size_t i = from; i <= to; ++i)
            s += c[i - 1];
        return s;
    };

    const Int total = partial(1, k);
    if (total * a[0] != 0 || total * a[k - 2] != 0)
        return false;
    for (std::size_t j = 1; j <= k - 2; ++j) {
        if (partial(1, k - 1 - j) * a[j] + partial(k - j + 1, k) * a[j - 1] != 0)
            return false;
    }
    return true;
}

PolynomialFamily build_family(const std::vector<Int>& a) {
    if (a.size() < 2)
        throw InvalidInput("witness vector needs at least 2 entries (k > 2), got " +
                           std::to_string(a.size()));
    for (const Int& entry : a) {
        if (entry < 1)
            throw InvalidInput("witness entry " + entry.str() + " is not >= 1");
    }
    const std::size_t k = a.size() + 1;

    PolynomialFamily family;
    family.members.reserve(k);

    // P_1: last coefficient duplicated.
    IntString first = a;
    first.push_back(a.back());
    family.members.emplace_back(std::move(first));

    // P_m, 2 <= m <= k-1: zero inserted at index k-m.
    for (std::size_t m = 2; m <= k - 1; ++m) {
        IntString coeffs;
        coeffs.reserve(k);
        const std::size_t zero_at = k - m;
        for (std::size_t i = 0; i < zero_at; ++i)
            coeffs.push_back(a[i]);
        coeffs.push_back(Int(0));
        for (std::size_t i = zero_at; i < a.size(); ++i)
            coeffs.push_back(a[i]);
        family.members.emplace_back(std::move(coeffs));
    }

    // P_k: first coefficient duplicated.
    IntString last;
    last.reserve(k);
    last.push_back(a.front());
    last.insert(last.end(), a.begin(), a.end());
    family.members.emplace_back(std::move(last));

    return family;
}

VerificationReport verify_family(const EquationCoeffs& eq, const IntString& target,
                                 const PolynomialFamily& family, bool require_distinct) {
    const std::size_t k = eq.k();
    if (family.members.size() != k)
        throw DimensionMismatch("family has " + std::to_string(family.members.size()) +
                                " members, equation has k = " + std::to_string(k));

    VerificationReport report;
    report.witness = target;
    report.distinct_required = require_distinct;

    Polynomial combination;
    for (std::size_t i = 0; i < k; ++i)
        combination += eq.coeffs()[i] * family.members[i];
    report.sum_zero = combination.is_zero();

    report.all_u_equivalent = true;
    const CanonicalString target_nf = reduce(target);
    for (const Polynomial& p : family.members) {
        if (reduce(poly_to_string(p)) != target_nf) {
            report.all_u_equivalent = false;
            break;
        }
    }

    std::set<IntString> distinct;
    for (const Polynomial& p : family.members)
        distinct.insert(p.coeffs());
    report.pairwise_distinct = distinct.size() == k;

    return report;
}

} // namespace radokit
