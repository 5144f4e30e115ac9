// Finitary verification engine: solution enumeration inside finite sets,
// monochromatic-solution detection under a coloring, minimal forcing N by
// backtracking over colorings, and Milliken-Taylor / finite-sums
// enumeration.
//
// The search domain is {1..N}; zero is excluded so the all-zero tuple
// never shows up as a solution of a sum-zero equation. "Distinct" always
// means pairwise distinct values.
#pragma once

#include "radokit/ints.hpp"
#include "radokit/witness.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

namespace radokit {

// Total r-coloring of {1..N}. Integer i has color assignment()[i-1].
class Coloring {
public:
    Coloring(int n_max, int colors, std::vector<std::uint8_t> assignment);

    int n_max() const { return n_max_; }
    int colors() const { return colors_; }
    int color_of(int value) const; // 1 <= value <= n_max, throws RangeError
    const std::vector<std::uint8_t>& assignment() const { return assignment_; }

private:
    int n_max_;
    int colors_;
    std::vector<std::uint8_t> assignment_;
};

// A tuple x_1..x_k with sum c_i * x_i = 0.
struct Solution {
    std::vector<std::int64_t> x;

    friend bool operator==(const Solution&, const Solution&) = default;
};

struct SearchOptions {
    std::uint64_t node_budget = 100'000'000;
    // First-occurrence color symmetry breaking: integer m may open color c
    // only if colors 0..c-1 already appear among 1..m-1. Never changes the
    // forced/not-forced answer or the minimal N, only the work done.
    bool color_symmetry = true;
};

struct SearchOutcome {
    bool forced = false;
    // Minimal forcing N when forced; the n_max that was exhausted when not.
    int n = 0;
    // A coloring of {1..n} with no monochromatic solution when not forced.
    std::optional<Coloring> certificate;
    std::uint64_t nodes = 0;
};

// Up to `limit` solutions with every x_i drawn from `values`, in
// lexicographic order (positions left to right, candidate values
// ascending). Values must be positive; duplicates are ignored.
std::vector<Solution> solutions_in_set(const EquationCoeffs& eq,
                                       const std::vector<std::int64_t>& values, bool distinct,
                                       std::size_t limit);

// First solution lying inside a single color class, scanning colors in
// increasing order and solutions lexicographically. Empty when no color
// class contains one.
std::optional<Solution> find_monochromatic(const EquationCoeffs& eq, const Coloring& coloring,
                                           bool distinct);

// Least N <= n_max such that every r-coloring of {1..N} contains a
// monochromatic (distinct, per flag) solution, or the counterexample
// coloring of {1..n_max} when no such N exists. Backtracking over
// colorings in increasing integer order; a branch dies as soon as the
// newly colored integer completes a monochromatic solution. Throws
// ResourceExceeded when the node budget runs out before a decision.
SearchOutcome min_forcing_n(const EquationCoeffs& eq, int colors, bool distinct, int n_max,
                            const SearchOptions& options = {});

// Ground sequence x_1 < ... < x_n and block coefficients a_0..a_k for
// Milliken-Taylor sums. Throws InvalidInput unless the ground sequence is
// strictly increasing and positive, and every coefficient is >= 1.
class MTSpec {
public:
    MTSpec(std::vector<std::int64_t> ground, std::vector<Int> coeffs);

    const std::vector<std::int64_t>& ground() const { return ground_; }
    const std::vector<Int>& coeffs() const { return coeffs_; }

private:
    std::vector<std::int64_t> ground_;
    std::vector<Int> coeffs_;
};

struct MTOptions {
    // Cap on enumeration steps; the number of block tuples grows
    // exponentially with the ground size.
    std::uint64_t max_steps = 50'000'000;
};

// All values sum_s sum_{i in I_s} a_s * x_i over tuples of nonempty index
// blocks I_0 < ... < I_k (max of one block below min of the next). Empty
// when the ground sequence cannot host k+1 blocks.
std::set<Int> mt_sums(const MTSpec& spec, const MTOptions& options = {});

// Finite sums FS(ground): all nonempty subset sums. Equals mt_sums with a
// single coefficient 1.
std::set<Int> fs(const std::vector<std::int64_t>& ground, const MTOptions& options = {});

// The single color containing every MT-sum of the spec, or empty when the
// sums are not monochromatic or there are no sums at all. Throws
// RangeError if a sum exceeds the coloring's domain.
std::optional<int> verify_mt_monochromatic(const MTSpec& spec, const Coloring& coloring);

} // namespace radokit
