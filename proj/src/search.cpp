#include "radokit/search.hpp"

#include "radokit/errors.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace radokit {

Coloring::Coloring(int n_max, int colors, std::vector<std::uint8_t> assignment)
    : n_max_(n_max), colors_(colors), assignment_(std::move(assignment)) {
    if (n_max < 0)
        throw InvalidInput("coloring domain bound must be >= 0");
    if (colors < 1 || colors > 255)
        throw InvalidInput("color count must be in [1, 255]");
    if (assignment_.size() != static_cast<std::size_t>(n_max))
        throw InvalidInput("coloring assigns " + std::to_string(assignment_.size()) +
                           " integers, expected " + std::to_string(n_max));
    for (std::uint8_t c : assignment_) {
        if (c >= colors)
            throw InvalidInput("color " + std::to_string(c) + " is outside 0.." +
                               std::to_string(colors - 1));
    }
}

int Coloring::color_of(int value) const {
    if (value < 1 || value > n_max_)
        throw RangeError("integer " + std::to_string(value) + " is outside the colored domain 1.." +
                         std::to_string(n_max_));
    return assignment_[static_cast<std::size_t>(value - 1)];
}

namespace {

// Depth-first enumeration of tuples over a sorted candidate list, in
// lexicographic order, with suffix-sum pruning. The last position is
// solved directly instead of scanned. Callback returns false to stop.
class SolutionEnumerator {
public:
    SolutionEnumerator(const EquationCoeffs& eq, std::vector<std::int64_t> values, bool distinct)
        : coeffs_(eq.coeffs()), values_(std::move(values)), distinct_(distinct) {
        std::sort(values_.begin(), values_.end());
        values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
        if (!values_.empty() && values_.front() < 1)
            throw InvalidInput("search domain values must be positive");

        const std::size_t k = coeffs_.size();
        suffix_lo_.assign(k + 1, Int(0));
        suffix_hi_.assign(k + 1, Int(0));
        if (!values_.empty()) {
            const Int lo(values_.front());
            const Int hi(values_.back());
            for (std::size_t i = k; i-- > 0;) {
                const Int& c = coeffs_[i];
                suffix_lo_[i] = suffix_lo_[i + 1] + (c > 0 ? c * lo : c * hi);
                suffix_hi_[i] = suffix_hi_[i + 1] + (c > 0 ? c * hi : c * lo);
            }
        }
    }

    void run(const std::function<bool(const std::vector<std::int64_t>&)>& emit) {
        if (values_.empty())
            return;
        current_.assign(coeffs_.size(), 0);
        emit_ = &emit;
        descend(0, Int(0));
        emit_ = nullptr;
    }

private:
    bool taken(std::int64_t v, std::size_t depth) const {
        for (std::size_t i = 0; i < depth; ++i)
            if (current_[i] == v)
                return true;
        return false;
    }

    // Returns false once the callback asked to stop.
    bool descend(std::size_t depth, const Int& partial) {
        const std::size_t k = coeffs_.size();
        if (partial + suffix_lo_[depth] > 0 || partial + suffix_hi_[depth] < 0)
            return true;
        if (depth + 1 == k) {
            // c_k * x = -partial has at most one candidate.
            const Int& c = coeffs_[depth];
            Int target = -partial;
            if (target % c != 0)
                return true;
            Int x = target / c;
            if (x < 1 || x > values_.back())
                return true;
            const auto v = static_cast<std::int64_t>(x);
            if (!std::binary_search(values_.begin(), values_.end(), v))
                return true;
            if (distinct_ && taken(v, depth))
                return true;
            current_[depth] = v;
            return (*emit_)(current_);
        }
        for (std::int64_t v : values_) {
            if (distinct_ && taken(v, depth))
                continue;
            current_[depth] = v;
            if (!descend(depth + 1, partial + coeffs_[depth] * Int(v)))
                return false;
        }
        return true;
    }

    std::vector<Int> coeffs_;
    std::vector<std::int64_t> values_;
    bool distinct_;
    std::vector<Int> suffix_lo_;
    std::vector<Int> suffix_hi_;
    std::vector<std::int64_t> current_;
    const std::function<bool(const std::vector<std::int64_t>&)>* emit_ = nullptr;
};

} // namespace

std::vector<Solution> solutions_in_set(const EquationCoeffs& eq,
                                       const std::vector<std::int64_t>& values, bool distinct,
                                       std::size_t limit) {
    if (values.empty())
        throw InvalidInput("solution search over an empty set");
    if (limit < 1)
        throw InvalidInput("solution limit must be >= 1");

    std::vector<Solution> out;
    SolutionEnumerator enumerator(eq, values, distinct);
    enumerator.run([&](const std::vector<std::int64_t>& x) {
        out.push_back(Solution{x});
        return out.size() < limit;
    });
    return out;
}

std::optional<Solution> find_monochromatic(const EquationCoeffs& eq, const Coloring& coloring,
                                           bool distinct) {
    for (int color = 0; color < coloring.colors(); ++color) {
        std::vector<std::int64_t> members;
        for (int v = 1; v <= coloring.n_max(); ++v)
            if (coloring.color_of(v) == color)
                members.push_back(v);
        if (members.empty())
            continue;
        std::vector<Solution> found = solutions_in_set(eq, members, distinct, 1);
        if (!found.empty())
            return found.front();
    }
    return std::nullopt;
}

namespace {

// Solutions within {1..n_max} bucketed by maximum element, flattened k at
// a time. Bucket m holds exactly the solutions whose largest value is m,
// which is what the incremental goodness check consumes.
std::vector<std::vector<std::int32_t>> solutions_by_max(const EquationCoeffs& eq, int n_max,
                                                        bool distinct) {
    std::vector<std::vector<std::int32_t>> by_max(static_cast<std::size_t>(n_max) + 1);
    std::vector<std::int64_t> domain;
    domain.reserve(static_cast<std::size_t>(n_max));
    for (int v = 1; v <= n_max; ++v)
        domain.push_back(v);

    SolutionEnumerator enumerator(eq, domain, distinct);
    enumerator.run([&](const std::vector<std::int64_t>& x) {
        const std::int64_t max_elem = *std::max_element(x.begin(), x.end());
        auto& bucket = by_max[static_cast<std::size_t>(max_elem)];
        for (std::int64_t v : x)
            bucket.push_back(static_cast<std::int32_t>(v));
        return true;
    });
    return by_max;
}

} // namespace

SearchOutcome min_forcing_n(const EquationCoeffs& eq, int colors, bool distinct, int n_max,
                            const SearchOptions& options) {
    if (colors < 1 || colors > 255)
        throw InvalidInput("color count must be in [1, 255]");
    if (n_max < 1)
        throw InvalidInput("n_max must be >= 1");

    const std::size_t k = eq.k();
    const std::vector<std::vector<std::int32_t>> by_max = solutions_by_max(eq, n_max, distinct);

    std::vector<std::uint8_t> assigned(static_cast<std::size_t>(n_max) + 1, 0);
    std::uint64_t nodes = 0;
    int max_good_depth = 0;
    std::optional<Coloring> certificate;

    // True when some solution with maximum element m is monochromatic in
    // `color` under the current partial assignment.
    auto completes_mono = [&](int m, std::uint8_t color) {
        const std::vector<std::int32_t>& bucket = by_max[static_cast<std::size_t>(m)];
        for (std::size_t off = 0; off < bucket.size(); off += k) {
            bool mono = true;
            for (std::size_t i = 0; i < k; ++i) {
                if (assigned[static_cast<std::size_t>(bucket[off + i])] != color) {
                    mono = false;
                    break;
                }
            }
            if (mono)
                return true;
        }
        return false;
    };

    // depth integers are colored and form a good coloring; used_colors of
    // them are in use (contiguous 0..used-1 under symmetry breaking).
    std::function<bool(int, int)> dfs = [&](int depth, int used_colors) -> bool {
        max_good_depth = std::max(max_good_depth, depth);
        if (depth == n_max) {
            certificate = Coloring(
                n_max, colors,
                std::vector<std::uint8_t>(assigned.begin() + 1, assigned.end()));
            return true;
        }
        const int m = depth + 1;
        int highest;
        if (m == 1)
            highest = 0; // the first integer always takes color 0
        else if (options.color_symmetry)
            highest = std::min(colors - 1, used_colors);
        else
            highest = colors - 1;
        for (int color = 0; color <= highest; ++color) {
            if (++nodes > options.node_budget)
                throw ResourceExceeded("node budget of " + std::to_string(options.node_budget) +
                                           " exhausted before a decision",
                                       nodes, max_good_depth);
            const auto c = static_cast<std::uint8_t>(color);
            assigned[static_cast<std::size_t>(m)] = c;
            if (!completes_mono(m, c)) {
                if (dfs(depth + 1, std::max(used_colors, color + 1)))
                    return true;
            }
        }
        return false;
    };

    const bool good_coloring_found = dfs(0, 0);

    SearchOutcome outcome;
    outcome.nodes = nodes;
    if (good_coloring_found) {
        outcome.forced = false;
        outcome.n = n_max;
        outcome.certificate = std::move(certificate);
    } else {
        outcome.forced = true;
        outcome.n = max_good_depth + 1;
    }
    return outcome;
}

MTSpec::MTSpec(std::vector<std::int64_t> ground, std::vector<Int> coeffs)
    : ground_(std::move(ground)), coeffs_(std::move(coeffs)) {
    for (std::size_t i = 0; i < ground_.size(); ++i) {
        if (ground_[i] < 1)
            throw InvalidInput("ground entries must be positive");
        if (i > 0 && ground_[i - 1] >= ground_[i])
            throw InvalidInput("ground sequence must be strictly increasing");
    }
    if (coeffs_.empty())
        throw InvalidInput("at least one block coefficient is required");
    for (const Int& a : coeffs_) {
        if (a < 1)
            throw InvalidInput("block coefficients must be >= 1");
    }
}

std::set<Int> mt_sums(const MTSpec& spec, const MTOptions& options) {
    const std::vector<std::int64_t>& ground = spec.ground();
    const std::vector<Int>& coeffs = spec.coeffs();
    const int last_block = static_cast<int>(coeffs.size()) - 1;

    std::set<Int> sums;
    std::uint64_t steps = 0;

    // Walk the ground sequence assigning each index to the current block,
    // the next block, or no block. Used labels are then non-decreasing
    // with no gaps, which is exactly the increasing-block condition.
    std::function<void(std::size_t, int, const Int&)> rec = [&](std::size_t idx, int block,
                                                                const Int& acc) {
        if (++steps > options.max_steps)
            throw ResourceExceeded("block-tuple enumeration exceeded " +
                                       std::to_string(options.max_steps) + " steps",
                                   steps);
        if (block == last_block)
            sums.insert(acc);
        if (idx == ground.size())
            return;
        rec(idx + 1, block, acc); // index unused
        if (block >= 0)
            rec(idx + 1, block, acc + coeffs[static_cast<std::size_t>(block)] * ground[idx]);
        if (block < last_block)
            rec(idx + 1, block + 1, acc + coeffs[static_cast<std::size_t>(block) + 1] * ground[idx]);
    };
    rec(0, -1, Int(0));
    return sums;
}

std::set<Int> fs(const std::vector<std::int64_t>& ground, const MTOptions& options) {
    return mt_sums(MTSpec(ground, {Int(1)}), options);
}

std::optional<int> verify_mt_monochromatic(const MTSpec& spec, const Coloring& coloring) {
    const std::set<Int> sums = mt_sums(spec);
    if (sums.empty())
        return std::nullopt;

    std::optional<int> color;
    for (const Int& sum : sums) {
        if (sum > coloring.n_max())
            throw RangeError("MT-sum " + sum.str() + " exceeds the colored domain 1.." +
                             std::to_string(coloring.n_max()));
        const int c = coloring.color_of(static_cast<int>(sum));
        if (!color)
            color = c;
        else if (*color != c)
            return std::nullopt;
    }
    return color;
}

} // namespace radokit
