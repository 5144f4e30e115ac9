#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace radokit::testing {

std::vector<std::vector<std::int64_t>> brute_force_solutions(const std::vector<Int>& coeffs,
                                                             std::vector<std::int64_t> values,
                                                             bool distinct) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());

    const std::size_t k = coeffs.size();
    std::vector<std::vector<std::int64_t>> out;
    if (values.empty())
        return out;

    std::vector<std::size_t> idx(k, 0);
    for (;;) {
        std::vector<std::int64_t> tuple(k);
        for (std::size_t i = 0; i < k; ++i)
            tuple[i] = values[idx[i]];

        bool ok = true;
        if (distinct) {
            for (std::size_t i = 0; ok && i < k; ++i)
                for (std::size_t j = i + 1; j < k; ++j)
                    if (tuple[i] == tuple[j]) {
                        ok = false;
                        break;
                    }
        }
        if (ok) {
            Int sum = 0;
            for (std::size_t i = 0; i < k; ++i)
                sum += coeffs[i] * Int(tuple[i]);
            if (sum == 0)
                out.push_back(tuple);
        }

        // Odometer increment, last position fastest.
        std::size_t pos = k;
        while (pos > 0) {
            --pos;
            if (++idx[pos] < values.size())
                break;
            idx[pos] = 0;
            if (pos == 0)
                return out;
        }
    }
}

OracleForcing exhaustive_min_forcing(const std::vector<Int>& coeffs, int colors, bool distinct,
                                     int n_max) {
    for (int n = 1; n <= n_max; ++n) {
        std::vector<std::int64_t> domain;
        for (int v = 1; v <= n; ++v)
            domain.push_back(v);
        const auto solutions = brute_force_solutions(coeffs, domain, distinct);

        bool found_good = false;
        std::vector<int> coloring(static_cast<std::size_t>(n), 0);
        for (;;) {
            bool has_mono = false;
            for (const auto& sol : solutions) {
                const int c = coloring[static_cast<std::size_t>(sol[0] - 1)];
                bool mono = true;
                for (std::int64_t x : sol) {
                    if (coloring[static_cast<std::size_t>(x - 1)] != c) {
                        mono = false;
                        break;
                    }
                }
                if (mono) {
                    has_mono = true;
                    break;
                }
            }
            if (!has_mono) {
                found_good = true;
                break;
            }

            std::size_t pos = coloring.size();
            bool carried_out = false;
            while (pos > 0) {
                --pos;
                if (++coloring[pos] < colors)
                    break;
                coloring[pos] = 0;
                if (pos == 0)
                    carried_out = true;
            }
            if (carried_out)
                break;
        }
        if (!found_good)
            return {true, n};
    }
    return {false, n_max};
}

std::set<Int> subset_sums_oracle(const std::vector<std::int64_t>& ground) {
    std::set<Int> sums;
    const std::size_t n = ground.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        Int sum = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::uint64_t{1} << i))
                sum += ground[i];
        sums.insert(sum);
    }
    return sums;
}

std::set<Int> mt_sums_oracle(const std::vector<std::int64_t>& ground,
                             const std::vector<Int>& coeffs) {
    const std::size_t n = ground.size();
    const std::size_t blocks = coeffs.size();
    std::set<Int> sums;

    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<std::int64_t> members;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::uint64_t{1} << i))
                members.push_back(ground[i]);
        if (members.size() < blocks)
            continue;

        // Compositions of members.size() into `blocks` positive parts,
        // i.e. choices of blocks-1 cut points; each yields one tuple of
        // consecutive segments.
        std::vector<std::size_t> cuts(blocks - 1);
        for (std::size_t i = 0; i < cuts.size(); ++i)
            cuts[i] = i + 1;
        for (;;) {
            Int sum = 0;
            std::size_t start = 0;
            for (std::size_t b = 0; b < blocks; ++b) {
                const std::size_t end = (b + 1 < blocks) ? cuts[b] : members.size();
                for (std::size_t i = start; i < end; ++i)
                    sum += coeffs[b] * Int(members[i]);
                start = end;
            }
            sums.insert(sum);

            if (cuts.empty())
                break;
            // Next combination of cut points within 1..members.size()-1.
            std::size_t pos = cuts.size();
            bool advanced = false;
            while (pos > 0) {
                --pos;
                if (cuts[pos] + (cuts.size() - pos) <= members.size() - 1) {
                    ++cuts[pos];
                    for (std::size_t i = pos + 1; i < cuts.size(); ++i)
                        cuts[i] = cuts[i - 1] + 1;
                    advanced = true;
                    break;
                }
            }
            if (!advanced)
                break;
        }
    }
    return sums;
}

namespace {

void collect_normal_forms(const IntString& s, std::map<IntString, std::set<IntString>>& memo,
                          std::set<IntString>& out) {
    if (auto it = memo.find(s); it != memo.end()) {
        out.insert(it->second.begin(), it->second.end());
        return;
    }

    std::set<IntString> local;
    bool reducible = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == 0) {
            reducible = true;
            IntString next = s;
            next.erase(next.begin() + static_cast<std::ptrdiff_t>(i));
            collect_normal_forms(next, memo, local);
        }
        if (i + 1 < s.size() && s[i] == s[i + 1]) {
            reducible = true;
            IntString next = s;
            next.erase(next.begin() + static_cast<std::ptrdiff_t>(i));
            collect_normal_forms(next, memo, local);
        }
    }
    if (!reducible)
        local.insert(s);

    memo.emplace(s, local);
    out.insert(local.begin(), local.end());
}

} // namespace

std::set<IntString> all_normal_forms(const IntString& s) {
    std::map<IntString, std::set<IntString>> memo;
    std::set<IntString> out;
    collect_normal_forms(s, memo, out);
    return out;
}

std::vector<Int> random_sum_zero_equation(std::mt19937_64& rng, int k_min, int k_max,
                                          int magnitude) {
    std::uniform_int_distribution<int> k_dist(k_min, k_max);
    std::uniform_int_distribution<int> c_dist(-magnitude, magnitude);
    for (;;) {
        const int k = k_dist(rng);
        std::vector<Int> c;
        Int sum = 0;
        for (int i = 0; i + 1 < k; ++i) {
            int value = 0;
            while (value == 0)
                value = c_dist(rng);
            c.emplace_back(value);
            sum += value;
        }
        const Int last = -sum;
        if (last == 0 || last > magnitude || last < -magnitude)
            continue;
        c.push_back(last);
        return c;
    }
}

IntString random_string(std::mt19937_64& rng, int max_len, long long lo, long long hi) {
    std::uniform_int_distribution<int> len_dist(0, max_len);
    std::uniform_int_distribution<long long> entry_dist(lo, hi);
    IntString out;
    const int len = len_dist(rng);
    out.reserve(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i)
        out.emplace_back(entry_dist(rng));
    return out;
}

IntString random_equivalent(std::mt19937_64& rng, const IntString& s, int steps,
                            std::size_t max_len) {
    IntString cur = s;
    std::uniform_int_distribution<int> move_dist(0, 3);
    for (int step = 0; step < steps; ++step) {
        const int move = move_dist(rng);
        if (move == 0 && cur.size() + 1 <= max_len) { // insert a zero
            std::uniform_int_distribution<std::size_t> at(0, cur.size());
            cur.insert(cur.begin() + static_cast<std::ptrdiff_t>(at(rng)), Int(0));
        } else if (move == 1 && !cur.empty() && cur.size() + 1 <= max_len) { // duplicate
            std::uniform_int_distribution<std::size_t> at(0, cur.size() - 1);
            const std::size_t i = at(rng);
            cur.insert(cur.begin() + static_cast<std::ptrdiff_t>(i), cur[i]);
        } else if (move == 2) { // delete a zero if any
            std::vector<std::size_t> zeros;
            for (std::size_t i = 0; i < cur.size(); ++i)
                if (cur[i] == 0)
                    zeros.push_back(i);
            if (!zeros.empty()) {
                std::uniform_int_distribution<std::size_t> at(0, zeros.size() - 1);
                cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(zeros[at(rng)]));
            }
        } else if (move == 3) { // collapse an adjacent equal pair if any
            std::vector<std::size_t> pairs;
            for (std::size_t i = 0; i + 1 < cur.size(); ++i)
                if (cur[i] == cur[i + 1])
                    pairs.push_back(i);
            if (!pairs.empty()) {
                std::uniform_int_distribution<std::size_t> at(0, pairs.size() - 1);
                cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(pairs[at(rng)]));
            }
        }
    }
    return cur;
}

} // namespace radokit::testing
