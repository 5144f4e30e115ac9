#include "radokit/closure_oracle.hpp"

#include "radokit/errors.hpp"

#include <deque>

namespace radokit {

namespace {

void visit(const IntString& candidate, std::set<IntString>& seen,
           std::deque<IntString>& frontier, const ClosureOptions& options) {
    if (seen.size() >= options.max_states && !seen.contains(candidate))
        throw ResourceExceeded("closure exceeds state cap of " +
                                   std::to_string(options.max_states) + " strings",
                               seen.size());
    if (seen.insert(candidate).second)
        frontier.push_back(candidate);
}

} // namespace

std::set<IntString> closure_oracle(const IntString& s, std::size_t max_len,
                                   const std::set<Int>& value_set,
                                   const ClosureOptions& options) {
    if (max_len < s.size())
        throw InvalidInput("max_len is smaller than the start string");
    for (const Int& entry : s) {
        if (!value_set.contains(entry))
            throw InvalidInput("start string entry " + entry.str() +
                               " is outside the declared value set");
    }

    std::set<IntString> seen;
    std::deque<IntString> frontier;
    visit(s, seen, frontier, options);

    while (!frontier.empty()) {
        IntString cur = std::move(frontier.front());
        frontier.pop_front();
        const std::size_t n = cur.size();

        // Shrinking moves: delete a zero, collapse an adjacent equal pair.
        for (std::size_t i = 0; i < n; ++i) {
            if (cur[i] == 0) {
                IntString next = cur;
                next.erase(next.begin() + static_cast<std::ptrdiff_t>(i));
                visit(next, seen, frontier, options);
            }
            if (i + 1 < n && cur[i] == cur[i + 1]) {
                IntString next = cur;
                next.erase(next.begin() + static_cast<std::ptrdiff_t>(i));
                visit(next, seen, frontier, options);
            }
        }

        // Growing moves, bounded by max_len: insert a zero anywhere,
        // duplicate an entry in place.
        if (n + 1 <= max_len) {
            for (std::size_t i = 0; i <= n; ++i) {
                IntString next = cur;
                next.insert(next.begin() + static_cast<std::ptrdiff_t>(i), Int(0));
                visit(next, seen, frontier, options);
            }
            for (std::size_t i = 0; i < n; ++i) {
                IntString next = cur;
                next.insert(next.begin() + static_cast<std::ptrdiff_t>(i), cur[i]);
                visit(next, seen, frontier, options);
            }
        }
    }
    return seen;
}

} // namespace radokit
