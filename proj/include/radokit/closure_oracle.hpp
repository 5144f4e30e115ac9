// Reference oracle for u-equivalence, independent of reduce().
//
// Enumerates by breadth-first search every string reachable from a start
// string through bidirectional application of the generating rules
// (insert/delete a zero, duplicate/collapse an adjacent pair, anywhere in
// the string), keeping intermediate lengths bounded. Test suites compare
// reduce()-based decisions against membership in this closure.
//
// Linked by the test binaries only.
#pragma once

#include "radokit/ints.hpp"

#include <cstddef>
#include <set>

namespace radokit {

struct ClosureOptions {
    // Hard cap on the number of distinct strings visited.
    std::size_t max_states = 2'000'000;
};

// All strings of length <= max_len reachable from s.
//
// value_set documents the alphabet of s and is checked as a precondition;
// the rules themselves only ever introduce zeros and copies of existing
// entries, so reachability does not depend on it.
//
// Throws InvalidInput if max_len < length(s) or an entry of s is outside
// value_set; ResourceExceeded if the closure outgrows options.max_states.
std::set<IntString> closure_oracle(const IntString& s, std::size_t max_len,
                                   const std::set<Int>& value_set,
                                   const ClosureOptions& options = {});

} // namespace radokit
