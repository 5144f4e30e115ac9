// JSON wire formats. Big integers always serialize as decimal strings so
// consumers never lose precision; integer strings are accepted on input
// for convenience.
#pragma once

#include "radokit/ints.hpp"
#include "radokit/search.hpp"
#include "radokit/witness.hpp"

#include "json.hpp"

namespace radokit {

using Json = nlohmann::json;

Json int_to_json(const Int& value);
Int int_from_json(const Json& j);

// ["3","0","-4"]; plain JSON integers are accepted on input.
Json string_to_json(const IntString& s);
IntString string_from_json(const Json& j);

// {"sum_zero":..., "all_u_equivalent":..., "pairwise_distinct":...,
//  "witness":[...], "permutation":[...]}
Json report_to_json(const VerificationReport& report);

// {"forced":..., "n":..., "certificate":[colors]|"exhausted", "nodes":...}
Json outcome_to_json(const SearchOutcome& outcome);

// Array with index i-1 holding the color of integer i.
Json coloring_to_json(const Coloring& coloring);
Coloring coloring_from_json(const Json& j, int colors);

} // namespace radokit
