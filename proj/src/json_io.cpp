#include "radokit/json_io.hpp"

#include "radokit/errors.hpp"

namespace radokit {

Json int_to_json(const Int& value) {
    return value.str();
}

Int int_from_json(const Json& j) {
    if (j.is_string())
        return int_from_decimal(j.get<std::string>());
    if (j.is_number_integer())
        return Int(j.get<long long>());
    throw InvalidInput("expected an integer or a decimal string, got " + j.dump());
}

Json string_to_json(const IntString& s) {
    Json arr = Json::array();
    for (const Int& entry : s)
        arr.push_back(int_to_json(entry));
    return arr;
}

IntString string_from_json(const Json& j) {
    if (!j.is_array())
        throw InvalidInput("expected a JSON array of integers, got " + j.dump());
    IntString out;
    out.reserve(j.size());
    for (const Json& entry : j)
        out.push_back(int_from_json(entry));
    return out;
}

Json report_to_json(const VerificationReport& report) {
    Json perm = Json::array();
    for (std::size_t idx : report.permutation)
        perm.push_back(idx);
    return Json{{"sum_zero", report.sum_zero},
                {"all_u_equivalent", report.all_u_equivalent},
                {"pairwise_distinct", report.pairwise_distinct},
                {"witness", string_to_json(report.witness)},
                {"permutation", perm}};
}

Json outcome_to_json(const SearchOutcome& outcome) {
    Json certificate;
    if (outcome.certificate)
        certificate = coloring_to_json(*outcome.certificate);
    else
        certificate = "exhausted";
    return Json{{"forced", outcome.forced},
                {"n", outcome.n},
                {"certificate", certificate},
                {"nodes", outcome.nodes}};
}

Json coloring_to_json(const Coloring& coloring) {
    Json arr = Json::array();
    for (std::uint8_t c : coloring.assignment())
        arr.push_back(static_cast<int>(c));
    return arr;
}

Coloring coloring_from_json(const Json& j, int colors) {
    if (!j.is_array())
        throw InvalidInput("expected a JSON array of colors, got " + j.dump());
    std::vector<std::uint8_t> assignment;
    assignment.reserve(j.size());
    for (const Json& entry : j) {
        if (!entry.is_number_integer())
            throw InvalidInput("colors must be integers, got " + entry.dump());
        const long long value = entry.get<long long>();
        if (value < 0 || value > 255)
            throw InvalidInput("color " + std::to_string(value) + " is out of range");
        assignment.push_back(static_cast<std::uint8_t>(value));
    }
    return Coloring(static_cast<int>(assignment.size()), colors, std::move(assignment));
}

} // namespace radokit
