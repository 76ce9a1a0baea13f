#pragma once

// JSON wire formats: polytopes, Laurent polynomials, recurrences, transition
// reports and database records. Key order is fixed so output is byte-stable.

#include <filesystem>
#include <span>
#include <vector>

#include "json.hpp"

#include "conifold/fanodb.hpp"
#include "conifold/lattice.hpp"
#include "conifold/laurent.hpp"
#include "conifold/nodal.hpp"
#include "conifold/recurrence.hpp"

namespace conifold {

using Json = nlohmann::ordered_json;

// Numbers when they fit in 64 bits, decimal strings otherwise.
Json integer_to_json(const Integer& z);
Integer integer_from_json(const Json& j, const std::string& what);

Json read_json_file(const std::filesystem::path& path);

// {"dim": 3, "vertices": [[1,0,0], ...]}
Polytope polytope_from_json(const Json& j);
Json polytope_to_json(const Polytope& p);
Json rational_polytope_to_json(const RationalPolytope& p);
Polytope load_polytope(const std::filesystem::path& path);

// {"dim": 3, "terms": [{"exp": [1,0,0], "coeff": "1"}, ...]}
Json laurent_to_json(const LaurentPolynomial& f);
LaurentPolynomial laurent_from_json(const Json& j);

// {"order": r, "degree": D, "coeffs": [["-2"], ["1"]]}
Json recurrence_to_json(const Recurrence& rec);
Recurrence recurrence_from_json(const Json& j);

// A bare array, or an object with "terms" or "periods".
std::vector<Integer> sequence_from_json(const Json& j);
Json sequence_to_json(std::span<const Integer> c);

Json gw_labeling_to_json(std::span<const GwRecord> records);
Json resolution_to_json(const SmallResolution& r, bool with_triangles);
Json report_to_json(const TransitionReport& report);

Json record_to_json(const PeriodRecord& r);
PeriodRecord record_from_json(const Json& j);

Json candidates_to_json(std::span<const Candidate> candidates);

}  // namespace conifold
