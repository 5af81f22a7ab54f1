#pragma once

#include <string>

#include "cylinderlab/poly.hpp"
#include "cylinderlab/span_solver.hpp"
#include "cylinderlab/structure.hpp"
#include "cylinderlab/weights.hpp"
#include "cylinderlab/z_lift.hpp"

namespace cylinderlab {

/// JSON interchange. One schema per type; `pretty` switches between compact
/// and 2-space indented output. Parsing throws JsonError naming the offending
/// field.
///
/// weight       {"p": 3, "values": [27 ints, lexicographic point order]}
/// polynomial   {"p": 3, "coeffs": [[i, j, k, c], ...]} nonzero, lex order
/// combination  {"p":, "family":, "target": <weight>, "terms": [[key, c], ...]}
/// certificate  {"p":, "base_plane": "P ..."|null,
///               "diffs": [["L ...", "L ...", c], ...], "target": <weight>}

std::string weight_to_json(const WeightZ& w, bool pretty = false);
std::string weight_to_json(const WeightFp& w, bool pretty = false);
WeightZ weight_from_json(const std::string& text);
WeightFp weight_fp_from_json(const std::string& text);

std::string poly_to_json(const ReducedPoly& q, bool pretty = false);
ReducedPoly poly_from_json(const std::string& text);

std::string combination_to_json(const SpanFamily& family, const FpCombination& comb,
                                const WeightFp& target, bool pretty = false);
FpCombination combination_from_json(const std::string& text, const SpanFamily& family);

std::string certificate_to_json(const ZCertificate& cert, bool pretty = false);
ZCertificate certificate_from_json(const std::string& text);

std::string divisibility_to_json(const PrimeModulus& p, const DivisibilityReport& report,
                                 bool pretty = false);

std::string search_report_to_json(const SearchReport& report, bool pretty = false);

}  // namespace cylinderlab
