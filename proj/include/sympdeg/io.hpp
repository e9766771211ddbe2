#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sympdeg/degen.hpp"
#include "sympdeg/pbw.hpp"
#include "sympdeg/symdegen.hpp"

namespace sympdeg::io {

using nlohmann::json;

/// Reads and parses a JSON file. Throws ParseError.
json read_file(const std::string& path);

json to_json(const Representation& rep);
json to_json(const RankSequence& ranks);
json to_json(const Move& mv);
json to_json(const SymMove& mv);
json to_json(const Segment& s);
json to_json(const std::vector<PathStep>& path);
json to_json(const std::vector<DegenStep>& path);
json to_json(const QuotientReport& rep);
json to_json(const FixedPoint& fp);
json to_json(const CRootVector& d);
json to_json(const FaceConstraint& c);
json to_json(const LemmaUiReport& rep);

/// Accepts {"n", "mult"} as well as {"n", "rows"}; the latter goes through rep_of.
Representation rep_from_json(const json& j);
/// Accepts {"n", "rows"} as well as {"n", "mult"}.
RankSequence ranks_from_json(const json& j);
Move move_from_json(const json& j);
SymMove sym_move_from_json(const json& j);
Segment segment_from_json(const json& j);
std::vector<PathStep> path_from_json(const json& j, int n);
std::vector<DegenStep> sym_path_from_json(const json& j);
FixedPoint fixed_point_from_json(const json& j);
/// Entries as integers or "p/q" strings.
CRootVector root_vector_from_json(const json& j);

}  // namespace sympdeg::io
