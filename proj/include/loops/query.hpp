#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "loops/torus.hpp"

namespace loops {

inline constexpr const char* kResultSchema = "loopcalc/1";

struct QueryRecord {
  std::string mode;  // amr | goldman | minint | selfint | theorem2 | torus
  std::string surface;  // unused by torus mode
  std::string w1;
  std::string w2;  // unused by selfint
  std::optional<long> p;
  std::optional<long> q;
};

QueryRecord query_from_json(const nlohmann::json& j);

struct ResultRecord {
  bool ok = true;
  std::string error;
  nlohmann::json json;  // machine record, schema-versioned
  std::string text;     // same data, human layout
};

TorusClass parse_torus_class(std::string_view text);

ResultRecord run_query(const QueryRecord& q, bool show_raw = false);

// JSON-lines input, one QueryRecord per line; results in input order, one
// error record per malformed line.
std::vector<ResultRecord> run_batch(std::istream& in, bool show_raw = false);

}  // namespace loops
