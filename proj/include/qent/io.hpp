#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qent/common.hpp"

namespace qent {

// One emitted result file: schema version, the full resolved configuration,
// and a payload table. Files round-trip: parsing an emitted file recovers the
// identical resolved config.
struct OutputRecord {
  std::string schema_version = "1";
  std::string command;
  std::vector<std::pair<std::string, std::string>> config;  // ordered key/value echo
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;  // cells pre-formatted

  bool operator==(const OutputRecord&) const = default;
};

// Shortest representation that parses back to the identical double.
std::string fmt_double(double x);
std::string fmt_int(std::int64_t x);

// CSV: '#'-prefixed key=value echo lines, then a header row, then data.
std::string render_csv(const OutputRecord& rec);
OutputRecord parse_csv(const std::string& text);

// JSON object {schema_version, command, config, payload}; config values stay
// strings so the echo round-trips byte for byte.
std::string render_json(const OutputRecord& rec);
OutputRecord parse_json(const std::string& text);

}  // namespace qent
