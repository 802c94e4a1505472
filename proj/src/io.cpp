#include "qent/io.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace qent {

std::string fmt_double(double x) {
  // %.17g round-trips any double; trim to the shortest form that still does
  for (int prec = 1; prec <= 17; ++prec) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", prec, x);
    double back = 0.0;
    std::sscanf(buf, "%lf", &back);
    if (back == x) return buf;
  }
  return "nan";
}

std::string fmt_int(std::int64_t x) { return std::to_string(x); }

std::string render_csv(const OutputRecord& rec) {
  std::ostringstream os;
  os << "# schema_version=" << rec.schema_version << '\n';
  os << "# command=" << rec.command << '\n';
  for (const auto& [key, value] : rec.config) os << "# " << key << '=' << value << '\n';
  for (std::size_t i = 0; i < rec.columns.size(); ++i) {
    if (i) os << ',';
    os << rec.columns[i];
  }
  os << '\n';
  for (const auto& row : rec.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      os << row[i];
    }
    os << '\n';
  }
  return os.str();
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream is(line);
  while (std::getline(is, cell, ',')) cells.push_back(cell);
  return cells;
}

}  // namespace

OutputRecord parse_csv(const std::string& text) {
  OutputRecord rec;
  std::istringstream is(text);
  std::string line;
  bool header_seen = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::string body = line.substr(1);
      if (!body.empty() && body[0] == ' ') body.erase(0, 1);
      const auto eq = body.find('=');
      if (eq == std::string::npos) throw domain_error("parse_csv: malformed echo line");
      const std::string key = body.substr(0, eq);
      const std::string value = body.substr(eq + 1);
      if (key == "schema_version")
        rec.schema_version = value;
      else if (key == "command")
        rec.command = value;
      else
        rec.config.emplace_back(key, value);
      continue;
    }
    if (!header_seen) {
      rec.columns = split_csv_line(line);
      header_seen = true;
    } else {
      rec.rows.push_back(split_csv_line(line));
    }
  }
  return rec;
}

std::string render_json(const OutputRecord& rec) {
  nlohmann::ordered_json j;
  j["schema_version"] = rec.schema_version;
  j["command"] = rec.command;
  nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
  for (const auto& [key, value] : rec.config) cfg[key] = value;
  j["config"] = cfg;
  j["columns"] = rec.columns;
  nlohmann::ordered_json payload = nlohmann::ordered_json::array();
  for (const auto& row : rec.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size() && i < rec.columns.size(); ++i)
      obj[rec.columns[i]] = row[i];
    payload.push_back(obj);
  }
  j["payload"] = payload;
  return j.dump(2) + "\n";
}

OutputRecord parse_json(const std::string& text) {
  const auto j = nlohmann::ordered_json::parse(text);
  OutputRecord rec;
  rec.schema_version = j.at("schema_version").get<std::string>();
  rec.command = j.at("command").get<std::string>();
  for (const auto& [key, value] : j.at("config").items())
    rec.config.emplace_back(key, value.get<std::string>());
  rec.columns = j.at("columns").get<std::vector<std::string>>();
  for (const auto& obj : j.at("payload")) {
    std::vector<std::string> row;
    row.reserve(rec.columns.size());
    for (const auto& col : rec.columns) row.push_back(obj.at(col).get<std::string>());
    rec.rows.push_back(std::move(row));
  }
  return rec;
}

}  // namespace qent
