#include <sstream>

#include "shq/cli.hpp"

namespace shq::cli {

Json to_json(const Report& r) {
  Json j;
  j["schema_version"] = r.schema_version;
  j["command"] = r.command;
  j["parameters"] = r.parameters;
  Json verdicts = Json::array();
  for (const auto& e : r.verdicts) {
    Json v;
    v["subject"] = e.subject;
    v["check"] = e.check;
    v["verdict"] = e.verdict;
    v["detail"] = e.detail;
    v["certificates"] = e.certificates;
    verdicts.push_back(std::move(v));
  }
  j["verdicts"] = std::move(verdicts);
  j["summary"] = r.summary;
  j["exit_code"] = r.exit_code;
  return j;
}

Report parse_report(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("report: ") + e.what(), 0, 0);
  }
  try {
    Report r;
    r.schema_version = j.at("schema_version").get<int>();
    if (r.schema_version != kSchemaVersion) {
      throw ParseError("report: unsupported schema_version " + std::to_string(r.schema_version), 0, 0);
    }
    r.command = j.at("command").get<std::string>();
    r.parameters = j.at("parameters");
    for (const auto& v : j.at("verdicts")) {
      r.verdicts.push_back({v.at("subject").get<std::string>(), v.at("check").get<std::string>(),
                            v.at("verdict").get<std::string>(), v.at("detail").get<std::string>(),
                            v.at("certificates")});
    }
    r.summary = j.at("summary");
    r.exit_code = j.at("exit_code").get<int>();
    return r;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("report: ") + e.what(), 0, 0);
  }
}

std::string render_structured(const Report& r) { return to_json(r).dump(2) + "\n"; }

namespace {

std::string scalar(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

// {"columns": [...], "rows": [[...], ...]} as aligned text.
void print_table(std::ostream& os, const Json& t) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header;
  for (const auto& c : t.at("columns")) header.push_back(scalar(c));
  cells.push_back(header);
  for (const auto& row : t.at("rows")) {
    std::vector<std::string> line;
    for (const auto& x : row) line.push_back(scalar(x));
    cells.push_back(std::move(line));
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& line : cells) {
    for (std::size_t i = 0; i < line.size() && i < width.size(); ++i) {
      width[i] = std::max(width[i], line[i].size());
    }
  }
  for (const auto& line : cells) {
    os << "   ";
    for (std::size_t i = 0; i < line.size(); ++i) {
      os << ' ' << std::string(i < width.size() ? width[i] - line[i].size() : 0, ' ') << line[i];
    }
    os << '\n';
  }
}

}  // namespace

std::string render_text(const Report& r) {
  std::ostringstream os;
  os << r.command << '\n';
  for (const auto& e : r.verdicts) {
    os << "  " << e.subject << "  " << e.check << "  " << e.verdict;
    if (!e.detail.empty()) os << "  (" << e.detail << ")";
    os << '\n';
    if (e.certificates.contains("table")) print_table(os, e.certificates["table"]);
  }
  for (const auto& [key, value] : r.summary.items()) {
    if (value.is_array() && value.empty()) continue;
    if (value.is_array()) {
      os << key << ":\n";
      for (const auto& x : value) os << "  " << scalar(x) << '\n';
    } else {
      os << key << ": " << scalar(value) << '\n';
    }
  }
  return os.str();
}

}  // namespace shq::cli
