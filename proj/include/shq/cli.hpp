#pragma once

// Model files, run configuration and reports for the shq command line.

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "shq/checks.hpp"

namespace shq::cli {

/// Malformed model text. line and column are 1-based; 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line_, int column_)
      : Error(what), line(line_), column(column_) {}
  int line;
  int column;
};

/// A declared entity failed validation or referenced an unknown name.
class ModelError : public Error {
 public:
  ModelError(const std::string& what, std::string entity_)
      : Error(what), entity(std::move(entity_)) {}
  std::string entity;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Model {
  std::map<std::string, AlgebraPtr> algebras;
  std::map<std::string, Product> products;  // algebras declared as X x Y
  std::map<std::string, Homomorphism> homs;
  std::map<std::string, ReflexiveGraph> graphs;
  std::map<std::string, Span> spans;
  std::map<std::string, catalog::RelationPair> relpairs;
};

/// Adds the entities of one JSON document to env. Entities may refer to
/// anything declared earlier, in this document or a previous one.
void parse_model(const std::string& text, Model& env);
Model load_model(const std::vector<std::filesystem::path>& paths);

enum class Format { text, structured };

struct RunConfig {
  std::string command;  // check, construct, verify, scan, search-counterexample
  std::string what;     // subcommand of check and construct
  std::optional<std::string> lemma;
  std::vector<std::filesystem::path> inputs;
  std::optional<std::string> graph;
  std::optional<std::string> span;
  std::optional<std::string> pair;
  std::vector<std::string> maps;  // hom names for square-shaped lemma instances
  std::optional<std::string> variety;
  std::optional<int> max_order;
  std::optional<std::size_t> cap;
  Format format = Format::text;
  bool allow_non_normal = false;
  bool serial = false;
  bool audit = false;
};

inline constexpr int kSchemaVersion = 1;

struct ReportEntry {
  std::string subject;
  std::string check;
  std::string verdict;
  std::string detail;
  Json certificates = Json::object();
};

struct Report {
  int schema_version = kSchemaVersion;
  std::string command;
  Json parameters = Json::object();
  std::vector<ReportEntry> verdicts;
  Json summary = Json::object();
  int exit_code = 0;
};

Json to_json(const Report& r);
/// Throws ParseError on malformed input or an unknown schema_version.
Report parse_report(const std::string& text);
std::string render_structured(const Report& r);
std::string render_text(const Report& r);

/// Builds the report; throws UsageError, ParseError or ModelError on bad
/// input.
Report execute(const RunConfig& config);

struct RunResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// execute() plus rendering; input errors become exit code 2.
RunResult run(const RunConfig& config);

/// Parses argv into a RunConfig with the same errors as the binary.
RunResult run_args(const std::vector<std::string>& args);

}  // namespace shq::cli
