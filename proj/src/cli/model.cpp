#include <fstream>
#include <sstream>

#include "shq/cli.hpp"

namespace shq::cli {

namespace {

using nlohmann::json;

std::pair<int, int> line_column(const std::string& text, std::size_t byte) {
  int line = 1;
  int column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

[[noreturn]] void bad(const std::string& entity, const std::string& what) {
  throw ModelError(entity + ": " + what, entity);
}

void only_fields(const json& j, const std::string& entity, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) bad(entity, "expected an object");
  for (const auto& [key, _] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) bad(entity, "unknown field '" + key + "'");
  }
}

const json& field(const json& j, const std::string& entity, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) bad(entity, std::string("missing field '") + key + "'");
  return *it;
}

std::string string_field(const json& j, const std::string& entity, const char* key) {
  const json& v = field(j, entity, key);
  if (!v.is_string()) bad(entity, std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

std::vector<int> int_array(const json& v, const std::string& entity, const std::string& key) {
  if (!v.is_array()) bad(entity, "field '" + key + "' must be an array of integers");
  std::vector<int> out;
  for (const auto& x : v) {
    if (!x.is_number_integer()) bad(entity, "field '" + key + "' must be an array of integers");
    out.push_back(x.get<int>());
  }
  return out;
}

std::string entity_name(const json& j, const char* kind) {
  if (!j.is_object() || !j.contains("name") || !j["name"].is_string()) {
    throw ModelError(std::string(kind) + " without a name", kind);
  }
  return j["name"].get<std::string>();
}

void fresh(const Model& env, const std::string& name, const std::string& entity) {
  if (env.algebras.count(name) || env.homs.count(name) || env.graphs.count(name) ||
      env.spans.count(name) || env.relpairs.count(name)) {
    bad(entity, "name already declared");
  }
}

AlgebraPtr algebra_ref(const Model& env, const std::string& name, const std::string& entity) {
  auto it = env.algebras.find(name);
  if (it == env.algebras.end()) bad(entity, "undeclared algebra '" + name + "'");
  return it->second;
}

SignaturePtr signature_of(const json& j, const std::string& entity) {
  if (j.contains("variety")) {
    if (j.contains("signature")) bad(entity, "give either 'variety' or 'signature', not both");
    const std::string v = string_field(j, entity, "variety");
    if (v == "group") return Signature::group();
    if (v == "digroup") return Signature::digroup();
    bad(entity, "unknown variety '" + v + "'");
  }
  const json& s = field(j, entity, "signature");
  only_fields(s, entity + ".signature", {"name", "ops", "equations", "zero"});
  std::vector<OpSymbol> ops;
  const json& jops = field(s, entity, "ops");
  if (!jops.is_array()) bad(entity, "signature ops must be an array");
  for (const auto& o : jops) {
    only_fields(o, entity + ".signature.ops", {"symbol", "arity"});
    const json& arity = field(o, entity, "arity");
    if (!arity.is_number_integer()) bad(entity, "operation arity must be an integer");
    ops.push_back({string_field(o, entity, "symbol"), arity.get<int>()});
  }
  std::vector<std::string> eqs;
  for (const auto& e : field(s, entity, "equations")) {
    if (!e.is_string()) bad(entity, "equations must be strings");
    eqs.push_back(e.get<std::string>());
  }
  const std::string sname = s.contains("name") ? string_field(s, entity, "name") : entity;
  try {
    return Signature::make(sname, std::move(ops), eqs, string_field(s, entity, "zero"));
  } catch (const SignatureError& e) {
    bad(entity, e.what());
  }
}

// Inverse tables of the known varieties may be left out.
std::optional<std::string> multiplication_for(const Signature& sig, const std::string& symbol) {
  if (sig.name() != Signature::group()->name() && sig.name() != Signature::digroup()->name()) {
    return std::nullopt;
  }
  if (symbol == "inv") return "*";
  if (symbol == "inv1") return "*1";
  if (symbol == "inv2") return "*2";
  return std::nullopt;
}

std::vector<int> derived_inverse(const std::vector<int>& mul, int n, const std::string& entity) {
  if (mul.size() != static_cast<std::size_t>(n) * n) bad(entity, "multiplication table has the wrong size");
  std::vector<int> inv(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n && inv[x] < 0; ++y) {
      if (mul[static_cast<std::size_t>(x) * n + y] == 0) inv[x] = y;
    }
    if (inv[x] < 0) bad(entity, "element " + std::to_string(x) + " has no inverse");
  }
  return inv;
}

void add_algebra(const json& j, Model& env) {
  const std::string name = entity_name(j, "algebra");
  const std::string entity = "algebra '" + name + "'";
  fresh(env, name, entity);

  if (j.contains("builtin")) {
    only_fields(j, entity, {"name", "builtin"});
    const std::string b = string_field(j, entity, "builtin");
    auto a = catalog::find_algebra(b);
    if (!a) bad(entity, "no built-in algebra '" + b + "'");
    env.algebras.emplace(name, *a);
    return;
  }
  if (j.contains("product")) {
    only_fields(j, entity, {"name", "product"});
    const json& p = j["product"];
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string()) {
      bad(entity, "product must list two algebra names");
    }
    Product prod = product(algebra_ref(env, p[0].get<std::string>(), entity),
                           algebra_ref(env, p[1].get<std::string>(), entity));
    env.algebras.emplace(name, prod.object);
    env.products.emplace(name, std::move(prod));
    return;
  }

  only_fields(j, entity, {"name", "variety", "signature", "order", "tables"});
  SignaturePtr sig = signature_of(j, entity);
  const json& order = field(j, entity, "order");
  if (!order.is_number_integer() || order.get<int>() <= 0) bad(entity, "order must be a positive integer");
  const int n = order.get<int>();
  const json& jt = field(j, entity, "tables");
  if (!jt.is_object()) bad(entity, "tables must be an object keyed by operation symbol");
  for (const auto& [key, _] : jt.items()) {
    if (!sig->op_index(key)) bad(entity, "table for undeclared operation '" + key + "'");
  }
  std::vector<std::vector<int>> tables(sig->ops().size());
  for (std::size_t op = 0; op < sig->ops().size(); ++op) {
    const std::string& sym = sig->ops()[op].symbol;
    if (jt.contains(sym)) {
      tables[op] = int_array(jt[sym], entity, "tables." + sym);
    } else if (static_cast<int>(op) == sig->zero_op()) {
      tables[op] = {0};
    } else if (auto mul = multiplication_for(*sig, sym); mul && jt.contains(*mul)) {
      tables[op] = derived_inverse(int_array(jt[*mul], entity, "tables." + *mul), n, entity);
    } else {
      bad(entity, "missing table for '" + sym + "'");
    }
  }
  ValidationReport v = validate_algebra(sig, n, tables);
  if (v.structural_error) bad(entity, *v.structural_error);
  if (!v.ok()) {
    const auto& viol = v.violations.front();
    std::string assignment;
    for (std::size_t i = 0; i < viol.assignment.size(); ++i) {
      assignment += (i ? "," : "") + std::to_string(viol.assignment[i]);
    }
    bad(entity, "equation '" + viol.equation + "' fails at (" + assignment + ")");
  }
  env.algebras.emplace(name, make_algebra(sig, n, std::move(tables), name));
}

Homomorphism make_hom(const AlgebraPtr& dom, const AlgebraPtr& cod, std::vector<int> map,
                      const std::string& entity) {
  try {
    return Homomorphism::checked(dom, cod, std::move(map));
  } catch (const Error& e) {
    bad(entity, e.what());
  }
}

void add_hom(const json& j, Model& env) {
  const std::string name = entity_name(j, "hom");
  const std::string entity = "hom '" + name + "'";
  fresh(env, name, entity);
  only_fields(j, entity, {"name", "dom", "cod", "map"});
  AlgebraPtr dom = algebra_ref(env, string_field(j, entity, "dom"), entity);
  AlgebraPtr cod = algebra_ref(env, string_field(j, entity, "cod"), entity);
  env.homs.emplace(name, make_hom(dom, cod, int_array(field(j, entity, "map"), entity, "map"), entity));
}

// A leg is a declared hom name or an inline map between the given algebras.
Homomorphism leg(const json& j, const char* key, const AlgebraPtr& dom, const AlgebraPtr& cod,
                 const Model& env, const std::string& entity) {
  const json& v = field(j, entity, key);
  if (v.is_string()) {
    auto it = env.homs.find(v.get<std::string>());
    if (it == env.homs.end()) bad(entity, "undeclared hom '" + v.get<std::string>() + "'");
    const Homomorphism& h = it->second;
    if (!same_algebra(h.dom(), dom) || !same_algebra(h.cod(), cod)) {
      bad(entity, std::string("hom '") + v.get<std::string>() + "' used as " + key +
                      " has the wrong domain or codomain");
    }
    return Homomorphism(dom, cod, h.map(), h.provenance());
  }
  return make_hom(dom, cod, int_array(v, entity, key), entity + "." + key);
}

void add_graph(const json& j, Model& env) {
  const std::string name = entity_name(j, "graph");
  const std::string entity = "graph '" + name + "'";
  fresh(env, name, entity);
  only_fields(j, entity, {"name", "C1", "C0", "d", "c", "e"});
  AlgebraPtr c1 = algebra_ref(env, string_field(j, entity, "C1"), entity);
  AlgebraPtr c0 = algebra_ref(env, string_field(j, entity, "C0"), entity);
  ReflexiveGraph g{name, c1, c0, leg(j, "d", c1, c0, env, entity), leg(j, "c", c1, c0, env, entity),
                   leg(j, "e", c0, c1, env, entity)};
  try {
    validate_reflexive_graph(g);
  } catch (const PreconditionError& e) {
    bad(entity, e.what());
  }
  env.graphs.emplace(name, std::move(g));
}

void add_span(const json& j, Model& env) {
  const std::string name = entity_name(j, "span");
  const std::string entity = "span '" + name + "'";
  fresh(env, name, entity);
  only_fields(j, entity, {"name", "C1", "C0", "C0p", "d", "c"});
  AlgebraPtr c1 = algebra_ref(env, string_field(j, entity, "C1"), entity);
  AlgebraPtr c0 = algebra_ref(env, string_field(j, entity, "C0"), entity);
  AlgebraPtr c0p = algebra_ref(env, string_field(j, entity, "C0p"), entity);
  env.spans.emplace(name, Span{name, c1, c0, c0p, leg(j, "d", c1, c0, env, entity),
                               leg(j, "c", c1, c0p, env, entity)});
}

EquivalenceRelation relation(const AlgebraPtr& a, const json& j, const char* key,
                             const std::string& entity) {
  std::vector<int> labels = int_array(field(j, entity, key), entity, key);
  try {
    return relation_from_congruence(make_congruence(a, labels));
  } catch (const IncompatiblePartition& e) {
    bad(entity, std::string(key) + ": " + e.what());
  } catch (const StructuralError& e) {
    bad(entity, std::string(key) + ": " + e.what());
  }
}

void add_relpair(const json& j, Model& env) {
  const std::string name = entity_name(j, "relpair");
  const std::string entity = "relpair '" + name + "'";
  fresh(env, name, entity);
  only_fields(j, entity, {"name", "algebra", "R", "S"});
  AlgebraPtr a = algebra_ref(env, string_field(j, entity, "algebra"), entity);
  env.relpairs.emplace(name, catalog::RelationPair{name, relation(a, j, "R", entity),
                                                   relation(a, j, "S", entity)});
}

}  // namespace

void parse_model(const std::string& text, Model& env) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, column] = line_column(text, e.byte);
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                         e.what(),
                     line, column);
  }
  if (!doc.is_object()) throw ParseError("model must be a JSON object", 1, 1);
  for (const auto& [key, _] : doc.items()) {
    if (key != "algebras" && key != "homs" && key != "graphs" && key != "spans" && key != "relpairs") {
      throw ParseError("unknown section '" + key + "'", 0, 0);
    }
  }
  auto section = [&](const char* key, void (*add)(const json&, Model&)) {
    if (!doc.contains(key)) return;
    if (!doc[key].is_array()) throw ParseError(std::string("section '") + key + "' must be an array", 0, 0);
    for (const auto& item : doc[key]) add(item, env);
  };
  section("algebras", add_algebra);
  section("homs", add_hom);
  section("graphs", add_graph);
  section("spans", add_span);
  section("relpairs", add_relpair);
}

Model load_model(const std::vector<std::filesystem::path>& paths) {
  Model env;
  for (const auto& p : paths) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw ParseError("cannot read '" + p.string() + "'", 0, 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
      parse_model(buf.str(), env);
    } catch (const ParseError& e) {
      throw ParseError(p.string() + ": " + e.what(), e.line, e.column);
    } catch (const ModelError& e) {
      throw ModelError(p.string() + ": " + e.what(), e.entity);
    }
  }
  return env;
}

}  // namespace shq::cli
