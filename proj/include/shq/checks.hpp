#pragma once

// Instance-level verifiers, the reflexive-graph census and the digroup
// counterexample search.

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "shq/catalog.hpp"
#include "shq/parallel.hpp"

namespace shq {

using Json = nlohmann::ordered_json;

enum class LemmaId { L1_1, L1_2, P2_2, L2_3, L2_4, L2_5, L2_6, P2_7, T1_3, T2_8, SSFL, SA6, BG3_2 };

const char* to_string(LemmaId id);
std::optional<LemmaId> parse_lemma(const std::string& s);
const std::vector<LemmaId>& all_lemmas();

enum class Verdict { pass, fail, precondition_unmet };

const char* to_string(Verdict v);
std::optional<Verdict> parse_verdict(const std::string& s);

// ---------------------------------------------------------------------------
// Instance shapes

/// g : X x X -> A.
struct ProductMap {
  std::string name;
  Product XX;
  Homomorphism g;
};

/// Top row split by s; square b f = f' a.
struct KernelSquare {
  std::string name;
  Homomorphism f;   // A -> B
  Homomorphism s;   // B -> A, f s = 1
  Homomorphism fp;  // A' -> B'
  Homomorphism a;   // A -> A'
  Homomorphism b;   // B -> B'
};

/// Two split extensions and a morphism (a, b) between them.
struct SsflDiagram {
  std::string name;
  Homomorphism f, s;    // A -> B, B -> A
  Homomorphism fp, sp;  // A' -> B', B' -> A'
  Homomorphism a;       // A -> A'
  Homomorphism b;       // B -> B'
};

/// m : M -> A and p : A -> B.
struct DirectImage {
  std::string name;
  Homomorphism m;
  Homomorphism p;
};

using LemmaInstance = std::variant<ReflexiveGraph, Span, catalog::RelationPair, ProductMap,
                                   KernelSquare, SsflDiagram, DirectImage>;

std::string instance_name(const LemmaInstance& inst);

struct VerificationReport {
  LemmaId lemma = LemmaId::L1_1;
  std::string instance;
  Verdict verdict = Verdict::precondition_unmet;
  std::string detail;
  Json certificates = Json::object();
};

/// Throws PreconditionError when the instance has the wrong shape.
VerificationReport verify_lemma(LemmaId id, const LemmaInstance& instance);

struct InstanceBounds {
  std::string variety = "group";
  int max_order = 8;
  std::size_t cap = 400;
};

/// Deterministic instances of the right shape, drawn from the catalog.
std::vector<LemmaInstance> lemma_instances(LemmaId id, const InstanceBounds& bounds);

struct LemmaSuite {
  LemmaId lemma = LemmaId::L1_1;
  std::vector<VerificationReport> reports;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t unmet = 0;
};

LemmaSuite run_lemma_suite(LemmaId id, const InstanceBounds& bounds, Exec exec);

// ---------------------------------------------------------------------------
// Oracle audits

struct AuditOptions {
  bool constrained = true;           // forced_extension vs constrained enumeration
  bool unconstrained = true;         // uniqueness by filtering every homomorphism
  std::size_t unconstrained_limit = 200000;  // give up above this many homomorphisms
};

struct SearchAudit {
  std::string kind;
  int apex_order = 0;
  bool forced_found = false;
  bool constrained_ran = false;
  std::size_t constrained_count = 0;
  bool agree = true;                  // same verdict and, if found, same map
  bool unconstrained_ran = false;
  std::size_t homs_examined = 0;
  std::size_t valid_witnesses = 0;
};

SearchAudit audit_search(const WitnessProblem& problem, const AuditOptions& opts);

struct AuditTotals {
  std::size_t searches = 0;
  std::size_t constrained_checked = 0;
  std::size_t constrained_disagreements = 0;
  std::size_t successful = 0;
  std::size_t uniqueness_checked = 0;
  std::size_t uniqueness_skipped = 0;
  std::size_t uniqueness_violations = 0;
  std::vector<std::string> problems;  // "<instance>:<kind>: ..." for each failure

  void add(const std::string& instance, const SearchAudit& a);
  void merge(const AuditTotals& other);
};

// ---------------------------------------------------------------------------
// Census

struct ScanOptions {
  std::string variety = "group";
  int max_order = 4;
  std::size_t cap = 1000;
  Exec exec = Exec::parallel;
  std::optional<AuditOptions> audit;
  GroupoidOptions groupoid;
};

struct ScanRow {
  std::string graph;
  int c1_order = 0;
  int c0_order = 0;
  bool star = false;
  bool peiffer = false;
  bool huq = false;
  bool smith = false;
  bool groupoid = false;
  bool huq_normalisations = false;  // of R[d] and R[c]
  std::string groupoid_note;        // reason when groupoid fails
};

struct Discrepancy {
  std::string graph;
  std::string kind;  // "P2.7", "BG3.2", "groupoid-smith"
  std::string detail;
};

struct ScanReport {
  std::string variety;
  int max_order = 0;
  std::size_t cap = 0;
  bool cap_hit = false;
  std::size_t algebras = 0;
  std::size_t pairs_examined = 0;
  std::vector<ScanRow> rows;
  std::vector<Discrepancy> discrepancies;
  std::vector<std::string> sm_failures;  // star-multiplicative, not a groupoid
  std::optional<AuditTotals> audit;

  std::size_t count(bool ScanRow::*column) const;
};

ScanReport scan_equivalence(const std::vector<AlgebraPtr>& algebras, const ScanOptions& opts);
ScanReport scan_equivalence(const ScanOptions& opts);

ScanRow scan_row(const ReflexiveGraph& g, const GroupoidOptions& groupoid,
                 const std::optional<AuditOptions>& audit, AuditTotals* totals);

// ---------------------------------------------------------------------------
// Counterexample search

struct CounterexampleOptions {
  std::string variety = "digroup";
  int max_order = 8;
  std::size_t cap = 1000000;
  Exec exec = Exec::parallel;
};

struct CounterexampleHit {
  ReflexiveGraph graph;
  Json certificates;
};

struct CounterexampleResult {
  std::string variety;
  int max_order = 0;
  std::size_t cap = 0;
  std::size_t algebras = 0;
  std::size_t pairs = 0;
  std::size_t graphs = 0;
  std::size_t huq_commuting = 0;
  bool cap_hit = false;
  std::optional<CounterexampleHit> hit;
  bool revalidated = false;  // only meaningful with a hit
};

CounterexampleResult search_counterexample(const CounterexampleOptions& opts);

/// Re-checks a candidate with enumerate_homs alone: a unique star
/// multiplication exists and no Smith connector for (R[d], R[c]) does.
bool revalidate_counterexample(const ReflexiveGraph& g, Json* certificates);

}  // namespace shq
