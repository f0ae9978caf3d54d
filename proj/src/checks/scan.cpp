#include <algorithm>

#include "shq/checks.hpp"

namespace shq {

SearchAudit audit_search(const WitnessProblem& problem, const AuditOptions& opts) {
  SearchAudit a;
  a.kind = problem.kind;
  a.apex_order = problem.apex()->order();
  SolveOutcome forced = solve(problem);
  a.forced_found = forced.witness.has_value();
  if (opts.constrained) {
    a.constrained_ran = true;
    auto homs = solve_by_enumeration(problem);
    a.constrained_count = homs.size();
    a.agree = a.forced_found == !homs.empty();
    if (a.agree && a.forced_found) {
      a.agree = homs.size() == 1 && homs.front().map() == forced.witness->map();
    }
  }
  if (opts.unconstrained) {
    auto homs = enumerate_homs(problem.apex(), problem.target(), {}, opts.unconstrained_limit + 1);
    if (homs.size() <= opts.unconstrained_limit) {
      a.unconstrained_ran = true;
      a.homs_examined = homs.size();
      a.valid_witnesses = static_cast<std::size_t>(
          std::count_if(homs.begin(), homs.end(), [&](const Homomorphism& h) { return satisfies(problem, h); }));
    }
  }
  return a;
}

void AuditTotals::add(const std::string& instance, const SearchAudit& a) {
  ++searches;
  if (a.forced_found) ++successful;
  const std::string where = instance + ":" + a.kind + ": ";
  if (a.constrained_ran) {
    ++constrained_checked;
    if (!a.agree) {
      ++constrained_disagreements;
      problems.push_back(where + "forced extension and constrained enumeration disagree (" +
                         std::to_string(a.constrained_count) + " constrained homomorphisms)");
    }
  }
  if (a.unconstrained_ran) {
    if (a.forced_found) ++uniqueness_checked;
    const std::size_t expected = a.forced_found ? 1 : 0;
    if (a.valid_witnesses != expected) {
      ++uniqueness_violations;
      problems.push_back(where + std::to_string(a.valid_witnesses) + " valid witnesses among " +
                         std::to_string(a.homs_examined) + " homomorphisms");
    }
  } else if (a.forced_found) {
    ++uniqueness_skipped;
  }
}

void AuditTotals::merge(const AuditTotals& o) {
  searches += o.searches;
  constrained_checked += o.constrained_checked;
  constrained_disagreements += o.constrained_disagreements;
  successful += o.successful;
  uniqueness_checked += o.uniqueness_checked;
  uniqueness_skipped += o.uniqueness_skipped;
  uniqueness_violations += o.uniqueness_violations;
  problems.insert(problems.end(), o.problems.begin(), o.problems.end());
}

std::size_t ScanReport::count(bool ScanRow::*column) const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [&](const ScanRow& r) { return r.*column; }));
}

ScanRow scan_row(const ReflexiveGraph& g, const GroupoidOptions& gopts,
                 const std::optional<AuditOptions>& audit, AuditTotals* totals) {
  GraphKernels K = validate_reflexive_graph(g);
  ScanRow row;
  row.graph = g.name;
  row.c1_order = g.C1->order();
  row.c0_order = g.C0->order();

  Pullback star_dom = star_domain(g, K);
  Product xx = product(K.X, K.X);
  Product xy = product(K.X, K.Y);
  EquivalenceRelation R = kernel_pair(g.d);
  EquivalenceRelation S = kernel_pair(g.c);
  Pullback RS = relation_pullback(R, S);
  Homomorphism nR = normalisation(R);
  Homomorphism nS = normalisation(S);
  Product nn = product(nR.dom(), nS.dom());

  std::vector<WitnessProblem> problems;
  problems.push_back(star_problem(g, K, star_dom));
  problems.push_back(peiffer_problem(g, K, xx));
  problems.push_back(huq_problem(xy, K.k, K.l));
  problems.push_back(smith_problem(R, S, RS));
  problems.push_back(huq_problem(nn, nR, nS));
  problems.back().kind = "huq-normalisations";

  std::vector<bool> ok;
  for (const auto& p : problems) ok.push_back(solve(p).witness.has_value());
  row.star = ok[0];
  row.peiffer = ok[1];
  row.huq = ok[2];
  row.smith = ok[3];
  row.huq_normalisations = ok[4];

  auto gr = groupoid_composition(g, gopts);
  row.groupoid = found(gr);
  if (!row.groupoid) row.groupoid_note = std::get<NoWitness>(gr).reason;

  if (audit && totals) {
    problems.push_back(groupoid_problem(g, std::get_if<GroupoidComp>(&gr)
                                               ? std::get<GroupoidComp>(gr).composable
                                               : pullback(g.d, g.c)));
    for (const auto& p : problems) totals->add(g.name, audit_search(p, *audit));
  }
  return row;
}

ScanReport scan_equivalence(const std::vector<AlgebraPtr>& algebras, const ScanOptions& opts) {
  ScanReport rep;
  rep.variety = opts.variety;
  rep.max_order = opts.max_order;
  rep.cap = opts.cap;
  rep.algebras = algebras.size();
  auto census = catalog::enumerate_graphs(algebras, opts.cap);
  rep.cap_hit = census.cap_hit;
  rep.pairs_examined = census.pairs_examined;

  struct Result {
    ScanRow row;
    AuditTotals audit;
  };
  auto results = parallel_map<Result>(opts.exec, census.graphs.size(), [&](std::size_t i) {
    Result r;
    r.row = scan_row(census.graphs[i], opts.groupoid, opts.audit, &r.audit);
    return r;
  });

  if (opts.audit) rep.audit.emplace();
  for (auto& r : results) {
    const ScanRow& row = r.row;
    if (row.star != row.peiffer || row.peiffer != row.huq) {
      rep.discrepancies.push_back({row.graph, "P2.7",
                                   std::string("star=") + (row.star ? "1" : "0") + " peiffer=" +
                                       (row.peiffer ? "1" : "0") + " huq=" + (row.huq ? "1" : "0")});
    }
    if (row.groupoid != row.smith) {
      rep.discrepancies.push_back({row.graph, "groupoid-smith",
                                   row.groupoid ? "groupoid without connector"
                                                : "connector without groupoid: " + row.groupoid_note});
    }
    if (row.smith && !row.huq_normalisations) {
      rep.discrepancies.push_back({row.graph, "BG3.2", "R[d], R[c] commute, normalisations do not"});
    }
    if (row.star && !row.groupoid) rep.sm_failures.push_back(row.graph);
    if (rep.audit) rep.audit->merge(r.audit);
    rep.rows.push_back(std::move(r.row));
  }
  return rep;
}

ScanReport scan_equivalence(const ScanOptions& opts) {
  if (opts.max_order <= 0 || opts.cap == 0) throw PreconditionError("scan: bounds must be positive");
  return scan_equivalence(catalog::variety_catalog(opts.variety, opts.max_order), opts);
}

}  // namespace shq
