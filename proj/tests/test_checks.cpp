#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "oracle.hpp"

using namespace shq;

namespace {

using Table = std::vector<int>;

Table relabel(const Table& t, const std::vector<int>& perm, int n) {
  Table out(t.size());
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) out[perm[a] * n + perm[b]] = perm[t[a * n + b]];
  }
  return out;
}

std::vector<std::vector<int>> perms_fixing_zero(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin() + 1, p.end()));
  return out;
}

// Digroups of order exactly n up to isomorphism, by brute force over all
// relabellings of pairs of labelled group tables.
std::size_t digroup_classes(int n) {
  auto perms = perms_fixing_zero(n);
  std::set<Table> labelled;
  for (const auto& g : catalog::group_classes(n)) {
    if (g->order() != n) continue;
    const Table& mul = g->table(*g->signature().op_index("*"));
    for (const auto& p : perms) labelled.insert(relabel(mul, p, n));
  }
  std::set<std::pair<Table, Table>> classes;
  for (const auto& a : labelled) {
    for (const auto& b : labelled) {
      std::pair<Table, Table> best{a, b};
      for (const auto& p : perms) best = std::min(best, {relabel(a, p, n), relabel(b, p, n)});
      classes.insert(best);
    }
  }
  return classes.size();
}

ReflexiveGraph projection_graph() { return catalog::pair_graph_z2(); }

}  // namespace

TEST(Catalog, GroupClassCounts) {
  const std::size_t expect[] = {1, 1, 1, 2, 1, 2, 1, 5};
  for (int n = 1; n <= 8; ++n) {
    std::size_t count = 0;
    for (const auto& g : catalog::group_classes(8)) count += g->order() == n;
    EXPECT_EQ(count, expect[n - 1]) << n;
  }
  EXPECT_THROW(catalog::group_classes(9), PreconditionError);
  EXPECT_EQ(catalog::groups(12).size(), 16u);
}

// Oracle: brute-force isomorphism classes of digroups.
TEST(Catalog, DigroupCountsMatchBruteForce) {
  for (int n = 1; n <= 6; ++n) {
    std::size_t count = 0;
    for (const auto& d : catalog::digroups(n)) count += d->order() == n;
    EXPECT_EQ(count, digroup_classes(n)) << n;
  }
  for (const auto& d : catalog::digroups(4)) EXPECT_TRUE(validate_algebra(*d).ok()) << d->name();
}

TEST(Catalog, LabelledTablesAreGroups) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& t : catalog::labelled_group_tables(n)) {
      EXPECT_NO_THROW(catalog::group_from_table("T", n, t));
    }
  }
  EXPECT_THROW(catalog::group_from_table("bad", 2, {0, 1, 1, 1}), StructuralError);
}

TEST(Catalog, FindAndFixtures) {
  ASSERT_TRUE(catalog::find_algebra("Q8"));
  EXPECT_EQ((*catalog::find_algebra("Q8"))->order(), 8);
  EXPECT_TRUE(catalog::find_algebra("DG4.0"));
  EXPECT_FALSE(catalog::find_algebra("nope"));
  EXPECT_TRUE(catalog::named_graph("DISC(S3)"));
  EXPECT_TRUE(catalog::named_span("PG2"));
  EXPECT_TRUE(catalog::named_relpair("KP_PG2"));
  EXPECT_FALSE(catalog::named_graph("XYZ"));
}

// Oracle: graphs between two algebras from all triples of homs.
TEST(Census, GraphsBetweenMatchesBruteForce) {
  auto algs = catalog::groups(6);
  for (const auto& c1 : algs) {
    for (const auto& c0 : algs) {
      std::vector<std::array<std::vector<int>, 3>> expect;
      auto down = oracle::all_homs(c1, c0);
      auto up = oracle::all_homs(c0, c1);
      for (const auto& d : down) {
        for (const auto& c : down) {
          for (const auto& e : up) {
            bool ok = true;
            for (int x = 0; x < c0->order() && ok; ++x) ok = d[e[x]] == x && c[e[x]] == x;
            if (ok) expect.push_back({d, c, e});
          }
        }
      }
      auto got = catalog::graphs_between(c1, c0);
      ASSERT_EQ(got.size(), expect.size()) << c1->name() << " " << c0->name();
      for (std::size_t i = 0; i < got.size(); ++i) {
        EXPECT_EQ(got[i].d.map(), expect[i][0]);
        EXPECT_EQ(got[i].c.map(), expect[i][1]);
        EXPECT_EQ(got[i].e.map(), expect[i][2]);
      }
    }
  }
}

TEST(Census, CapIsAppliedAfterOrdering) {
  auto algs = catalog::groups(8);
  auto all = catalog::enumerate_graphs(algs, 100000);
  EXPECT_FALSE(all.cap_hit);
  auto capped = catalog::enumerate_graphs(algs, 40);
  EXPECT_TRUE(capped.cap_hit);
  ASSERT_EQ(capped.graphs.size(), 40u);
  for (std::size_t i = 0; i < 40; ++i) EXPECT_EQ(capped.graphs[i].name, all.graphs[i].name);
  EXPECT_TRUE(catalog::enumerate_graphs({}, 10).graphs.empty());
}

TEST(Parallel, OrderAndExceptions) {
  auto sq = parallel_map<int>(Exec::parallel, 100, [](std::size_t i) { return static_cast<int>(i * i); });
  for (int i = 0; i < 100; ++i) EXPECT_EQ(sq[i], i * i);
  try {
    parallel_map<int>(Exec::parallel, 50, [](std::size_t i) -> int {
      if (i == 7 || i == 30) throw std::runtime_error(std::to_string(i));
      return 0;
    });
    FAIL();
  } catch (const std::runtime_error& e) {
    EXPECT_STREQ(e.what(), "7");
  }
}

TEST(Lemmas, IdsRoundTrip) {
  for (LemmaId id : all_lemmas()) EXPECT_EQ(parse_lemma(to_string(id)), id);
  EXPECT_EQ(all_lemmas().size(), 13u);
  EXPECT_FALSE(parse_lemma("L9.9"));
  for (Verdict v : {Verdict::pass, Verdict::fail, Verdict::precondition_unmet}) {
    EXPECT_EQ(parse_verdict(to_string(v)), v);
  }
}

TEST(Lemmas, PairGraphExamples) {
  ReflexiveGraph g = projection_graph();
  auto l25 = verify_lemma(LemmaId::L2_5, g);
  EXPECT_EQ(l25.verdict, Verdict::pass) << l25.detail;
  auto l12 = verify_lemma(LemmaId::L1_2, g);
  EXPECT_EQ(l12.verdict, Verdict::pass) << l12.detail;
  EXPECT_FALSE(l12.certificates.empty());
  for (LemmaId id : {LemmaId::P2_2, LemmaId::L2_3, LemmaId::L2_6, LemmaId::P2_7, LemmaId::T2_8}) {
    EXPECT_EQ(verify_lemma(id, g).verdict, Verdict::pass) << to_string(id);
  }
  EXPECT_EQ(verify_lemma(LemmaId::T1_3, span_of(g)).verdict, Verdict::pass);
  EXPECT_THROW(verify_lemma(LemmaId::T1_3, g), PreconditionError);
}

TEST(Lemmas, ProjectionFactorsThroughItself) {
  auto z2 = catalog::cyclic(2);
  Product xx = product(z2, z2);
  auto r = verify_lemma(LemmaId::L2_4, ProductMap{"pi0", xx, xx.proj_left()});
  EXPECT_EQ(r.verdict, Verdict::pass) << r.detail;
  auto u = verify_lemma(LemmaId::L2_4, ProductMap{"pi1", xx, xx.proj_right()});
  EXPECT_EQ(u.verdict, Verdict::precondition_unmet);
}

TEST(Lemmas, UnmetHypothesesAreNotFailures) {
  ReflexiveGraph g = catalog::s3_over_point();
  for (LemmaId id : {LemmaId::L1_2, LemmaId::L2_3, LemmaId::L2_5, LemmaId::L2_6}) {
    EXPECT_EQ(verify_lemma(id, g).verdict, Verdict::precondition_unmet) << to_string(id);
  }
  EXPECT_EQ(verify_lemma(LemmaId::P2_7, g).verdict, Verdict::pass);
}

// Property: no lemma ever fails on group-catalog instances.
TEST(Lemmas, GroupCatalogNeverFails) {
  InstanceBounds b;
  b.max_order = 6;
  b.cap = 150;
  for (LemmaId id : all_lemmas()) {
    LemmaSuite s = run_lemma_suite(id, b, Exec::parallel);
    EXPECT_EQ(s.failed, 0u) << to_string(id);
    EXPECT_GT(s.passed, 0u) << to_string(id);
    EXPECT_EQ(s.passed + s.failed + s.unmet, s.reports.size());
  }
}

TEST(Scan, SmallGroupCensusIsConsistent) {
  ScanOptions o;
  o.max_order = 4;
  ScanReport r = scan_equivalence(o);
  EXPECT_FALSE(r.rows.empty());
  EXPECT_TRUE(r.discrepancies.empty());
  EXPECT_TRUE(r.sm_failures.empty());
  EXPECT_FALSE(r.cap_hit);
  EXPECT_THROW(scan_equivalence(ScanOptions{"group", 0}), PreconditionError);
}

TEST(Scan, EmptyCatalog) {
  ScanReport r = scan_equivalence(std::vector<AlgebraPtr>{}, ScanOptions{});
  EXPECT_TRUE(r.rows.empty());
  EXPECT_TRUE(r.discrepancies.empty());
}

TEST(Scan, DigroupFailuresRevalidate) {
  ScanOptions o;
  o.variety = "digroup";
  o.max_order = 4;
  ScanReport r = scan_equivalence(o);
  EXPECT_FALSE(r.rows.empty());
  auto algs = catalog::variety_catalog("digroup", 4);
  auto census = catalog::enumerate_graphs(algs, o.cap);
  for (const auto& name : r.sm_failures) {
    auto it = std::find_if(census.graphs.begin(), census.graphs.end(),
                           [&](const ReflexiveGraph& g) { return g.name == name; });
    ASSERT_NE(it, census.graphs.end());
    EXPECT_TRUE(revalidate_counterexample(*it, nullptr)) << name;
  }
}

TEST(Scan, SerialAndParallelRowsMatch) {
  ScanOptions o;
  o.max_order = 6;
  o.exec = Exec::serial;
  ScanReport a = scan_equivalence(o);
  o.exec = Exec::parallel;
  ScanReport b = scan_equivalence(o);
  ASSERT_EQ(a.rows.size(), b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    EXPECT_EQ(a.rows[i].graph, b.rows[i].graph);
    EXPECT_EQ(a.rows[i].star, b.rows[i].star);
    EXPECT_EQ(a.rows[i].groupoid, b.rows[i].groupoid);
  }
}

TEST(Audit, SmallCensusHasNoProblems) {
  ScanOptions o;
  o.max_order = 4;
  o.audit = AuditOptions{};
  ScanReport r = scan_equivalence(o);
  ASSERT_TRUE(r.audit);
  EXPECT_GT(r.audit->searches, 0u);
  EXPECT_EQ(r.audit->constrained_disagreements, 0u);
  EXPECT_EQ(r.audit->uniqueness_violations, 0u);
  EXPECT_EQ(r.audit->uniqueness_checked + r.audit->uniqueness_skipped, r.audit->successful);
}

TEST(Search, TrivialBounds) {
  CounterexampleOptions o;
  o.max_order = 1;
  CounterexampleResult r = search_counterexample(o);
  EXPECT_FALSE(r.hit);
  EXPECT_EQ(r.algebras, 1u);
  EXPECT_EQ(r.graphs, 1u);
  EXPECT_THROW(search_counterexample(CounterexampleOptions{"digroup", 0}), PreconditionError);
}

TEST(Search, GroupsNeverYieldCounterexamples) {
  CounterexampleOptions o;
  o.variety = "group";
  CounterexampleResult r = search_counterexample(o);
  EXPECT_FALSE(r.hit);
  EXPECT_GT(r.graphs, 100u);
}

TEST(Search, DigroupHitsRevalidate) {
  CounterexampleOptions o;
  o.max_order = 8;
  CounterexampleResult r = search_counterexample(o);
  if (r.hit) {
    EXPECT_TRUE(r.revalidated);
    EXPECT_TRUE(r.hit->certificates.contains("sigma"));
    EXPECT_TRUE(r.hit->certificates.contains("smith_conflict"));
    EXPECT_TRUE(revalidate_counterexample(r.hit->graph, nullptr));
    EXPECT_TRUE(found(star_multiplication(r.hit->graph)));
    EXPECT_FALSE(found(groupoid_composition(r.hit->graph)));
  }
}
