#include <gtest/gtest.h>

#include <cmath>

#include "oracle.hpp"

using namespace shq;

namespace {

// Group arithmetic on a catalog group, used for closed-form references.
struct GroupOps {
  const FiniteAlgebra* g;
  int mul, inv;
  explicit GroupOps(const AlgebraPtr& a)
      : g(a.get()), mul(*a->signature().op_index("*")), inv(*a->signature().op_index("inv")) {}
  int operator()(int a, int b) const { return g->apply2(mul, a, b); }
  int operator()(int a, int b, int c) const { return (*this)((*this)(a, b), c); }
  int i(int a) const { return g->table(inv)[a]; }
};

std::vector<ReflexiveGraph> group_graphs(int max_order, std::size_t cap = 2000) {
  return catalog::enumerate_graphs(catalog::groups(max_order), cap).graphs;
}

bool small_enough(const WitnessProblem& p) {
  return std::pow(static_cast<double>(p.target()->order()), p.apex()->order()) <= 2e5;
}

}  // namespace

TEST(ReflexiveGraph, ValidationNamesTheElement) {
  ReflexiveGraph g = catalog::pair_graph_z2();
  g.e = Homomorphism(g.C0, g.C1, {0, 1});  // d e (1) = 0
  try {
    validate_reflexive_graph(g);
    FAIL() << "expected ReflexivityError";
  } catch (const ReflexivityError& e) {
    EXPECT_EQ(e.element, 1);
  }
}

TEST(ReflexiveGraph, PairGraphKernels) {
  ReflexiveGraph g = catalog::pair_graph_z2();
  GraphKernels K = validate_reflexive_graph(g);
  EXPECT_EQ(K.k.map(), (std::vector<int>{0, 1}));
  EXPECT_EQ(K.l.map(), (std::vector<int>{0, 2}));
  EXPECT_EQ(K.h.map(), (std::vector<int>{0, 1}));
}

TEST(Huq, PairGraphWitness) {
  ReflexiveGraph g = catalog::pair_graph_z2();
  GraphKernels K = validate_reflexive_graph(g);
  auto res = huq_commutes(K.k, K.l);
  ASSERT_TRUE(found(res));
  EXPECT_EQ(std::get<HuqWitness>(res).phi.map(), (std::vector<int>{0, 2, 1, 3}));
}

TEST(Huq, NonAbelianKernelsDoNotCommute) {
  ReflexiveGraph g = catalog::s3_over_point();
  GraphKernels K = validate_reflexive_graph(g);
  auto res = huq_commutes(K.k, K.l);
  ASSERT_FALSE(found(res));
  EXPECT_TRUE(std::get<NoWitness>(res).conflict.has_value());
}

TEST(Huq, NonNormalNeedsOverride) {
  auto s3 = catalog::symmetric3();
  Subalgebra t = subalgebra(s3, generated_closure(*s3, std::vector<int>{1}));
  Homomorphism z = zero_map(catalog::cyclic(1), s3);
  EXPECT_THROW(huq_commutes(t.inclusion, z), PreconditionError);
  EXPECT_TRUE(found(huq_commutes(t.inclusion, z, true)));
  EXPECT_THROW(huq_commutes(t.inclusion, identity(catalog::cyclic(2)), true), PreconditionError);
}

TEST(Smith, FullRelationOnAbelianAndNonAbelian) {
  auto z3 = catalog::cyclic(3);
  auto full = catalog::named_relpair("FULL_Z3");
  ASSERT_TRUE(full);
  auto ok = smith_commutes(full->R, full->S);
  ASSERT_TRUE(found(ok));
  GroupOps op(z3);
  const SmithConnector& sc = std::get<SmithConnector>(ok);
  for (int p = 0; p < sc.RS.object()->order(); ++p) {
    auto [a, b, g] = sc.triple(p);
    EXPECT_EQ(sc.theta(p), op(a, op.i(b), g));
    EXPECT_EQ(sc.index(a, b, g), p);
  }
  auto s3 = catalog::named_relpair("FULL_S3");
  ASSERT_TRUE(s3);
  EXPECT_FALSE(found(smith_commutes(s3->R, s3->S)));
  auto diag = catalog::named_relpair("DIAG_S3");
  ASSERT_TRUE(diag);
  EXPECT_TRUE(found(smith_commutes(diag->R, diag->S)));
  EXPECT_THROW(smith_commutes(full->R, s3->S), PreconditionError);
}

TEST(Star, PairGraph) {
  ReflexiveGraph g = catalog::pair_graph_z2();
  auto res = star_multiplication(g);
  ASSERT_TRUE(found(res));
  const StarMult& sm = std::get<StarMult>(res);
  FibrationSquares sq = fibration_squares(g, sm);
  EXPECT_TRUE(sq.cofibration.is_pullback);
  EXPECT_FALSE(found(star_multiplication(catalog::s3_over_point())));
  EXPECT_FALSE(found(peiffer_structure(catalog::s3_over_point())));
}

TEST(Peiffer, PairGraphOmegaIsPhi) {
  auto res = peiffer_structure(catalog::pair_graph_z2());
  ASSERT_TRUE(found(res));
  EXPECT_EQ(std::get<PeifferStruct>(res).omega.map(), (std::vector<int>{0, 2, 1, 3}));
}

TEST(KernelIso, PairGraph) {
  ReflexiveGraph g = catalog::pair_graph_z2();
  GraphKernels K = validate_reflexive_graph(g);
  KernelIso ki = kernel_isomorphism(g, std::get<HuqWitness>(huq_commutes(K.k, K.l)));
  EXPECT_EQ(ki.i.map(), (std::vector<int>{0, 1}));
  EXPECT_EQ(compose(ki.j, ki.i), identity(K.X));
  EXPECT_TRUE(ki.square_x.is_pullback);
  EXPECT_TRUE(ki.square_y.is_pullback);
}

TEST(Groupoid, PairGraphIsThePairGroupoid) {
  ReflexiveGraph g = catalog::pair_graph_z2();
  auto res = groupoid_composition(g);
  ASSERT_TRUE(found(res));
  const GroupoidComp& gc = std::get<GroupoidComp>(res);
  EXPECT_TRUE(gc.connector_route_ran);
  EXPECT_TRUE(gc.routes_agree);
  // Arrow (x, y) at 2x + y runs x -> y; (x, y) . (w, x) = (w, y).
  for (int p = 0; p < gc.composable.object()->order(); ++p) {
    auto [a, b] = gc.composable.pairs.elements[p];
    EXPECT_EQ(gc.m(p), 2 * g.d(b) + g.c(a));
  }
  EXPECT_FALSE(found(groupoid_composition(catalog::s3_over_point())));
}

TEST(Groupoid, DirectRouteAlone) {
  GroupoidOptions opts;
  opts.max_connector_order = 0;
  auto res = groupoid_composition(catalog::pair_graph_z2(), opts);
  ASSERT_TRUE(found(res));
  EXPECT_FALSE(std::get<GroupoidComp>(res).connector_route_ran);
  opts.max_composable_order = 1;
  EXPECT_THROW(groupoid_composition(catalog::pair_graph_z2(), opts), PreconditionError);
}

TEST(Groupoid, SizesWithoutBuilding) {
  for (const auto& g : group_graphs(6)) {
    EXPECT_EQ(composable_order(g), static_cast<std::size_t>(pullback(g.d, g.c).object()->order()));
    EquivalenceRelation R = kernel_pair(g.d), S = kernel_pair(g.c);
    EXPECT_EQ(connector_order(g), static_cast<std::size_t>(relation_pullback(R, S).object()->order()));
  }
}

// Closed forms in groups: phi(x, y) = k x . l y, sigma(a, x) = a e(d a)^-1 k x,
// omega(x, y) = k x (k y)^-1 e h y, m(a, b) = a e(d a)^-1 b.
TEST(Properties, GroupCensusClosedForms) {
  std::size_t star_graphs = 0;
  for (const auto& g : group_graphs(8)) {
    GroupOps op(g.C1);
    GraphKernels K = validate_reflexive_graph(g);
    auto huq = huq_commutes(K.k, K.l);
    auto star = star_multiplication(g);
    auto peif = peiffer_structure(g);
    auto grp = groupoid_composition(g);
    auto smith = smith_commutes(kernel_pair(g.d), kernel_pair(g.c));
    ASSERT_EQ(found(huq), found(star)) << g.name;
    ASSERT_EQ(found(huq), found(peif)) << g.name;
    ASSERT_EQ(found(star), found(grp)) << g.name;
    ASSERT_EQ(found(smith), found(grp)) << g.name;
    if (!found(star)) continue;
    ++star_graphs;

    const HuqWitness& hw = std::get<HuqWitness>(huq);
    for (int p = 0; p < hw.product.object->order(); ++p) {
      auto [x, y] = hw.product.elements[p];
      EXPECT_EQ(hw.phi(p), op(K.k(x), K.l(y)));
    }
    const StarMult& sm = std::get<StarMult>(star);
    for (int p = 0; p < sm.domain.object()->order(); ++p) {
      auto [a, x] = sm.domain.pairs.elements[p];
      EXPECT_EQ(K.k(sm.sigma(p)), op(a, op.i(g.e(g.d(a))), K.k(x)));
    }
    const PeifferStruct& ps = std::get<PeifferStruct>(peif);
    for (int p = 0; p < ps.XX.object->order(); ++p) {
      auto [x, y] = ps.XX.elements[p];
      EXPECT_EQ(ps.omega(p), op(K.k(x), op.i(K.k(y)), g.e(K.h(y))));
    }
    const GroupoidComp& gc = std::get<GroupoidComp>(grp);
    for (int p = 0; p < gc.composable.object()->order(); ++p) {
      auto [a, b] = gc.composable.pairs.elements[p];
      EXPECT_EQ(gc.m(p), op(a, op.i(g.e(g.d(a))), b));
    }
    EXPECT_TRUE(gc.routes_agree);
    const SmithConnector& sc = std::get<SmithConnector>(smith);
    for (int p = 0; p < sc.RS.object()->order(); ++p) {
      auto [a, b, c] = sc.triple(p);
      EXPECT_EQ(sc.theta(p), op(a, op.i(b), c));
    }
  }
  EXPECT_GE(star_graphs, 90u);
}

// Groupoid laws checked here, independently of the library's own checks.
TEST(Properties, GroupoidLaws) {
  for (const auto& g : group_graphs(8)) {
    auto grp = groupoid_composition(g);
    if (!found(grp)) continue;
    const GroupoidComp& gc = std::get<GroupoidComp>(grp);
    auto m = [&](int a, int b) { return gc.m(gc.composable.index(a, b)); };
    for (int a = 0; a < g.C1->order(); ++a) {
      EXPECT_EQ(m(a, g.e(g.d(a))), a);
      EXPECT_EQ(m(g.e(g.c(a)), a), a);
      const int inv = gc.inverse[a];
      EXPECT_EQ(m(a, inv), g.e(g.c(a)));
      EXPECT_EQ(m(inv, a), g.e(g.d(a)));
      for (int b = 0; b < g.C1->order(); ++b) {
        if (g.d(a) != g.c(b)) continue;
        const int ab = m(a, b);
        EXPECT_EQ(g.d(ab), g.d(b));
        EXPECT_EQ(g.c(ab), g.c(a));
        for (int c = 0; c < g.C1->order(); ++c) {
          if (g.d(b) != g.c(c)) continue;
          EXPECT_EQ(m(ab, c), m(a, m(b, c)));
        }
      }
    }
  }
}

TEST(Properties, ConversionsRoundTrip) {
  for (const auto& g : group_graphs(8)) {
    auto star = star_multiplication(g);
    if (!found(star)) continue;
    const StarMult& sm = std::get<StarMult>(star);
    GraphStructure p = convert_structure(g, sm, StructureKind::peiffer);
    GraphStructure h = convert_structure(g, p, StructureKind::huq);
    GraphStructure back = convert_structure(g, h, StructureKind::star);
    EXPECT_EQ(std::get<StarMult>(back).sigma, sm.sigma) << g.name;
    auto peif = peiffer_structure(g);
    EXPECT_EQ(std::get<PeifferStruct>(p).omega, std::get<PeifferStruct>(peif).omega);
    GraphKernels K = validate_reflexive_graph(g);
    EXPECT_EQ(std::get<HuqWitness>(h).phi, std::get<HuqWitness>(huq_commutes(K.k, K.l)).phi);
  }
}

TEST(Properties, KernelIsoInverseAndEndpoints) {
  for (const auto& g : group_graphs(8)) {
    GraphKernels K = validate_reflexive_graph(g);
    auto huq = huq_commutes(K.k, K.l);
    if (!found(huq)) continue;
    KernelIso ki = kernel_isomorphism(g, std::get<HuqWitness>(huq));
    EXPECT_EQ(compose(ki.j, ki.i), identity(K.X));
    EXPECT_EQ(compose(ki.i, ki.j), identity(K.Y));
    EXPECT_EQ(compose(g.d, compose(K.l, ki.i)), K.h);
    EXPECT_TRUE(ki.square_x.is_pullback && ki.square_y.is_pullback);
  }
}

// Oracle: each library witness is the only map that satisfies the cone.
TEST(Properties, WitnessesUniqueByBruteForce) {
  std::size_t checked = 0;
  for (const auto& g : group_graphs(4)) {
    GraphKernels K = validate_reflexive_graph(g);
    Pullback dom = star_domain(g, K);
    Product xx = product(K.X, K.X);
    Product xy = product(K.X, K.Y);
    EquivalenceRelation R = kernel_pair(g.d), S = kernel_pair(g.c);
    Pullback RS = relation_pullback(R, S);
    std::vector<WitnessProblem> problems{star_problem(g, K, dom), peiffer_problem(g, K, xx),
                                         huq_problem(xy, K.k, K.l), smith_problem(R, S, RS),
                                         groupoid_problem(g, pullback(g.d, g.c))};
    for (const auto& p : problems) {
      if (!small_enough(p)) continue;
      auto brute = oracle::witnesses(p);
      SolveOutcome s = solve(p);
      ASSERT_EQ(s.witness.has_value(), !brute.empty()) << g.name << " " << p.kind;
      if (s.witness) {
        ASSERT_EQ(brute.size(), 1u) << g.name << " " << p.kind;
        EXPECT_EQ(s.witness->map(), brute.front());
        EXPECT_TRUE(satisfies(p, *s.witness));
      }
      ++checked;
    }
  }
  EXPECT_GT(checked, 50u);
}

TEST(Spans, RxsGraphAndPregroupoid) {
  Span sp = span_of(catalog::pair_graph_z2());
  KernelData kd = kernel(sp.d), kc = kernel(sp.c);
  const HuqWitness phi = std::get<HuqWitness>(huq_commutes(kd.inclusion, kc.inclusion));
  RxsGraph rx = build_rxs_graph(sp, phi);
  EXPECT_NO_THROW(validate_reflexive_graph(rx.graph));
  for (int p = 0; p < rx.triples.object()->order(); ++p) {
    auto t = relation_triple(rx.R, rx.S, rx.triples, p);
    EXPECT_EQ(rx.graph.d(p), t[0]);
    EXPECT_EQ(rx.graph.c(p), t[2]);
  }
  auto pg = pregroupoid_from_span(sp, phi);
  ASSERT_TRUE(found(pg));
  const Pregroupoid& P = std::get<Pregroupoid>(pg);
  EXPECT_TRUE(P.agrees_with_smith);
  const SmithConnector& sc = P.connector;
  for (int p = 0; p < sc.RS.object()->order(); ++p) {
    auto [a, b, g] = sc.triple(p);
    if (b == g) EXPECT_EQ(sc.theta(p), a);
    if (a == b) EXPECT_EQ(sc.theta(p), g);
  }
}

TEST(Spans, MismatchedWitnessRejected) {
  Span sp = span_of(catalog::pair_graph_z2());
  ReflexiveGraph other = catalog::discrete_graph(catalog::klein());
  GraphKernels K = validate_reflexive_graph(other);
  const HuqWitness phi = std::get<HuqWitness>(huq_commutes(K.k, K.l));
  EXPECT_THROW(build_rxs_graph(sp, phi), PreconditionError);
}
