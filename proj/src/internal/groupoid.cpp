#include <algorithm>

#include "shq/internal.hpp"

namespace shq {

namespace {

std::vector<std::size_t> fiber_sizes(const Homomorphism& f) {
  std::vector<std::size_t> n(f.cod()->order(), 0);
  for (int v : f.map()) ++n[v];
  return n;
}

std::string show(int a) { return std::to_string(a); }

// Unit laws, associativity and inverses; returns a description of the first
// failure.
std::optional<std::string> groupoid_failure(const ReflexiveGraph& g, const Pullback& comp,
                                            const Homomorphism& m, std::vector<int>& inverse) {
  const int n = g.C1->order();
  auto mul = [&](int a, int b) {
    int p = comp.index(a, b);
    return p < 0 ? -1 : m(p);
  };
  for (int a = 0; a < n; ++a) {
    if (mul(a, g.e(g.d(a))) != a) return "right unit law fails at " + show(a);
    if (mul(g.e(g.c(a)), a) != a) return "left unit law fails at " + show(a);
  }
  std::vector<std::vector<int>> by_cod(g.C0->order());
  for (int a = 0; a < n; ++a) by_cod[g.c(a)].push_back(a);
  for (const auto& [a, b] : comp.pairs.elements) {
    int ab = mul(a, b);
    if (g.d(ab) != g.d(b) || g.c(ab) != g.c(a)) {
      return "composite of (" + show(a) + ", " + show(b) + ") has the wrong ends";
    }
    for (int x : by_cod[g.d(b)]) {
      if (mul(ab, x) != mul(a, mul(b, x))) {
        return "associativity fails at (" + show(a) + ", " + show(b) + ", " + show(x) + ")";
      }
    }
  }
  inverse.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b : by_cod[g.d(a)]) {
      if (g.d(b) == g.c(a) && mul(a, b) == g.e(g.c(a)) && mul(b, a) == g.e(g.d(a))) {
        inverse[a] = b;
        break;
      }
    }
    if (inverse[a] < 0) return "arrow " + show(a) + " has no inverse";
  }
  return std::nullopt;
}

}  // namespace

std::size_t composable_order(const ReflexiveGraph& g) {
  auto nd = fiber_sizes(g.d);
  auto nc = fiber_sizes(g.c);
  std::size_t total = 0;
  for (std::size_t x = 0; x < nd.size(); ++x) total += nd[x] * nc[x];
  return total;
}

std::size_t connector_order(const ReflexiveGraph& g) {
  auto nd = fiber_sizes(g.d);
  auto nc = fiber_sizes(g.c);
  std::size_t total = 0;
  for (int b = 0; b < g.C1->order(); ++b) total += nd[g.d(b)] * nc[g.c(b)];
  return total;
}

WitnessProblem groupoid_problem(const ReflexiveGraph& g, const Pullback& comp) {
  Homomorphism one = identity(g.C1);
  ConeLeg right_unit{comp.pair(one, compose(g.e, g.d)), one};
  ConeLeg left_unit{comp.pair(compose(g.e, g.c), one), one};
  return WitnessProblem{"groupoid", {std::move(right_unit), std::move(left_unit)}};
}

Search<GroupoidComp> groupoid_composition(const ReflexiveGraph& g, GroupoidOptions opts) {
  validate_reflexive_graph(g);
  if (composable_order(g) > opts.max_composable_order) {
    throw PreconditionError("groupoid: C1 x_C0 C1 of '" + g.name + "' has order " +
                            std::to_string(composable_order(g)) + ", above the limit " +
                            std::to_string(opts.max_composable_order));
  }
  Pullback comp = pullback(g.d, g.c);

  SolveOutcome direct = solve(groupoid_problem(g, comp));

  std::optional<Homomorphism> via_connector;
  std::optional<NoWitness> connector_failure;
  const bool connector_ran = connector_order(g) <= opts.max_connector_order;
  if (connector_ran) {
    EquivalenceRelation R = kernel_pair(g.d);
    EquivalenceRelation S = kernel_pair(g.c);
    auto sm = smith_commutes(R, S);
    if (auto* theta = std::get_if<SmithConnector>(&sm)) {
      std::vector<int> m(comp.object()->order());
      for (std::size_t p = 0; p < m.size(); ++p) {
        auto [a, b] = comp.pairs.elements[p];
        m[p] = theta->theta(theta->index(a, g.e(g.d(a)), b));
      }
      via_connector = Homomorphism(comp.object(), g.C1, std::move(m), Provenance::induced);
    } else {
      connector_failure = std::get<NoWitness>(sm);
    }
    const bool agree = via_connector.has_value() == direct.witness.has_value() &&
                       (!via_connector || via_connector->map() == direct.witness->map());
    if (!agree) {
      throw InternalInconsistency("groupoid: the connector route and the unit-law route disagree on '" +
                                  g.name + "'");
    }
  }

  std::optional<Homomorphism>& m = connector_ran ? via_connector : direct.witness;
  if (!m) {
    if (connector_failure) {
      connector_failure->kind = "groupoid";
      return *connector_failure;
    }
    NoWitness nw{"groupoid", direct.conflict, "no composition satisfies the unit laws"};
    return nw;
  }
  std::vector<int> inverse;
  if (auto failure = groupoid_failure(g, comp, *m, inverse)) {
    return NoWitness{"groupoid", std::nullopt, *failure};
  }
  return GroupoidComp{std::move(comp), std::move(*m), std::move(inverse), connector_ran, true};
}

// ---------------------------------------------------------------------------

RxsGraph build_rxs_graph(const Span& span, const HuqWitness& phi) {
  KernelData kd = kernel(span.d);
  KernelData kc = kernel(span.c);
  if (!(phi.k == kd.inclusion) || !(phi.l == kc.inclusion) ||
      !(compose(phi.phi, phi.product.inj_left()) == kd.inclusion) ||
      !(compose(phi.phi, phi.product.inj_right()) == kc.inclusion)) {
    throw PreconditionError("rxs graph: not a Huq witness for the kernels of '" + span.name + "'");
  }
  EquivalenceRelation R = kernel_pair(span.d);
  EquivalenceRelation S = kernel_pair(span.c);
  Pullback T = relation_pullback(R, S);
  Homomorphism dom = compose(R.r0, T.proj_f());
  Homomorphism cod = compose(S.r1, T.proj_g());
  Homomorphism unit = T.pair(R.delta, S.delta);
  ReflexiveGraph graph{span.name + "/rxs", T.object(), span.C1, std::move(dom), std::move(cod),
                       std::move(unit)};
  GraphKernels K = validate_reflexive_graph(graph);

  std::vector<int> pos_x(span.C1->order(), -1);
  std::vector<int> pos_y(span.C1->order(), -1);
  for (int x = 0; x < kd.object->order(); ++x) pos_x[kd.inclusion(x)] = x;
  for (int y = 0; y < kc.object->order(); ++y) pos_y[kc.inclusion(y)] = y;

  Product xy = product(K.X, K.Y);
  std::vector<int> map(xy.object->order());
  for (std::size_t p = 0; p < map.size(); ++p) {
    auto [u, v] = xy.elements[p];
    auto [zero1, beta, gamma] = relation_triple(R, S, T, K.k(u));
    auto [delta, eps, zero2] = relation_triple(R, S, T, K.l(v));
    int mid = phi.phi(phi.product.index(pos_x[beta], pos_y[eps]));
    int t = relation_triple_index(R, S, T, delta, mid, gamma);
    if (zero1 != 0 || zero2 != 0 || t < 0) {
      throw InternalInconsistency("rxs graph: witness leaves R x_C1 S on '" + span.name + "'");
    }
    map[p] = t;
  }
  if (find_hom_violation(*xy.object, *T.object(), map)) {
    throw InternalInconsistency("rxs graph: induced witness is not a homomorphism on '" +
                                span.name + "'");
  }
  Homomorphism psi(xy.object, T.object(), std::move(map), Provenance::witness);
  if (!(compose(psi, xy.inj_left()) == K.k) || !(compose(psi, xy.inj_right()) == K.l)) {
    throw InternalInconsistency("rxs graph: induced witness fails the Huq equations on '" +
                                span.name + "'");
  }
  HuqWitness w{std::move(xy), K.k, K.l, std::move(psi)};
  return RxsGraph{std::move(R), std::move(S), std::move(T), std::move(graph), std::move(w)};
}

Search<Pregroupoid> pregroupoid_from_span(const Span& span, const HuqWitness& phi,
                                          GroupoidOptions opts) {
  RxsGraph rx = build_rxs_graph(span, phi);
  auto gr = groupoid_composition(rx.graph, opts);
  if (auto* nw = std::get_if<NoWitness>(&gr)) {
    nw->kind = "pregroupoid";
    return *nw;
  }
  GroupoidComp& G = std::get<GroupoidComp>(gr);
  const Pullback& T = rx.triples;

  std::vector<int> theta(T.object()->order());
  for (std::size_t p = 0; p < theta.size(); ++p) {
    auto [a, b, c] = relation_triple(rx.R, rx.S, T, static_cast<int>(p));
    int t1 = relation_triple_index(rx.R, rx.S, T, b, a, a);
    int t2 = relation_triple_index(rx.R, rx.S, T, c, c, b);
    int q = t1 < 0 || t2 < 0 ? -1 : G.composable.index(t1, t2);
    if (q < 0) throw InternalInconsistency("pregroupoid: zigzag triples are not composable");
    auto [r0, r1, r2] = relation_triple(rx.R, rx.S, T, G.m(q));
    if (r0 != c || r2 != a) {
      throw InternalInconsistency("pregroupoid: composite has the wrong ends");
    }
    theta[p] = r1;
  }
  if (find_hom_violation(*T.object(), *span.C1, theta)) {
    throw InternalInconsistency("pregroupoid: theta is not a homomorphism on '" + span.name + "'");
  }
  SmithConnector connector{rx.R, rx.S, T,
                           Homomorphism(T.object(), span.C1, std::move(theta), Provenance::induced)};
  if (!satisfies(smith_problem(connector.R, connector.S, connector.RS), connector.theta)) {
    throw InternalInconsistency("pregroupoid: theta fails the connector equations on '" +
                                span.name + "'");
  }
  auto independent = smith_commutes(kernel_pair(span.d), kernel_pair(span.c));
  bool agrees = found(independent) &&
                std::get<SmithConnector>(independent).theta.map() == connector.theta.map();
  return Pregroupoid{std::move(connector), std::move(G), agrees};
}

}  // namespace shq
