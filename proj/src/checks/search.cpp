#include <algorithm>

#include "shq/checks.hpp"

namespace shq {

namespace {

struct PairOutcome {
  std::vector<char> huq;  // per graph, up to and including the first hit
  std::size_t graphs = 0;
  int first_hit = -1;
};

bool huq_holds(const GraphKernels& K) {
  return solve(huq_problem(product(K.X, K.Y), K.k, K.l)).witness.has_value();
}

bool smith_holds(const ReflexiveGraph& g) {
  EquivalenceRelation R = kernel_pair(g.d);
  EquivalenceRelation S = kernel_pair(g.c);
  return solve(smith_problem(R, S, relation_pullback(R, S))).witness.has_value();
}

PairOutcome search_pair(const AlgebraPtr& c1, const AlgebraPtr& c0) {
  PairOutcome out;
  auto graphs = catalog::graphs_between(c1, c0);
  out.graphs = graphs.size();
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    GraphKernels K = validate_reflexive_graph(graphs[i]);
    const bool huq = huq_holds(K);
    out.huq.push_back(huq);
    if (huq && !smith_holds(graphs[i])) {
      out.first_hit = static_cast<int>(i);
      break;
    }
  }
  return out;
}

Json graph_json(const ReflexiveGraph& g) {
  Json j;
  j["name"] = g.name;
  j["C1"] = g.C1->name();
  j["C0"] = g.C0->name();
  j["d"] = g.d.map();
  j["c"] = g.c.map();
  j["e"] = g.e.map();
  return j;
}

}  // namespace

bool revalidate_counterexample(const ReflexiveGraph& g, Json* cert) {
  GraphKernels K = validate_reflexive_graph(g);
  Pullback P = star_domain(g, K);
  auto stars = solve_by_enumeration(star_problem(g, K, P));
  auto huqs = solve_by_enumeration(huq_problem(product(K.X, K.Y), K.k, K.l));
  EquivalenceRelation R = kernel_pair(g.d);
  EquivalenceRelation S = kernel_pair(g.c);
  Pullback RS = relation_pullback(R, S);
  auto connectors = solve_by_enumeration(smith_problem(R, S, RS));
  if (cert) {
    (*cert)["oracle_star_witnesses"] = stars.size();
    (*cert)["oracle_huq_witnesses"] = huqs.size();
    (*cert)["oracle_smith_connectors"] = connectors.size();
  }
  return stars.size() == 1 && huqs.size() == 1 && connectors.empty();
}

CounterexampleResult search_counterexample(const CounterexampleOptions& opts) {
  if (opts.max_order <= 0 || opts.cap == 0) {
    throw PreconditionError("search: bounds must be positive");
  }
  CounterexampleResult res;
  res.variety = opts.variety;
  res.max_order = opts.max_order;
  res.cap = opts.cap;
  const auto algebras = catalog::variety_catalog(opts.variety, opts.max_order);
  res.algebras = algebras.size();

  // A split epimorphism C1 -> C0 forces |C0| to divide |C1|, and equal
  // orders force C0 to be isomorphic to C1, i.e. the same catalog entry.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < algebras.size(); ++i) {
    for (std::size_t j = 0; j < algebras.size(); ++j) {
      const int n1 = algebras[i]->order();
      const int n0 = algebras[j]->order();
      if (n0 > n1 || n1 % n0 != 0 || (n0 == n1 && i != j)) continue;
      pairs.emplace_back(i, j);
    }
  }

  const std::size_t chunk = 256;
  for (std::size_t start = 0; start < pairs.size() && !res.hit && !res.cap_hit; start += chunk) {
    const std::size_t n = std::min(chunk, pairs.size() - start);
    auto outcomes = parallel_map<PairOutcome>(opts.exec, n, [&](std::size_t k) {
      auto [i, j] = pairs[start + k];
      return search_pair(algebras[i], algebras[j]);
    });
    for (std::size_t k = 0; k < n; ++k) {
      const PairOutcome& o = outcomes[k];
      ++res.pairs;
      const std::size_t quota = opts.cap - res.graphs;
      const std::size_t examined = std::min(o.graphs, quota);
      if (o.graphs > quota) res.cap_hit = true;
      for (std::size_t g = 0; g < std::min(examined, o.huq.size()); ++g) res.huq_commuting += o.huq[g];
      if (o.first_hit >= 0 && static_cast<std::size_t>(o.first_hit) < quota) {
        res.graphs += static_cast<std::size_t>(o.first_hit) + 1;
        auto [i, j] = pairs[start + k];
        ReflexiveGraph g = catalog::graphs_between(algebras[i], algebras[j])[o.first_hit];
        Json cert;
        cert["graph"] = graph_json(g);
        auto star = star_multiplication(g);
        if (found(star)) cert["sigma"] = std::get<StarMult>(star).sigma.map();
        auto sm = smith_commutes(kernel_pair(g.d), kernel_pair(g.c));
        if (auto* nw = std::get_if<NoWitness>(&sm); nw && nw->conflict) {
          cert["smith_conflict"] = {{"element", nw->conflict->element},
                                    {"first_value", nw->conflict->first_value},
                                    {"second_value", nw->conflict->second_value}};
        }
        res.revalidated = revalidate_counterexample(g, &cert);
        res.hit = CounterexampleHit{std::move(g), std::move(cert)};
        break;
      }
      res.graphs += examined;
      if (res.cap_hit) break;
    }
  }
  return res;
}

}  // namespace shq
