#include <algorithm>

#include "shq/internal.hpp"

namespace shq {

GraphKernels validate_reflexive_graph(const ReflexiveGraph& g) {
  if (!g.C1->signature().compatible(g.C0->signature())) {
    throw SignatureMismatch("graph '" + g.name + "': C1 and C0 have different signatures");
  }
  if (!same_algebra(g.d.dom(), g.C1) || !same_algebra(g.c.dom(), g.C1) ||
      !same_algebra(g.d.cod(), g.C0) || !same_algebra(g.c.cod(), g.C0) ||
      !same_algebra(g.e.dom(), g.C0) || !same_algebra(g.e.cod(), g.C1)) {
    throw PreconditionError("graph '" + g.name + "': d, c, e have the wrong domains or codomains");
  }
  for (int x = 0; x < g.C0->order(); ++x) {
    int ex = g.e(x);
    if (g.d(ex) != x) {
      throw ReflexivityError("graph '" + g.name + "': d(e(" + std::to_string(x) +
                                 ")) = " + std::to_string(g.d(ex)),
                             x);
    }
    if (g.c(ex) != x) {
      throw ReflexivityError("graph '" + g.name + "': c(e(" + std::to_string(x) +
                                 ")) = " + std::to_string(g.c(ex)),
                             x);
    }
  }
  KernelData kd = kernel(g.d);
  KernelData kc = kernel(g.c);
  Homomorphism h = compose(g.c, kd.inclusion);
  return {std::move(kd.object), std::move(kd.inclusion), std::move(kc.object),
          std::move(kc.inclusion), std::move(h)};
}

Span span_of(const ReflexiveGraph& g) { return Span{g.name, g.C1, g.C0, g.C0, g.d, g.c}; }

// ---------------------------------------------------------------------------

SolveOutcome solve(const WitnessProblem& problem) {
  SolveOutcome out;
  Extension ext = forced_extension(problem.cone);
  if (auto* w = std::get_if<Homomorphism>(&ext)) {
    out.witness = std::move(*w);
  } else if (auto* conflict = std::get_if<Conflict>(&ext)) {
    out.conflict = *conflict;
  } else {
    out.used_fallback = true;
    auto homs = solve_by_enumeration(problem, 2);
    out.fallback_count = homs.size();
    if (!homs.empty()) out.witness = std::move(homs.front());
  }
  return out;
}

std::vector<Homomorphism> solve_by_enumeration(const WitnessProblem& problem,
                                               std::size_t limit) {
  auto constraints = cone_constraints(problem.cone);
  if (std::holds_alternative<Conflict>(constraints)) return {};
  return enumerate_homs(problem.apex(), problem.target(), std::get<std::vector<int>>(constraints),
                        limit);
}

bool satisfies(const WitnessProblem& problem, const Homomorphism& w) {
  if (!same_algebra(w.dom(), problem.apex()) || !same_algebra(w.cod(), problem.target())) {
    return false;
  }
  return std::all_of(problem.cone.begin(), problem.cone.end(), [&](const ConeLeg& leg) {
    return compose(w, leg.into_apex).map() == leg.value.map();
  });
}

namespace {

NoWitness no_witness(const std::string& kind, const SolveOutcome& out) {
  NoWitness nw{kind, out.conflict, {}};
  if (out.conflict) {
    nw.reason = "element " + std::to_string(out.conflict->element) + " is forced to both " +
                std::to_string(out.conflict->first_value) + " and " +
                std::to_string(out.conflict->second_value);
  } else {
    nw.reason = "no homomorphism satisfies the cone equations";
  }
  return nw;
}

}  // namespace

// ---------------------------------------------------------------------------

WitnessProblem huq_problem(const Product& xy, const Homomorphism& k, const Homomorphism& l) {
  return WitnessProblem{"huq", {{xy.inj_left(), k}, {xy.inj_right(), l}}};
}

Search<HuqWitness> huq_commutes(const Homomorphism& k, const Homomorphism& l,
                                bool allow_non_normal) {
  if (!same_algebra(k.cod(), l.cod())) {
    throw PreconditionError("huq: '" + k.cod()->name() + "' and '" + l.cod()->name() +
                            "' are different codomains");
  }
  if (!allow_non_normal) {
    for (const Homomorphism* m : {&k, &l}) {
      if (!m->is_injective() || !is_normal_mono(*m)) {
        throw PreconditionError("huq: the map from '" + m->dom()->name() +
                                "' is not a normal monomorphism");
      }
    }
  }
  Product xy = product(k.dom(), l.dom());
  SolveOutcome out = solve(huq_problem(xy, k, l));
  if (!out.witness) return no_witness("huq", out);
  return HuqWitness{std::move(xy), k, l, std::move(*out.witness)};
}

// ---------------------------------------------------------------------------

Pullback relation_pullback(const EquivalenceRelation& R, const EquivalenceRelation& S) {
  return pullback(R.r1, S.r0);
}

std::array<int, 3> relation_triple(const EquivalenceRelation& R, const EquivalenceRelation& S,
                                   const Pullback& RS, int p) {
  auto [rho, sigma] = RS.pairs.elements[p];
  auto [a, b] = R.total.elements[rho];
  int g = S.total.elements[sigma].second;
  return {a, b, g};
}

int relation_triple_index(const EquivalenceRelation& R, const EquivalenceRelation& S,
                          const Pullback& RS, int a, int b, int g) {
  int rho = R.index(a, b);
  int sigma = S.index(b, g);
  if (rho < 0 || sigma < 0) return -1;
  return RS.index(rho, sigma);
}

std::array<int, 3> SmithConnector::triple(int p) const { return relation_triple(R, S, RS, p); }

int SmithConnector::index(int a, int b, int g) const {
  return relation_triple_index(R, S, RS, a, b, g);
}

WitnessProblem smith_problem(const EquivalenceRelation& R, const EquivalenceRelation& S,
                             const Pullback& RS) {
  ConeLeg first{RS.pair(identity(R.object()), compose(S.delta, R.r1)), R.r0};
  ConeLeg second{RS.pair(compose(R.delta, S.r0), identity(S.object())), S.r1};
  return WitnessProblem{"smith", {std::move(first), std::move(second)}};
}

Search<SmithConnector> smith_commutes(const EquivalenceRelation& R, const EquivalenceRelation& S) {
  if (!same_algebra(R.base, S.base)) {
    throw PreconditionError("smith: relations on different algebras '" + R.base->name() +
                            "' and '" + S.base->name() + "'");
  }
  Pullback RS = relation_pullback(R, S);
  SolveOutcome out = solve(smith_problem(R, S, RS));
  if (!out.witness) return no_witness("smith", out);
  return SmithConnector{R, S, std::move(RS), std::move(*out.witness)};
}

// ---------------------------------------------------------------------------

KernelIso kernel_isomorphism(const ReflexiveGraph& g, const HuqWitness& phi) {
  GraphKernels K = validate_reflexive_graph(g);
  if (!(phi.k == K.k) || !(phi.l == K.l) || !(compose(phi.phi, phi.product.inj_left()) == K.k) ||
      !(compose(phi.phi, phi.product.inj_right()) == K.l)) {
    throw PreconditionError("kernel isomorphism: not a Huq witness for the kernels of '" +
                            g.name + "'");
  }
  const Product& xy = phi.product;
  CommutativeSquare sx{xy.proj_left(), phi.phi, K.h, g.c, xy.inj_left()};
  CommutativeSquare sy{xy.proj_right(), phi.phi, compose(g.d, K.l), g.d, xy.inj_right()};
  PullbackCertificate cx = is_pullback_square(sx);
  PullbackCertificate cy = is_pullback_square(sy);
  if (!cx.is_pullback || !cy.is_pullback) {
    throw InternalInconsistency("kernel isomorphism: a kernel square of '" + g.name +
                                "' is not a pullback");
  }
  Homomorphism iota = cx.mediate(compose(g.e, K.h), identity(K.X));
  Homomorphism i = compose(xy.proj_right(), iota);
  Homomorphism jbar = cy.mediate(compose(g.e, compose(g.d, K.l)), identity(K.Y));
  Homomorphism j = compose(xy.proj_left(), jbar);

  if (!(compose(j, i) == identity(K.X)) || !(compose(i, j) == identity(K.Y)) ||
      !(compose(K.h, j) == compose(g.d, K.l)) ||
      !(K.h == compose(g.d, compose(K.l, i)))) {
    throw InternalInconsistency("kernel isomorphism: i and j fail the defining equations on '" +
                                g.name + "'");
  }
  return KernelIso{std::move(i), std::move(j), std::move(cx), std::move(cy)};
}

// ---------------------------------------------------------------------------

Pullback star_domain(const ReflexiveGraph& g, const GraphKernels& kernels) {
  return pullback(g.d, kernels.h);
}

WitnessProblem star_problem(const ReflexiveGraph& g, const GraphKernels& K, const Pullback& P) {
  ConeLeg first{P.pair(K.k, zero_map(K.X, K.X)), identity(K.X)};
  ConeLeg second{P.pair(compose(g.e, K.h), identity(K.X)), identity(K.X)};
  return WitnessProblem{"star", {std::move(first), std::move(second)}};
}

Search<StarMult> star_multiplication(const ReflexiveGraph& g) {
  GraphKernels K = validate_reflexive_graph(g);
  Pullback P = star_domain(g, K);
  SolveOutcome out = solve(star_problem(g, K, P));
  if (!out.witness) return no_witness("star", out);
  return StarMult{std::move(P), std::move(*out.witness)};
}

WitnessProblem peiffer_problem(const ReflexiveGraph& g, const GraphKernels& K, const Product& xx) {
  ConeLeg first{xx.inj_left(), K.k};
  ConeLeg second{xx.pair(identity(K.X), identity(K.X)), compose(g.e, K.h)};
  return WitnessProblem{"peiffer", {std::move(first), std::move(second)}};
}

Search<PeifferStruct> peiffer_structure(const ReflexiveGraph& g) {
  GraphKernels K = validate_reflexive_graph(g);
  Product xx = product(K.X, K.X);
  SolveOutcome out = solve(peiffer_problem(g, K, xx));
  if (!out.witness) return no_witness("peiffer", out);
  return PeifferStruct{std::move(xx), std::move(*out.witness)};
}

FibrationSquares fibration_squares(const ReflexiveGraph& g, const StarMult& star) {
  GraphKernels K = validate_reflexive_graph(g);
  const Pullback& P = star.domain;
  FibrationSquares out{is_pullback_square({P.proj_f(), P.proj_g(), g.d, K.h, std::nullopt}),
                       std::nullopt};
  if (compose(K.h, star.sigma) == compose(g.c, P.proj_f())) {
    out.fibration = is_pullback_square({P.proj_f(), star.sigma, g.c, K.h, std::nullopt});
  }
  return out;
}

}  // namespace shq
