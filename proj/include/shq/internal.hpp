#pragma once

// Internal reflexive graphs, spans and relation pairs, and the structures
// they may carry: Huq witnesses, Smith connectors, star-multiplications,
// Peiffer structures and groupoid compositions.
//
// Elementwise conventions. An element a of C1 is an arrow d(a) -> c(a).
// Composable pairs C1 x_C0 C1 are pairs (a, b) with d(a) = c(b), composed as
// m(a, b) = a . b. R[d] holds pairs (a, b) with d a = d b, and the pullback
// R x_C1 S of r1 against s0 holds triples (a, b, g) with d a = d b and
// c b = c g.

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "shq/catops.hpp"

namespace shq {

struct ReflexiveGraph {
  std::string name;
  AlgebraPtr C1;
  AlgebraPtr C0;
  Homomorphism d;
  Homomorphism c;
  Homomorphism e;
};

class ReflexivityError : public PreconditionError {
 public:
  ReflexivityError(const std::string& what, int elt) : PreconditionError(what), element(elt) {}
  int element;
};

struct GraphKernels {
  AlgebraPtr X;    // K[d]
  Homomorphism k;  // ker d
  AlgebraPtr Y;    // K[c]
  Homomorphism l;  // ker c
  Homomorphism h;  // c k : X -> C0
};

/// Checks d e = c e = 1 and computes the kernels. Throws ReflexivityError
/// naming the first element x with d(e(x)) != x or c(e(x)) != x.
GraphKernels validate_reflexive_graph(const ReflexiveGraph& g);

struct Span {
  std::string name;
  AlgebraPtr C1;
  AlgebraPtr C0;
  AlgebraPtr C0p;
  Homomorphism d;  // C1 -> C0
  Homomorphism c;  // C1 -> C0p
};

Span span_of(const ReflexiveGraph& g);

// ---------------------------------------------------------------------------
// Witness searches

/// A cone into an apex together with the required values; the witness is a
/// homomorphism apex -> target restricting to the values along the legs.
struct WitnessProblem {
  std::string kind;
  std::vector<ConeLeg> cone;

  const AlgebraPtr& apex() const { return cone.front().into_apex.cod(); }
  const AlgebraPtr& target() const { return cone.front().value.cod(); }
};

struct SolveOutcome {
  std::optional<Homomorphism> witness;
  std::optional<Conflict> conflict;
  bool used_fallback = false;       // cone images did not generate the apex
  std::size_t fallback_count = 0;   // homs found by the fallback enumeration
};

/// forced_extension, falling back to constrained enumeration when the cone
/// does not generate the apex.
SolveOutcome solve(const WitnessProblem& problem);

/// Oracle: every homomorphism apex -> target satisfying the cone equations,
/// found by constrained enumeration only.
std::vector<Homomorphism> solve_by_enumeration(
    const WitnessProblem& problem,
    std::size_t limit = std::numeric_limits<std::size_t>::max());

/// Does w restrict to the required values along every leg?
bool satisfies(const WitnessProblem& problem, const Homomorphism& w);

struct NoWitness {
  std::string kind;
  std::optional<Conflict> conflict;
  std::string reason;
};

template <class W>
using Search = std::variant<W, NoWitness>;

template <class W>
bool found(const Search<W>& s) {
  return std::holds_alternative<W>(s);
}

// ---------------------------------------------------------------------------
// Huq

struct HuqWitness {
  Product product;  // X x Y
  Homomorphism k;
  Homomorphism l;
  Homomorphism phi;  // phi <1,0> = k, phi <0,1> = l
};

WitnessProblem huq_problem(const Product& xy, const Homomorphism& k, const Homomorphism& l);

/// Throws PreconditionError if k, l are not coterminal, or (unless
/// allow_non_normal) not normal monomorphisms.
Search<HuqWitness> huq_commutes(const Homomorphism& k, const Homomorphism& l,
                                bool allow_non_normal = false);

// ---------------------------------------------------------------------------
// Smith

struct SmithConnector {
  EquivalenceRelation R;
  EquivalenceRelation S;
  Pullback RS;         // pullback of r1 against s0
  Homomorphism theta;  // RS -> A

  std::array<int, 3> triple(int p) const;
  int index(int a, int b, int g) const;  // -1 if (a, b, g) is not in RS
};

/// R x_A S as the pullback of r1 against s0.
Pullback relation_pullback(const EquivalenceRelation& R, const EquivalenceRelation& S);
std::array<int, 3> relation_triple(const EquivalenceRelation& R, const EquivalenceRelation& S,
                                   const Pullback& RS, int p);
int relation_triple_index(const EquivalenceRelation& R, const EquivalenceRelation& S,
                          const Pullback& RS, int a, int b, int g);

WitnessProblem smith_problem(const EquivalenceRelation& R, const EquivalenceRelation& S,
                             const Pullback& RS);

/// Throws PreconditionError if R and S live on different algebras.
Search<SmithConnector> smith_commutes(const EquivalenceRelation& R, const EquivalenceRelation& S);

// ---------------------------------------------------------------------------
// Kernel isomorphism

struct KernelIso {
  Homomorphism i;  // X -> Y
  Homomorphism j;  // Y -> X
  PullbackCertificate square_x;  // pi_X, phi, c k, c
  PullbackCertificate square_y;  // pi_Y, phi, d l, d
};

/// Throws PreconditionError for an invalid witness and
/// InternalInconsistency if a certificate or one of the four equations fails.
KernelIso kernel_isomorphism(const ReflexiveGraph& g, const HuqWitness& phi);

// ---------------------------------------------------------------------------
// Star-multiplication and Peiffer structures

struct StarMult {
  Pullback domain;     // C1 x_C0 X, pullback of d against h
  Homomorphism sigma;  // domain -> X
};

Pullback star_domain(const ReflexiveGraph& g, const GraphKernels& kernels);
WitnessProblem star_problem(const ReflexiveGraph& g, const GraphKernels& kernels,
                            const Pullback& domain);
Search<StarMult> star_multiplication(const ReflexiveGraph& g);

struct PeifferStruct {
  Product XX;
  Homomorphism omega;  // X x X -> C1
};

/// The square h pi1 = d pi0 (discrete cofibration, a pullback by
/// construction) and, when it commutes, h sigma = c pi0 (discrete fibration).
struct FibrationSquares {
  PullbackCertificate cofibration;
  std::optional<PullbackCertificate> fibration;  // empty if the square does not commute
};

FibrationSquares fibration_squares(const ReflexiveGraph& g, const StarMult& star);

WitnessProblem peiffer_problem(const ReflexiveGraph& g, const GraphKernels& kernels,
                               const Product& xx);
Search<PeifferStruct> peiffer_structure(const ReflexiveGraph& g);

enum class StructureKind { star, peiffer, huq };
const char* to_string(StructureKind k);

using GraphStructure = std::variant<StarMult, PeifferStruct, HuqWitness>;

/// Converts between the three equivalent structures on a graph. Throws
/// InternalInconsistency if a pairing that must be invertible is not.
GraphStructure convert_structure(const ReflexiveGraph& g, const GraphStructure& w,
                                 StructureKind target);

// ---------------------------------------------------------------------------
// Groupoids

struct GroupoidOptions {
  /// The connector route is skipped when R[d] x_C1 R[c] would exceed this.
  std::size_t max_connector_order = 2048;
  /// Largest composable-pairs object the direct route will build.
  std::size_t max_composable_order = 4096;
};

struct GroupoidComp {
  Pullback composable;  // pullback of d against c
  Homomorphism m;
  std::vector<int> inverse;
  bool connector_route_ran = false;
  bool routes_agree = true;
};

WitnessProblem groupoid_problem(const ReflexiveGraph& g, const Pullback& composable);

/// Composition from the Smith connector of (R[d], R[c]) when affordable,
/// cross-checked against the direct unit-law search; unit laws,
/// associativity and inverses are verified exhaustively.
Search<GroupoidComp> groupoid_composition(const ReflexiveGraph& g, GroupoidOptions opts = {});

/// Sizes of the intermediate objects, computed without building them.
std::size_t composable_order(const ReflexiveGraph& g);
std::size_t connector_order(const ReflexiveGraph& g);

// ---------------------------------------------------------------------------
// Spans

struct RxsGraph {
  EquivalenceRelation R;  // R[d]
  EquivalenceRelation S;  // R[c]
  Pullback triples;       // R x_C1 S
  ReflexiveGraph graph;   // dom (a,b,g) = a, cod (a,b,g) = g, unit a -> (a,a,a)
  HuqWitness witness;     // for (ker dom, ker cod)
};

/// Requires a Huq witness for (ker d, ker c) of the span.
RxsGraph build_rxs_graph(const Span& span, const HuqWitness& phi);

struct Pregroupoid {
  SmithConnector connector;
  GroupoidComp groupoid;  // on the triples graph
  bool agrees_with_smith = false;
};

Search<Pregroupoid> pregroupoid_from_span(const Span& span, const HuqWitness& phi,
                                          GroupoidOptions opts = {});

}  // namespace shq
