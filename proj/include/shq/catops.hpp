#pragma once

// Limits, images and cokernels computed inside the variety, plus the value
// propagation solver used for every uniquely determined mediating morphism.

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "shq/finalg.hpp"

namespace shq {

struct KernelData {
  AlgebraPtr object;        // K[f], carrier = sorted preimage of zero
  Homomorphism inclusion;   // ker f
};

KernelData kernel(const Homomorphism& f);

/// A congruence viewed as a subalgebra R of A x A.
struct EquivalenceRelation {
  AlgebraPtr base;
  PairAlgebra total;   // pairs (a, a') in lexicographic order
  Homomorphism r0;     // (a, a') -> a
  Homomorphism r1;     // (a, a') -> a'
  Homomorphism delta;  // a -> (a, a)

  const AlgebraPtr& object() const { return total.object; }
  int index(int a, int b) const { return total.index(a, b); }
};

/// R[f] = {(a, a') : f(a) = f(a')}.
EquivalenceRelation kernel_pair(const Homomorphism& f);
EquivalenceRelation relation_from_congruence(const Congruence& theta);

/// Normalisation k = r1 . ker r0 : K[r0] -> A of an equivalence relation.
Homomorphism normalisation(const EquivalenceRelation& r);

struct Pullback {
  PairAlgebra pairs;  // {(x, y) : f(x) = g(y)} lexicographic
  Homomorphism f;
  Homomorphism g;

  const AlgebraPtr& object() const { return pairs.object; }
  Homomorphism proj_f() const { return pairs.proj_left(); }   // to dom f
  Homomorphism proj_g() const { return pairs.proj_right(); }  // to dom g
  /// Mediating map <u, v> for u, v with f u = g v.
  Homomorphism pair(const Homomorphism& u, const Homomorphism& v) const {
    return pairs.pair(u, v);
  }
  int index(int x, int y) const { return pairs.index(x, y); }
};

/// Throws PreconditionError if the codomains differ.
Pullback pullback(const Homomorphism& f, const Homomorphism& g);

struct Factorization {
  Homomorphism epi;   // A -> I[f]
  Homomorphism mono;  // Im f : I[f] -> B
};

Factorization image_factorize(const Homomorphism& f);

struct Cokernel {
  Congruence congruence;
  AlgebraPtr object;
  Homomorphism map;
};

/// Quotient of cod f by the congruence generated by {(f(x), 0)}.
Cokernel cokernel(const Homomorphism& f);

/// m is a kernel of its own cokernel. Throws PreconditionError unless m is
/// injective.
bool is_normal_mono(const Homomorphism& m);

// ---------------------------------------------------------------------------
// Pullback squares
//
//        top
//   TL --------> TR
//   |            |
//  left        right
//   v            v
//   BL --------> BR
//       bottom

struct CommutativeSquare {
  Homomorphism top;
  Homomorphism left;
  Homomorphism right;
  Homomorphism bottom;
  /// Optional section of top; when given, the split-epi kernel criterion is
  /// reported instead of the regular-epi one.
  std::optional<Homomorphism> top_section;
};

enum class KernelCriterion { not_applicable, split_epi, regular_epi };

const char* to_string(KernelCriterion c);

struct PullbackCertificate {
  bool is_pullback = false;
  Pullback canonical;          // pullback of bottom and right
  Homomorphism comparison;     // TL -> canonical, x -> (left x, top x)
  std::optional<int> missed;   // element of canonical outside the image
  std::optional<std::pair<int, int>> collision;  // distinct x, y with equal image

  /// Horizontal kernels: K[top] -> K[bottom] induced by left.
  KernelCriterion criterion = KernelCriterion::not_applicable;
  std::optional<bool> kernel_map_iso;
  bool criteria_agree = true;

  /// The unique w : T -> TL with left w = u and top w = v. Requires
  /// is_pullback and bottom u = right v.
  Homomorphism mediate(const Homomorphism& u, const Homomorphism& v) const;
};

/// Throws PreconditionError if the square does not commute.
PullbackCertificate is_pullback_square(const CommutativeSquare& sq);

// ---------------------------------------------------------------------------
// Forced extension

struct ConeLeg {
  Homomorphism into_apex;  // g_i : D_i -> P
  Homomorphism value;      // f_i : D_i -> T
};

/// The least element of P (in carrier order) that was forced to two values.
struct Conflict {
  int element = 0;
  int first_value = 0;
  int second_value = 0;
};

struct NotGenerating {
  std::vector<int> closure;
};

using Extension = std::variant<Homomorphism, Conflict, NotGenerating>;

/// Propagates the constraints g_i(x) -> f_i(x) through the operation tables
/// of P and T. Returns the unique homomorphism P -> T extending them when the
/// cone images generate P, a Conflict when no extension exists, or
/// NotGenerating with the closure reached.
Extension forced_extension(std::span<const ConeLeg> cone);

/// The cone constraints as a partial map on the apex (kFree where
/// unconstrained), or a Conflict if two legs disagree on an element.
std::variant<std::vector<int>, Conflict> cone_constraints(std::span<const ConeLeg> cone);

}  // namespace shq
