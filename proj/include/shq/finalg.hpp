#pragma once

// Finite pointed algebras over equational signatures.
//
// Carriers are {0, ..., n-1} and element 0 is always the zero (the value of
// the signature's distinguished nullary symbol). Operation tables are stored
// row-major: the entry for arguments (a_1, ..., a_k) sits at
// a_1 * n^(k-1) + ... + a_k.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "shq/error.hpp"

namespace shq {

struct OpSymbol {
  std::string symbol;
  int arity = 0;
};

/// A term over variables and operation symbols.
struct Term {
  enum class Kind { variable, application };
  Kind kind = Kind::variable;
  int index = 0;  // variable number or operation index
  std::vector<Term> args;
};

struct Equation {
  Term lhs;
  Term rhs;
  int num_vars = 0;
  std::string text;
};

class Signature;
using SignaturePtr = std::shared_ptr<const Signature>;

class Signature {
 public:
  /// Parses equations written in prefix form, e.g. "*(x,0) = x".
  /// Throws SignatureError when a symbol is undeclared, arities clash, the
  /// zero symbol is not nullary, or no binary operation is declared unital
  /// (both "b(x,0) = x" and "b(0,x) = x" must appear among the equations).
  static SignaturePtr make(std::string name, std::vector<OpSymbol> ops,
                           const std::vector<std::string>& equations,
                           const std::string& zero_symbol);

  /// (*, inv, 0) with the group axioms.
  static SignaturePtr group();
  /// Two group structures (*1, inv1) and (*2, inv2) sharing the zero.
  static SignaturePtr digroup();

  const std::string& name() const { return name_; }
  const std::vector<OpSymbol>& ops() const { return ops_; }
  const std::vector<Equation>& equations() const { return equations_; }
  int zero_op() const { return zero_op_; }
  /// Binary operations for which both unit laws are declared.
  const std::vector<int>& unital_ops() const { return unital_ops_; }
  std::optional<int> op_index(const std::string& symbol) const;

  /// Same operation symbols with the same arities in the same order.
  bool compatible(const Signature& other) const;

  Term parse_term(const std::string& text, std::vector<std::string>& vars) const;
  std::string format_term(const Term& t,
                          const std::vector<std::string>& vars) const;

 private:
  Signature() = default;
  std::string name_;
  std::vector<OpSymbol> ops_;
  std::vector<Equation> equations_;
  int zero_op_ = -1;
  std::vector<int> unital_ops_;
};

class FiniteAlgebra;
using AlgebraPtr = std::shared_ptr<const FiniteAlgebra>;

class FiniteAlgebra {
 public:
  /// Throws StructuralError on malformed tables or if the zero symbol does
  /// not evaluate to element 0. Equations are checked by validate_algebra.
  FiniteAlgebra(SignaturePtr sig, int order, std::vector<std::vector<int>> tables,
                std::string name = {});

  int order() const { return order_; }
  const Signature& signature() const { return *sig_; }
  const SignaturePtr& signature_ptr() const { return sig_; }
  const std::string& name() const { return name_; }
  const std::vector<int>& table(int op) const { return tables_[op]; }
  const std::vector<std::vector<int>>& tables() const { return tables_; }

  int apply(int op, std::span<const int> args) const {
    std::size_t idx = 0;
    for (int a : args) idx = idx * static_cast<std::size_t>(order_) + a;
    return tables_[op][idx];
  }
  int apply2(int op, int a, int b) const {
    return tables_[op][static_cast<std::size_t>(a) * order_ + b];
  }

 private:
  SignaturePtr sig_;
  int order_;
  std::vector<std::vector<int>> tables_;
  std::string name_;
};

template <class... Args>
AlgebraPtr make_algebra(Args&&... args) {
  return std::make_shared<const FiniteAlgebra>(std::forward<Args>(args)...);
}

/// Same signature and identical tables.
bool same_algebra(const FiniteAlgebra& a, const FiniteAlgebra& b);
bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

std::size_t table_size(int order, int arity);

enum class Provenance {
  user,
  identity,
  zero,
  kernel_inclusion,
  subalgebra_inclusion,
  projection,
  injection,
  pairing,
  diagonal,
  quotient,
  composite,
  inverse,
  witness,
  induced,
};

const char* to_string(Provenance p);

/// A failing instance of f(op(args)) = op(f(args)).
struct HomViolation {
  int op = 0;
  std::vector<int> args;
  int lhs = 0;  // f(op(args))
  int rhs = 0;  // op(f(args))
};

std::optional<HomViolation> find_hom_violation(const FiniteAlgebra& dom,
                                               const FiniteAlgebra& cod,
                                               std::span<const int> map);

class Homomorphism {
 public:
  /// Unchecked: the caller vouches for the homomorphism property. Use
  /// checked() for untrusted maps.
  Homomorphism(AlgebraPtr dom, AlgebraPtr cod, std::vector<int> map,
               Provenance provenance = Provenance::user);

  /// Throws NotAHomomorphism (with a witnessing tuple) or StructuralError.
  static Homomorphism checked(AlgebraPtr dom, AlgebraPtr cod, std::vector<int> map,
                              Provenance provenance = Provenance::user);

  const AlgebraPtr& dom() const { return dom_; }
  const AlgebraPtr& cod() const { return cod_; }
  const std::vector<int>& map() const { return map_; }
  Provenance provenance() const { return provenance_; }
  int operator()(int x) const { return map_[x]; }

  bool is_injective() const;
  bool is_surjective() const;
  bool is_bijective() const { return is_injective() && is_surjective(); }
  bool is_zero() const;

  /// Equal maps between the same algebras.
  friend bool operator==(const Homomorphism& a, const Homomorphism& b);

 private:
  AlgebraPtr dom_;
  AlgebraPtr cod_;
  std::vector<int> map_;
  Provenance provenance_;
};

Homomorphism identity(const AlgebraPtr& a);
Homomorphism zero_map(const AlgebraPtr& dom, const AlgebraPtr& cod);
/// g after f. Throws PreconditionError if cod f and dom g differ.
Homomorphism compose(const Homomorphism& g, const Homomorphism& f);
/// Inverse of a bijective homomorphism. Throws PreconditionError otherwise.
Homomorphism inverse(const Homomorphism& f);
/// Sorted set-image.
std::vector<int> image_set(const Homomorphism& f);

// ---------------------------------------------------------------------------
// Validation

struct EquationViolation {
  std::string equation;
  std::vector<int> assignment;
};

struct ValidationReport {
  std::optional<std::string> structural_error;
  std::vector<EquationViolation> violations;
  bool ok() const { return !structural_error && violations.empty(); }
};

/// Every equation of the signature under every assignment.
ValidationReport validate_algebra(const FiniteAlgebra& alg);
/// Same, for raw tables that may not even have the right shape.
ValidationReport validate_algebra(const SignaturePtr& sig, int order,
                                  const std::vector<std::vector<int>>& tables);

int evaluate(const Term& t, const FiniteAlgebra& alg, std::span<const int> assignment);

// ---------------------------------------------------------------------------
// Subalgebras and products

/// Smallest subset containing seed and the constants, closed under all
/// operations. Sorted ascending.
std::vector<int> generated_closure(const FiniteAlgebra& alg, std::span<const int> seed);

/// Elements added one at a time in ascending order whenever they are not yet
/// in the closure of those chosen before.
std::vector<int> greedy_generators(const FiniteAlgebra& alg);

struct Subalgebra {
  AlgebraPtr object;
  Homomorphism inclusion;
};

/// elements must be closed under the operations; they are sorted first.
Subalgebra subalgebra(const AlgebraPtr& parent, std::vector<int> elements,
                      std::string name = {},
                      Provenance provenance = Provenance::subalgebra_inclusion);

/// A subalgebra of A x B given by a list of pairs. Used for products,
/// pullbacks and relations; elements are kept in lexicographic order.
struct PairAlgebra {
  AlgebraPtr object;
  AlgebraPtr left;
  AlgebraPtr right;
  std::vector<std::pair<int, int>> elements;
  std::vector<int> lookup;  // left * |right| + right -> index or -1

  int index(int a, int b) const {
    return lookup[static_cast<std::size_t>(a) * right->order() + b];
  }
  Homomorphism proj_left() const;
  Homomorphism proj_right() const;
  /// <u, v>: T -> this, for u: T -> left, v: T -> right landing in the carrier.
  /// Throws PreconditionError otherwise.
  Homomorphism pair(const Homomorphism& u, const Homomorphism& v,
                    Provenance provenance = Provenance::pairing) const;
};

/// Throws InternalInconsistency if the pairs are not closed.
PairAlgebra pair_subalgebra(const AlgebraPtr& left, const AlgebraPtr& right,
                            std::vector<std::pair<int, int>> elements, std::string name);

struct Product : PairAlgebra {
  Homomorphism inj_left() const;   // <1, 0>
  Homomorphism inj_right() const;  // <0, 1>
};

/// Carrier: all pairs in lexicographic order, so (a, b) has index a*|B| + b.
Product product(const AlgebraPtr& a, const AlgebraPtr& b);

// ---------------------------------------------------------------------------
// Homomorphism enumeration

inline constexpr int kFree = -1;

/// All homomorphisms A -> B that agree with constraints wherever the latter
/// is not kFree (constraints is empty or has size |A|). Sorted
/// lexicographically by map. Stops after `limit` results.
std::vector<Homomorphism> enumerate_homs(
    const AlgebraPtr& a, const AlgebraPtr& b, std::span<const int> constraints = {},
    std::size_t limit = std::numeric_limits<std::size_t>::max());

// ---------------------------------------------------------------------------
// Congruences and quotients

struct Congruence {
  AlgebraPtr base;
  std::vector<int> block;  // normalised: blocks numbered by least element
  int num_blocks() const;
  bool related(int a, int b) const { return block[a] == block[b]; }
};

/// Renumbers blocks by their least element (so block 0 holds the zero).
std::vector<int> normalize_partition(std::span<const int> labels);

/// Throws IncompatiblePartition with a witnessing pair when some operation is
/// not blockwise well defined.
Congruence make_congruence(const AlgebraPtr& base, std::span<const int> labels);

Congruence congruence_generated(const AlgebraPtr& a,
                                std::span<const std::pair<int, int>> pairs);

Congruence diagonal_congruence(const AlgebraPtr& a);
Congruence kernel_congruence(const Homomorphism& f);

struct Quotient {
  AlgebraPtr object;
  Homomorphism map;
};

/// Blocks are ordered by least representative.
Quotient quotient(const AlgebraPtr& a, const Congruence& theta);
/// Validates the partition first.
Quotient quotient(const AlgebraPtr& a, std::span<const int> labels);

}  // namespace shq
