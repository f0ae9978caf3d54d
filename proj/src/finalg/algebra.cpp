#include <algorithm>
#include <numeric>

#include "shq/finalg.hpp"

namespace shq {

std::size_t table_size(int order, int arity) {
  std::size_t n = 1;
  for (int i = 0; i < arity; ++i) n *= static_cast<std::size_t>(order);
  return n;
}

namespace {

std::optional<std::string> structural_problem(const Signature& sig, int order,
                                              const std::vector<std::vector<int>>& tables) {
  if (order <= 0) return "order must be positive, got " + std::to_string(order);
  if (tables.size() != sig.ops().size()) {
    return "expected " + std::to_string(sig.ops().size()) + " tables, got " +
           std::to_string(tables.size());
  }
  for (std::size_t op = 0; op < tables.size(); ++op) {
    const auto& sym = sig.ops()[op];
    std::size_t want = table_size(order, sym.arity);
    if (tables[op].size() != want) {
      return "table '" + sym.symbol + "' has " + std::to_string(tables[op].size()) +
             " entries, expected " + std::to_string(want);
    }
    for (std::size_t i = 0; i < want; ++i) {
      int v = tables[op][i];
      if (v < 0 || v >= order) {
        return "table '" + sym.symbol + "' entry " + std::to_string(i) + " = " +
               std::to_string(v) + " is outside 0.." + std::to_string(order - 1);
      }
    }
  }
  if (tables[sig.zero_op()][0] != 0) {
    return "zero symbol '" + sig.ops()[sig.zero_op()].symbol + "' must evaluate to element 0";
  }
  return std::nullopt;
}

}  // namespace

FiniteAlgebra::FiniteAlgebra(SignaturePtr sig, int order, std::vector<std::vector<int>> tables,
                             std::string name)
    : sig_(std::move(sig)), order_(order), tables_(std::move(tables)), name_(std::move(name)) {
  if (!sig_) throw StructuralError("algebra without signature");
  if (auto problem = structural_problem(*sig_, order_, tables_)) {
    throw StructuralError((name_.empty() ? std::string("algebra") : name_) + ": " + *problem);
  }
}

bool same_algebra(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (&a == &b) return true;
  return a.order() == b.order() && a.signature().compatible(b.signature()) &&
         a.tables() == b.tables();
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  return a == b || same_algebra(*a, *b);
}

int evaluate(const Term& t, const FiniteAlgebra& alg, std::span<const int> assignment) {
  if (t.kind == Term::Kind::variable) return assignment[t.index];
  int args[8];
  std::vector<int> big;
  std::span<int> view;
  if (t.args.size() <= 8) {
    view = std::span<int>(args, t.args.size());
  } else {
    big.resize(t.args.size());
    view = big;
  }
  for (std::size_t i = 0; i < t.args.size(); ++i) view[i] = evaluate(t.args[i], alg, assignment);
  return alg.apply(t.index, view);
}

ValidationReport validate_algebra(const FiniteAlgebra& alg) {
  ValidationReport report;
  const int n = alg.order();
  for (const auto& eq : alg.signature().equations()) {
    std::vector<int> assignment(eq.num_vars, 0);
    while (true) {
      if (evaluate(eq.lhs, alg, assignment) != evaluate(eq.rhs, alg, assignment)) {
        report.violations.push_back({eq.text, assignment});
        break;
      }
      int pos = eq.num_vars - 1;
      while (pos >= 0 && ++assignment[pos] == n) assignment[pos--] = 0;
      if (pos < 0) break;
    }
  }
  return report;
}

ValidationReport validate_algebra(const SignaturePtr& sig, int order,
                                  const std::vector<std::vector<int>>& tables) {
  if (auto problem = structural_problem(*sig, order, tables)) {
    ValidationReport report;
    report.structural_error = *problem;
    return report;
  }
  return validate_algebra(FiniteAlgebra(sig, order, tables));
}

// ---------------------------------------------------------------------------

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::user: return "user";
    case Provenance::identity: return "identity";
    case Provenance::zero: return "zero";
    case Provenance::kernel_inclusion: return "kernel-inclusion";
    case Provenance::subalgebra_inclusion: return "subalgebra-inclusion";
    case Provenance::projection: return "projection";
    case Provenance::injection: return "injection";
    case Provenance::pairing: return "pairing";
    case Provenance::diagonal: return "diagonal";
    case Provenance::quotient: return "quotient";
    case Provenance::composite: return "composite";
    case Provenance::inverse: return "inverse";
    case Provenance::witness: return "witness";
    case Provenance::induced: return "induced";
  }
  return "?";
}

std::optional<HomViolation> find_hom_violation(const FiniteAlgebra& dom,
                                               const FiniteAlgebra& cod,
                                               std::span<const int> map) {
  const int n = dom.order();
  std::vector<int> args;
  std::vector<int> images;
  for (std::size_t op = 0; op < dom.signature().ops().size(); ++op) {
    const int arity = dom.signature().ops()[op].arity;
    const auto& table = dom.table(static_cast<int>(op));
    args.assign(arity, 0);
    images.resize(arity);
    for (std::size_t idx = 0; idx < table.size(); ++idx) {
      for (int i = 0; i < arity; ++i) images[i] = map[args[i]];
      int lhs = map[table[idx]];
      int rhs = cod.apply(static_cast<int>(op), images);
      if (lhs != rhs) return HomViolation{static_cast<int>(op), args, lhs, rhs};
      for (int pos = arity - 1; pos >= 0; --pos) {
        if (++args[pos] < n) break;
        args[pos] = 0;
      }
    }
  }
  return std::nullopt;
}

Homomorphism::Homomorphism(AlgebraPtr dom, AlgebraPtr cod, std::vector<int> map,
                           Provenance provenance)
    : dom_(std::move(dom)), cod_(std::move(cod)), map_(std::move(map)), provenance_(provenance) {}

Homomorphism Homomorphism::checked(AlgebraPtr dom, AlgebraPtr cod, std::vector<int> map,
                                   Provenance provenance) {
  if (!dom->signature().compatible(cod->signature())) {
    throw SignatureMismatch("homomorphism between algebras of signatures '" +
                            dom->signature().name() + "' and '" + cod->signature().name() +
                            "'");
  }
  if (static_cast<int>(map.size()) != dom->order()) {
    throw StructuralError("map has " + std::to_string(map.size()) + " entries, domain order is " +
                          std::to_string(dom->order()));
  }
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (map[i] < 0 || map[i] >= cod->order()) {
      throw StructuralError("map entry " + std::to_string(i) + " = " + std::to_string(map[i]) +
                            " is outside the codomain");
    }
  }
  if (auto v = find_hom_violation(*dom, *cod, map)) {
    std::string args;
    for (std::size_t i = 0; i < v->args.size(); ++i) {
      args += (i ? "," : "") + std::to_string(v->args[i]);
    }
    throw NotAHomomorphism("map does not preserve '" + dom->signature().ops()[v->op].symbol +
                           "' at (" + args + "): f(op(args)) = " + std::to_string(v->lhs) +
                           " but op(f(args)) = " + std::to_string(v->rhs));
  }
  return Homomorphism(std::move(dom), std::move(cod), std::move(map), provenance);
}

bool Homomorphism::is_injective() const {
  std::vector<char> seen(cod_->order(), 0);
  for (int v : map_) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

bool Homomorphism::is_surjective() const {
  std::vector<char> seen(cod_->order(), 0);
  int count = 0;
  for (int v : map_) {
    if (!seen[v]) {
      seen[v] = 1;
      ++count;
    }
  }
  return count == cod_->order();
}

bool Homomorphism::is_zero() const {
  return std::all_of(map_.begin(), map_.end(), [](int v) { return v == 0; });
}

bool operator==(const Homomorphism& a, const Homomorphism& b) {
  return a.map_ == b.map_ && same_algebra(a.dom_, b.dom_) && same_algebra(a.cod_, b.cod_);
}

Homomorphism identity(const AlgebraPtr& a) {
  std::vector<int> map(a->order());
  std::iota(map.begin(), map.end(), 0);
  return Homomorphism(a, a, std::move(map), Provenance::identity);
}

Homomorphism zero_map(const AlgebraPtr& dom, const AlgebraPtr& cod) {
  return Homomorphism(dom, cod, std::vector<int>(dom->order(), 0), Provenance::zero);
}

Homomorphism compose(const Homomorphism& g, const Homomorphism& f) {
  if (!same_algebra(f.cod(), g.dom())) {
    throw PreconditionError("compose: codomain of the first map ('" + f.cod()->name() +
                            "') is not the domain of the second ('" + g.dom()->name() + "')");
  }
  std::vector<int> map(f.map().size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = g(f(static_cast<int>(i)));
  return Homomorphism(f.dom(), g.cod(), std::move(map), Provenance::composite);
}

Homomorphism inverse(const Homomorphism& f) {
  if (!f.is_bijective()) throw PreconditionError("inverse: map is not bijective");
  std::vector<int> map(f.cod()->order());
  for (std::size_t i = 0; i < f.map().size(); ++i) map[f(static_cast<int>(i))] = static_cast<int>(i);
  return Homomorphism(f.cod(), f.dom(), std::move(map), Provenance::inverse);
}

std::vector<int> image_set(const Homomorphism& f) {
  std::vector<char> seen(f.cod()->order(), 0);
  for (int v : f.map()) seen[v] = 1;
  std::vector<int> out;
  for (int i = 0; i < f.cod()->order(); ++i) {
    if (seen[i]) out.push_back(i);
  }
  return out;
}

}  // namespace shq
