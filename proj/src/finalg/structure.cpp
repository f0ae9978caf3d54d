#include <algorithm>
#include <numeric>

#include "shq/detail/tuples.hpp"
#include "shq/finalg.hpp"

namespace shq {

std::vector<int> generated_closure(const FiniteAlgebra& alg, std::span<const int> seed) {
  const int n = alg.order();
  const auto& ops = alg.signature().ops();
  std::vector<char> in(n, 0);
  std::vector<int> queue;
  auto add = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      queue.push_back(x);
    }
  };
  add(0);
  for (std::size_t op = 0; op < ops.size(); ++op) {
    if (ops[op].arity == 0) add(alg.table(static_cast<int>(op))[0]);
  }
  for (int s : seed) add(s);

  std::vector<int> seen;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    seen.push_back(queue[head]);
    for (std::size_t op = 0; op < ops.size(); ++op) {
      detail::for_each_tuple_with_newest(seen, ops[op].arity, [&](std::span<const int> args) {
        add(alg.apply(static_cast<int>(op), args));
      });
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

std::vector<int> greedy_generators(const FiniteAlgebra& alg) {
  std::vector<int> gens;
  std::vector<int> closure = generated_closure(alg, gens);
  std::vector<char> in(alg.order(), 0);
  for (int x : closure) in[x] = 1;
  for (int x = 0; x < alg.order(); ++x) {
    if (in[x]) continue;
    gens.push_back(x);
    closure = generated_closure(alg, gens);
    for (int y : closure) in[y] = 1;
  }
  return gens;
}

Subalgebra subalgebra(const AlgebraPtr& parent, std::vector<int> elements, std::string name,
                      Provenance provenance) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty() || elements.front() != 0) {
    throw PreconditionError("subalgebra must contain the zero element");
  }
  std::vector<int> index(parent->order(), -1);
  for (std::size_t i = 0; i < elements.size(); ++i) index[elements[i]] = static_cast<int>(i);

  const int m = static_cast<int>(elements.size());
  const auto& ops = parent->signature().ops();
  std::vector<std::vector<int>> tables(ops.size());
  std::vector<int> lifted;
  for (std::size_t op = 0; op < ops.size(); ++op) {
    const int arity = ops[op].arity;
    tables[op].reserve(table_size(m, arity));
    lifted.resize(arity);
    detail::for_each_tuple(m, arity, [&](std::span<const int> args) {
      for (int i = 0; i < arity; ++i) lifted[i] = elements[args[i]];
      int v = index[parent->apply(static_cast<int>(op), lifted)];
      if (v < 0) {
        throw PreconditionError("subset is not closed under '" + ops[op].symbol + "'");
      }
      tables[op].push_back(v);
    });
  }
  auto object = make_algebra(parent->signature_ptr(), m, std::move(tables), std::move(name));
  Homomorphism inclusion(object, parent, elements, provenance);
  return {std::move(object), std::move(inclusion)};
}

// ---------------------------------------------------------------------------

PairAlgebra pair_subalgebra(const AlgebraPtr& left, const AlgebraPtr& right,
                            std::vector<std::pair<int, int>> elements, std::string name) {
  if (!left->signature().compatible(right->signature())) {
    throw SignatureMismatch("pair algebra of '" + left->name() + "' and '" + right->name() +
                            "' with different signatures");
  }
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  PairAlgebra out;
  out.left = left;
  out.right = right;
  out.lookup.assign(static_cast<std::size_t>(left->order()) * right->order(), -1);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    out.lookup[static_cast<std::size_t>(elements[i].first) * right->order() + elements[i].second] =
        static_cast<int>(i);
  }
  if (elements.empty() || elements.front() != std::pair<int, int>{0, 0}) {
    throw InternalInconsistency("pair algebra '" + name + "' is missing the zero pair");
  }

  const int m = static_cast<int>(elements.size());
  const auto& ops = left->signature().ops();
  std::vector<std::vector<int>> tables(ops.size());
  std::vector<int> la;
  std::vector<int> ra;
  for (std::size_t op = 0; op < ops.size(); ++op) {
    const int arity = ops[op].arity;
    tables[op].reserve(table_size(m, arity));
    la.resize(arity);
    ra.resize(arity);
    const bool binary = arity == 2;
    const auto& lt = left->table(static_cast<int>(op));
    const auto& rt = right->table(static_cast<int>(op));
    const std::size_t ln = left->order();
    const std::size_t rn = right->order();
    detail::for_each_tuple(m, arity, [&](std::span<const int> args) {
      int a;
      int b;
      if (binary) {
        const auto& x = elements[args[0]];
        const auto& y = elements[args[1]];
        a = lt[x.first * ln + y.first];
        b = rt[x.second * rn + y.second];
      } else {
        for (int i = 0; i < arity; ++i) {
          la[i] = elements[args[i]].first;
          ra[i] = elements[args[i]].second;
        }
        a = left->apply(static_cast<int>(op), la);
        b = right->apply(static_cast<int>(op), ra);
      }
      int v = out.lookup[a * rn + b];
      if (v < 0) {
        throw InternalInconsistency("pair algebra '" + name + "' is not closed under '" +
                                    ops[op].symbol + "'");
      }
      tables[op].push_back(v);
    });
  }
  out.object = make_algebra(left->signature_ptr(), m, std::move(tables), std::move(name));
  out.elements = std::move(elements);
  return out;
}

Homomorphism PairAlgebra::proj_left() const {
  std::vector<int> map(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) map[i] = elements[i].first;
  return Homomorphism(object, left, std::move(map), Provenance::projection);
}

Homomorphism PairAlgebra::proj_right() const {
  std::vector<int> map(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) map[i] = elements[i].second;
  return Homomorphism(object, right, std::move(map), Provenance::projection);
}

Homomorphism PairAlgebra::pair(const Homomorphism& u, const Homomorphism& v,
                               Provenance provenance) const {
  if (!same_algebra(u.dom(), v.dom())) {
    throw PreconditionError("pairing of maps with different domains");
  }
  if (!same_algebra(u.cod(), left) || !same_algebra(v.cod(), right)) {
    throw PreconditionError("pairing: codomains do not match the factors of '" + object->name() +
                            "'");
  }
  std::vector<int> map(u.map().size());
  for (std::size_t t = 0; t < map.size(); ++t) {
    int idx = index(u(static_cast<int>(t)), v(static_cast<int>(t)));
    if (idx < 0) {
      throw PreconditionError("pairing leaves '" + object->name() + "' at element " +
                              std::to_string(t));
    }
    map[t] = idx;
  }
  return Homomorphism(u.dom(), object, std::move(map), provenance);
}

Homomorphism Product::inj_left() const {
  std::vector<int> map(left->order());
  for (int a = 0; a < left->order(); ++a) map[a] = index(a, 0);
  return Homomorphism(left, object, std::move(map), Provenance::injection);
}

Homomorphism Product::inj_right() const {
  std::vector<int> map(right->order());
  for (int b = 0; b < right->order(); ++b) map[b] = index(0, b);
  return Homomorphism(right, object, std::move(map), Provenance::injection);
}

Product product(const AlgebraPtr& a, const AlgebraPtr& b) {
  std::vector<std::pair<int, int>> elems;
  elems.reserve(static_cast<std::size_t>(a->order()) * b->order());
  for (int x = 0; x < a->order(); ++x) {
    for (int y = 0; y < b->order(); ++y) elems.emplace_back(x, y);
  }
  Product p;
  static_cast<PairAlgebra&>(p) =
      pair_subalgebra(a, b, std::move(elems), "(" + a->name() + " x " + b->name() + ")");
  return p;
}

}  // namespace shq
