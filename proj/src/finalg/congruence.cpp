#include <algorithm>
#include <numeric>

#include "shq/detail/tuples.hpp"
#include "shq/finalg.hpp"

namespace shq {

namespace {

struct UnionFind {
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  // Keeps the smaller root so that roots are least elements.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }
  std::vector<int> parent;
};

}  // namespace

int Congruence::num_blocks() const {
  return block.empty() ? 0 : *std::max_element(block.begin(), block.end()) + 1;
}

std::vector<int> normalize_partition(std::span<const int> labels) {
  std::vector<int> out(labels.size());
  std::vector<std::pair<int, int>> seen;  // label -> block
  int next = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto it = std::find_if(seen.begin(), seen.end(),
                           [&](const auto& p) { return p.first == labels[i]; });
    if (it == seen.end()) {
      seen.emplace_back(labels[i], next);
      out[i] = next++;
    } else {
      out[i] = it->second;
    }
  }
  return out;
}

Congruence make_congruence(const AlgebraPtr& base, std::span<const int> labels) {
  if (static_cast<int>(labels.size()) != base->order()) {
    throw StructuralError("partition has " + std::to_string(labels.size()) +
                          " entries, algebra order is " + std::to_string(base->order()));
  }
  Congruence theta{base, normalize_partition(labels)};
  std::vector<int> rep(theta.num_blocks(), -1);
  for (int x = 0; x < base->order(); ++x) {
    if (rep[theta.block[x]] < 0) rep[theta.block[x]] = x;
  }
  const auto& ops = base->signature().ops();
  std::vector<int> moved;
  for (std::size_t op = 0; op < ops.size(); ++op) {
    const int arity = ops[op].arity;
    detail::for_each_tuple(base->order(), arity, [&](std::span<const int> args) {
      int r = base->apply(static_cast<int>(op), args);
      for (int i = 0; i < arity; ++i) {
        int to = rep[theta.block[args[i]]];
        if (to == args[i]) continue;
        moved.assign(args.begin(), args.end());
        moved[i] = to;
        int r2 = base->apply(static_cast<int>(op), moved);
        if (!theta.related(r, r2)) {
          throw IncompatiblePartition(
              "partition is not compatible with '" + ops[op].symbol + "': " +
                  std::to_string(args[i]) + " ~ " + std::to_string(to) + " but results " +
                  std::to_string(r) + " and " + std::to_string(r2) + " lie in different blocks",
              r, r2);
        }
      }
    });
  }
  return theta;
}

Congruence congruence_generated(const AlgebraPtr& a,
                                std::span<const std::pair<int, int>> pairs) {
  UnionFind uf(a->order());
  for (auto [x, y] : pairs) {
    if (x < 0 || y < 0 || x >= a->order() || y >= a->order()) {
      throw PreconditionError("congruence_generated: element index out of range");
    }
    uf.unite(x, y);
  }
  const auto& ops = a->signature().ops();
  std::vector<int> moved;
  bool changed = !pairs.empty();
  while (changed) {
    changed = false;
    for (std::size_t op = 0; op < ops.size(); ++op) {
      const int arity = ops[op].arity;
      detail::for_each_tuple(a->order(), arity, [&](std::span<const int> args) {
        int r = -1;
        for (int i = 0; i < arity; ++i) {
          int root = uf.find(args[i]);
          if (root == args[i]) continue;
          if (r < 0) r = a->apply(static_cast<int>(op), args);
          moved.assign(args.begin(), args.end());
          moved[i] = root;
          changed |= uf.unite(r, a->apply(static_cast<int>(op), moved));
        }
      });
    }
  }
  std::vector<int> labels(a->order());
  for (int x = 0; x < a->order(); ++x) labels[x] = uf.find(x);
  return Congruence{a, normalize_partition(labels)};
}

Congruence diagonal_congruence(const AlgebraPtr& a) {
  std::vector<int> labels(a->order());
  std::iota(labels.begin(), labels.end(), 0);
  return Congruence{a, labels};
}

Congruence kernel_congruence(const Homomorphism& f) {
  return Congruence{f.dom(), normalize_partition(f.map())};
}

Quotient quotient(const AlgebraPtr& a, const Congruence& given) {
  const Congruence theta = make_congruence(a, given.block);
  const int m = theta.num_blocks();
  std::vector<int> rep(m, -1);
  for (int x = 0; x < a->order(); ++x) {
    if (rep[theta.block[x]] < 0) rep[theta.block[x]] = x;
  }
  const auto& ops = a->signature().ops();
  std::vector<std::vector<int>> tables(ops.size());
  std::vector<int> lifted;
  for (std::size_t op = 0; op < ops.size(); ++op) {
    const int arity = ops[op].arity;
    lifted.resize(arity);
    tables[op].reserve(table_size(m, arity));
    detail::for_each_tuple(m, arity, [&](std::span<const int> args) {
      for (int i = 0; i < arity; ++i) lifted[i] = rep[args[i]];
      tables[op].push_back(theta.block[a->apply(static_cast<int>(op), lifted)]);
    });
  }
  auto q = make_algebra(a->signature_ptr(), m, std::move(tables), a->name() + "/~");
  Homomorphism map(a, q, theta.block, Provenance::quotient);
  return {std::move(q), std::move(map)};
}

Quotient quotient(const AlgebraPtr& a, std::span<const int> labels) {
  return quotient(a, Congruence{a, {labels.begin(), labels.end()}});
}

}  // namespace shq
