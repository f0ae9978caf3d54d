#include "shq/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace shq::catalog {

namespace {

std::vector<int> perm_table(const std::vector<std::vector<int>>& perms) {
  const int n = static_cast<int>(perms.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < n; ++i) index[perms[i]] = i;
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      std::vector<int> ab(perms[a].size());
      for (std::size_t i = 0; i < ab.size(); ++i) ab[i] = perms[a][perms[b][i]];
      mul[static_cast<std::size_t>(a) * n + b] = index.at(ab);
    }
  }
  return mul;
}

// Closure of the generators under composition, sorted lexicographically.
std::vector<std::vector<int>> perm_closure(const std::vector<std::vector<int>>& gens) {
  std::vector<int> id(gens.front().size());
  std::iota(id.begin(), id.end(), 0);
  std::set<std::vector<int>> seen{id};
  std::vector<std::vector<int>> todo{id};
  while (!todo.empty()) {
    auto p = todo.back();
    todo.pop_back();
    for (const auto& g : gens) {
      std::vector<int> q(p.size());
      for (std::size_t i = 0; i < q.size(); ++i) q[i] = g[p[i]];
      if (seen.insert(q).second) todo.push_back(q);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<int> product_table(int n1, int n2) {
  const int n = n1 * n2;
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      mul[static_cast<std::size_t>(a) * n + b] =
          ((a / n2 + b / n2) % n1) * n2 + (a % n2 + b % n2) % n2;
    }
  }
  return mul;
}

std::vector<int> inverse_table(const std::string& name, int n, const std::vector<int>& mul) {
  std::vector<int> inv(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (mul[static_cast<std::size_t>(a) * n + b] == 0) {
        inv[a] = b;
        break;
      }
    }
    if (inv[a] < 0) throw StructuralError("'" + name + "': element " + std::to_string(a) + " has no inverse");
  }
  return inv;
}

void require_valid(const AlgebraPtr& a) {
  ValidationReport r = validate_algebra(*a);
  if (!r.ok()) {
    throw StructuralError("'" + a->name() + "' violates " +
                          (r.structural_error ? *r.structural_error : r.violations.front().equation));
  }
}

std::vector<int> relabel(const std::vector<int>& mul, int n, const std::vector<int>& p) {
  std::vector<int> out(mul.size());
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      out[static_cast<std::size_t>(p[a]) * n + p[b]] = p[mul[static_cast<std::size_t>(a) * n + b]];
    }
  }
  return out;
}

// Permutations of {0..n-1} fixing 0.
template <class F>
void for_each_pointed_perm(int n, F&& f) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    f(p);
  } while (std::next_permutation(p.begin() + 1, p.end()));
}

}  // namespace

AlgebraPtr group_from_table(const std::string& name, int n, const std::vector<int>& mul) {
  if (n <= 0 || mul.size() != static_cast<std::size_t>(n) * n) {
    throw StructuralError("'" + name + "': multiplication table has the wrong size");
  }
  auto g = make_algebra(Signature::group(), n,
                        std::vector<std::vector<int>>{{0}, mul, inverse_table(name, n, mul)}, name);
  require_valid(g);
  return g;
}

AlgebraPtr digroup_from_tables(const std::string& name, int n, const std::vector<int>& mul1,
                               const std::vector<int>& mul2) {
  auto g = make_algebra(Signature::digroup(), n,
                        std::vector<std::vector<int>>{{0}, mul1, inverse_table(name, n, mul1), mul2,
                                                      inverse_table(name, n, mul2)},
                        name);
  require_valid(g);
  return g;
}

AlgebraPtr cyclic(int n) { return group_from_table("Z" + std::to_string(n), n, product_table(1, n)); }

AlgebraPtr klein() { return group_from_table("V4", 4, product_table(2, 2)); }

AlgebraPtr symmetric3() {
  return group_from_table("S3", 6, perm_table(perm_closure({{1, 0, 2}, {1, 2, 0}})));
}

AlgebraPtr dihedral4() {
  return group_from_table("D4", 8, perm_table(perm_closure({{1, 2, 3, 0}, {0, 3, 2, 1}})));
}

AlgebraPtr quaternion8() {
  // Element 2u + s is (-1)^s times unit u in {1, i, j, k}.
  static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<int> mul(64);
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      int ua = a / 2, ub = b / 2;
      int s = (a % 2 + b % 2 + sign[ua][ub]) % 2;
      mul[a * 8 + b] = 2 * unit[ua][ub] + s;
    }
  }
  return group_from_table("Q8", 8, mul);
}

AlgebraPtr z2_times_z4() { return group_from_table("Z2xZ4", 8, product_table(2, 4)); }

AlgebraPtr z2_cubed() {
  std::vector<int> mul(64);
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) mul[a * 8 + b] = a ^ b;
  }
  return group_from_table("Z2^3", 8, mul);
}

namespace {

void sort_by_order(std::vector<AlgebraPtr>& v) {
  std::stable_sort(v.begin(), v.end(),
                   [](const AlgebraPtr& a, const AlgebraPtr& b) { return a->order() < b->order(); });
}

}  // namespace

std::vector<AlgebraPtr> groups(int max_order) {
  std::vector<AlgebraPtr> out;
  for (int n = 1; n <= std::min(max_order, 12); ++n) out.push_back(cyclic(n));
  if (max_order >= 4) out.push_back(klein());
  if (max_order >= 6) out.push_back(symmetric3());
  if (max_order >= 8) {
    out.push_back(dihedral4());
    out.push_back(quaternion8());
  }
  sort_by_order(out);
  return out;
}

std::vector<AlgebraPtr> group_classes(int max_order) {
  if (max_order > 8) {
    throw PreconditionError("group classes are only tabulated up to order 8");
  }
  std::vector<AlgebraPtr> out = groups(max_order);
  if (max_order >= 8) {
    out.push_back(z2_times_z4());
    out.push_back(z2_cubed());
  }
  sort_by_order(out);
  return out;
}

std::vector<std::vector<int>> labelled_group_tables(int n) {
  std::set<std::vector<int>> tables;
  for (const auto& g : group_classes(n)) {
    if (g->order() != n) continue;
    const auto& mul = g->table(1);
    for_each_pointed_perm(n, [&](const std::vector<int>& p) { tables.insert(relabel(mul, n, p)); });
  }
  return {tables.begin(), tables.end()};
}

std::vector<AlgebraPtr> digroups(int max_order) {
  std::vector<AlgebraPtr> out;
  const auto classes = group_classes(max_order);
  for (int n = 1; n <= max_order; ++n) {
    const auto seconds = labelled_group_tables(n);
    int index = 0;
    for (const auto& g : classes) {
      if (g->order() != n) continue;
      const auto& mul1 = g->table(1);
      std::vector<std::vector<int>> autos;
      for_each_pointed_perm(n, [&](const std::vector<int>& p) {
        if (relabel(mul1, n, p) == mul1) autos.push_back(p);
      });
      for (const auto& mul2 : seconds) {
        bool least = std::all_of(autos.begin(), autos.end(), [&](const std::vector<int>& p) {
          return !(relabel(mul2, n, p) < mul2);
        });
        if (!least) continue;
        out.push_back(digroup_from_tables(
            "DG" + std::to_string(n) + "." + std::to_string(index++), n, mul1, mul2));
      }
    }
  }
  return out;
}

std::vector<AlgebraPtr> variety_catalog(const std::string& variety, int max_order) {
  if (variety == "group") return groups(max_order);
  if (variety == "digroup") return digroups(max_order);
  throw PreconditionError("unknown variety '" + variety + "' (expected group or digroup)");
}

std::optional<AlgebraPtr> find_algebra(const std::string& name) {
  for (const auto& g : group_classes(8)) {
    if (g->name() == name) return g;
  }
  for (int n = 9; n <= 12; ++n) {
    if (name == "Z" + std::to_string(n)) return cyclic(n);
  }
  if (name.rfind("DG", 0) == 0) {
    auto dot = name.find('.');
    if (dot != std::string::npos) {
      int n = std::atoi(name.substr(2, dot - 2).c_str());
      if (n >= 1 && n <= 8) {
        for (const auto& d : digroups(n)) {
          if (d->name() == name) return d;
        }
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

ReflexiveGraph discrete_graph(const AlgebraPtr& a) {
  return ReflexiveGraph{"DISC(" + a->name() + ")", a, a, identity(a), identity(a), identity(a)};
}

ReflexiveGraph pair_graph_z2() {
  AlgebraPtr c1 = klein();
  AlgebraPtr c0 = cyclic(2);
  Homomorphism d(c1, c0, {0, 0, 1, 1}, Provenance::projection);
  Homomorphism c(c1, c0, {0, 1, 0, 1}, Provenance::projection);
  Homomorphism e(c0, c1, {0, 3}, Provenance::diagonal);
  return ReflexiveGraph{"PG2", c1, c0, std::move(d), std::move(c), std::move(e)};
}

ReflexiveGraph s3_over_point() {
  AlgebraPtr c1 = symmetric3();
  AlgebraPtr c0 = cyclic(1);
  return ReflexiveGraph{"S3PT", c1, c0, zero_map(c1, c0), zero_map(c1, c0), zero_map(c0, c1)};
}

std::optional<ReflexiveGraph> named_graph(const std::string& name) {
  if (name == "PG2") return pair_graph_z2();
  if (name == "S3PT") return s3_over_point();
  if (name == "DISC") {
    auto g = discrete_graph(cyclic(2));
    g.name = "DISC";
    return g;
  }
  if (name.rfind("DISC(", 0) == 0 && name.back() == ')') {
    if (auto a = find_algebra(name.substr(5, name.size() - 6))) return discrete_graph(*a);
  }
  return std::nullopt;
}

std::optional<Span> named_span(const std::string& name) {
  if (auto g = named_graph(name)) return span_of(*g);
  return std::nullopt;
}

std::optional<RelationPair> named_relpair(const std::string& name) {
  auto on_algebra = [&](const std::string& prefix) -> std::optional<AlgebraPtr> {
    if (name.rfind(prefix, 0) != 0) return std::nullopt;
    return find_algebra(name.substr(prefix.size()));
  };
  if (auto a = on_algebra("FULL_")) {
    auto full = kernel_pair(zero_map(*a, cyclic(1)));
    return RelationPair{name, full, full};
  }
  if (auto a = on_algebra("DIAG_")) {
    auto diag = kernel_pair(identity(*a));
    return RelationPair{name, diag, diag};
  }
  if (name.rfind("KP_", 0) == 0) {
    if (auto g = named_graph(name.substr(3))) {
      return RelationPair{name, kernel_pair(g->d), kernel_pair(g->c)};
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

std::vector<ReflexiveGraph> graphs_between(const AlgebraPtr& C1, const AlgebraPtr& C0,
                                           std::size_t limit) {
  std::vector<ReflexiveGraph> out;
  if (!C1->signature().compatible(C0->signature()) || C1->order() % C0->order() != 0) return out;
  std::vector<Homomorphism> ds;
  for (auto& h : enumerate_homs(C1, C0)) {
    if (h.is_surjective()) ds.push_back(std::move(h));
  }
  std::vector<Homomorphism> es;
  for (auto& h : enumerate_homs(C0, C1)) {
    if (h.is_injective()) es.push_back(std::move(h));
  }
  // split[i][j]: d_i e_j = 1
  std::vector<std::vector<char>> split(ds.size(), std::vector<char>(es.size(), 0));
  for (std::size_t i = 0; i < ds.size(); ++i) {
    for (std::size_t j = 0; j < es.size(); ++j) {
      bool ok = true;
      for (int x = 0; x < C0->order() && ok; ++x) ok = ds[i](es[j](x)) == x;
      split[i][j] = ok;
    }
  }
  const std::string prefix = C1->name() + ">" + C0->name() + "#";
  for (std::size_t i = 0; i < ds.size(); ++i) {
    for (std::size_t k = 0; k < ds.size(); ++k) {
      for (std::size_t j = 0; j < es.size(); ++j) {
        if (!split[i][j] || !split[k][j]) continue;
        if (out.size() >= limit) return out;
        out.push_back(ReflexiveGraph{prefix + std::to_string(out.size()), C1, C0, ds[i], ds[k],
                                     es[j]});
      }
    }
  }
  return out;
}

GraphCensus enumerate_graphs(const std::vector<AlgebraPtr>& algebras, std::size_t cap) {
  GraphCensus census;
  for (const auto& c1 : algebras) {
    for (const auto& c0 : algebras) {
      if (c0->order() > c1->order()) continue;
      ++census.pairs_examined;
      std::size_t room = cap - census.graphs.size();
      auto found = graphs_between(c1, c0, room + 1);
      if (found.size() > room) {
        found.erase(found.begin() + static_cast<std::ptrdiff_t>(room), found.end());
        census.cap_hit = true;
      }
      for (auto& g : found) census.graphs.push_back(std::move(g));
      if (census.cap_hit) return census;
    }
  }
  return census;
}

}  // namespace shq::catalog
