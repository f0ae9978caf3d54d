#pragma once

// Built-in algebras, named fixtures and the reflexive-graph census order.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "shq/internal.hpp"

namespace shq::catalog {

/// A group from its multiplication table (identity 0); the inverse table is
/// derived. Throws StructuralError if the table is not a group.
AlgebraPtr group_from_table(const std::string& name, int n, const std::vector<int>& mul);

AlgebraPtr cyclic(int n);
AlgebraPtr klein();          // Z2 x Z2, (a, b) at 2a + b
AlgebraPtr symmetric3();     // permutations of {0,1,2} in lexicographic order
AlgebraPtr dihedral4();      // symmetries of the square, lexicographic permutations
AlgebraPtr quaternion8();    // 1, -1, i, -i, j, -j, k, -k
AlgebraPtr z2_times_z4();    // (a, b) at 4a + b
AlgebraPtr z2_cubed();       // bit vectors

/// The shipped group catalog: Z1..Z12, V4, S3, D4, Q8, sorted by order
/// (ties keep the listed order).
std::vector<AlgebraPtr> groups(int max_order);

/// One group per isomorphism class, orders up to 8. Throws PreconditionError
/// above 8.
std::vector<AlgebraPtr> group_classes(int max_order);

/// Every group table on {0..n-1} with identity 0, sorted, as flat n*n
/// multiplication tables. n <= 8.
std::vector<std::vector<int>> labelled_group_tables(int n);

/// Digroups up to isomorphism: the first structure is a class
/// representative, the second is the least relabelling of a labelled group
/// table under the automorphisms of the first. n <= 8.
std::vector<AlgebraPtr> digroups(int max_order);

AlgebraPtr digroup_from_tables(const std::string& name, int n, const std::vector<int>& mul1,
                               const std::vector<int>& mul2);

/// Algebras of the given variety ("group" or "digroup") up to max_order.
std::vector<AlgebraPtr> variety_catalog(const std::string& variety, int max_order);

std::optional<AlgebraPtr> find_algebra(const std::string& name);

// ---------------------------------------------------------------------------
// Fixtures

ReflexiveGraph discrete_graph(const AlgebraPtr& a);
/// C1 = Z2 x Z2, C0 = Z2, d and c the two projections, e the diagonal.
ReflexiveGraph pair_graph_z2();
/// C1 = S3 over the trivial group.
ReflexiveGraph s3_over_point();

struct RelationPair {
  std::string name;
  EquivalenceRelation R;
  EquivalenceRelation S;
};

/// DISC, DISC(<algebra>), PG2, S3PT.
std::optional<ReflexiveGraph> named_graph(const std::string& name);
/// Spans of the named graphs.
std::optional<Span> named_span(const std::string& name);
/// FULL_<algebra>, DIAG_<algebra>, and KP_<graph> (kernel pairs of d and c).
std::optional<RelationPair> named_relpair(const std::string& name);

// ---------------------------------------------------------------------------
// Graph census

struct GraphCensus {
  std::vector<ReflexiveGraph> graphs;
  bool cap_hit = false;
  std::size_t pairs_examined = 0;
};

/// All (d, c, e) with d e = c e = 1 between C1 and C0, lexicographic in
/// (d, c, e).
std::vector<ReflexiveGraph> graphs_between(const AlgebraPtr& C1, const AlgebraPtr& C0,
                                           std::size_t limit = static_cast<std::size_t>(-1));

/// Pairs (C1, C0) with C1 outer and C0 inner, both in catalog order; stops
/// after `cap` graphs.
GraphCensus enumerate_graphs(const std::vector<AlgebraPtr>& algebras, std::size_t cap);

}  // namespace shq::catalog
