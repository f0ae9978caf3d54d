#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "oracle.hpp"

using namespace shq;

namespace {

std::vector<AlgebraPtr> small_algebras() {
  std::vector<AlgebraPtr> out = catalog::groups(6);
  for (auto& d : catalog::digroups(4)) out.push_back(d);
  return out;
}

double hom_space(const AlgebraPtr& a, const AlgebraPtr& b) {
  return std::pow(static_cast<double>(b->order()), a->order());
}

}  // namespace

TEST(Signature, GroupAndDigroupShape) {
  auto g = Signature::group();
  EXPECT_EQ(g->ops().size(), 3u);
  EXPECT_EQ(g->ops()[g->zero_op()].arity, 0);
  EXPECT_EQ(g->unital_ops().size(), 1u);
  auto d = Signature::digroup();
  EXPECT_EQ(d->unital_ops().size(), 2u);
  EXPECT_FALSE(g->compatible(*d));
}

TEST(Signature, RejectsBadDeclarations) {
  EXPECT_THROW(Signature::make("s", {{"0", 0}, {"*", 2}}, {"*(x,0) = x", "*(0,x) = x"}, "e"),
               SignatureError);
  EXPECT_THROW(Signature::make("s", {{"0", 1}, {"*", 2}}, {"*(x,0) = x", "*(0,x) = x"}, "0"),
               SignatureError);
  EXPECT_THROW(Signature::make("s", {{"0", 0}, {"*", 2}}, {"*(x,0) = x"}, "0"), SignatureError);
  EXPECT_THROW(Signature::make("s", {{"0", 0}, {"*", 2}}, {"*(x,0) = x", "*(0,x) = q(x)"}, "0"),
               SignatureError);
  EXPECT_THROW(Signature::make("s", {{"0", 0}, {"*", 2}}, {"*(x,0) = x", "*(0,x)"}, "0"),
               SignatureError);
}

TEST(Signature, TermRoundTrip) {
  auto g = Signature::group();
  std::vector<std::string> vars;
  Term t = g->parse_term("*(inv(x),*(y,0))", vars);
  EXPECT_EQ(vars.size(), 2u);
  std::vector<std::string> again;
  Term u = g->parse_term(g->format_term(t, vars), again);
  EXPECT_EQ(g->format_term(u, again), g->format_term(t, vars));
}

TEST(Algebra, CatalogGroupsValidate) {
  for (const auto& a : small_algebras()) {
    EXPECT_TRUE(validate_algebra(*a).ok()) << a->name();
  }
  for (const auto& a : catalog::group_classes(8)) EXPECT_TRUE(validate_algebra(*a).ok()) << a->name();
}

TEST(Algebra, ValidationNamesTheBrokenEquation) {
  // Z3 with the inverse table of the identity map.
  auto z3 = catalog::cyclic(3);
  auto tables = z3->tables();
  tables[*z3->signature().op_index("inv")] = {0, 1, 2};
  ValidationReport v = validate_algebra(z3->signature_ptr(), 3, tables);
  ASSERT_FALSE(v.ok());
  EXPECT_FALSE(v.violations.empty());
  EXPECT_NE(v.violations.front().equation.find("inv"), std::string::npos);
}

TEST(Algebra, StructuralErrors) {
  auto sig = Signature::group();
  EXPECT_THROW(FiniteAlgebra(sig, 2, {{0}, {0, 1, 1}, {0, 1}}), StructuralError);
  EXPECT_THROW(FiniteAlgebra(sig, 2, {{1}, {0, 1, 1, 0}, {0, 1}}), StructuralError);
  EXPECT_THROW(FiniteAlgebra(sig, 2, {{0}, {0, 1, 1, 5}, {0, 1}}), StructuralError);
  EXPECT_FALSE(validate_algebra(sig, 2, {{0}, {0, 1, 1}, {0, 1}}).ok());
}

TEST(Algebra, NonAssociativeLoopFailsGroupLaws) {
  // A unital magma of order 3 that is not associative.
  std::vector<int> mul = {0, 1, 2, 1, 1, 0, 2, 0, 1};
  ValidationReport v = validate_algebra(Signature::group(), 3, {{0}, mul, {0, 2, 1}});
  EXPECT_FALSE(v.ok());
}

TEST(Homomorphism, CheckedReportsViolation) {
  auto z2 = catalog::cyclic(2);
  auto z4 = catalog::cyclic(4);
  EXPECT_NO_THROW(Homomorphism::checked(z2, z4, {0, 2}));
  EXPECT_THROW(Homomorphism::checked(z2, z4, {0, 1}), NotAHomomorphism);
  EXPECT_THROW(Homomorphism::checked(z2, z4, {0}), StructuralError);
  EXPECT_THROW(Homomorphism::checked(z2, z4, {0, 4}), StructuralError);
  auto v = find_hom_violation(*z2, *z4, std::vector<int>{0, 1});
  ASSERT_TRUE(v.has_value());
  EXPECT_NE(v->lhs, v->rhs);
}

TEST(Homomorphism, ComposeAndInverse) {
  auto z4 = catalog::cyclic(4);
  Homomorphism neg = Homomorphism::checked(z4, z4, {0, 3, 2, 1});
  EXPECT_EQ(compose(neg, neg), identity(z4));
  EXPECT_EQ(inverse(neg), neg);
  Homomorphism dbl = Homomorphism::checked(z4, z4, {0, 2, 0, 2});
  EXPECT_THROW(inverse(dbl), PreconditionError);
  EXPECT_EQ(image_set(dbl), (std::vector<int>{0, 2}));
  EXPECT_THROW(compose(dbl, zero_map(z4, catalog::cyclic(2))), PreconditionError);
}

// Oracle: brute force over all |B|^|A| maps.
TEST(Enumerate, MatchesBruteForce) {
  auto algs = small_algebras();
  int compared = 0;
  for (const auto& a : algs) {
    for (const auto& b : algs) {
      if (!a->signature().compatible(b->signature()) || hom_space(a, b) > 50000) continue;
      auto fast = enumerate_homs(a, b);
      auto slow = oracle::all_homs(a, b);
      ASSERT_EQ(fast.size(), slow.size()) << a->name() << " -> " << b->name();
      for (std::size_t i = 0; i < fast.size(); ++i) EXPECT_EQ(fast[i].map(), slow[i]);
      ++compared;
    }
  }
  EXPECT_GT(compared, 50);
}

TEST(Enumerate, ConstraintsAndLimit) {
  auto z6 = catalog::cyclic(6);
  auto z3 = catalog::cyclic(3);
  auto all = enumerate_homs(z6, z3);
  EXPECT_EQ(all.size(), 3u);
  std::vector<int> c(6, kFree);
  c[1] = 2;
  auto some = enumerate_homs(z6, z3, c);
  ASSERT_EQ(some.size(), 1u);
  EXPECT_EQ(some[0].map(), (std::vector<int>{0, 2, 1, 0, 2, 1}));
  EXPECT_EQ(enumerate_homs(z6, z3, {}, 2).size(), 2u);
}

TEST(Enumerate, KnownCounts) {
  // |Hom(Z_m, Z_n)| = gcd(m, n); |Hom(S3, S3)| = 10; |Hom(Q8, V4)| = |Hom(V4, V4)| = 16.
  for (int m = 1; m <= 8; ++m) {
    for (int n = 1; n <= 8; ++n) {
      EXPECT_EQ(enumerate_homs(catalog::cyclic(m), catalog::cyclic(n)).size(),
                static_cast<std::size_t>(std::gcd(m, n)));
    }
  }
  EXPECT_EQ(enumerate_homs(catalog::symmetric3(), catalog::symmetric3()).size(), 10u);
  EXPECT_EQ(enumerate_homs(catalog::quaternion8(), catalog::klein()).size(), 16u);
}

TEST(Structure, ClosureIsSmallestSubalgebra) {
  auto s3 = catalog::symmetric3();
  for (int x = 0; x < 6; ++x) {
    std::vector<int> seed{x};
    auto cl = generated_closure(*s3, seed);
    EXPECT_TRUE(std::binary_search(cl.begin(), cl.end(), 0));
    EXPECT_TRUE(std::binary_search(cl.begin(), cl.end(), x));
    Subalgebra sub = subalgebra(s3, cl);
    EXPECT_TRUE(validate_algebra(*sub.object).ok());
    EXPECT_TRUE(sub.inclusion.is_injective());
  }
  auto gens = greedy_generators(*s3);
  EXPECT_EQ(generated_closure(*s3, gens).size(), 6u);
}

TEST(Structure, ProductIndexing) {
  auto z2 = catalog::cyclic(2);
  auto z3 = catalog::cyclic(3);
  Product p = product(z2, z3);
  EXPECT_EQ(p.object->order(), 6);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 3; ++b) {
      EXPECT_EQ(p.index(a, b), a * 3 + b);
      EXPECT_EQ(p.proj_left()(a * 3 + b), a);
      EXPECT_EQ(p.proj_right()(a * 3 + b), b);
    }
  }
  EXPECT_EQ(compose(p.proj_left(), p.inj_left()), identity(z2));
  EXPECT_TRUE(compose(p.proj_right(), p.inj_left()).is_zero());
  // Z2 x Z3 is cyclic of order 6.
  EXPECT_EQ(enumerate_homs(p.object, catalog::cyclic(6)).size(), 6u);
  Homomorphism id = p.pair(p.proj_left(), p.proj_right());
  EXPECT_EQ(id, identity(p.object));
}

// Oracle: congruences from all set partitions.
TEST(Congruence, GeneratedIsLeastContaining) {
  for (const auto& a : small_algebras()) {
    if (a->order() > 6) continue;
    auto congs = oracle::all_congruences(a);
    for (int x = 0; x < a->order(); ++x) {
      for (int y = x + 1; y < a->order(); ++y) {
        std::vector<std::pair<int, int>> seed{{x, y}};
        Congruence c = congruence_generated(a, seed);
        ASSERT_TRUE(c.related(x, y));
        EXPECT_TRUE(oracle::compatible(*a, c.block)) << a->name();
        for (const auto& other : congs) {
          if (other[x] != other[y]) continue;
          for (int u = 0; u < a->order(); ++u) {
            for (int v = 0; v < a->order(); ++v) {
              if (c.related(u, v)) EXPECT_EQ(other[u], other[v]);
            }
          }
        }
      }
    }
  }
}

TEST(Congruence, GroupCongruencesAreNormalSubgroups) {
  for (const auto& g : catalog::group_classes(8)) {
    const int n = g->order();
    std::size_t normal_subgroups = 0;
    for (unsigned mask = 1; mask < (1u << n); mask += 2) {
      std::vector<int> subset;
      for (int x = 0; x < n; ++x) {
        if (mask >> x & 1) subset.push_back(x);
      }
      if (generated_closure(*g, subset) == subset && oracle::normal_in_group(g, subset)) ++normal_subgroups;
    }
    auto congs = oracle::all_congruences(g);
    EXPECT_EQ(congs.size(), normal_subgroups) << g->name();
    for (const auto& c : congs) {
      std::vector<int> zero_class;
      for (int x = 0; x < n; ++x) {
        if (c[x] == c[0]) zero_class.push_back(x);
      }
      EXPECT_TRUE(oracle::normal_in_group(g, zero_class));
    }
  }
}

TEST(Congruence, IncompatiblePartitionHasWitness) {
  auto s3 = catalog::symmetric3();
  // {0, 1} is a non-normal subgroup; its coset partition is not a congruence.
  std::vector<int> labels = {0, 0, 1, 2, 1, 2};
  try {
    make_congruence(s3, labels);
    FAIL() << "expected IncompatiblePartition";
  } catch (const IncompatiblePartition& e) {
    EXPECT_NE(e.first, e.second);
  }
}

TEST(Congruence, QuotientIsHomomorphic) {
  auto z6 = catalog::cyclic(6);
  Congruence c = make_congruence(z6, std::vector<int>{0, 1, 2, 0, 1, 2});
  EXPECT_EQ(c.num_blocks(), 3);
  Quotient q = quotient(z6, c);
  EXPECT_EQ(q.object->order(), 3);
  EXPECT_TRUE(validate_algebra(*q.object).ok());
  EXPECT_FALSE(find_hom_violation(*z6, *q.object, q.map.map()));
  EXPECT_EQ(kernel_congruence(q.map).block, c.block);
  EXPECT_EQ(normalize_partition(std::vector<int>{5, 5, 2, 7}), (std::vector<int>{0, 0, 1, 2}));
}

// Property: every hom factors through the quotient by its kernel.
TEST(Congruence, KernelQuotientFactorisation) {
  auto algs = catalog::groups(6);
  for (const auto& a : algs) {
    for (const auto& b : algs) {
      for (const auto& f : enumerate_homs(a, b)) {
        Quotient q = quotient(a, kernel_congruence(f));
        EXPECT_EQ(q.object->order(), static_cast<int>(image_set(f).size()));
      }
    }
  }
}
