#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "oracle.hpp"

using namespace shq;

namespace {

std::vector<std::pair<Homomorphism, Homomorphism>> cospans(int max_order) {
  auto algs = catalog::groups(max_order);
  std::vector<std::pair<Homomorphism, Homomorphism>> out;
  for (const auto& c : algs) {
    for (const auto& a : algs) {
      for (const auto& b : algs) {
        if (a->order() * b->order() > 36) continue;
        auto fs = enumerate_homs(a, c);
        auto gs = enumerate_homs(b, c);
        if (!fs.empty() && !gs.empty()) out.emplace_back(fs.back(), gs.back());
      }
    }
  }
  return out;
}

}  // namespace

TEST(Kernel, PreimageOfZero) {
  for (const auto& a : catalog::groups(8)) {
    for (const auto& b : catalog::groups(4)) {
      for (const auto& f : enumerate_homs(a, b)) {
        KernelData k = kernel(f);
        std::vector<int> expect;
        for (int x = 0; x < a->order(); ++x) {
          if (f(x) == 0) expect.push_back(x);
        }
        EXPECT_EQ(image_set(k.inclusion), expect);
        EXPECT_TRUE(compose(f, k.inclusion).is_zero());
        EXPECT_TRUE(is_normal_mono(k.inclusion));
      }
    }
  }
}

TEST(Kernel, KernelPairIsRelationOfF) {
  auto z4 = catalog::cyclic(4);
  auto z2 = catalog::cyclic(2);
  Homomorphism f = Homomorphism::checked(z4, z2, {0, 1, 0, 1});
  EquivalenceRelation r = kernel_pair(f);
  EXPECT_EQ(r.object()->order(), 8);
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) EXPECT_EQ(r.index(a, b) >= 0, f(a) == f(b));
  }
  EXPECT_EQ(compose(r.r0, r.delta), identity(z4));
  EXPECT_EQ(compose(r.r1, r.delta), identity(z4));
  Homomorphism n = normalisation(r);
  EXPECT_EQ(image_set(n), (std::vector<int>{0, 2}));
}

// Oracle: the pullback carrier is exactly {(x, y) : f x = g y}.
TEST(Pullback, CarrierMatchesBruteForce) {
  for (const auto& [f, g] : cospans(8)) {
    Pullback p = pullback(f, g);
    std::vector<std::pair<int, int>> expect;
    for (int x = 0; x < f.dom()->order(); ++x) {
      for (int y = 0; y < g.dom()->order(); ++y) {
        if (f(x) == g(y)) expect.emplace_back(x, y);
      }
    }
    EXPECT_EQ(p.pairs.elements, expect);
    EXPECT_TRUE(validate_algebra(*p.object()).ok());
    EXPECT_EQ(compose(f, p.proj_f()), compose(g, p.proj_g()));
  }
  EXPECT_THROW(pullback(identity(catalog::cyclic(2)), identity(catalog::cyclic(3))),
               PreconditionError);
}

TEST(Image, FactorisationIsEpiMono) {
  for (const auto& a : catalog::groups(6)) {
    for (const auto& b : catalog::groups(6)) {
      for (const auto& f : enumerate_homs(a, b)) {
        Factorization fm = image_factorize(f);
        EXPECT_TRUE(fm.epi.is_surjective());
        EXPECT_TRUE(fm.mono.is_injective());
        EXPECT_EQ(compose(fm.mono, fm.epi), f);
      }
    }
  }
}

// Oracle: normality by conjugation in groups.
TEST(Normal, MatchesConjugationTest) {
  std::size_t non_normal = 0;
  for (const auto& g : catalog::group_classes(8)) {
    const int n = g->order();
    for (unsigned mask = 1; mask < (1u << n); mask += 2) {
      std::vector<int> s;
      for (int x = 0; x < n; ++x) {
        if (mask >> x & 1) s.push_back(x);
      }
      if (generated_closure(*g, s) != s) continue;
      Subalgebra sub = subalgebra(g, s);
      const bool normal = oracle::normal_in_group(g, s);
      EXPECT_EQ(is_normal_mono(sub.inclusion), normal) << g->name();
      non_normal += !normal;
    }
  }
  EXPECT_GT(non_normal, 0u);
  auto z2 = catalog::cyclic(2);
  EXPECT_THROW(is_normal_mono(zero_map(z2, z2)), PreconditionError);
}

TEST(Cokernel, QuotientByNormalClosure) {
  auto s3 = catalog::symmetric3();
  // A transposition generates a non-normal subgroup whose normal closure is S3.
  Subalgebra t = subalgebra(s3, generated_closure(*s3, std::vector<int>{1}));
  Cokernel ck = cokernel(t.inclusion);
  EXPECT_EQ(ck.object->order(), 1);
  EXPECT_FALSE(is_normal_mono(t.inclusion));
  Subalgebra a3 = subalgebra(s3, generated_closure(*s3, std::vector<int>{3}));
  EXPECT_EQ(cokernel(a3.inclusion).object->order(), 2);
  EXPECT_TRUE(compose(cokernel(a3.inclusion).map, a3.inclusion).is_zero());
}

// Oracle: a square is a pullback iff the comparison to the brute-force
// pullback is a bijection.
TEST(PullbackSquare, ComparisonBijectivity) {
  auto algs = catalog::groups(4);
  std::size_t pullbacks = 0, others = 0;
  for (const auto& tl : algs) {
    for (const auto& tr : algs) {
      for (const auto& bl : algs) {
        auto br = catalog::cyclic(2);
        for (const auto& top : enumerate_homs(tl, tr)) {
          for (const auto& left : enumerate_homs(tl, bl)) {
            for (const auto& right : enumerate_homs(tr, br)) {
              for (const auto& bottom : enumerate_homs(bl, br)) {
                if (!(compose(right, top) == compose(bottom, left))) continue;
                auto cert = is_pullback_square({top, left, right, bottom, std::nullopt});
                std::size_t canonical = 0;
                for (int x = 0; x < bl->order(); ++x) {
                  for (int y = 0; y < tr->order(); ++y) canonical += bottom(x) == right(y);
                }
                std::set<std::pair<int, int>> images;
                for (int z = 0; z < tl->order(); ++z) images.emplace(left(z), top(z));
                const bool expect = images.size() == canonical &&
                                    static_cast<int>(images.size()) == tl->order();
                EXPECT_EQ(cert.is_pullback, expect);
                (expect ? pullbacks : others)++;
              }
            }
          }
        }
      }
    }
  }
  EXPECT_GT(pullbacks, 10u);
  EXPECT_GT(others, 10u);
}

TEST(PullbackSquare, SplitCriterionAgrees) {
  auto z2 = catalog::cyclic(2);
  Product p = product(z2, z2);
  // Projection squares of V4 = Z2 x Z2 over Z2 with the left injection as section.
  auto cert = is_pullback_square({p.proj_left(), p.proj_right(), zero_map(z2, catalog::cyclic(1)),
                                  zero_map(z2, catalog::cyclic(1)), p.inj_left()});
  EXPECT_TRUE(cert.is_pullback);
  EXPECT_EQ(cert.criterion, KernelCriterion::split_epi);
  ASSERT_TRUE(cert.kernel_map_iso.has_value());
  EXPECT_TRUE(*cert.kernel_map_iso);
  EXPECT_TRUE(cert.criteria_agree);
  EXPECT_THROW(is_pullback_square({identity(z2), identity(z2), identity(z2), zero_map(z2, z2), std::nullopt}),
               PreconditionError);
}

TEST(PullbackSquare, MediateIsUnique) {
  auto z2 = catalog::cyclic(2);
  auto z4 = catalog::cyclic(4);
  Homomorphism f = Homomorphism::checked(z4, z2, {0, 1, 0, 1});
  Pullback pb = pullback(f, f);
  auto cert = is_pullback_square({pb.proj_g(), pb.proj_f(), f, f, std::nullopt});
  ASSERT_TRUE(cert.is_pullback);
  Homomorphism w = cert.mediate(identity(z4), identity(z4));
  EXPECT_EQ(compose(pb.proj_f(), w), identity(z4));
  EXPECT_EQ(compose(pb.proj_g(), w), identity(z4));
}

// Oracle: forced extension against the brute-force witness list.
TEST(ForcedExtension, AgreesWithBruteForce) {
  std::size_t homs = 0, conflicts = 0;
  auto algs = catalog::groups(6);
  for (const auto& x : algs) {
    for (const auto& y : algs) {
      if (x->order() * y->order() > 8) continue;
      Product p = product(x, y);
      for (const auto& t : algs) {
        if (std::pow(static_cast<double>(t->order()), p.object->order()) > 300000) continue;
        for (const auto& u : enumerate_homs(x, t)) {
          for (const auto& v : enumerate_homs(y, t)) {
            std::vector<ConeLeg> cone{{p.inj_left(), u}, {p.inj_right(), v}};
            Extension ext = forced_extension(cone);
            WitnessProblem prob{"test", cone};
            auto brute = oracle::witnesses(prob);
            if (auto* h = std::get_if<Homomorphism>(&ext)) {
              ASSERT_EQ(brute.size(), 1u);
              EXPECT_EQ(h->map(), brute.front());
              ++homs;
            } else {
              ASSERT_TRUE(std::holds_alternative<Conflict>(ext));
              EXPECT_TRUE(brute.empty());
              ++conflicts;
            }
          }
        }
      }
    }
  }
  EXPECT_GT(homs, 20u);
  EXPECT_GT(conflicts, 5u);
}

TEST(ForcedExtension, NotGeneratingReportsClosure) {
  auto z2 = catalog::cyclic(2);
  Product p = product(z2, z2);
  std::vector<ConeLeg> cone{{p.inj_left(), identity(z2)}};
  Extension ext = forced_extension(cone);
  ASSERT_TRUE(std::holds_alternative<NotGenerating>(ext));
  EXPECT_EQ(std::get<NotGenerating>(ext).closure, (std::vector<int>{0, 2}));
}

TEST(ForcedExtension, ConstraintConflict) {
  auto z2 = catalog::cyclic(2);
  Product p = product(z2, z2);
  Homomorphism diag = p.pair(identity(z2), identity(z2));
  std::vector<ConeLeg> cone{{diag, identity(z2)}, {diag, zero_map(z2, z2)}};
  auto c = cone_constraints(cone);
  ASSERT_TRUE(std::holds_alternative<Conflict>(c));
  EXPECT_EQ(std::get<Conflict>(c).element, 3);
}
