#include <gtest/gtest.h>

#include <random>
#include <set>

#include "qrec/axioms.hpp"
#include "qrec/errors.hpp"
#include "qrec/hom.hpp"
#include "qrec/universe.hpp"
#include "support.hpp"

using namespace qrec;
using namespace qrec::test;

namespace {

struct A2Modules {
  QuiverPtr q = a2();
  Rep s4 = Rep::simple(q, 2, 0);
  Rep s1 = Rep::simple(q, 2, 1);
  Rep proj = rep_of(q, {1, 1}, {FpMat::identity(2, 1)});
};

QuiverPtr kronecker() { return make_quiver({"x", "y"}, {{"a", "x", "y"}, {"b", "x", "y"}}); }

QuiverPtr d4() { return make_quiver({"c", "l1", "l2", "l3"}, {{"a", "l1", "c"}, {"b", "l2", "c"}, {"d", "c", "l3"}}); }

std::vector<QuiverPtr> oracle_quivers() {
  return {a2(), linear_quiver({"1", "2", "3"}), kronecker(), d4(),
          make_quiver({"s", "t", "u"}, {{"a", "t", "s"}, {"b", "t", "u"}})};
}

// Pairs of small random representations whose morphism families can be listed.
template <class Fn>
void for_small_pairs(std::uint64_t seed, std::size_t max_entries, Fn fn) {
  std::mt19937_64 rng(seed);
  for (const auto& q : oracle_quivers()) {
    int done = 0;
    while (done < 25) {
      const Rep m = random_rep(q, 2, rng, 2);
      const Rep n = random_rep(q, 2, rng, 2);
      if (family_entries(m, n) > max_entries) continue;
      fn(m, n);
      ++done;
    }
  }
}

}  // namespace

TEST(Rep, ShapesAreValidated) {
  const auto q = a2();
  EXPECT_THROW(rep_of(q, {1, 1}, {FpMat::identity(2, 2)}), ContractViolation);
  EXPECT_THROW(rep_of(q, {1}, {}), ContractViolation);
  A2Modules a;
  EXPECT_NO_THROW(RepMor(a.s1, a.s4, {FpMat(2, 1, 0), FpMat(2, 0, 1)}));
  EXPECT_THROW(RepMor(a.s1, a.s4, {FpMat(2, 1, 1), FpMat(2, 0, 1)}), ContractViolation);
  // f_4 = 1 with f_1 = 0 breaks the square on 4 -> 1.
  EXPECT_THROW(RepMor(a.proj, a.proj, {FpMat::identity(2, 1), FpMat::zero(2, 1, 1)}), ContractViolation);
}

TEST(Hom, A2Examples) {
  A2Modules a;
  EXPECT_EQ(hom_basis(a.s1, a.proj).size(), 1u);
  EXPECT_EQ(hom_basis(a.s4, a.proj).size(), 0u);
  EXPECT_EQ(hom_basis(a.proj, a.proj).size(), 1u);
  EXPECT_EQ(hom_dim(a.proj, a.s4), 1u);
}

TEST(KernelCokernelImage, Identity) {
  A2Modules a;
  const auto id = RepMor::identity(a.proj);
  EXPECT_TRUE(kernel(id).object.is_zero());
  EXPECT_TRUE(cokernel(id).object.is_zero());
  EXPECT_TRUE(is_isomorphic(image(id).object, a.proj));
}

TEST(KernelCokernelImage, SocleInclusion) {
  A2Modules a;
  const auto f = hom_basis(a.s1, a.proj).at(0);
  EXPECT_TRUE(f.is_mono());
  EXPECT_TRUE(is_isomorphic(cokernel(f).object, a.s4));
  EXPECT_TRUE(kernel(f).object.is_zero());
}

TEST(KernelCokernelImage, ZeroMap) {
  A2Modules a;
  const auto z = RepMor::zero(a.proj, a.s4);
  EXPECT_TRUE(is_isomorphic(kernel(z).object, a.proj));
  EXPECT_TRUE(image(z).object.is_zero());
  EXPECT_TRUE(is_isomorphic(cokernel(z).object, a.s4));
}

TEST(DirectSum, Examples) {
  A2Modules a;
  EXPECT_TRUE(direct_sum(a.q, 2, {}).is_zero());
  const Rep s = direct_sum(a.q, 2, {a.s4, a.s1});
  EXPECT_EQ(s.dims(), (DimVector{1, 1}));
  EXPECT_TRUE(s.mat(0).is_zero());
  EXPECT_EQ(direct_sum(a.q, 2, {a.proj}), a.proj);
}

TEST(DirectSum, InjectionsAndProjections) {
  A2Modules a;
  const auto d = direct_sum_with_maps(a.q, 2, {a.proj, a.s4});
  for (std::size_t k = 0; k < 2; ++k) {
    EXPECT_TRUE(compose(d.projections[k], d.injections[k]).is_iso());
    EXPECT_TRUE(compose(d.projections[1 - k], d.injections[k]).is_zero());
  }
}

TEST(IsIsomorphic, Examples) {
  A2Modules a;
  EXPECT_TRUE(is_isomorphic(a.proj, a.proj));
  EXPECT_FALSE(is_isomorphic(a.s4, a.s1));
  EXPECT_FALSE(is_isomorphic(a.proj, direct_sum(a.q, 2, {a.s4, a.s1})));
}

TEST(Decompose, Examples) {
  A2Modules a;
  const auto d1 = decompose(a.proj);
  ASSERT_EQ(d1.size(), 1u);
  EXPECT_TRUE(is_isomorphic(d1[0], a.proj));
  const auto d2 = decompose(direct_sum(a.q, 2, {a.s4, a.s1}));
  ASSERT_EQ(d2.size(), 2u);
  EXPECT_TRUE(decompose(Rep::zero(a.q, 2)).empty());
}

TEST(IsBrick, Examples) {
  A2Modules a;
  EXPECT_TRUE(is_brick(a.s4));
  EXPECT_TRUE(is_brick(a.proj));
  EXPECT_FALSE(is_brick(direct_sum(a.q, 2, {a.s4, a.s4})));
  EXPECT_FALSE(is_brick(Rep::zero(a.q, 2)));
}

TEST(Ext, MiddleTermExamples) {
  A2Modules a;
  const auto mt = ext_middle_terms(a.s4, a.s1);
  ASSERT_EQ(mt.size(), 2u);
  EXPECT_TRUE(is_isomorphic(mt[0], direct_sum(a.q, 2, {a.s4, a.s1})));
  EXPECT_TRUE(is_isomorphic(mt[1], a.proj));
  const auto back = ext_middle_terms(a.s1, a.s4);
  ASSERT_EQ(back.size(), 1u);
  EXPECT_TRUE(is_isomorphic(back[0], direct_sum(a.q, 2, {a.s1, a.s4})));
  const auto trivial = ext_middle_terms(Rep::zero(a.q, 2), a.proj);
  ASSERT_EQ(trivial.size(), 1u);
  EXPECT_TRUE(is_isomorphic(trivial[0], a.proj));
}

TEST(Euler, Examples) {
  const auto q = a2();
  EXPECT_EQ(euler_pairing(*q, {1, 1}, {1, 0}), 1);
  EXPECT_EQ(euler_pairing(*q, {1, 1}, {0, 0}), 0);
  EXPECT_EQ(euler_pairing(*q, {1, 0}, {0, 1}), -1);
}

// Oracle: dim Hom from the number of commuting families over F_2.
TEST(HomOracle, CountsCommutingFamilies) {
  for_small_pairs(11, 12, [](const Rep& m, const Rep& n) {
    std::uint64_t count = 0;
    for_each_family(m, n, [&](const std::vector<FpMat>& f) { count += commutes(m, n, f) ? 1 : 0; });
    EXPECT_EQ(count, ipow(2, hom_dim(m, n))) << format_dims(m.dims()) << " -> " << format_dims(n.dims());
  });
}

// Oracle: Ext^1 from the image of the connecting map, listed element by element.
TEST(ExtOracle, CokernelOfConnectingMap) {
  for_small_pairs(12, 12, [](const Rep& p, const Rep& m) {
    const Quiver& q = *p.quiver();
    std::size_t arrow_space = 0;
    for (const auto& a : q.arrows()) arrow_space += p.dim(a.source) * m.dim(a.target);
    std::set<std::vector<FpMat::Entry>> image;
    for_each_family(p, m, [&](const std::vector<FpMat>& f) {
      std::vector<FpMat::Entry> flat;
      for (std::size_t k = 0; k < q.arrow_count(); ++k) {
        const auto& a = q.arrow(k);
        const FpMat d = f[a.target] * p.mat(k) - m.mat(k) * f[a.source];
        flat.insert(flat.end(), d.entries().begin(), d.entries().end());
      }
      image.insert(flat);
    });
    std::size_t image_dim = 0;
    for (std::size_t s = image.size(); s > 1; s /= 2) ++image_dim;
    EXPECT_EQ(ext_dim(p, m), arrow_space - image_dim);
  });
}

// Oracle: isomorphism and brick tests against exhaustive morphism lists.
TEST(IsoOracle, ExhaustiveSearch) {
  for_small_pairs(13, 10, [](const Rep& m, const Rep& n) {
    bool iso = false;
    if (m.dims() == n.dims())
      for_each_family(m, n, [&](const std::vector<FpMat>& f) {
        if (iso || !commutes(m, n, f)) return;
        bool inv = true;
        for (const auto& c : f) inv = inv && is_invertible(c);
        iso = inv;
      });
    EXPECT_EQ(is_isomorphic(m, n), iso);
  });
}

TEST(BrickOracle, ExhaustiveEndomorphisms) {
  std::mt19937_64 rng(14);
  for (const auto& q : oracle_quivers()) {
    int done = 0;
    while (done < 25) {
      const Rep m = random_rep(q, 2, rng, 2);
      if (m.is_zero() || family_entries(m, m) > 12) continue;
      bool brick = true;
      for_each_family(m, m, [&](const std::vector<FpMat>& f) {
        if (!commutes(m, m, f)) return;
        bool zero = true, inv = true;
        for (const auto& c : f) {
          zero = zero && c.is_zero();
          inv = inv && is_invertible(c);
        }
        brick = brick && (zero || inv);
      });
      EXPECT_EQ(is_brick(m), brick);
      ++done;
    }
  }
}

// Krull-Schmidt: summands are indecomposable (local End) and add back up.
TEST(DecomposeProperty, SummandsReassemble) {
  std::mt19937_64 rng(15);
  for (const auto& q : oracle_quivers()) {
    for (int t = 0; t < 20; ++t) {
      const Rep m = random_rep(q, 2, rng, 3);
      const auto parts = decompose(m);
      EXPECT_TRUE(is_isomorphic(direct_sum(q, 2, parts), m));
      for (const auto& s : parts) {
        EXPECT_FALSE(s.is_zero());
        EXPECT_EQ(decompose(s).size(), 1u);
      }
    }
  }
}

TEST(MorphismProperty, KernelImageCokernelBookkeeping) {
  std::mt19937_64 rng(16);
  for (const auto& q : oracle_quivers()) {
    for (int t = 0; t < 30; ++t) {
      const Rep m = random_rep(q, 3, rng, 3);
      const Rep n = random_rep(q, 3, rng, 3);
      const RepMor f = random_morphism(m, n, rng);
      const auto k = kernel(f);
      const auto c = cokernel(f);
      const auto im = image(f);
      EXPECT_TRUE(compose(f, k.inclusion).is_zero());
      EXPECT_TRUE(compose(c.projection, f).is_zero());
      EXPECT_TRUE(k.inclusion.is_mono());
      EXPECT_TRUE(c.projection.is_epi());
      EXPECT_EQ(compose(im.mono, im.epi), f);
      for (std::size_t v = 0; v < q->vertex_count(); ++v) {
        EXPECT_EQ(k.object.dim(v) + im.object.dim(v), m.dim(v));
        EXPECT_EQ(im.object.dim(v) + c.object.dim(v), n.dim(v));
      }
      EXPECT_EQ(factor_through_mono(im.mono, f), im.epi);
      EXPECT_EQ(factor_through_epi(im.epi, f), im.mono);
    }
  }
}

TEST(Limits, ThresholdMakesIsoInconclusive) {
  Limits tiny;
  tiny.enumeration_threshold = 1;
  tiny.random_trials = 0;
  A2Modules a;
  const Rep twice = direct_sum(a.q, 2, {a.proj, a.proj});
  const Rep swapped = rep_of(a.q, {2, 2}, {FpMat::from_rows(2, {{0, 1}, {1, 0}})});
  EXPECT_THROW(is_isomorphic(twice, swapped, tiny), Inconclusive);
  EXPECT_TRUE(is_isomorphic(twice, swapped));
}

TEST(Universe, Examples) {
  const auto u2 = all_indecomposables(a2(), 2, 30);
  ASSERT_EQ(u2->size(), 3u);
  EXPECT_EQ(u2->name(0), "4");
  EXPECT_EQ(u2->name(1), "1");
  EXPECT_EQ(u2->name(2), "4/1");
  EXPECT_TRUE(u2->complete());
  EXPECT_EQ(all_indecomposables(a4(), 2, 30)->size(), 10u);
  EXPECT_EQ(all_indecomposables(make_quiver({"s"}, {}), 2, 30)->size(), 1u);
}

TEST(Universe, DynkinCountsAndFieldIndependence) {
  // Positive roots: A_n has n(n+1)/2, D_4 has 12.
  for (Prime p : {2u, 3u}) {
    EXPECT_EQ(all_indecomposables(linear_quiver({"1", "2", "3", "4", "5"}), p, 30)->size(), 15u);
    EXPECT_EQ(all_indecomposables(d4(), p, 30)->size(), 12u);
  }
}

TEST(Universe, BoundLeavesItIncomplete) {
  const auto u = all_indecomposables(a4(), 2, 2);
  EXPECT_FALSE(u->complete());
  EXPECT_EQ(u->size(), 7u);
}

TEST(Universe, LocateSummands) {
  const auto u = all_indecomposables(a4(), 2, 30);
  const Rep m = direct_sum(a4(), 2, {u->object(4), u->object(0), u->object(4)});
  EXPECT_EQ(u->locate_summands(m), (std::vector<std::size_t>{0, 4, 4}));
  EXPECT_EQ(u->find_by_name("4/1/2/3"), u->find_by_dims({1, 1, 1, 1}));
}

TEST(Universe, EulerIdentityOnCachedTables) {
  for (const auto& q : {a4(), d4(), linear_quiver({"1", "2", "3"})}) {
    const auto u = all_indecomposables(q, 2, 30);
    for (std::size_t i = 0; i < u->size(); ++i)
      for (std::size_t j = 0; j < u->size(); ++j)
        EXPECT_EQ(static_cast<long long>(u->hom(i, j)) - static_cast<long long>(u->ext(i, j)),
                  euler_pairing(*q, u->object(i).dims(), u->object(j).dims()));
  }
}
