#include <gtest/gtest.h>

#include <random>

#include "qrec/axioms.hpp"
#include "qrec/errors.hpp"
#include "qrec/recollement.hpp"
#include "support.hpp"

using namespace qrec;
using namespace qrec::test;

namespace {

RecollementPtr a4_split() { return Recollement::build(a4(), 2, {"2", "3"}); }

Rep interval(const QuiverPtr& q, const DimVector& dims) {
  std::vector<FpMat> mats;
  for (const auto& a : q->arrows()) {
    FpMat m(2, dims[a.target], dims[a.source]);
    if (dims[a.target] == 1 && dims[a.source] == 1) m.set(0, 0, 1);
    mats.push_back(m);
  }
  return Rep(q, 2, dims, mats);
}

std::size_t brute_hom_dim(const Rep& m, const Rep& n) {
  std::uint64_t count = 0;
  for_each_family(m, n, [&](const std::vector<FpMat>& f) { count += commutes(m, n, f) ? 1 : 0; });
  std::size_t d = 0;
  while (count > 1) {
    count /= 2;
    ++d;
  }
  return d;
}

}  // namespace

TEST(Build, Examples) {
  const auto r = a4_split();
  EXPECT_EQ(r->i_quiver()->labels(), (std::vector<std::string>{"4", "1"}));
  EXPECT_EQ(r->j_quiver()->labels(), (std::vector<std::string>{"2", "3"}));
  EXPECT_EQ(r->orientation(), Orientation::into_quotient);
  EXPECT_EQ(r->crossing_arrows().size(), 1u);
  EXPECT_THROW(Recollement::build(a4(), 2, {"1", "3"}), ContractViolation);
  EXPECT_THROW(Recollement::build(a4(), 2, {}), ContractViolation);
  EXPECT_THROW(Recollement::build(a4(), 2, {"4", "1", "2", "3"}), ContractViolation);
  EXPECT_THROW(Recollement::build(a4(), 2, {"9"}), ContractViolation);
  const auto single = Recollement::build(make_quiver({"u", "v"}, {{"a", "u", "v"}}), 2, {"v"});
  EXPECT_EQ(single->i_vertices(), (std::vector<Vertex>{0}));
}

// Arrows into V'' make the left-hand functors exact; arrows out of V'' the
// right-hand ones; no crossing arrows make all four exact.
TEST(Build, ExactnessFollowsOrientation) {
  const auto e = a4_split()->exactness();
  EXPECT_TRUE(e.i_upper && e.j_shriek);
  EXPECT_FALSE(e.i_shriek || e.j_star);
  const auto m = Recollement::build(linear_quiver({"3", "2", "1", "4"}), 2, {"2", "3"});
  EXPECT_EQ(m->orientation(), Orientation::into_complement);
  EXPECT_TRUE(m->is_exact(Functor::i_shriek) && m->is_exact(Functor::j_star));
  EXPECT_FALSE(m->is_exact(Functor::i_upper) || m->is_exact(Functor::j_shriek));
  const auto none = Recollement::build(make_quiver({"x", "y"}, {}), 2, {"y"});
  EXPECT_EQ(none->orientation(), Orientation::none);
  const auto n = none->exactness();
  EXPECT_TRUE(n.i_upper && n.i_shriek && n.j_shriek && n.j_star);
}

TEST(Functors, A4Examples) {
  const auto r = a4_split();
  const Rep x41 = interval(r->i_quiver(), {1, 1});
  const Rep i41 = r->apply(Functor::i_lower, x41);
  EXPECT_EQ(i41.dims(), (DimVector{1, 1, 0, 0}));
  EXPECT_TRUE(is_isomorphic(i41, interval(a4(), {1, 1, 0, 0})));

  const Rep full = interval(a4(), {1, 1, 1, 1});
  const Rep y23 = interval(r->j_quiver(), {1, 1});
  EXPECT_TRUE(is_isomorphic(r->apply(Functor::j_upper, full), y23));

  // j_! is extension by zero on this orientation; j_* adds the paths back to 4 and 1.
  EXPECT_TRUE(is_isomorphic(r->apply(Functor::j_shriek, y23), interval(a4(), {0, 0, 1, 1})));
  EXPECT_TRUE(is_isomorphic(r->apply(Functor::j_star, y23), full));
  EXPECT_TRUE(is_isomorphic(r->apply(Functor::j_star, interval(r->j_quiver(), {1, 0})), interval(a4(), {1, 1, 1, 0})));
  // i^* restricts, i^! keeps what dies under M -> j_*j^*M.
  EXPECT_TRUE(is_isomorphic(r->apply(Functor::i_upper, full), x41));
  EXPECT_TRUE(r->apply(Functor::i_shriek, full).is_zero());
  EXPECT_TRUE(is_isomorphic(r->apply(Functor::i_shriek, i41), x41));
}

TEST(Functors, WrongSideIsRejected) {
  const auto r = a4_split();
  EXPECT_THROW(r->apply(Functor::j_upper, interval(r->j_quiver(), {1, 1})), ContractViolation);
  EXPECT_THROW(r->apply(Functor::i_lower, interval(a4(), {1, 0, 0, 0})), ContractViolation);
}

TEST(Functors, Names) {
  for (Functor f : {Functor::i_upper, Functor::i_lower, Functor::i_shriek, Functor::j_shriek, Functor::j_upper,
                    Functor::j_star})
    EXPECT_EQ(parse_functor(functor_name(f)), f);
  EXPECT_EQ(parse_functor("j_star"), Functor::j_star);
  EXPECT_THROW(parse_functor("k^*"), ParseError);
}

TEST(UnitCounit, Examples) {
  const auto r = a4_split();
  const Rep full = interval(a4(), {1, 1, 1, 1});
  const RepMor eta = r->unit(Adjunction::j_upper_j_star, full);
  EXPECT_TRUE(r->apply(Functor::j_upper, eta).is_iso());

  const Rep y = interval(r->j_quiver(), {1, 1});
  const RepMor eta_y = r->unit(Adjunction::j_shriek_j_upper, y);
  EXPECT_TRUE(eta_y.is_iso());

  const Rep ix = r->apply(Functor::i_lower, interval(r->i_quiver(), {1, 1}));
  const RepMor eps = r->counit(Adjunction::j_shriek_j_upper, ix);
  EXPECT_TRUE(eps.source().is_zero());
  EXPECT_TRUE(eps.is_zero());

  // M = 2/3 placed by zero: the unit into j_*j^*M vanishes at 4 and 1.
  const Rep m = interval(a4(), {0, 0, 1, 1});
  const RepMor e = r->unit(Adjunction::j_upper_j_star, m);
  EXPECT_TRUE(e.is_mono());
  EXPECT_FALSE(e.is_epi());
}

TEST(IntermediateExtension, Examples) {
  const auto r = a4_split();
  const Rep y = interval(r->j_quiver(), {1, 1});
  EXPECT_TRUE(is_isomorphic(r->intermediate_extension(y), interval(a4(), {0, 0, 1, 1})));
  EXPECT_TRUE(r->intermediate_extension(Rep::zero(r->j_quiver(), 2)).is_zero());
  const RepMor g = r->gamma(y);
  EXPECT_TRUE(is_isomorphic(image(g).object, r->intermediate_extension(y)));
}

// Oracle: adjunction dimensions with both Hom spaces counted element by element.
TEST(AdjunctionOracle, BruteForceHomCounts) {
  const auto r = Recollement::build(make_quiver({"u", "v", "w"}, {{"a", "u", "v"}, {"b", "v", "w"}}), 2, {"w"});
  std::mt19937_64 rng(31);
  int done = 0;
  while (done < 40) {
    const Rep m = random_rep(r->ambient(), 2, rng, 2);
    const Rep x = random_rep(r->i_quiver(), 2, rng, 2);
    const Rep y = random_rep(r->j_quiver(), 2, rng, 2);
    const Rep ix = r->apply(Functor::i_lower, x);
    const Rep jsy = r->apply(Functor::j_star, y);
    const Rep jy = r->apply(Functor::j_shriek, y);
    if (family_entries(m, ix) > 12 || family_entries(m, jsy) > 12 || family_entries(jy, m) > 12) continue;
    EXPECT_EQ(brute_hom_dim(r->apply(Functor::i_upper, m), x), brute_hom_dim(m, ix));
    EXPECT_EQ(brute_hom_dim(ix, m), brute_hom_dim(x, r->apply(Functor::i_shriek, m)));
    EXPECT_EQ(brute_hom_dim(jy, m), brute_hom_dim(y, r->apply(Functor::j_upper, m)));
    EXPECT_EQ(brute_hom_dim(m, jsy), brute_hom_dim(r->apply(Functor::j_upper, m), y));
    ++done;
  }
}

TEST(Axioms, A4Split) {
  const auto rep = verify_axioms(*a4_split(), {100, 42, 3});
  for (const auto& c : rep.checks) EXPECT_TRUE(c.passed()) << c.name << ": " << (c.witnesses.empty() ? "" : c.witnesses[0]);
  EXPECT_GE(rep.checks.size(), 17u);
}

TEST(Axioms, SingleArrowAndMirrored) {
  for (const auto& r : {Recollement::build(make_quiver({"u", "v"}, {{"a", "u", "v"}}), 2, {"v"}),
                        Recollement::build(make_quiver({"u", "v"}, {{"a", "u", "v"}}), 2, {"u"}),
                        Recollement::build(linear_quiver({"3", "2", "1", "4"}), 2, {"2", "3"})}) {
    const auto rep = verify_axioms(*r, {60, 5, 3});
    EXPECT_TRUE(rep.all_passed());
  }
}

TEST(Axioms, RandomSplitsOverSeveralFields) {
  std::mt19937_64 rng(77);
  for (Prime p : {2u, 3u}) {
    for (int k = 0; k < 4; ++k) {
      const auto r = random_split(rng, 5, p);
      const auto rep = verify_axioms(*r, {40, 9, 3});
      for (const auto& c : rep.checks)
        EXPECT_TRUE(c.passed()) << c.name << ": " << (c.witnesses.empty() ? "" : c.witnesses[0]);
    }
  }
}

TEST(Axioms, Deterministic) {
  const auto r = a4_split();
  const auto a = verify_axioms(*r, {30, 3, 2});
  const auto b = verify_axioms(*r, {30, 3, 2});
  ASSERT_EQ(a.checks.size(), b.checks.size());
  for (std::size_t k = 0; k < a.checks.size(); ++k) EXPECT_EQ(a.checks[k].runs, b.checks[k].runs);
}

TEST(Mutated, FailsAdjunctions) {
  const auto m = a4_split()->mutated();
  EXPECT_TRUE(m->is_mutated());
  std::mt19937_64 rng(1);
  EXPECT_THROW(m->unit(Adjunction::i_upper_i_lower, random_rep(m->ambient(), 2, rng, 1)), ContractViolation);
  auto rep = verify_axioms(*m, {50, 42, 2});
  EXPECT_FALSE(rep.all_passed());
  EXPECT_GT(rep.at("adjunction (i^*, i_*)").failures + rep.at("adjunction (j^*, j_*)").failures, 0u);
}

TEST(RandomSplit, Shape) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 30; ++k) {
    const auto r = random_split(rng, 6, 2);
    EXPECT_LE(r->ambient()->vertex_count(), 6u);
    EXPECT_GE(r->ambient()->vertex_count(), 2u);
    EXPECT_FALSE(r->crossing_arrows().empty());
    EXPECT_NE(r->orientation(), Orientation::none);
  }
}
