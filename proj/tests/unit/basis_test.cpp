#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "unisets/basis.hpp"
#include "unisets/error.hpp"
#include "unisets/rng.hpp"

using namespace unisets;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no unisets::Error thrown";
  return ErrorCode::invalid_argument;
}

Subset evens(const Group& g) {
  Subset s(g);
  for (Element e = 0; e < g.order(); e += 2) s.insert(e);
  return s;
}

}  // namespace

TEST(Covering, WholeGroup) {
  const Group g = Group::symmetric(3);
  const auto c = covering_set(Subset::full(g), 1);
  EXPECT_EQ(c.y, Subset::singleton(g, g.identity()));
}

TEST(Covering, IndexTwo) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Group g = Group::cyclic(40);
    const auto c = covering_set(evens(g), seed);
    EXPECT_EQ(c.y.size(), 2u);
    EXPECT_TRUE(product_set(c.y, evens(g)).is_full());
  }
}

TEST(Covering, Interval) {
  const Group g = Group::cyclic(1000);
  Subset x(g);
  for (Element e = 0; e < 100; ++e) x.insert(e);
  const auto c = covering_set(x, 3);
  EXPECT_EQ(oracle::product(g, c.y.elements(), x.elements()).size(), 1000u);
  EXPECT_NEAR(c.expected_size, 10.0 * std::log(1000.0), 1e-9);
  EXPECT_FALSE(c.in_regime);
  EXPECT_THROW(covering_set(Subset(g), 1), Error);
}

TEST(NonDoubling, IntervalInZ100) {
  const Group g = Group::cyclic(100);
  const auto x = non_doubling_in_solvable(builtin_series(g), 10);
  Subset expect(g);
  for (Element e = 0; e < 10; ++e) expect.insert(e);
  EXPECT_EQ(x, expect);
  EXPECT_EQ(product_set(x, x).size(), 19u);
}

TEST(NonDoubling, WholeGroupAndS3) {
  const Group z12 = Group::cyclic(12);
  EXPECT_TRUE(non_doubling_in_solvable(builtin_series(z12), 12).is_full());

  const Group s3 = Group::symmetric(3);
  const auto x = non_doubling_in_solvable(builtin_series(s3), 4);
  EXPECT_TRUE(x.is_full());
  EXPECT_EQ(oracle::product(s3, x.elements(), x.elements()).size(), 6u);
}

TEST(NonDoubling, Range) {
  const auto series = builtin_series(Group::cyclic(10));
  EXPECT_EQ(code_of([&] { non_doubling_in_solvable(series, 1.0); }), ErrorCode::x_out_of_range);
  EXPECT_EQ(code_of([&] { non_doubling_in_solvable(series, 11.0); }), ErrorCode::x_out_of_range);
}

TEST(Series, Builtins) {
  const auto z12 = builtin_series(Group::cyclic(12));
  EXPECT_EQ(z12.steps(), 1u);
  EXPECT_EQ(z12.generators().front(), 1u);

  const Group g = Group::make(GroupSpec::product({GroupSpec::cyclic(2), GroupSpec::cyclic(3)}));
  const auto p = builtin_series(g);
  ASSERT_EQ(p.chain().size(), 3u);
  // Z/2 x {0}
  EXPECT_EQ(p.chain()[1], Subset(g, {g.encode_tuple(std::vector<Element>{0, 0}), g.encode_tuple(std::vector<Element>{1, 0})}));

  const Group s4 = Group::symmetric(4);
  const auto s = builtin_series(s4);
  std::vector<std::size_t> sizes;
  for (const auto& c : s.chain()) sizes.push_back(c.size());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{24, 12, 4, 2, 1}));
  // Independent enumeration: each step is a normal subgroup of the previous.
  for (std::size_t i = 0; i + 1 < s.chain().size(); ++i) {
    const auto outer = s.chain()[i].elements();
    const auto inner = s.chain()[i + 1].elements();
    EXPECT_EQ(oracle::product(s4, inner, inner).size(), inner.size());
    for (Element gx : outer)
      for (Element h : inner) EXPECT_TRUE(s.chain()[i + 1].contains(s4.mul(s4.mul(gx, h), s4.inv(gx))));
  }

  EXPECT_EQ(code_of([] { builtin_series(Group::symmetric(5)); }), ErrorCode::no_known_series);
}

TEST(Series, RejectsBadChains) {
  const Group g = Group::cyclic(6);
  const Subset sub3(g, {0, 2, 4});
  const Subset bogus(g, {0, 1});
  const Subset trivial = Subset::singleton(g, 0);
  EXPECT_NO_THROW(NormalSeries::make({Subset::full(g), sub3, trivial}, {1, 2}));
  EXPECT_EQ(code_of([&] { NormalSeries::make({Subset::full(g), bogus, trivial}, {1, 1}); }), ErrorCode::invalid_series);
  EXPECT_EQ(code_of([&] { NormalSeries::make({Subset::full(g), sub3, trivial}, {2, 2}); }), ErrorCode::invalid_series);
  EXPECT_EQ(code_of([&] { NormalSeries::make({sub3, trivial}, {2}); }), ErrorCode::invalid_series);
}

TEST(EnBasis, EmptyTarget) {
  const Group g = Group::cyclic(100);
  const auto r = en_basis(Subset(g));
  EXPECT_EQ(r.basis, r.universal.set);
  EXPECT_TRUE(r.verdict.pass);
  EXPECT_TRUE(r.translators.empty());
}

TEST(EnBasis, SingleElement) {
  const Group g = Group::cyclic(100);
  const auto r = en_basis(Subset(g, {37}));
  EXPECT_LE(r.basis.size(), r.universal.set.size() + 1);
  EXPECT_EQ(r.translators.size(), 1u);
  EXPECT_TRUE(r.verdict.pass);
  EXPECT_FALSE(r.en_bound_applicable);
}

TEST(EnBasis, RandomTargetZ10000) {
  const Group g = Group::cyclic(10'000);
  Rng rng(7);
  Subset a(g);
  while (a.size() < 100) a.insert(static_cast<Element>(rng.uniform(10'000)));
  BasisConfig cfg;
  cfg.seed = 7;
  const auto r = en_basis(a, cfg);
  const auto bb = oracle::product(g, r.basis.elements(), r.basis.elements());
  for (Element e : a.elements()) EXPECT_EQ(bb.count(e), 1u);
  EXPECT_GT(r.size_budget, 0.0);
  EXPECT_LE(static_cast<double>(r.translators.size()), r.translator_allowance());
}

TEST(EnBasis, OverridesAndStructure) {
  const Group g = Group::cyclic(400);
  Rng rng(3);
  Subset a(g);
  while (a.size() < 20) a.insert(static_cast<Element>(rng.uniform(400)));
  Subset x(g);
  for (Element e = 0; e < 80; ++e) x.insert(e);
  BasisConfig cfg;
  cfg.x = x;
  cfg.k = 3;
  cfg.seed = 11;
  const auto r = en_basis(a, cfg);
  EXPECT_EQ(r.x_source, "override");
  EXPECT_EQ(r.k, 3u);
  Subset seen(g);
  for (const auto& t : r.translators) {
    EXPECT_LE(t.block.size(), 3u);
    for (Element e : t.block) {
      EXPECT_FALSE(seen.contains(e));  // blocks are disjoint
      seen.insert(e);
      EXPECT_TRUE(x.contains(g.mul(g.inv(t.y), e)));       // T inside yX
      EXPECT_TRUE(r.universal.set.contains(g.mul(g.inv(t.g), e)));  // T inside gU
    }
  }
  EXPECT_EQ(seen, a);
  EXPECT_TRUE(r.verdict.pass);
}

TEST(EnBasis, SymmetricGroup) {
  const Group g = Group::symmetric(4);
  const auto r = en_basis(Subset(g, {1, 5, 17, 23}), BasisConfig{.k = 2, .seed = 2});
  EXPECT_TRUE(r.verdict.pass);
  EXPECT_EQ(code_of([] { en_basis(Subset(Group::symmetric(5), {3})); }), ErrorCode::no_known_series);
}

TEST(EnBasis, Budget) {
  EXPECT_EQ(en_size_budget(2), 0.0);
  const double n = 10'000;
  EXPECT_NEAR(en_size_budget(10'000), 50 * 100 * std::log(std::log(n)) / std::log(n), 1e-9);
}
