#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "unisets/error.hpp"
#include "unisets/rng.hpp"
#include "unisets/subset.hpp"

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

}  // namespace

TEST(Group, Orders) {
  EXPECT_EQ(Group::cyclic(7).order(), 7u);
  EXPECT_EQ(Group::symmetric(3).order(), 6u);
  EXPECT_EQ(Group::make(GroupSpec::product({GroupSpec::cyclic(6), GroupSpec::cyclic(6)})).order(), 36u);
}

TEST(Group, Limits) {
  EXPECT_EQ(code_of([] { Group::cyclic(20'000'000); }), ErrorCode::overflowing_order);
  EXPECT_EQ(code_of([] { Group::symmetric(13); }), ErrorCode::overflowing_order);
  GroupLimits small{.max_order = 10};
  EXPECT_EQ(code_of([&] { Group::make(GroupSpec::cyclic(11), small); }), ErrorCode::overflowing_order);
}

TEST(Group, TableValidation) {
  // Z/3 as a table is fine.
  const Group g = Group::make(GroupSpec::from_table({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}));
  EXPECT_EQ(g.order(), 3u);
  EXPECT_EQ(g.mul(2, 2), 1u);
  // Identity at index 1 is fine; a repeated entry in a row is not.
  EXPECT_EQ(Group::make(GroupSpec::from_table({{1, 0}, {0, 1}})).identity(), 1u);
  EXPECT_EQ(code_of([] { Group::make(GroupSpec::from_table({{0, 1}, {1, 1}})); }), ErrorCode::not_a_group);
  // Latin square with identity 0 but not associative (order 5 loop).
  const std::vector<std::vector<Element>> loop{
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  EXPECT_EQ(code_of([&] { Group::make(GroupSpec::from_table(loop)); }), ErrorCode::not_a_group);
}

TEST(Group, SymmetricComposition) {
  const Group s3 = Group::symmetric(3);
  const std::vector<unsigned> a{1, 0, 2}, b{0, 2, 1};
  const auto ab = s3.decode_permutation(s3.mul(s3.encode_permutation(a), s3.encode_permutation(b)));
  // (a*b)(i) = a(b(i))
  EXPECT_EQ(ab, (std::vector<unsigned>{1, 2, 0}));
  for (Element e = 0; e < 6; ++e) EXPECT_EQ(s3.mul(e, s3.inv(e)), s3.identity());
  for (std::uint64_t r = 0; r < 24; ++r) EXPECT_EQ(permutation_rank(permutation_unrank(r, 4)), r);
}

TEST(Group, ProductCoordinates) {
  const Group g = Group::make(GroupSpec::product({GroupSpec::cyclic(2), GroupSpec::cyclic(3)}));
  const std::vector<Element> c{1, 2};
  const Element e = g.encode_tuple(c);
  EXPECT_EQ(e, 5u);
  EXPECT_EQ(g.decode_tuple(g.mul(e, e)), (std::vector<Element>{0, 1}));
  EXPECT_TRUE(g.is_abelian_cyclic_form());
  EXPECT_EQ(g.cyclic_factor_orders(), (std::vector<std::uint64_t>{2, 3}));
}

TEST(Group, ParseSpec) {
  EXPECT_EQ(parse_group_spec("cyclic:12"), GroupSpec::cyclic(12));
  EXPECT_EQ(parse_group_spec("sym:4"), GroupSpec::symmetric(4));
  EXPECT_EQ(parse_group_spec("abelian:4,4"), GroupSpec::product({GroupSpec::cyclic(4), GroupSpec::cyclic(4)}));
  EXPECT_EQ(parse_group_spec("product(cyclic:2;sym:3)"),
            GroupSpec::product({GroupSpec::cyclic(2), GroupSpec::symmetric(3)}));
  const auto spec = GroupSpec::product({GroupSpec::cyclic(2), GroupSpec::symmetric(3)});
  EXPECT_EQ(parse_group_spec(spec.to_string()), spec);
  EXPECT_THROW(parse_group_spec("cyclic:"), Error);
  EXPECT_THROW(parse_group_spec("dihedral:5"), Error);
}

TEST(Subset, Translate) {
  const Group z7 = Group::cyclic(7);
  const Subset s(z7, {0, 1, 3});
  EXPECT_EQ(translate(0, s), s);
  EXPECT_EQ(translate(2, s), Subset(z7, {2, 3, 5}));

  const Group s3 = Group::symmetric(3);
  const Element t = s3.encode_permutation(std::vector<unsigned>{1, 0, 2});
  EXPECT_EQ(translate(t, Subset::singleton(s3, s3.identity())), Subset::singleton(s3, t));

  EXPECT_THROW(product_set(Subset(z7), Subset(Group::cyclic(8))), Error);
}

TEST(Subset, ProductSet) {
  const Group z4 = Group::cyclic(4);
  EXPECT_EQ(product_set(Subset(z4, {0, 1}), Subset(z4, {0, 1})), Subset(z4, {0, 1, 2}));
  const Subset t(z4, {1, 3});
  EXPECT_EQ(product_set(Subset::singleton(z4, 0), t), t);
  const Subset h(z4, {0, 2});
  EXPECT_EQ(product_set(h, h), h);
}

TEST(Subset, NonDoubling) {
  const Group z100 = Group::cyclic(100);
  const auto interval = is_non_doubling(Subset(z100, {0, 1, 2}));
  EXPECT_TRUE(interval.non_doubling);
  EXPECT_EQ(interval.product_size, 5u);

  const Subset h(z100, {0, 25, 50, 75});
  EXPECT_EQ(is_non_doubling(h).product_size, 4u);

  const Group big = Group::cyclic(1'000'000);
  const std::vector<Element> xs{1, 2, 4, 8, 16, 32};
  std::set<Element> sums;
  for (Element a : xs)
    for (Element b : xs) sums.insert(a + b);
  const auto powers = is_non_doubling(Subset(big, xs));
  EXPECT_EQ(powers.product_size, sums.size());
  EXPECT_EQ(powers.non_doubling, sums.size() <= 18);
  EXPECT_EQ(code_of([&] { is_non_doubling(Subset(big)); }), ErrorCode::empty_set);
}

TEST(Subset, SubgroupsAndCosets) {
  const Group s3 = Group::symmetric(3);
  Subset a3(s3);
  for (Element e = 0; e < 6; ++e) {
    const auto p = s3.decode_permutation(e);
    int inv = (p[0] > p[1]) + (p[0] > p[2]) + (p[1] > p[2]);
    if (inv % 2 == 0) a3.insert(e);
  }
  EXPECT_TRUE(is_subgroup(a3));
  EXPECT_TRUE(is_subgroup(Subset(s3, {0, 1})));   // {e, (1 2)}
  EXPECT_FALSE(is_subgroup(Subset(s3, {0, 3})));  // {e, 3-cycle}
  const auto reps = right_coset_representatives(a3);
  EXPECT_EQ(reps.size(), 2u);
  EXPECT_TRUE(product_set(a3, Subset(s3, reps)).is_full());
}

TEST(Subset, CyclicFastPathMatchesNaive) {
  Rng rng(5);
  for (std::uint64_t n : {65u, 128u, 200u, 1000u}) {
    const Group g = Group::cyclic(n);
    for (int trial = 0; trial < 5; ++trial) {
      Subset a(g), b(g);
      for (Element e = 0; e < n; ++e) {
        if (rng.bernoulli(0.3)) a.insert(e);
        if (rng.bernoulli(0.2)) b.insert(e);
      }
      const auto expect = oracle::product(g, a.elements(), b.elements());
      const auto got = product_set(a, b).elements();
      EXPECT_EQ(std::vector<Element>(expect.begin(), expect.end()), got) << "n=" << n;
    }
  }
}
