#include <gtest/gtest.h>

#include "oracles.hpp"
#include "unisets/error.hpp"
#include "unisets/rng.hpp"
#include "unisets/verify.hpp"

using namespace unisets;

namespace {

VerifyOptions exact() {
  VerifyOptions o;
  o.mode = VerifyMode::exact;
  return o;
}

}  // namespace

TEST(VerifyUniversal, WholeGroupPasses) {
  const Group g = Group::symmetric(3);
  for (unsigned k = 1; k <= 3; ++k) EXPECT_TRUE(verify_universal(Subset::full(g), k, exact()).exact_pass());
}

TEST(VerifyUniversal, QuadraticResidues) {
  const Group z7 = Group::cyclic(7);
  const auto v = verify_universal(Subset(z7, {1, 2, 4}), 2, exact());
  EXPECT_TRUE(v.exact_pass());
  EXPECT_TRUE(v.witness.empty());
}

TEST(VerifyUniversal, WitnessRefails) {
  const Group z7 = Group::cyclic(7);
  const Subset u(z7, {0, 1});
  const auto v = verify_universal_for(u, Subset(z7, {0, 3}), 2, exact());
  EXPECT_FALSE(v.pass);
  EXPECT_EQ(v.mode, Verdict::Mode::exact);
  EXPECT_EQ(v.witness, (std::vector<Element>{0, 3}));
  EXPECT_FALSE(has_translate_in(u, v.witness));

  const auto whole = verify_universal(u, 2, exact());
  ASSERT_FALSE(whole.pass);
  EXPECT_EQ(whole.witness.size(), 2u);
  EXPECT_FALSE(has_translate_in(u, whole.witness));
}

TEST(VerifyUniversal, BudgetAndSampling) {
  const Group g = Group::cyclic(2000);
  VerifyOptions o = exact();
  o.exact_budget = 1000;
  try {
    verify_universal(Subset::full(g), 3, o);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::exact_infeasible);
  }
  o.mode = VerifyMode::automatic;
  o.trials = 500;
  o.seed = 9;
  const auto v = verify_universal(Subset::full(g), 3, o);
  EXPECT_TRUE(v.pass);
  EXPECT_EQ(v.mode, Verdict::Mode::sampled);
  EXPECT_EQ(v.trials, 500u);
  EXPECT_GT(v.failure_bound, 0.0);
  EXPECT_FALSE(v.exact_pass());

  // Same seed, same verdict.
  const Subset half(g, std::vector<Element>{0, 1, 2, 3, 5, 8, 13, 21, 34, 55});
  o.mode = VerifyMode::sampled;
  const auto a = verify_universal(half, 2, o);
  const auto b = verify_universal(half, 2, o);
  EXPECT_EQ(a.pass, b.pass);
  EXPECT_EQ(a.witness, b.witness);
  EXPECT_FALSE(a.pass);
}

TEST(VerifyTuple, Examples) {
  const Group z4 = Group::cyclic(4);
  const std::vector<Subset> full{Subset::full(z4), Subset::full(z4)};
  EXPECT_TRUE(verify_tuple(full, exact()).exact_pass());

  const std::vector<Subset> binary{Subset(z4, {0, 2}), Subset(z4, {0, 1})};
  const auto v = verify_tuple(binary, exact());
  EXPECT_TRUE(v.exact_pass());
  EXPECT_EQ(v.characterizations_agree, std::optional<bool>(true));
  EXPECT_TRUE(tuple_difference_cover(binary));

  const std::vector<Subset> zeros{Subset(z4, {0}), Subset(z4, {0})};
  const auto f = verify_tuple(zeros, exact());
  EXPECT_FALSE(f.pass);
  EXPECT_EQ(f.witness, (std::vector<Element>{0, 1}));
  EXPECT_FALSE(tuple_has_translate(zeros, f.witness));
}

TEST(VerifyBasis, Examples) {
  const Group z10 = Group::cyclic(10);
  EXPECT_TRUE(verify_basis(Subset::full(z10), Subset::full(z10)).pass);
  EXPECT_TRUE(verify_basis(Subset(z10, {2, 3}), Subset(z10, {5})).pass);
  const auto v = verify_basis(Subset(z10, {0}), Subset(z10, {1}));
  EXPECT_FALSE(v.pass);
  EXPECT_EQ(v.witness, (std::vector<Element>{1}));
}

TEST(VerifyUniversal, NonAbelianAgainstOracle) {
  const Group s4 = Group::symmetric(4);
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    Subset u(s4);
    for (Element e = 0; e < 24; ++e)
      if (rng.bernoulli(0.6)) u.insert(e);
    const bool truth = oracle::universal_for(s4, u.elements(), oracle::all(s4), 2);
    EXPECT_EQ(verify_universal(u, 2, exact()).pass, truth);
  }
}
