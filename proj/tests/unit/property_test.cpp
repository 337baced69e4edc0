// Randomized properties over many small instances.

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "unisets/basis.hpp"
#include "unisets/rng.hpp"
#include "unisets/universal.hpp"

using namespace unisets;

namespace {

Subset random_subset(const Group& g, Rng& rng, double density) {
  Subset s(g);
  for (Element e = 0; e < g.order(); ++e)
    if (rng.bernoulli(density)) s.insert(e);
  if (s.empty()) s.insert(static_cast<Element>(rng.uniform(g.order())));
  return s;
}

}  // namespace

TEST(Property, TupleCharacterizationsAgree) {
  Rng rng(101);
  VerifyOptions exact;
  exact.mode = VerifyMode::exact;
  for (std::uint64_t n : {5u, 6u, 8u, 9u}) {
    const Group g = Group::cyclic(n);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<Subset> t{random_subset(g, rng, 0.5), random_subset(g, rng, 0.5), random_subset(g, rng, 0.7)};
      const auto v = verify_tuple(t, exact);
      EXPECT_EQ(v.pass, tuple_difference_cover(t));
      if (v.characterizations_agree) EXPECT_TRUE(*v.characterizations_agree);
    }
  }
}

TEST(Property, VerifiedTuplesMeetLowerBounds) {
  for (std::uint64_t n = 2; n <= 40; ++n) {
    for (unsigned k = 2; k <= 3; ++k) {
      const auto t = binary_tuple(n, uniform_targets(n, k));
      ASSERT_TRUE(t.verified());
      const auto c = certify(t);
      EXPECT_TRUE(c.product_bound_holds) << n << " " << k;
      EXPECT_TRUE(c.cost_at_least_k) << n << " " << k;
    }
  }
}

TEST(Property, RandomTargetsBinaryTuple) {
  Rng rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::uint64_t n = 2 + rng.uniform(30);
    // s = (a, n/a * n^{0}) for k = 2 with a in [1, n]
    const double a = 1.0 + rng.unit() * static_cast<double>(n - 1);
    const std::vector<double> s{a, static_cast<double>(n) / a};
    const auto t = binary_tuple(n, s);
    for (std::size_t i = 0; i < 2; ++i) EXPECT_LE(t.sets[i].size(), 8 * s[i] + 1e-9);
    std::vector<std::vector<Element>> raw{t.sets[0].elements(), t.sets[1].elements()};
    EXPECT_TRUE(oracle::universal_tuple(t.group(), raw));
  }
}

TEST(Property, CoveringAlwaysCovers) {
  Rng rng(23);
  const std::vector<GroupSpec> specs{GroupSpec::cyclic(50), GroupSpec::symmetric(4),
                                     GroupSpec::product({GroupSpec::cyclic(4), GroupSpec::cyclic(6)})};
  for (const auto& spec : specs) {
    const Group g = Group::make(spec);
    for (int trial = 0; trial < 30; ++trial) {
      const auto x = random_subset(g, rng, rng.unit() * 0.5);
      const auto c = covering_set(x, trial);
      EXPECT_EQ(oracle::product(g, c.y.elements(), x.elements()).size(), g.order());
    }
  }
}

TEST(Property, EnBasisAcrossGroups) {
  Rng rng(31);
  const std::vector<GroupSpec> specs{GroupSpec::cyclic(144), GroupSpec::symmetric(4),
                                     GroupSpec::product({GroupSpec::cyclic(6), GroupSpec::cyclic(10)})};
  for (const auto& spec : specs) {
    const Group g = Group::make(spec);
    for (unsigned k = 1; k <= 3; ++k) {
      const auto a = random_subset(g, rng, 0.1);
      BasisConfig cfg;
      cfg.k = k;
      cfg.seed = k;
      const auto r = en_basis(a, cfg);
      const auto bb = oracle::product(g, r.basis.elements(), r.basis.elements());
      for (Element e : a.elements()) EXPECT_EQ(bb.count(e), 1u) << spec.to_string();
      EXPECT_LE(static_cast<double>(r.translators.size()), r.translator_allowance());
    }
  }
}

TEST(Property, SeedsReplay) {
  const Group g = Group::cyclic(120);
  Rng rng(77);
  const auto a = random_subset(g, rng, 0.08);
  BasisConfig cfg;
  cfg.k = 2;
  cfg.seed = 1234;
  const auto r1 = en_basis(a, cfg);
  const auto r2 = en_basis(a, cfg);
  EXPECT_EQ(r1.basis, r2.basis);
  EXPECT_EQ(r1.covering.y, r2.covering.y);
}
