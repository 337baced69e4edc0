#include <gtest/gtest.h>

#include "unisets/numeric.hpp"

using namespace unisets;

TEST(Numeric, Primes) {
  EXPECT_FALSE(is_prime(0));
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(101));
  EXPECT_FALSE(is_prime(561));
  EXPECT_TRUE(is_prime(1'000'000'007));
  EXPECT_TRUE(is_prime(18446744073709551557ULL));
  EXPECT_EQ(next_prime(8), 11u);
  EXPECT_EQ(next_prime(11), 11u);
  EXPECT_EQ(prime_factors(360), (std::vector<std::uint64_t>{2, 3, 5}));
}

TEST(Numeric, Roots) {
  EXPECT_EQ(ceil_root(100, 2), 10u);
  EXPECT_EQ(ceil_root(101, 2), 11u);
  EXPECT_EQ(ceil_root(7, 2), 3u);
  EXPECT_EQ(ceil_root(1000, 3), 10u);
  EXPECT_EQ(ceil_root(1001, 3), 11u);
  EXPECT_EQ(ceil_root(1, 5), 1u);
  EXPECT_EQ(checked_pow(2, 63), std::optional<std::uint64_t>(1ULL << 63));
  EXPECT_FALSE(checked_pow(2, 64).has_value());
}

TEST(Numeric, Counting) {
  EXPECT_DOUBLE_EQ(binomial(24, 2), 276.0);
  EXPECT_DOUBLE_EQ(binomial(15, 3), 455.0);
  EXPECT_EQ(factorial(5), 120u);
  EXPECT_EQ(powmod(3, 200, 1'000'000'007), 136'318'165u);
  EXPECT_EQ(mulmod(1ULL << 62, 4, 1'000'000'007), ((1ULL << 62) % 1'000'000'007) * 4 % 1'000'000'007);
}
