#include <gtest/gtest.h>

#include "unisets/error.hpp"
#include "unisets/field.hpp"

using namespace unisets;

namespace {

std::uint64_t order_of(const FieldCtx& f, FieldElement a) {
  std::uint64_t k = 1;
  for (FieldElement x = a; x != 1; x = f.mul(x, a)) ++k;
  return k;
}

}  // namespace

TEST(Field, Gf8) {
  const auto f = build_field(2, 3);
  EXPECT_EQ(f.q(), 8u);
  EXPECT_EQ(f.modulus(), (std::vector<std::uint32_t>{1, 1, 0, 1}));  // x^3 + x + 1
  EXPECT_EQ(f.omega(), 2u);                                          // x
  EXPECT_EQ(order_of(f, f.omega()), 7u);

  // Brute-force: x^3+x+1 is the first irreducible monic cubic over F_2, since
  // x^3 (root 0) and x^3+1 (root 1) are reducible.
  EXPECT_FALSE(poly::is_irreducible({0, 0, 0, 1}, 2));
  EXPECT_FALSE(poly::is_irreducible({1, 0, 0, 1}, 2));
  EXPECT_TRUE(poly::is_irreducible({1, 1, 0, 1}, 2));

  EXPECT_EQ(dlog(f, 1), 0u);
  EXPECT_EQ(dlog(f, f.omega()), 1u);
  EXPECT_EQ(dlog(f, 3), 3u);  // x + 1
  for (std::uint64_t t = 0; t < 7; ++t) EXPECT_EQ(dlog(f, f.exp(t)), t);
  EXPECT_THROW(dlog(f, 0), Error);
}

TEST(Field, PrimeField) {
  const auto f = build_field(3, 1);
  EXPECT_EQ(f.q(), 3u);
  EXPECT_EQ(f.omega(), 2u);
}

TEST(Field, Gf25) {
  const auto f = build_field(5, 2);
  EXPECT_EQ(f.q(), 25u);
  EXPECT_EQ(order_of(f, f.omega()), 24u);
  for (FieldElement a = 1; a < 25; ++a)
    for (FieldElement b = 1; b < 25; ++b) EXPECT_EQ(f.mul(a, b), f.exp(dlog(f, a) + dlog(f, b)));
}

TEST(Field, ArithmeticAgainstPolynomials) {
  const auto f = build_field(3, 3);
  for (FieldElement a = 0; a < f.q(); ++a) {
    for (FieldElement b = 0; b < f.q(); b += 5) {
      const auto prod = poly::mul_mod(f.coefficients(a), f.coefficients(b), f.modulus(), 3);
      EXPECT_EQ(f.mul(a, b), f.from_coefficients(prod));
      EXPECT_EQ(f.sub(f.add(a, b), b), a);
    }
  }
}

TEST(Field, Lines) {
  const auto f = build_field(2, 3);
  EXPECT_EQ(subspace_lines(f), (std::vector<FieldElement>{1, 2, 3}));
  const auto g = build_field(3, 3);
  EXPECT_EQ(subspace_lines(g).size(), 4u);  // (3^2 - 1)/(3 - 1)
}

TEST(Field, Errors) {
  auto code = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::invalid_argument;
  };
  EXPECT_EQ(code([] { build_field(4, 2); }), ErrorCode::not_prime);
  EXPECT_EQ(code([] { build_field(2, 30); }), ErrorCode::field_too_large);
  EXPECT_EQ(code([] { subspace_lines(build_field(5, 1)); }), ErrorCode::degree_too_small);
  EXPECT_EQ(code([] { dlog(build_field(5, 1), 0); }), ErrorCode::zero_element);
}
