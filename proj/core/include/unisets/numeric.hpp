#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace unisets {

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n) noexcept;

/// Smallest prime >= n.
std::uint64_t next_prime(std::uint64_t n);

/// Distinct prime factors in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// base^exp, or nullopt when the result does not fit in 64 bits.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp) noexcept;

/// Smallest integer r >= 1 with r^k >= n (exact ceiling of the k-th root).
std::uint64_t ceil_root(std::uint64_t n, unsigned k);

/// C(n, k) as a double; saturates to +inf rather than overflowing.
double binomial(std::uint64_t n, std::uint64_t k) noexcept;

std::uint64_t factorial(unsigned n);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept;
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) noexcept;

}  // namespace unisets
