#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace unisets {

/// A field element of GF(p^m), encoded as the base-p integer whose digits are
/// its polynomial coefficients (constant term least significant).
using FieldElement = std::uint32_t;

inline constexpr std::uint64_t kDefaultFieldLimit = std::uint64_t{1} << 24;

/// Arithmetic context for GF(p^m): modulus, primitive element and a complete
/// exp/log table. Immutable once built.
class FieldCtx {
 public:
  std::uint64_t p() const noexcept { return p_; }
  unsigned m() const noexcept { return m_; }
  std::uint64_t q() const noexcept { return q_; }

  /// Monic irreducible modulus, m+1 coefficients, least significant first.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  FieldElement omega() const noexcept { return omega_; }

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement scale(std::uint64_t c, FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement pow(FieldElement a, std::uint64_t e) const;
  /// omega^t for any t (reduced mod q-1).
  FieldElement exp(std::uint64_t t) const { return exp_[t % (q_ - 1)]; }

  std::vector<std::uint32_t> coefficients(FieldElement a) const;
  FieldElement from_coefficients(std::span<const std::uint32_t> coeffs) const;
  /// Polynomial degree of a; -1 for zero.
  int degree_of(FieldElement a) const;

 private:
  friend FieldCtx build_field(std::uint64_t p, unsigned m, std::uint64_t limit);
  friend std::uint64_t dlog(const FieldCtx& ctx, FieldElement v);

  std::uint64_t p_ = 0;
  unsigned m_ = 0;
  std::uint64_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  FieldElement omega_ = 0;
  std::vector<FieldElement> exp_;
  std::vector<std::uint32_t> log_;
};

/// Builds GF(p^m) deterministically: the modulus is the irreducible monic
/// polynomial with the smallest base-p encoding, omega the primitive element
/// with the smallest encoding. Throws NotPrime, FieldTooLarge.
FieldCtx build_field(std::uint64_t p, unsigned m, std::uint64_t limit = kDefaultFieldLimit);

/// Discrete logarithm base omega, in [0, q-2]. Throws ZeroElement.
std::uint64_t dlog(const FieldCtx& ctx, FieldElement v);

/// One representative per 1-dimensional subspace contained in
/// H = {elements of polynomial degree < m-1}. Representatives are normalized
/// (leading coefficient 1) and returned in increasing encoding order.
/// Throws DegreeTooSmall when m < 2.
std::vector<FieldElement> subspace_lines(const FieldCtx& ctx);

namespace poly {

// Dense polynomials over F_p, least significant coefficient first.
using Poly = std::vector<std::uint32_t>;

void trim(Poly& a);
Poly mul_mod(const Poly& a, const Poly& b, const Poly& modulus, std::uint64_t p);
/// Remainder of a divided by a monic b.
Poly rem(Poly a, const Poly& b, std::uint64_t p);
bool is_irreducible(const Poly& f, std::uint64_t p);

}  // namespace poly

}  // namespace unisets
