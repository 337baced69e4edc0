#include "unisets/field.hpp"

#include "unisets/error.hpp"
#include "unisets/numeric.hpp"

namespace unisets {

namespace poly {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly rem(Poly a, const Poly& b, std::uint64_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;  // b monic, nonzero
  while (a.size() > db) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      const std::uint64_t sub = lead * b[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Poly mul_mod(const Poly& a, const Poly& b, const Poly& modulus, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  return rem(std::move(prod), modulus, p);
}

namespace {

// Enumerates monic polynomials of the given degree in increasing encoding order.
template <class F>
bool for_each_monic(unsigned degree, std::uint64_t p, F&& f) {
  Poly c(degree + 1, 0);
  c[degree] = 1;
  for (;;) {
    if (f(c)) return true;
    std::size_t i = 0;
    while (i < degree && ++c[i] == p) c[i++] = 0;
    if (i == degree) return false;
  }
}

}  // namespace

bool is_irreducible(const Poly& f, std::uint64_t p) {
  const auto n = static_cast<unsigned>(f.size() - 1);
  if (n == 0) return false;
  // Full trial division by every monic polynomial of degree <= n/2.
  for (unsigned d = 1; d <= n / 2; ++d) {
    const bool divisible = for_each_monic(d, p, [&](const Poly& g) { return rem(f, g, p).empty(); });
    if (divisible) return false;
  }
  return true;
}

}  // namespace poly

FieldElement FieldCtx::add(FieldElement a, FieldElement b) const {
  FieldElement out = 0;
  std::uint64_t place = 1;
  for (unsigned i = 0; i < m_; ++i) {
    const std::uint64_t d = (a % p_ + b % p_) % p_;
    out += static_cast<FieldElement>(d * place);
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return out;
}

FieldElement FieldCtx::sub(FieldElement a, FieldElement b) const {
  FieldElement out = 0;
  std::uint64_t place = 1;
  for (unsigned i = 0; i < m_; ++i) {
    const std::uint64_t d = (a % p_ + p_ - b % p_) % p_;
    out += static_cast<FieldElement>(d * place);
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return out;
}

FieldElement FieldCtx::scale(std::uint64_t c, FieldElement a) const {
  c %= p_;
  FieldElement out = 0;
  std::uint64_t place = 1;
  for (unsigned i = 0; i < m_; ++i) {
    out += static_cast<FieldElement>((a % p_) * c % p_ * place);
    a /= p_;
    place *= p_;
  }
  return out;
}

FieldElement FieldCtx::mul(FieldElement a, FieldElement b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(std::uint64_t{log_[a]} + log_[b]) % (q_ - 1)];
}

FieldElement FieldCtx::pow(FieldElement a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1)) % (q_ - 1)];
}

std::vector<std::uint32_t> FieldCtx::coefficients(FieldElement a) const {
  std::vector<std::uint32_t> out(m_);
  for (unsigned i = 0; i < m_; ++i) {
    out[i] = static_cast<std::uint32_t>(a % p_);
    a = static_cast<FieldElement>(a / p_);
  }
  return out;
}

FieldElement FieldCtx::from_coefficients(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > m_) throw Error(ErrorCode::invalid_argument, "too many coefficients");
  std::uint64_t out = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= p_) throw Error(ErrorCode::invalid_argument, "coefficient out of range");
    out = out * p_ + coeffs[i];
  }
  return static_cast<FieldElement>(out);
}

int FieldCtx::degree_of(FieldElement a) const {
  int d = -1;
  for (int i = 0; a != 0; ++i) {
    if (a % p_) d = i;
    a = static_cast<FieldElement>(a / p_);
  }
  return d;
}

namespace {

poly::Poly to_poly(FieldElement a, std::uint64_t p, unsigned m) {
  poly::Poly out(m);
  for (unsigned i = 0; i < m; ++i) {
    out[i] = static_cast<std::uint32_t>(a % p);
    a = static_cast<FieldElement>(a / p);
  }
  poly::trim(out);
  return out;
}

FieldElement from_poly(const poly::Poly& a, std::uint64_t p) {
  std::uint64_t out = 0;
  for (std::size_t i = a.size(); i-- > 0;) out = out * p + a[i];
  return static_cast<FieldElement>(out);
}

}  // namespace

FieldCtx build_field(std::uint64_t p, unsigned m, std::uint64_t limit) {
  if (!is_prime(p)) throw Error(ErrorCode::not_prime, std::to_string(p) + " is not prime");
  if (m < 1) throw Error(ErrorCode::invalid_argument, "extension degree must be >= 1");
  const auto q = checked_pow(p, m);
  if (!q || *q > limit)
    throw Error(ErrorCode::field_too_large,
                "GF(" + std::to_string(p) + "^" + std::to_string(m) + ") exceeds limit " + std::to_string(limit));

  FieldCtx ctx;
  ctx.p_ = p;
  ctx.m_ = m;
  ctx.q_ = *q;

  // Smallest encoding first: the constant term is the least significant digit,
  // so incrementing the low coefficients walks the encodings in order.
  poly::Poly f(m + 1, 0);
  f[m] = 1;
  for (;;) {
    if (poly::is_irreducible(f, p)) break;
    std::size_t i = 0;
    while (i < m && ++f[i] == p) f[i++] = 0;
    if (i == m) throw Error(ErrorCode::invalid_argument, "no irreducible polynomial found");
  }
  ctx.modulus_ = f;

  const std::uint64_t group_order = ctx.q_ - 1;
  const auto factors = prime_factors(group_order);
  auto power = [&](FieldElement a, std::uint64_t e) {
    poly::Poly base = to_poly(a, p, m);
    poly::Poly result{1};
    while (e > 0) {
      if (e & 1) result = poly::mul_mod(result, base, f, p);
      base = poly::mul_mod(base, base, f, p);
      e >>= 1;
    }
    return from_poly(result, p);
  };
  bool found = false;
  for (std::uint64_t cand = 1; cand < ctx.q_ && !found; ++cand) {
    const auto a = static_cast<FieldElement>(cand);
    bool primitive = power(a, group_order) == 1;
    for (std::uint64_t ell : factors) {
      if (!primitive) break;
      primitive = power(a, group_order / ell) != 1;
    }
    if (primitive) {
      ctx.omega_ = a;
      found = true;
    }
  }
  if (!found) throw Error(ErrorCode::invalid_argument, "no primitive element found");

  ctx.exp_.resize(group_order);
  ctx.log_.assign(ctx.q_, 0);
  const poly::Poly omega = to_poly(ctx.omega_, p, m);
  poly::Poly cur{1};
  for (std::uint64_t t = 0; t < group_order; ++t) {
    const FieldElement v = from_poly(cur, p);
    ctx.exp_[t] = v;
    ctx.log_[v] = static_cast<std::uint32_t>(t);
    cur = poly::mul_mod(cur, omega, f, p);
  }
  return ctx;
}

std::uint64_t dlog(const FieldCtx& ctx, FieldElement v) {
  if (v == 0) throw Error(ErrorCode::zero_element, "discrete log of zero");
  if (v >= ctx.q_) throw Error(ErrorCode::invalid_argument, "element outside the field");
  return ctx.log_[v];
}

std::vector<FieldElement> subspace_lines(const FieldCtx& ctx) {
  if (ctx.m() < 2) throw Error(ErrorCode::degree_too_small, "subspace lines need m >= 2");
  const std::uint64_t h_size = ctx.q() / ctx.p();  // p^{m-1}
  std::vector<FieldElement> reps;
  for (std::uint64_t v = 1; v < h_size; ++v) {
    // Leading coefficient 1 picks exactly one nonzero vector per line.
    const auto e = static_cast<FieldElement>(v);
    const auto coeffs = ctx.coefficients(e);
    if (coeffs[static_cast<std::size_t>(ctx.degree_of(e))] == 1) reps.push_back(e);
  }
  return reps;
}

}  // namespace unisets
