#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "unisets/error.hpp"
#include "unisets/numeric.hpp"
#include "unisets/universal.hpp"

namespace unisets {

SingerResult singer_universal(std::uint64_t p, unsigned k, const ConstructionOptions& opts) {
  if (k < 2) throw Error(ErrorCode::invalid_argument, "Singer construction needs k >= 2");
  if (!is_prime(p)) throw Error(ErrorCode::not_prime, std::to_string(p) + " is not prime");
  const FieldCtx ctx = build_field(p, k + 1, opts.field_limit);
  const std::uint64_t r = (ctx.q() - 1) / (p - 1);

  GroupLimits limits;
  limits.max_order = std::max(limits.max_order, r);
  const Group zr = Group::make(GroupSpec::cyclic(r), limits);

  SingerResult res{.p = p, .k = k, .r = r, .x = Subset(zr)};
  res.omega = ctx.omega();
  res.modulus = ctx.modulus();
  for (FieldElement v : subspace_lines(ctx)) {
    // The line through v is omega^t F_p for t = dlog(v) mod r; every nonzero
    // multiple of v must give the same t.
    const std::uint64_t t = dlog(ctx, v) % r;
    for (std::uint64_t c = 2; c < p; ++c) {
      if (dlog(ctx, ctx.scale(c, v)) % r != t)
        throw std::logic_error("line-to-residue map is not well defined");
    }
    res.x.insert(static_cast<Element>(t));
  }
  const std::uint64_t expected = (ctx.q() / p - 1) / (p - 1);
  if (res.x.size() != expected) throw std::logic_error("Singer set has the wrong size");

  // Reading residues as integers in {1, ..., r}: residue 0 stands for r.
  res.x.for_each([&](Element e) {
    const std::uint64_t lifted = e == 0 ? r : e;
    res.y.push_back(lifted);
    res.y.push_back(lifted + r);
  });
  std::sort(res.y.begin(), res.y.end());
  res.verdict = verify_universal(res.x, k, opts.verify);
  return res;
}

UniversalSetResult cyclic_universal(std::uint64_t n, unsigned k, const ConstructionOptions& opts) {
  if (n < 2) throw Error(ErrorCode::invalid_argument, "cyclic construction needs n >= 2");
  if (k < 2) throw Error(ErrorCode::invalid_argument, "cyclic construction needs k >= 2");
  const Group G = Group::cyclic(n);
  const double nd = static_cast<double>(n);
  UniversalSetResult res{.set = Subset(G), .k = k};
  res.method = Method::cyclic;
  res.size_bound = 72.0 * std::pow(nd, 1.0 - 1.0 / k);
  // The constant 72 is proved only for |G| >= exp(2^k).
  const bool in_regime = std::log(nd) >= std::ldexp(1.0, static_cast<int>(std::min(k, 60u)));
  res.bound_guaranteed = in_regime;

  if (n <= k) {
    res.set = Subset::full(G);
    res.verdict = verify_universal(res.set, std::min<unsigned>(k, static_cast<unsigned>(n)), opts.verify);
    res.notes.push_back("|G| <= k: the whole group is returned");
    return res;
  }

  const std::uint64_t p = next_prime(ceil_root(n, k));
  const auto q = checked_pow(p, k + 1);
  if (!q || *q > opts.field_limit)
    throw Error(ErrorCode::field_too_large, "prime p = " + std::to_string(p) + " needs GF(p^" +
                                                std::to_string(k + 1) + ") beyond limit " +
                                                std::to_string(opts.field_limit));
  const SingerResult singer = singer_universal(p, k, opts);
  for (std::uint64_t y : singer.y) res.set.insert(static_cast<Element>(y % n));

  const double prime_ceiling = std::pow(nd, 1.0 / k) * (1.0 + 2.0 * k / std::log(nd));
  res.metrics["p"] = static_cast<double>(p);
  res.metrics["r"] = static_cast<double>(singer.r);
  res.metrics["singer_size"] = static_cast<double>(singer.x.size());
  res.metrics["prime_ceiling"] = prime_ceiling;
  if (in_regime && static_cast<double>(p) > prime_ceiling)
    throw std::logic_error("prime search exceeded the explicit prime-gap ceiling");
  if (!in_regime) res.notes.push_back("n < exp(2^k): the 72 n^(1-1/k) bound is not guaranteed");

  res.verdict = verify_universal(res.set, k, opts.verify);
  return res;
}

}  // namespace unisets
