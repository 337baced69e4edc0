#include <algorithm>
#include <cmath>

#include <boost/multiprecision/cpp_int.hpp>

#include "unisets/error.hpp"
#include "unisets/rng.hpp"
#include "unisets/universal.hpp"

namespace unisets {

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::random: return "random";
    case Method::singer: return "singer";
    case Method::cyclic: return "cyclic";
    case Method::tuple_union: return "tuple-union";
    case Method::symmetric: return "symmetric";
    case Method::abelian: return "abelian";
  }
  return "unknown";
}

std::optional<Method> method_from_string(std::string_view s) noexcept {
  for (Method m : {Method::random, Method::singer, Method::cyclic, Method::tuple_union, Method::symmetric,
                   Method::abelian})
    if (to_string(m) == s) return m;
  return std::nullopt;
}

double UniversalSetResult::lower_bound() const {
  const double n = static_cast<double>(set.group().order());
  return 0.5 * std::pow(n, 1.0 - 1.0 / k);
}

double UniversalTuple::cost() const {
  double c = 0.0;
  for (std::size_t i = 0; i < sets.size(); ++i) c += static_cast<double>(sets[i].size()) / targets[i];
  return c;
}

TupleCertificate certify(const UniversalTuple& t) {
  using boost::multiprecision::cpp_int;
  TupleCertificate c;
  cpp_int product = 1;
  for (const auto& s : t.sets) {
    product *= s.size();
    c.log_product += std::log(static_cast<double>(s.size()));
  }
  const std::uint64_t n = t.group().order();
  cpp_int required = 1;
  for (unsigned i = 0; i + 1 < t.k(); ++i) required *= n;
  c.log_required = (t.k() - 1.0) * std::log(static_cast<double>(n));
  c.product_bound_holds = product >= required;
  c.cost = t.cost();
  c.cost_at_least_k = c.cost >= t.k() * (1.0 - 1e-12);
  return c;
}

void check_targets(std::uint64_t order, std::span<const double> targets) {
  if (targets.empty()) throw Error(ErrorCode::bad_targets, "no targets");
  const double n = static_cast<double>(order);
  double log_sum = 0.0;
  for (double s : targets) {
    if (!(s >= 1.0 - 1e-9) || !(s <= n * (1.0 + 1e-9)))
      throw Error(ErrorCode::bad_targets, "target " + std::to_string(s) + " outside [1, " + std::to_string(order) + "]");
    log_sum += std::log(s);
  }
  const double want = (static_cast<double>(targets.size()) - 1.0) * std::log(n);
  if (std::abs(log_sum - want) > 1e-9 * std::max(1.0, want))
    throw Error(ErrorCode::bad_targets, "product of targets is not |G|^{k-1}");
}

std::vector<double> uniform_targets(std::uint64_t order, unsigned k) {
  if (k == 0) throw Error(ErrorCode::invalid_argument, "k must be >= 1");
  return std::vector<double>(k, std::pow(static_cast<double>(order), 1.0 - 1.0 / k));
}

UniversalSetResult random_universal_for(const Subset& x, unsigned k, std::uint64_t seed,
                                        const std::optional<Subset>& carrier, const ConstructionOptions& opts) {
  if (k == 0) throw Error(ErrorCode::invalid_argument, "k must be >= 1");
  if (x.size() <= 1) throw Error(ErrorCode::invalid_argument, "random construction needs |X| > 1");
  if (carrier) {
    require_same_group(x, *carrier);
    if (carrier->size() != x.size()) throw Error(ErrorCode::invalid_argument, "carrier must have |X*| = |X|");
  }
  const Group& G = x.group();
  const double xs = static_cast<double>(x.size());
  const double log_x = std::log(xs);
  const double kd = static_cast<double>(k);

  UniversalSetResult res{.set = Subset(G), .k = k};
  res.method = Method::random;
  res.seed = seed;
  if (!x.is_full()) res.scope = x;

  const Subset z = product_set(carrier ? *carrier : x, x);
  const double zs = static_cast<double>(z.size());
  const double keep = std::pow(xs / (2.0 * kd * kd * kd * log_x), -1.0 / kd);
  const auto doubling = is_non_doubling(x);
  const double remark_bound = 12.0 * zs * std::pow(log_x, 1.0 / kd) / std::pow(xs, 1.0 / kd);
  const double proven_bound = 36.0 * std::pow(xs, 1.0 - 1.0 / kd) * std::pow(log_x, 1.0 / kd);
  res.metrics["p"] = keep;
  res.metrics["z_size"] = zs;
  res.metrics["xx_size"] = static_cast<double>(doubling.product_size);
  res.metrics["acceptance_size"] = 3.0 * keep * zs;
  res.metrics["remark_bound"] = remark_bound;
  if (carrier) {
    res.size_bound = remark_bound;
    res.bound_guaranteed = true;
  } else {
    res.size_bound = proven_bound;
    res.bound_guaranteed = doubling.non_doubling;
  }

  if (k == 1) {
    // Any single element of G is 1-universal.
    res.set.insert(x.front());
    res.verdict = verify_universal_for(res.set, x, k, opts.verify);
    res.notes.push_back("k = 1: a singleton is 1-universal");
    res.bound_guaranteed = true;
    return res;
  }
  if (keep >= 1.0 || k > x.size()) {
    res.set = x;
    res.verdict = verify_universal_for(res.set, x, std::min<unsigned>(k, static_cast<unsigned>(x.size())), opts.verify);
    res.notes.push_back("p >= 1: X itself is k-universal for X");
    res.bound_guaranteed = res.bound_guaranteed || x.size() <= res.size_bound;
    return res;
  }

  const auto zs_elems = z.elements();
  const double accept_size = 3.0 * keep * zs;
  const Rng root(seed);
  for (unsigned attempt = 0; attempt < opts.retry_cap; ++attempt) {
    Rng rng = root.split(attempt);
    Subset u(G);
    for (Element e : zs_elems)
      if (rng.bernoulli(keep)) u.insert(e);
    res.attempts = attempt + 1;
    if (static_cast<double>(u.size()) > accept_size) continue;
    VerifyOptions vo = opts.verify;
    vo.seed = root.split(0x5eed0000ULL + attempt).seed();
    Verdict verdict = verify_universal_for(u, x, k, vo);
    if (verdict.pass) {
      res.set = std::move(u);
      res.verdict = std::move(verdict);
      return res;
    }
  }
  throw Error(ErrorCode::retry_budget_exhausted,
              "no verified sample within " + std::to_string(opts.retry_cap) + " attempts");
}

}  // namespace unisets
