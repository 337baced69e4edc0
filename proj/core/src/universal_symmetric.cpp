#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "unisets/error.hpp"
#include "unisets/numeric.hpp"
#include "unisets/universal.hpp"

namespace unisets {

namespace {

// |S_{m-1}|^k >= |S_m|^{k-1}, i.e. (m-1)! >= m^{k-1}.
bool stabilizer_is_large(unsigned m, unsigned k) {
  using boost::multiprecision::cpp_int;
  cpp_int lhs = 1, rhs = 1;
  for (unsigned i = 2; i < m; ++i) lhs *= i;
  for (unsigned i = 0; i + 1 < k; ++i) rhs *= m;
  return lhs >= rhs;
}

UniversalTuple build(unsigned m, unsigned k, std::span<const double> targets, const ConstructionOptions& opts,
                     const GroupLimits& limits, unsigned& base_degree) {
  if (m >= 2 && stabilizer_is_large(m, k)) {
    const Embedding emb = embed_point_stabilizer(m, limits);
    const LiftPlan plan = plan_lift(emb.ambient.order(), emb.sub.order(), k, targets);
    const UniversalTuple inner = build(m - 1, k, plan.inner_targets, opts, limits, base_degree);
    return lift_tuple(emb, inner, targets, opts);
  }
  base_degree = m;
  const Group G = Group::make(GroupSpec::symmetric(m), limits);
  const auto smallest = static_cast<std::size_t>(std::min_element(targets.begin(), targets.end()) - targets.begin());
  UniversalTuple out;
  out.method = "symmetric-base";
  out.targets.assign(targets.begin(), targets.end());
  for (std::size_t i = 0; i < k; ++i) {
    if (i == smallest) {
      // g = w_i^{-1} puts w_i on the identity; every other entry is the whole group.
      out.sets.push_back(Subset::singleton(G, G.identity()));
      out.size_bounds.push_back(1.0);
    } else {
      out.sets.push_back(Subset::full(G));
      out.size_bounds.push_back(static_cast<double>(G.order()));
    }
  }
  out.verdict = verify_tuple(out.sets, opts.verify);
  if (!out.verdict->pass) throw std::logic_error("symmetric base tuple failed verification");
  return out;
}

}  // namespace

UniversalTuple symmetric_tuple(unsigned n, unsigned k, const ConstructionOptions& opts, const GroupLimits& limits) {
  if (k < 1) throw Error(ErrorCode::invalid_argument, "k must be >= 1");
  if (n < 1) throw Error(ErrorCode::invalid_argument, "degree must be >= 1");
  if (n > limits.max_symmetric_degree)
    throw Error(ErrorCode::degree_cap_exceeded,
                "degree " + std::to_string(n) + " exceeds cap " + std::to_string(limits.max_symmetric_degree));
  const auto targets = uniform_targets(factorial(n), k);
  unsigned base = n;
  UniversalTuple t = build(n, k, targets, opts, limits, base);
  t.method = "symmetric(base S_" + std::to_string(base) + ")";
  return t;
}

UniversalSetResult symmetric_universal(unsigned n, unsigned k, const ConstructionOptions& opts,
                                       const GroupLimits& limits) {
  if (k < 2) throw Error(ErrorCode::invalid_argument, "symmetric construction needs k >= 2");
  const UniversalTuple tuple = symmetric_tuple(n, k, opts, limits);
  UniversalSetResult res = tuple_to_universal_set(tuple, opts);
  res.method = Method::symmetric;
  const double order = static_cast<double>(tuple.group().order());
  res.size_bound = std::exp(std::lgamma(3.0 * k + 2.0)) * std::pow(order, 1.0 - 1.0 / k);
  res.bound_guaranteed = true;
  res.metrics["tuple_cost"] = tuple.cost();
  res.notes.push_back(tuple.method);
  return res;
}

}  // namespace unisets
