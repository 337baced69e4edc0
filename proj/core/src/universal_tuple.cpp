#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "unisets/error.hpp"
#include "unisets/rng.hpp"
#include "unisets/universal.hpp"

namespace unisets {

namespace {

constexpr double kRelTol = 1e-9;

void require_verified(const UniversalTuple& t, const char* where) {
  if (!t.verdict || !t.verdict->pass)
    throw std::logic_error(std::string(where) + ": constructed tuple failed verification");
}

}  // namespace

UniversalTuple binary_tuple(std::uint64_t n, std::span<const double> targets, const ConstructionOptions& opts) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "binary_tuple needs n >= 1");
  check_targets(n, targets);
  const auto k = targets.size();
  const double nd = static_cast<double>(n);

  BinaryTupleInfo info;
  double slack = 1.0;  // prod_{i<=r} t_i / 2^{p_i}, kept in [1/2, 1]
  for (double s : targets) {
    const double t = nd / s;
    const double x = 2.0 * t * slack;
    // Smallest a >= 0 with x/2 <= 2^a <= x.
    const int a = std::max(0, static_cast<int>(std::ceil(std::log2(x) - 1.0 - kRelTol)));
    info.t.push_back(t);
    info.p.push_back(static_cast<unsigned>(a));
    slack *= t / std::ldexp(1.0, a);
  }

  // Prefix condition: prod t_i <= prod 2^{p_i} <= 2 prod t_i for every prefix.
  double log_t = 0.0;
  unsigned bits = 0;
  for (std::size_t r = 0; r < k; ++r) {
    log_t += std::log2(info.t[r]);
    bits += info.p[r];
    const double tol = kRelTol * std::max(1.0, std::abs(log_t));
    if (bits + tol < log_t || bits > log_t + 1.0 + tol)
      throw std::logic_error("binary_tuple: prefix size condition violated");
  }
  info.total_bits = bits;
  if (bits > 40) throw Error(ErrorCode::invalid_argument, "binary_tuple universe too large");
  const std::uint64_t universe = std::uint64_t{1} << bits;
  if (universe < n || universe > 2 * n) throw std::logic_error("binary_tuple: 2^P outside [n, 2n]");

  const Group G = Group::cyclic(n);
  UniversalTuple out;
  out.method = "binary";
  out.targets.assign(targets.begin(), targets.end());
  unsigned offset = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const std::uint64_t mask = ((std::uint64_t{1} << info.p[i]) - 1) << offset;
    Subset u(G);
    // Z_i = {m in [1, 2^P + n] : (m mod 2^P) has zero digits in block i}; U_i = Z_i mod n.
    for (std::uint64_t m = 1; m <= universe + n; ++m) {
      if (((m & (universe - 1)) & mask) == 0) u.insert(static_cast<Element>(m % n));
    }
    out.sets.push_back(std::move(u));
    out.size_bounds.push_back(8.0 * targets[i]);
    offset += info.p[i];
  }
  out.binary = std::move(info);
  for (std::size_t i = 0; i < k; ++i)
    if (static_cast<double>(out.sets[i].size()) > out.size_bounds[i] * (1.0 + kRelTol))
      throw std::logic_error("binary_tuple: |U_i| exceeds 8 s_i");
  out.verdict = verify_tuple(out.sets, opts.verify);
  require_verified(out, "binary_tuple");
  return out;
}

Embedding Embedding::make(Group sub, Group ambient, std::vector<Element> image) {
  if (image.size() != sub.order()) throw Error(ErrorCode::invalid_argument, "embedding image has the wrong size");
  std::vector<char> seen(ambient.order(), 0);
  for (Element e : image) {
    if (e >= ambient.order()) throw Error(ErrorCode::invalid_argument, "embedding image outside the ambient group");
    if (seen[e]++) throw Error(ErrorCode::invalid_argument, "embedding is not injective");
  }
  const std::uint64_t n = sub.order();
  auto check = [&](Element a, Element b) {
    if (image[sub.mul(a, b)] != ambient.mul(image[a], image[b]))
      throw Error(ErrorCode::invalid_argument, "embedding is not a homomorphism");
  };
  if (n * n <= 4'000'000) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) check(a, b);
  } else {
    Rng rng(0xe3bedULL);
    for (int i = 0; i < 200'000; ++i)
      check(static_cast<Element>(rng.uniform(n)), static_cast<Element>(rng.uniform(n)));
  }
  return Embedding{std::move(sub), std::move(ambient), std::move(image)};
}

Subset Embedding::image_subset() const { return Subset(ambient, image); }

Subset Embedding::map(const Subset& s) const {
  if (!(s.group() == sub)) throw Error(ErrorCode::group_mismatch, "subset is not over the embedded group");
  Subset out(ambient);
  s.for_each([&](Element e) { out.insert(image[e]); });
  return out;
}

Embedding embed_cyclic_subgroup(std::uint64_t n, std::uint64_t d) {
  if (d == 0 || n % d != 0) throw Error(ErrorCode::invalid_argument, "d must divide n");
  const Group ambient = Group::cyclic(n);
  const Group sub = Group::cyclic(n / d);
  std::vector<Element> image(sub.order());
  for (Element x = 0; x < sub.order(); ++x) image[x] = static_cast<Element>(x * d);
  return Embedding::make(sub, ambient, std::move(image));
}

Embedding embed_point_stabilizer(unsigned n, const GroupLimits& limits) {
  if (n < 2) throw Error(ErrorCode::invalid_argument, "point stabilizer needs n >= 2");
  const Group ambient = Group::make(GroupSpec::symmetric(n), limits);
  const Group sub = Group::make(GroupSpec::symmetric(n - 1), limits);
  std::vector<Element> image(sub.order());
  for (Element x = 0; x < sub.order(); ++x) {
    auto perm = sub.decode_permutation(x);
    perm.push_back(n - 1);
    image[x] = ambient.encode_permutation(perm);
  }
  return Embedding::make(sub, ambient, std::move(image));
}

Embedding embed_factor_complement(const Group& product, std::size_t dropped) {
  const auto orders = product.cyclic_factor_orders();
  if (product.kind() != GroupSpec::Kind::product || orders.size() < 2 || dropped >= orders.size())
    throw Error(ErrorCode::invalid_argument, "need a product of at least two cyclic factors");
  std::vector<GroupSpec> rest;
  for (std::size_t i = 0; i < orders.size(); ++i)
    if (i != dropped) rest.push_back(GroupSpec::cyclic(orders[i]));
  const Group sub = rest.size() == 1 ? Group::make(rest.front()) : Group::make(GroupSpec::product(rest));
  std::vector<Element> image(sub.order());
  for (Element x = 0; x < sub.order(); ++x) {
    std::vector<Element> coords = rest.size() == 1 ? std::vector<Element>{x} : sub.decode_tuple(x);
    coords.insert(coords.begin() + static_cast<std::ptrdiff_t>(dropped), 0);
    image[x] = product.encode_tuple(coords);
  }
  return Embedding::make(sub, product, std::move(image));
}

LiftPlan plan_lift(std::uint64_t group_order, std::uint64_t subgroup_order, unsigned k,
                   std::span<const double> targets) {
  using boost::multiprecision::cpp_int;
  if (targets.size() != k) throw Error(ErrorCode::invalid_argument, "need one target per tuple entry");
  if (subgroup_order == 0 || group_order % subgroup_order != 0)
    throw Error(ErrorCode::invalid_argument, "subgroup order must divide the group order");
  cpp_int lhs = 1, rhs = 1;
  for (unsigned i = 0; i < k; ++i) lhs *= subgroup_order;
  for (unsigned i = 0; i + 1 < k; ++i) rhs *= group_order;
  if (lhs < rhs)
    throw Error(ErrorCode::subgroup_too_small, "|H| = " + std::to_string(subgroup_order) + " < |G|^{1-1/k}");

  const double g = static_cast<double>(group_order);
  const double h = static_cast<double>(subgroup_order);
  const double index = g / h;
  for (std::size_t j = 0; j < k; ++j) {
    if (targets[j] > h * (1.0 + kRelTol)) continue;
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i)
      if (i != j) ok = targets[i] >= index * (1.0 - kRelTol);
    if (!ok) continue;
    LiftPlan plan;
    plan.j = j;
    plan.inner_targets.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
      const double t = i == j ? targets[i] : targets[i] * h / g;
      plan.inner_targets[i] = std::clamp(t, 1.0, h);
    }
    return plan;
  }
  throw Error(ErrorCode::no_valid_index, "targets admit no lifting index");
}

UniversalTuple lift_tuple(const Embedding& h, const UniversalTuple& inner, std::span<const double> targets,
                          const ConstructionOptions& opts) {
  const Group& G = h.ambient;
  check_targets(G.order(), targets);
  if (inner.k() != targets.size()) throw Error(ErrorCode::invalid_argument, "inner tuple has the wrong length");
  if (!(inner.group() == h.sub)) throw Error(ErrorCode::group_mismatch, "inner tuple is not over the subgroup");
  if (!inner.verdict) {
    if (!verify_tuple(inner.sets, opts.verify).pass) throw Error(ErrorCode::unverified_tuple, "inner tuple is not universal");
  } else if (!inner.verdict->pass) {
    throw Error(ErrorCode::unverified_tuple, "inner tuple failed verification");
  }

  const LiftPlan plan = plan_lift(G.order(), h.sub.order(), inner.k(), targets);
  for (std::size_t i = 0; i < plan.inner_targets.size(); ++i) {
    if (std::abs(plan.inner_targets[i] - inner.targets[i]) > 1e-6 * plan.inner_targets[i])
      throw Error(ErrorCode::bad_targets, "inner tuple targets do not match the lifting plan");
  }

  const Subset coset_reps(G, right_coset_representatives(h.image_subset()));
  UniversalTuple out;
  out.method = "lift(" + inner.method + ")";
  out.targets.assign(targets.begin(), targets.end());
  for (std::size_t i = 0; i < inner.k(); ++i) {
    const Subset mapped = h.map(inner.sets[i]);
    const double inner_bound = i < inner.size_bounds.size() ? inner.size_bounds[i] : inner.sets[i].size();
    if (i == plan.j) {
      out.sets.push_back(mapped);
      out.size_bounds.push_back(inner_bound);
    } else {
      out.sets.push_back(product_set(mapped, coset_reps));
      out.size_bounds.push_back(inner_bound * static_cast<double>(coset_reps.size()));
    }
  }
  // sum |Y_i|/s_i <= sum |U_i|/t_i
  if (out.cost() > inner.cost() * (1.0 + kRelTol))
    throw std::logic_error("lift_tuple: cost functional increased");
  out.verdict = verify_tuple(out.sets, opts.verify);
  require_verified(out, "lift_tuple");
  return out;
}

namespace {

UniversalTuple trivial_tuple(const Group& G, unsigned k, const ConstructionOptions& opts) {
  UniversalTuple out;
  out.method = "trivial";
  for (unsigned i = 0; i < k; ++i) {
    out.sets.push_back(Subset::full(G));
    out.targets.push_back(1.0);
    out.size_bounds.push_back(1.0);
  }
  out.verdict = verify_tuple(out.sets, opts.verify);
  return out;
}

}  // namespace

UniversalTuple abelian_tuple(const Group& g, std::span<const double> targets, const ConstructionOptions& opts,
                             AbelianRoute route) {
  const auto orders = g.cyclic_factor_orders();
  check_targets(g.order(), targets);
  const auto k = static_cast<unsigned>(targets.size());
  if (g.order() == 1) return trivial_tuple(g, k, opts);
  if (g.kind() == GroupSpec::Kind::cyclic) return binary_tuple(g.order(), targets, opts);

  const std::size_t t = orders.size();
  if (route == AbelianRoute::automatic) {
    // Drop a factor of order <= |G|^{1/k} (order-1 factors first) and lift.
    const auto smallest = static_cast<std::size_t>(std::min_element(orders.begin(), orders.end()) - orders.begin());
    if (orders[smallest] == 1 || t >= k) {
      const Embedding emb = embed_factor_complement(g, smallest);
      const LiftPlan plan = plan_lift(g.order(), emb.sub.order(), k, targets);
      UniversalTuple inner = abelian_tuple(emb.sub, plan.inner_targets, opts, route);
      UniversalTuple out = lift_tuple(emb, inner, targets, opts);
      out.method = "abelian-lift(" + inner.method + ")";
      return out;
    }
  }

  // Cartesian assembly of per-factor binary tuples with targets s_i^{log_|G| |G_r|}.
  const double log_g = std::log(static_cast<double>(g.order()));
  std::vector<UniversalTuple> per_factor;
  for (std::uint64_t nr : orders) {
    const double e = std::log(static_cast<double>(nr)) / log_g;
    std::vector<double> local(k);
    for (unsigned i = 0; i < k; ++i) local[i] = std::clamp(std::pow(targets[i], e), 1.0, static_cast<double>(nr));
    per_factor.push_back(binary_tuple(nr, local, opts));
  }
  UniversalTuple out;
  out.method = "abelian";
  out.targets.assign(targets.begin(), targets.end());
  for (unsigned i = 0; i < k; ++i) {
    Subset u(g);
    std::vector<std::vector<Element>> parts(t);
    for (std::size_t r = 0; r < t; ++r) parts[r] = per_factor[r].sets[i].elements();
    std::vector<Element> coords(t);
    auto rec = [&](auto&& self, std::size_t r) -> void {
      if (r == t) {
        u.insert(g.encode_tuple(coords));
        return;
      }
      for (Element c : parts[r]) {
        coords[r] = c;
        self(self, r + 1);
      }
    };
    rec(rec, 0);
    out.sets.push_back(std::move(u));
    out.size_bounds.push_back(std::pow(8.0, static_cast<double>(t)) * targets[i]);
  }
  out.verdict = verify_tuple(out.sets, opts.verify);
  require_verified(out, "abelian_tuple");
  return out;
}

UniversalSetResult tuple_to_universal_set(const UniversalTuple& t, const ConstructionOptions& opts) {
  if (!t.verified()) throw Error(ErrorCode::unverified_tuple, "tuple has no passing verdict");
  const Group& G = t.group();
  UniversalSetResult res{.set = Subset(G), .k = t.k()};
  res.method = Method::tuple_union;
  for (const auto& s : t.sets) res.set |= s;
  res.size_bound = 0.0;
  for (double b : t.size_bounds) res.size_bound += b;
  res.bound_guaranteed = true;
  res.metrics["tuple_cost"] = t.cost();
  res.notes.push_back("union of a " + t.method + " tuple");
  res.verdict = verify_universal(res.set, std::min<unsigned>(t.k(), static_cast<unsigned>(G.order())), opts.verify);
  return res;
}

}  // namespace unisets
