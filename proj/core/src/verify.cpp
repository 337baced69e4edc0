#include "unisets/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "unisets/error.hpp"
#include "unisets/numeric.hpp"
#include "unisets/rng.hpp"

namespace unisets {

namespace {

bool is_whole(const Subset& x) { return x.is_full(); }

// Advances a sorted k-combination of indices in [0, n); false when exhausted.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Membership test through the U-anchored search: g must map w_0 into U.
bool translate_exists(const Group& G, const Subset& u, const std::vector<Element>& us,
                      std::span<const Element> w) {
  if (w.empty()) return true;
  const Element w0_inv = G.inv(w[0]);
  for (Element anchor : us) {
    const Element g = G.mul(anchor, w0_inv);
    bool ok = true;
    for (std::size_t i = 1; i < w.size() && ok; ++i) ok = u.contains(G.mul(g, w[i]));
    if (ok) return true;
  }
  return false;
}

double escape_probability(double population, std::uint64_t trials) {
  if (!(population > 1.0)) return 0.0;
  return std::exp(static_cast<double>(trials) * std::log1p(-1.0 / population));
}

bool choose_exact(VerifyMode mode, double cost, double budget) {
  if (mode == VerifyMode::exact) {
    if (cost > budget)
      throw Error(ErrorCode::exact_infeasible,
                  "exact check costs " + std::to_string(cost) + " steps, budget " + std::to_string(budget));
    return true;
  }
  if (mode == VerifyMode::sampled) return false;
  return cost <= budget;
}

}  // namespace

double universal_check_cost(const Subset& x, unsigned k) {
  const double order = static_cast<double>(x.group().order());
  if (k == 0) return 1.0;
  if (is_whole(x)) return binomial(x.size() - 1, k - 1) * order * k;
  return binomial(x.size(), k) * order * k;
}

double tuple_check_cost(std::uint64_t order, unsigned k) {
  return std::pow(static_cast<double>(order), static_cast<double>(k)) * k;
}

bool has_translate_in(const Subset& u, std::span<const Element> w) {
  return translate_exists(u.group(), u, u.elements(), w);
}

Verdict verify_universal_for(const Subset& u, const Subset& x, unsigned k, const VerifyOptions& opts) {
  require_same_group(u, x);
  if (k > x.size())
    throw Error(ErrorCode::invalid_argument,
                "k = " + std::to_string(k) + " exceeds |X| = " + std::to_string(x.size()));
  const Group& G = u.group();
  const auto us = u.elements();
  const auto xs = x.elements();

  Verdict v;
  if (choose_exact(opts.mode, universal_check_cost(x, k), opts.exact_budget)) {
    v.mode = Verdict::Mode::exact;
    v.pass = true;
    if (k == 0) return v;
    std::vector<Element> w(k);
    if (is_whole(x)) {
      // Every k-subset has a translate containing e, so it suffices to check those.
      std::vector<Element> others;
      others.reserve(xs.size() - 1);
      for (Element e : xs)
        if (e != G.identity()) others.push_back(e);
      std::vector<std::size_t> idx(k - 1);
      for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
      do {
        w[0] = G.identity();
        for (std::size_t i = 0; i + 1 < k; ++i) w[i + 1] = others[idx[i]];
        if (!translate_exists(G, u, us, w)) {
          v.pass = false;
          v.witness = w;
          std::sort(v.witness.begin(), v.witness.end());
          return v;
        }
      } while (k > 1 && next_combination(idx, others.size()));
    } else {
      std::vector<std::size_t> idx(k);
      for (std::size_t i = 0; i < k; ++i) idx[i] = i;
      do {
        for (std::size_t i = 0; i < k; ++i) w[i] = xs[idx[i]];
        if (!translate_exists(G, u, us, w)) {
          v.pass = false;
          v.witness = w;
          return v;
        }
      } while (next_combination(idx, xs.size()));
    }
    return v;
  }

  v.mode = Verdict::Mode::sampled;
  v.seed = opts.seed;
  v.trials = opts.trials;
  v.pass = true;
  Rng rng(opts.seed);
  std::vector<Element> w;
  for (std::uint64_t t = 0; t < opts.trials; ++t) {
    w.clear();
    while (w.size() < k) {
      const Element e = xs[rng.uniform(xs.size())];
      if (std::find(w.begin(), w.end(), e) == w.end()) w.push_back(e);
    }
    if (!translate_exists(G, u, us, w)) {
      v.pass = false;
      std::sort(w.begin(), w.end());
      v.witness = w;
      v.trials = t + 1;
      return v;
    }
  }
  v.failure_bound = escape_probability(binomial(xs.size(), k), opts.trials);
  return v;
}

Verdict verify_universal(const Subset& u, unsigned k, const VerifyOptions& opts) {
  return verify_universal_for(u, Subset::full(u.group()), k, opts);
}

bool tuple_has_translate(std::span<const Subset> tuple, std::span<const Element> w) {
  if (tuple.empty()) return true;
  const Group& G = tuple.front().group();
  const Element w0_inv = G.inv(w[0]);
  bool found = false;
  tuple.front().for_each([&](Element anchor) {
    if (found) return;
    const Element g = G.mul(anchor, w0_inv);
    for (std::size_t i = 1; i < tuple.size(); ++i)
      if (!tuple[i].contains(G.mul(g, w[i]))) return;
    found = true;
  });
  return found;
}

bool tuple_difference_cover(std::span<const Subset> tuple) {
  if (tuple.empty()) return true;
  const Group& G = tuple.front().group();
  const std::uint64_t n = G.order();
  const std::size_t k = tuple.size();
  if (k == 1) return !tuple[0].empty();
  std::vector<std::vector<Element>> members(k);
  for (std::size_t i = 0; i < k; ++i) members[i] = tuple[i].elements();

  std::uint64_t cells = 1;
  for (std::size_t i = 0; i + 1 < k; ++i) cells *= n;
  std::vector<char> hit(cells, 0);
  std::uint64_t remaining = cells;

  // Depth-first over (u_1, ..., u_k); `code` accumulates the difference tuple in base n.
  std::vector<std::uint64_t> code(k, 0);
  auto rec = [&](auto&& self, std::size_t i, Element prev) -> void {
    if (remaining == 0) return;
    if (i == k) {
      if (!hit[code[k - 1]]) {
        hit[code[k - 1]] = 1;
        --remaining;
      }
      return;
    }
    for (Element ui : members[i]) {
      code[i] = code[i - 1] * n + G.mul(G.inv(prev), ui);
      self(self, i + 1, ui);
    }
  };
  for (Element u1 : members[0]) {
    code[0] = 0;
    rec(rec, 1, u1);
  }
  return remaining == 0;
}

Verdict verify_tuple(std::span<const Subset> tuple, const VerifyOptions& opts) {
  if (tuple.empty()) throw Error(ErrorCode::invalid_argument, "empty tuple");
  for (const auto& s : tuple) require_same_group(tuple.front(), s);
  const Group& G = tuple.front().group();
  const auto k = static_cast<unsigned>(tuple.size());
  const std::uint64_t n = G.order();

  Verdict v;
  if (choose_exact(opts.mode, tuple_check_cost(n, k), opts.exact_budget)) {
    v.mode = Verdict::Mode::exact;
    v.pass = true;
    // w_1 = e without loss of generality; odometer over (w_2, ..., w_k).
    std::vector<Element> w(k, 0);
    w[0] = G.identity();
    for (;;) {
      if (!tuple_has_translate(tuple, w)) {
        v.pass = false;
        v.witness = w;
        break;
      }
      std::size_t i = k;
      while (i > 1 && ++w[i - 1] == n) w[--i] = 0;
      if (i <= 1) break;
    }
  } else {
    v.mode = Verdict::Mode::sampled;
    v.seed = opts.seed;
    v.trials = opts.trials;
    v.pass = true;
    Rng rng(opts.seed);
    std::vector<Element> w(k);
    for (std::uint64_t t = 0; t < opts.trials; ++t) {
      for (auto& e : w) e = static_cast<Element>(rng.uniform(n));
      if (!tuple_has_translate(tuple, w)) {
        v.pass = false;
        v.witness = w;
        v.trials = t + 1;
        return v;
      }
    }
    v.failure_bound = escape_probability(std::pow(static_cast<double>(n), k), opts.trials);
    return v;
  }

  double tuple_product = 1.0;
  for (const auto& s : tuple) tuple_product *= static_cast<double>(std::max<std::size_t>(s.size(), 1));
  const double cells = std::pow(static_cast<double>(n), k - 1.0);
  if (tuple_product <= opts.exact_budget && cells <= opts.exact_budget) {
    const bool cover = tuple_difference_cover(tuple);
    v.characterizations_agree = cover == v.pass;
    if (cover != v.pass)
      throw std::logic_error("universal tuple characterizations disagree (direct=" + std::to_string(v.pass) + ")");
  }
  return v;
}

Verdict verify_basis(const Subset& b, const Subset& a) {
  require_same_group(a, b);
  Verdict v;
  v.mode = Verdict::Mode::exact;
  const Subset bb = product_set(b, b);
  v.pass = true;
  a.for_each([&](Element x) {
    if (v.pass && !bb.contains(x)) {
      v.pass = false;
      v.witness = {x};
    }
  });
  return v;
}

}  // namespace unisets
