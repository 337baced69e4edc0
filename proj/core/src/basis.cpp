#include "unisets/basis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "unisets/error.hpp"
#include "unisets/rng.hpp"

namespace unisets {

CoveringResult covering_set(const Subset& x, std::uint64_t seed) {
  if (x.empty()) throw Error(ErrorCode::empty_set, "covering_set needs a nonempty X");
  const Group& G = x.group();
  const double n = static_cast<double>(G.order());
  const double ln = std::log(std::max(n, 2.0));

  CoveringResult res{.y = Subset(G)};
  res.regime_size = std::sqrt(n) / ln;
  res.expected_size = n / static_cast<double>(x.size()) * ln;
  res.in_regime = static_cast<double>(x.size()) >= std::sqrt(n) * ln * ln;

  if (x.is_full()) {
    res.y.insert(G.identity());
    res.strategy = "trivial";
    return res;
  }

  const auto xs = x.elements();
  Subset covered(G);
  auto add = [&](Element y) {
    res.y.insert(y);
    for (Element e : xs) covered.insert(G.mul(y, e));
  };
  auto useful = [&](Element y) {
    return std::any_of(xs.begin(), xs.end(), [&](Element e) { return !covered.contains(G.mul(y, e)); });
  };

  // Random phase: draw elements, keep those that cover something new.
  const double cap = res.in_regime ? std::ceil(res.regime_size) : std::max(64.0, std::ceil(4.0 * res.expected_size));
  Rng rng(seed);
  res.strategy = res.in_regime ? "sqrt-regime" : "random-growth";
  while (!covered.is_full() && res.attempts < cap) {
    const auto y = static_cast<Element>(rng.uniform(G.order()));
    ++res.attempts;
    if (useful(y)) add(y);
  }
  if (!covered.is_full()) {
    // Greedy patch: g is covered by g * x0^{-1}.
    const Element x0inv = G.inv(xs.front());
    for (Element g = 0; g < G.order(); ++g)
      if (!covered.contains(g)) add(G.mul(g, x0inv));
    res.strategy += "+patch";
  }
  if (!product_set(res.y, x).is_full()) throw std::logic_error("covering_set: YX != G");
  return res;
}

Subset non_doubling_in_solvable(const NormalSeries& series, double x) {
  const Group& G = series.group();
  const double n = static_cast<double>(G.order());
  if (!(x > 1.0) || x > n * (1.0 + 1e-12))
    throw Error(ErrorCode::x_out_of_range, "need 1 < x <= |G|, got " + std::to_string(x));
  const auto& chain = series.chain();
  std::size_t i = 0;
  while (static_cast<double>(chain[i + 1].size()) >= x) ++i;
  const Subset& next = chain[i + 1];
  const auto t = static_cast<std::uint64_t>(std::ceil(x / static_cast<double>(next.size()) - 1e-12));

  Subset out(G);
  Element power = G.identity();
  for (std::uint64_t j = 0; j < t; ++j) {
    out |= translate(power, next);
    power = G.mul(power, series.generators()[i]);
  }
  const double size = static_cast<double>(out.size());
  if (size < x * (1.0 - 1e-12) || size > 2.0 * x * (1.0 + 1e-12))
    throw std::logic_error("non_doubling_in_solvable: size outside [x, 2x]");
  if (!is_non_doubling(out).non_doubling) throw std::logic_error("non_doubling_in_solvable: XX > 3|X|");
  return out;
}

namespace {

Subset subset_where(const Group& g, auto&& pred) {
  Subset s(g);
  for (Element e = 0; e < g.order(); ++e)
    if (pred(e)) s.insert(e);
  return s;
}

bool is_even(const std::vector<unsigned>& perm) {
  unsigned inversions = 0;
  for (std::size_t a = 0; a < perm.size(); ++a)
    for (std::size_t b = a + 1; b < perm.size(); ++b) inversions += perm[a] > perm[b];
  return inversions % 2 == 0;
}

NormalSeries symmetric_series(const Group& g) {
  const unsigned n = g.degree();
  auto perm = [&](std::vector<unsigned> p) { return g.encode_permutation(p); };
  const Subset trivial = Subset::singleton(g, g.identity());
  const Subset full = Subset::full(g);
  switch (n) {
    case 1:
      return NormalSeries::make({full}, {});
    case 2:
      return NormalSeries::make({full, trivial}, {perm({1, 0})});
    case 3: {
      const Subset a3 = subset_where(g, [&](Element e) { return is_even(g.decode_permutation(e)); });
      return NormalSeries::make({full, a3, trivial}, {perm({1, 0, 2}), perm({1, 2, 0})});
    }
    case 4: {
      const Subset a4 = subset_where(g, [&](Element e) { return is_even(g.decode_permutation(e)); });
      const Element d1 = perm({1, 0, 3, 2}), d2 = perm({2, 3, 0, 1}), d3 = perm({3, 2, 1, 0});
      const Subset v4(g, {g.identity(), d1, d2, d3});
      const Subset z2(g, {g.identity(), d1});
      return NormalSeries::make({full, a4, v4, z2, trivial}, {perm({1, 0, 2, 3}), perm({1, 2, 0, 3}), d2, d1});
    }
    default:
      throw Error(ErrorCode::no_known_series, "no built-in series for S_" + std::to_string(n));
  }
}

NormalSeries product_series(const Group& g) {
  const auto factors = g.factors();
  std::vector<NormalSeries> local;
  for (const Group& f : factors) local.push_back(builtin_series(f));

  std::vector<std::vector<Element>> coords(g.order());
  for (Element e = 0; e < g.order(); ++e) coords[e] = g.decode_tuple(e);

  // Kill factors from the last to the first, walking each factor's own series.
  std::vector<Subset> chain{Subset::full(g)};
  std::vector<Element> gens;
  std::vector<Element> identity_coords;
  for (const Group& f : factors) identity_coords.push_back(f.identity());
  for (std::size_t r = factors.size(); r-- > 0;) {
    const auto& fchain = local[r].chain();
    for (std::size_t s = 0; s + 1 < fchain.size(); ++s) {
      const Subset& step = fchain[s + 1];
      chain.push_back(subset_where(g, [&](Element e) {
        const auto& c = coords[e];
        if (!step.contains(c[r])) return false;
        for (std::size_t q = r + 1; q < factors.size(); ++q)
          if (c[q] != identity_coords[q]) return false;
        return true;
      }));
      auto gc = identity_coords;
      gc[r] = local[r].generators()[s];
      gens.push_back(g.encode_tuple(gc));
    }
  }
  return NormalSeries::make(std::move(chain), std::move(gens));
}

}  // namespace

NormalSeries builtin_series(const Group& g) {
  switch (g.kind()) {
    case GroupSpec::Kind::cyclic:
      if (g.order() == 1) return NormalSeries::make({Subset::full(g)}, {});
      return NormalSeries::make({Subset::full(g), Subset::singleton(g, g.identity())}, {1});
    case GroupSpec::Kind::symmetric:
      return symmetric_series(g);
    case GroupSpec::Kind::product:
      return product_series(g);
    case GroupSpec::Kind::table:
      break;
  }
  throw Error(ErrorCode::no_known_series, "no built-in series for " + g.spec().to_string());
}

double BasisResult::translator_allowance() const {
  return static_cast<double>(target.size()) / k + static_cast<double>(covering.y.size());
}

double en_size_budget(std::uint64_t n) {
  if (n < 3) return 0.0;
  const double ln = std::log(static_cast<double>(n));
  return 50.0 * std::sqrt(static_cast<double>(n)) * std::log(ln) / ln;
}

BasisResult en_basis(const Subset& a, const BasisConfig& config) {
  const Group& G = a.group();
  const std::uint64_t n = G.order();
  const double nd = static_cast<double>(n);
  const double ln = std::log(nd);
  const Rng root(config.seed);

  BasisResult res{.basis = Subset(G), .target = a, .x = Subset(G), .covering = {.y = Subset(G)},
                  .universal = {.set = Subset(G)}};
  res.seed = config.seed;
  res.size_budget = en_size_budget(n);
  res.target_oversized = static_cast<double>(a.size()) > std::sqrt(nd);
  if (res.target_oversized) res.notes.push_back("|A| > sqrt(n): the size budget does not apply");

  if (config.x) {
    require_same_group(a, *config.x);
    if (config.x->empty()) throw Error(ErrorCode::empty_set, "X override is empty");
    res.x = *config.x;
    res.x_source = "override";
  } else if (n == 1) {
    res.x = Subset::full(G);
    res.x_source = "series";
  } else {
    const double target = std::clamp(std::sqrt(nd) * ln * ln, 2.0, nd);
    res.x = non_doubling_in_solvable(builtin_series(G), target);
    res.x_source = "series";
  }

  res.k_formula = n >= 3 ? ln / (30.0 * std::log(ln)) : 0.0;
  res.k = config.k ? *config.k : std::max(1u, static_cast<unsigned>(std::lround(std::max(0.0, res.k_formula))));
  if (res.k == 0) throw Error(ErrorCode::invalid_argument, "k must be >= 1");
  res.en_bound_applicable = res.k_formula >= 1.0 && std::sqrt(nd) * ln * ln <= nd && !res.target_oversized;

  res.covering = covering_set(res.x, root.split(1).seed());

  // A_i = (A n y_i X) minus earlier pieces, cut into blocks of at most k.
  const auto ys = res.covering.y.elements();
  Subset assigned(G);
  std::vector<std::vector<std::vector<Element>>> blocks(ys.size());
  for (std::size_t i = 0; i < ys.size(); ++i) {
    const Element yinv = G.inv(ys[i]);
    std::vector<Element> piece;
    a.for_each([&](Element e) {
      if (!assigned.contains(e) && res.x.contains(G.mul(yinv, e))) piece.push_back(e);
    });
    for (Element e : piece) assigned.insert(e);
    for (std::size_t s = 0; s < piece.size(); s += res.k)
      blocks[i].emplace_back(piece.begin() + static_cast<std::ptrdiff_t>(s),
                             piece.begin() + static_cast<std::ptrdiff_t>(std::min(piece.size(), s + res.k)));
  }
  if (!(assigned == a)) throw std::logic_error("en_basis: partition does not cover A");

  res.universal = random_universal_for(res.x, res.k, root.split(2).seed(), config.carrier, config.construction);
  const Subset& U = res.universal.set;
  res.basis = U;

  for (std::size_t i = 0; i < ys.size(); ++i) {
    const Element yinv = G.inv(ys[i]);
    for (std::size_t j = 0; j < blocks[i].size(); ++j) {
      const auto& block = blocks[i][j];
      std::vector<Element> w;
      for (Element e : block) w.push_back(G.mul(yinv, e));
      std::optional<Element> h;
      for (Element g = 0; g < n && !h; ++g)
        if (std::all_of(w.begin(), w.end(), [&](Element e) { return U.contains(G.mul(g, e)); })) h = g;
      if (!h)
        throw Error(ErrorCode::translator_not_found,
                    "no translate of block " + std::to_string(i) + "." + std::to_string(j) + " lies in U");
      Translator tr{.i = i, .j = j, .block = block, .g = G.mul(ys[i], G.inv(*h)), .y = ys[i]};
      res.basis.insert(tr.g);
      res.translators.push_back(std::move(tr));
    }
  }

  res.verdict = verify_basis(res.basis, a);
  if (!res.verdict.pass) throw std::logic_error("en_basis: A is not contained in BB");
  if (!res.universal.verdict.exact_pass()) res.notes.push_back("universal set was only sample-verified");
  return res;
}

}  // namespace unisets
