#include "unisets/normal_series.hpp"

#include "unisets/error.hpp"

namespace unisets {

namespace {

[[noreturn]] void invalid(std::size_t step, const std::string& why) {
  throw Error(ErrorCode::invalid_series, "step " + std::to_string(step) + ": " + why);
}

}  // namespace

NormalSeries NormalSeries::make(std::vector<Subset> chain, std::vector<Element> generators) {
  if (chain.empty()) throw Error(ErrorCode::invalid_series, "empty chain");
  if (generators.size() + 1 != chain.size())
    throw Error(ErrorCode::invalid_series, "need exactly one generator per step");
  const Group& G = chain.front().group();
  for (const auto& s : chain) require_same_group(chain.front(), s);
  if (!chain.front().is_full()) throw Error(ErrorCode::invalid_series, "chain must start at the whole group");
  if (chain.back().size() != 1 || !chain.back().contains(G.identity()))
    throw Error(ErrorCode::invalid_series, "chain must end at the trivial subgroup");

  const bool abelian = G.is_abelian_cyclic_form();
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    const Subset& outer = chain[i];
    const Subset& inner = chain[i + 1];
    if (!inner.is_subset_of(outer)) invalid(i, "G_{i+1} is not contained in G_i");
    if (!is_subgroup(inner)) invalid(i, "G_{i+1} is not a subgroup");
    if (!abelian) {
      const auto inner_elems = inner.elements();
      outer.for_each([&](Element g) {
        const Element gi = G.inv(g);
        for (Element h : inner_elems)
          if (!inner.contains(G.mul(G.mul(g, h), gi))) invalid(i, "G_{i+1} is not normal in G_i");
      });
    }
    const Element h = generators[i];
    if (!outer.contains(h)) invalid(i, "generator lies outside G_i");
    // Orbit of the coset hG_{i+1} under powers of h must exhaust G_i.
    Subset covered(G);
    Element power = G.identity();
    std::size_t cosets = 0;
    do {
      covered |= translate(power, inner);
      power = G.mul(power, h);
      ++cosets;
    } while (!inner.contains(power) && cosets <= outer.size());
    if (!(covered == outer)) invalid(i, "designated coset does not generate G_i/G_{i+1}");
  }
  return NormalSeries(std::move(chain), std::move(generators));
}

}  // namespace unisets
