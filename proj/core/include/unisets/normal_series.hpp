#pragma once

#include <vector>

#include "unisets/subset.hpp"

namespace unisets {

/// G = G_0 > G_1 > ... > G_k = {e}, each G_{i+1} a normal subgroup of G_i with
/// cyclic quotient generated by the coset h_i G_{i+1}.
class NormalSeries {
 public:
  /// Validates the chain and throws InvalidSeries on any violated invariant.
  static NormalSeries make(std::vector<Subset> chain, std::vector<Element> generators);

  const Group& group() const noexcept { return chain_.front().group(); }
  const std::vector<Subset>& chain() const noexcept { return chain_; }
  const std::vector<Element>& generators() const noexcept { return generators_; }
  std::size_t steps() const noexcept { return generators_.size(); }

 private:
  NormalSeries(std::vector<Subset> chain, std::vector<Element> generators)
      : chain_(std::move(chain)), generators_(std::move(generators)) {}

  std::vector<Subset> chain_;
  std::vector<Element> generators_;
};

}  // namespace unisets
