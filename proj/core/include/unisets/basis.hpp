#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unisets/normal_series.hpp"
#include "unisets/universal.hpp"

namespace unisets {

struct CoveringResult {
  Subset y;
  /// "trivial", "sqrt-regime" or "random-growth", with "+patch" when the
  /// random phase left gaps that were closed greedily.
  std::string strategy;
  double regime_size = 0.0;    // sqrt(n)/log n
  double expected_size = 0.0;  // (n/|X|) log n
  bool in_regime = false;      // |X| >= sqrt(n) log^2 n
  unsigned attempts = 0;       // random draws
};

/// A set Y with YX = G, checked exactly before returning. Throws EmptySet.
CoveringResult covering_set(const Subset& x, std::uint64_t seed);

/// X = h^0 G_{i+1} u ... u h^{t-1} G_{i+1} for the first i with |G_{i+1}| < x,
/// t = ceil(x / |G_{i+1}|). Guarantees x <= |X| <= 2x and |XX| <= 3|X|.
/// Throws XOutOfRange unless 1 < x <= |G|.
Subset non_doubling_in_solvable(const NormalSeries& series, double x);

/// Normal series with cyclic quotients for cyclic groups, products of groups
/// that have one, and S_n with n <= 4. Throws NoKnownSeries otherwise.
NormalSeries builtin_series(const Group& g);

struct BasisConfig {
  std::optional<unsigned> k;
  std::optional<Subset> x;
  /// X* for the non-expanding variant; passed through to the universal set.
  std::optional<Subset> carrier;
  std::uint64_t seed = 0;
  ConstructionOptions construction;
};

/// g = y * h^{-1} where h moves y^{-1} T into U, so T is inside gU.
struct Translator {
  std::size_t i = 0;  // index into the covering set
  std::size_t j = 0;  // block number inside A_i
  std::vector<Element> block;
  Element g = 0;
  Element y = 0;
};

struct BasisResult {
  Subset basis;
  Subset target;
  Subset x;
  std::string x_source;  // "override" or "series"
  CoveringResult covering;
  UniversalSetResult universal;
  std::vector<Translator> translators;
  unsigned k = 1;
  double k_formula = 0.0;  // log n / (30 log log n) before clamping
  double size_budget = 0.0;
  bool en_bound_applicable = false;
  bool target_oversized = false;  // |A| > sqrt(n)
  std::uint64_t seed = 0;
  Verdict verdict;
  std::vector<std::string> notes;

  /// Blocks allowed by the counting argument: |A|/k + |Y|.
  double translator_allowance() const;
};

/// 50 sqrt(n) log log n / log n, or 0 for n < 3 where it is not positive.
double en_size_budget(std::uint64_t n);

/// Builds B with A inside BB; the containment is always verified exactly.
BasisResult en_basis(const Subset& a, const BasisConfig& config = {});

}  // namespace unisets
