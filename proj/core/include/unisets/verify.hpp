#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "unisets/subset.hpp"

namespace unisets {

enum class VerifyMode { exact, sampled, automatic };

struct VerifyOptions {
  VerifyMode mode = VerifyMode::automatic;
  /// Elementary-step budget for exact checks.
  double exact_budget = 1e8;
  std::uint64_t trials = 100'000;
  std::uint64_t seed = 0;
};

struct Verdict {
  enum class Mode { exact, sampled };

  Mode mode = Mode::exact;
  bool pass = false;
  /// On failure: the k-subset (or k-tuple) that has no valid translate.
  std::vector<Element> witness;
  std::uint64_t trials = 0;
  std::optional<std::uint64_t> seed;
  /// Sampled passes only: probability that a single bad instance escapes
  /// every trial under uniform sampling.
  double failure_bound = 0.0;
  /// Tuple checks: whether the difference characterization was also computed,
  /// and whether it agreed with the direct definition.
  std::optional<bool> characterizations_agree;

  bool exact_pass() const noexcept { return pass && mode == Mode::exact; }
};

/// Cost estimate for exact k-universality checking, in elementary steps.
/// With X = G only k-subsets containing the identity are enumerated.
double universal_check_cost(const Subset& x, unsigned k);
double tuple_check_cost(std::uint64_t order, unsigned k);

/// Does U contain a left translate of every k-subset of X?
/// Throws ExactInfeasible if mode is exact and the cost exceeds the budget.
Verdict verify_universal_for(const Subset& u, const Subset& x, unsigned k, const VerifyOptions& opts = {});
Verdict verify_universal(const Subset& u, unsigned k, const VerifyOptions& opts = {});

/// True iff some g in G has gW contained in U.
bool has_translate_in(const Subset& u, std::span<const Element> w);

/// Universal k-tuple check by the direct definition; when enumerating G^{k-1}
/// and the tuple product is feasible the difference characterization is also
/// computed and agreement recorded (a disagreement throws std::logic_error).
Verdict verify_tuple(std::span<const Subset> tuple, const VerifyOptions& opts = {});

/// {(u_1^-1 u_2, ..., u_{k-1}^-1 u_k)} == G^{k-1}. Exponential; small instances only.
bool tuple_difference_cover(std::span<const Subset> tuple);

/// True iff some g has g*w_i in U_i for every i.
bool tuple_has_translate(std::span<const Subset> tuple, std::span<const Element> w);

/// A contained in BB. Always exact; witness is the smallest missing element.
Verdict verify_basis(const Subset& b, const Subset& a);

}  // namespace unisets
