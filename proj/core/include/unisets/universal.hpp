#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "unisets/field.hpp"
#include "unisets/subset.hpp"
#include "unisets/verify.hpp"

namespace unisets {

enum class Method { random, singer, cyclic, tuple_union, symmetric, abelian };

std::string_view to_string(Method m) noexcept;
std::optional<Method> method_from_string(std::string_view s) noexcept;

struct ConstructionOptions {
  VerifyOptions verify;
  unsigned retry_cap = 64;
  std::uint64_t field_limit = kDefaultFieldLimit;
};

/// A k-universal set (for the whole group, or for a recorded X) together with
/// how it was built and how it was checked.
struct UniversalSetResult {
  Subset set;
  unsigned k = 0;
  std::optional<Subset> scope;  // nullopt: whole group
  Method method = Method::random;
  /// The method's size bound at this instance.
  double size_bound = 0.0;
  /// Whether the method provably guarantees |set| <= size_bound here.
  bool bound_guaranteed = false;
  std::optional<std::uint64_t> seed;
  unsigned attempts = 0;
  Verdict verdict;
  std::map<std::string, double> metrics;
  std::vector<std::string> notes;

  /// (1/2)|G|^{1-1/k}, the counting lower bound for whole-group universality.
  double lower_bound() const;
};

/// Provenance of the binary-digit tuple construction.
struct BinaryTupleInfo {
  std::vector<double> t;       // |G| / s_i
  std::vector<unsigned> p;     // digit-block widths
  unsigned total_bits = 0;     // P
};

/// An ordered k-tuple (U_1, ..., U_k) over one group with real targets s_i,
/// prod s_i = |G|^{k-1}.
struct UniversalTuple {
  std::vector<Subset> sets;
  std::vector<double> targets;
  /// Per-entry size bounds guaranteed by the construction.
  std::vector<double> size_bounds;
  std::string method;
  std::optional<Verdict> verdict;
  std::optional<BinaryTupleInfo> binary;

  const Group& group() const { return sets.front().group(); }
  unsigned k() const noexcept { return static_cast<unsigned>(sets.size()); }
  /// sum |U_i| / s_i
  double cost() const;
  bool verified() const noexcept { return verdict && verdict->pass; }
};

/// Diagnostics every universal tuple must satisfy once verified.
struct TupleCertificate {
  bool product_bound_holds = false;  // prod |U_i| >= |G|^{k-1}, exact integers
  bool cost_at_least_k = false;      // sum |U_i|/s_i >= k
  double cost = 0.0;
  double log_product = 0.0;          // log prod |U_i|
  double log_required = 0.0;         // (k-1) log |G|
};

TupleCertificate certify(const UniversalTuple& t);

/// Throws BadTargets unless 1 <= s_i <= order and prod s_i = order^{k-1}
/// (relative tolerance 1e-9).
void check_targets(std::uint64_t order, std::span<const double> targets);
std::vector<double> uniform_targets(std::uint64_t order, unsigned k);

// ---------------------------------------------------------------------------
// Probabilistic construction

/// Las Vegas construction of a set that is k-universal for X: each element of
/// Z = X*X (X* = X by default) is kept with probability
/// p = (|X| / (2k^3 log|X|))^{-1/k}; a sample is accepted once it is verified
/// and |U| <= 3p|Z|. If p >= 1, X itself is returned.
UniversalSetResult random_universal_for(const Subset& x, unsigned k, std::uint64_t seed,
                                        const std::optional<Subset>& carrier = std::nullopt,
                                        const ConstructionOptions& opts = {});

// ---------------------------------------------------------------------------
// Singer-type and cyclic constructions

struct SingerResult {
  std::uint64_t p = 0;
  unsigned k = 0;
  std::uint64_t r = 0;          // (p^{k+1}-1)/(p-1)
  Subset x;                     // subset of Z/rZ, |X| = (p^k-1)/(p-1)
  std::vector<std::uint64_t> y; // X u (X + r) inside {1, ..., 2r}
  Verdict verdict;
  FieldElement omega = 0;
  std::vector<std::uint32_t> modulus;
};

SingerResult singer_universal(std::uint64_t p, unsigned k, const ConstructionOptions& opts = {});

/// k-universal set for Z/nZ from the Singer set of the smallest prime p with p^k >= n.
UniversalSetResult cyclic_universal(std::uint64_t n, unsigned k, const ConstructionOptions& opts = {});

// ---------------------------------------------------------------------------
// Universal tuples

/// Binary-digit construction for Z/nZ with |U_i| <= 8 s_i.
UniversalTuple binary_tuple(std::uint64_t n, std::span<const double> targets,
                            const ConstructionOptions& opts = {});

/// An injective homomorphism from `sub` into `ambient`; image[i] is the image of element i.
struct Embedding {
  Group sub;
  Group ambient;
  std::vector<Element> image;

  /// Validates injectivity and the homomorphism property (exhaustive for
  /// small subgroups, sampled above). Throws InvalidArgument.
  static Embedding make(Group sub, Group ambient, std::vector<Element> image);

  Subset image_subset() const;
  Subset map(const Subset& s) const;
};

/// Z/(n/d)Z -> Z/nZ, x -> d*x.
Embedding embed_cyclic_subgroup(std::uint64_t n, std::uint64_t d);
/// S_{n-1} -> S_n as the stabilizer of the point n-1.
Embedding embed_point_stabilizer(unsigned n, const GroupLimits& limits = {});
/// The product of all factors except `dropped` into a product of cyclic groups.
Embedding embed_factor_complement(const Group& product, std::size_t dropped);

struct LiftPlan {
  std::size_t j = 0;
  std::vector<double> inner_targets;
};

/// Locates the smallest index j with s_j <= |H| and s_i >= |G|/|H| for i != j,
/// and the subgroup targets t_i = s_i|H|/|G| (i != j), t_j = s_j.
/// Throws SubgroupTooSmall, NoValidIndex.
LiftPlan plan_lift(std::uint64_t group_order, std::uint64_t subgroup_order, unsigned k,
                   std::span<const double> targets);

/// Lifts a universal tuple of a subgroup H to G: Y_j = U_j, Y_i = U_i T_1 with T_1
/// the right-coset representatives of H. The result is verified for G.
UniversalTuple lift_tuple(const Embedding& h, const UniversalTuple& inner, std::span<const double> targets,
                          const ConstructionOptions& opts = {});

enum class AbelianRoute { automatic, cartesian };

/// Universal tuple for a direct product of cyclic groups.
UniversalTuple abelian_tuple(const Group& g, std::span<const double> targets, const ConstructionOptions& opts = {},
                             AbelianRoute route = AbelianRoute::automatic);

/// Universal tuple for S_n with uniform targets, by lifting along point stabilizers.
UniversalTuple symmetric_tuple(unsigned n, unsigned k, const ConstructionOptions& opts = {},
                               const GroupLimits& limits = {});
UniversalSetResult symmetric_universal(unsigned n, unsigned k, const ConstructionOptions& opts = {},
                                       const GroupLimits& limits = {});

/// Union of a verified tuple. Throws UnverifiedTuple.
UniversalSetResult tuple_to_universal_set(const UniversalTuple& t, const ConstructionOptions& opts = {});

}  // namespace unisets
