#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace unisets {

/// Dense element index in 0..order-1.
///
/// Structured kinds map indices to their natural elements as follows:
///  - cyclic n: index i is the residue i (mod n), identity 0.
///  - product G_0 x ... x G_{t-1}: mixed radix with factor 0 most significant,
///    so index order is lexicographic order on tuples.
///  - symmetric n: lexicographic (Lehmer) rank of the permutation in one-line
///    notation over {0..n-1}; composition is (s*t)(i) = s(t(i)), identity 0.
///  - table: the row/column index of the supplied Cayley table.
using Element = std::uint32_t;

struct GroupLimits {
  std::uint64_t max_order = 10'000'000;  // cyclic, product and table kinds
  unsigned max_symmetric_degree = 12;
};

struct GroupSpec {
  enum class Kind { cyclic, product, symmetric, table };

  Kind kind = Kind::cyclic;
  std::uint64_t n = 1;  // cyclic order, symmetric degree, or table order
  std::vector<GroupSpec> factors;
  std::vector<std::vector<Element>> table;

  static GroupSpec cyclic(std::uint64_t n);
  static GroupSpec symmetric(std::uint64_t degree);
  static GroupSpec product(std::vector<GroupSpec> factors);
  static GroupSpec from_table(std::vector<std::vector<Element>> table);

  /// Short textual form accepted by parse_group_spec (tables print as table:<order>).
  std::string to_string() const;

  bool operator==(const GroupSpec&) const = default;
};

/// Parses "cyclic:N", "sym:N" (or "symmetric:N"), "abelian:N1,N2,..." and
/// "product(SPEC;SPEC;...)". Table groups cannot be written inline.
GroupSpec parse_group_spec(std::string_view text);

std::string_view to_string(GroupSpec::Kind kind) noexcept;

/// A finite group with elements encoded as dense indices.
///
/// Cheap to copy; copies share the same immutable state. Two groups compare
/// equal when built from equal specs.
class Group {
 public:
  static Group make(const GroupSpec& spec, const GroupLimits& limits = {});
  static Group cyclic(std::uint64_t n) { return make(GroupSpec::cyclic(n)); }
  static Group symmetric(std::uint64_t n) { return make(GroupSpec::symmetric(n)); }

  const GroupSpec& spec() const noexcept;
  GroupSpec::Kind kind() const noexcept;
  std::uint64_t order() const noexcept;
  Element identity() const noexcept;

  Element mul(Element a, Element b) const;
  Element inv(Element a) const;
  Element pow(Element a, std::uint64_t e) const;

  bool contains(std::uint64_t index) const noexcept { return index < order(); }

  /// True for cyclic groups and products whose factors are all cyclic.
  bool is_abelian_cyclic_form() const noexcept;
  /// Factor orders in the direct-product-of-cyclics form (a cyclic group has one factor).
  std::vector<std::uint64_t> cyclic_factor_orders() const;

  std::span<const Group> factors() const noexcept;
  std::vector<Element> decode_tuple(Element a) const;
  Element encode_tuple(std::span<const Element> coords) const;

  unsigned degree() const noexcept;  // symmetric kind only
  std::vector<unsigned> decode_permutation(Element a) const;
  Element encode_permutation(std::span<const unsigned> perm) const;

  std::string element_to_string(Element a) const;

  bool operator==(const Group& other) const noexcept;

 private:
  struct Impl;
  explicit Group(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Lehmer rank of a permutation of {0..n-1} (lexicographic order, identity -> 0).
std::uint64_t permutation_rank(std::span<const unsigned> perm);
std::vector<unsigned> permutation_unrank(std::uint64_t rank, unsigned n);

}  // namespace unisets
