#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "unisets/group.hpp"

namespace unisets {

/// A set of elements of one group, stored as a flat bit vector over the
/// dense element indices.
class Subset {
 public:
  explicit Subset(Group group);
  Subset(Group group, std::span<const Element> elements);
  Subset(Group group, std::initializer_list<Element> elements);

  static Subset full(Group group);
  static Subset singleton(Group group, Element e);

  const Group& group() const noexcept { return group_; }

  bool contains(Element e) const noexcept {
    return e < group_.order() && ((words_[e >> 6] >> (e & 63)) & 1u);
  }
  void insert(Element e);
  void erase(Element e);

  std::size_t size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }
  bool is_full() const noexcept { return count_ == group_.order(); }

  /// Members in increasing index order; the canonical serialized form.
  std::vector<Element> elements() const;
  /// Smallest member. Precondition: non-empty.
  Element front() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const auto bit = static_cast<unsigned>(std::countr_zero(bits));
        f(static_cast<Element>(w * 64 + bit));
        bits &= bits - 1;
      }
    }
  }

  bool is_subset_of(const Subset& other) const;
  Subset& operator|=(const Subset& other);
  Subset& operator&=(const Subset& other);

  bool operator==(const Subset& other) const;

 private:
  friend Subset product_set(const Subset& s, const Subset& t);

  Group group_;
  std::vector<std::uint64_t> words_;
  std::size_t count_ = 0;
};

Subset operator|(Subset a, const Subset& b);
Subset operator&(Subset a, const Subset& b);

/// Throws GroupMismatch when a and b live in different groups.
void require_same_group(const Subset& a, const Subset& b);

/// {g*s : s in S}
Subset translate(Element g, const Subset& s);
/// {s*g : s in S}
Subset right_translate(const Subset& s, Element g);
/// {s*t : s in S, t in T}, by exhaustive pairwise composition.
Subset product_set(const Subset& s, const Subset& t);
/// {s^-1 : s in S}
Subset inverse_set(const Subset& s);

struct DoublingCheck {
  bool non_doubling = false;
  std::size_t product_size = 0;
};

/// Whether |XX| <= 3|X|; always reports |XX|. Throws EmptySet on empty X.
DoublingCheck is_non_doubling(const Subset& x);

/// Closure, identity and inverse check by enumeration.
bool is_subgroup(const Subset& h);

/// Representatives of the right cosets Hg, one per coset, chosen by a sweep
/// over G in index order (first element of each unseen coset).
std::vector<Element> right_coset_representatives(const Subset& h);

}  // namespace unisets
