#include "unisets/subset.hpp"

#include <algorithm>

#include "unisets/error.hpp"

namespace unisets {

Subset::Subset(Group group) : group_(std::move(group)), words_((group_.order() + 63) / 64, 0) {}

Subset::Subset(Group group, std::span<const Element> elements) : Subset(std::move(group)) {
  for (Element e : elements) insert(e);
}

Subset::Subset(Group group, std::initializer_list<Element> elements)
    : Subset(std::move(group), std::span<const Element>(elements.begin(), elements.size())) {}

Subset Subset::full(Group group) {
  Subset s(std::move(group));
  const std::uint64_t n = s.group_.order();
  for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~std::uint64_t{0};
  if (n % 64) s.words_.back() = (std::uint64_t{1} << (n % 64)) - 1;
  s.count_ = n;
  return s;
}

Subset Subset::singleton(Group group, Element e) {
  Subset s(std::move(group));
  s.insert(e);
  return s;
}

void Subset::insert(Element e) {
  if (e >= group_.order())
    throw Error(ErrorCode::invalid_argument,
                "element " + std::to_string(e) + " outside group of order " + std::to_string(group_.order()));
  auto& word = words_[e >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (e & 63);
  if (!(word & bit)) {
    word |= bit;
    ++count_;
  }
}

void Subset::erase(Element e) {
  if (e >= group_.order()) return;
  auto& word = words_[e >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (e & 63);
  if (word & bit) {
    word &= ~bit;
    --count_;
  }
}

std::vector<Element> Subset::elements() const {
  std::vector<Element> out;
  out.reserve(count_);
  for_each([&](Element e) { out.push_back(e); });
  return out;
}

Element Subset::front() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w]) return static_cast<Element>(w * 64 + static_cast<unsigned>(std::countr_zero(words_[w])));
  }
  throw Error(ErrorCode::empty_set, "front() of empty subset");
}

bool Subset::is_subset_of(const Subset& other) const {
  require_same_group(*this, other);
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] & ~other.words_[w]) return false;
  return true;
}

Subset& Subset::operator|=(const Subset& other) {
  require_same_group(*this, other);
  count_ = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    words_[w] |= other.words_[w];
    count_ += static_cast<std::size_t>(std::popcount(words_[w]));
  }
  return *this;
}

Subset& Subset::operator&=(const Subset& other) {
  require_same_group(*this, other);
  count_ = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    words_[w] &= other.words_[w];
    count_ += static_cast<std::size_t>(std::popcount(words_[w]));
  }
  return *this;
}

bool Subset::operator==(const Subset& other) const {
  return group_ == other.group_ && count_ == other.count_ && words_ == other.words_;
}

Subset operator|(Subset a, const Subset& b) { return a |= b; }
Subset operator&(Subset a, const Subset& b) { return a &= b; }

void require_same_group(const Subset& a, const Subset& b) {
  if (!(a.group() == b.group()))
    throw Error(ErrorCode::group_mismatch,
                a.group().spec().to_string() + " vs " + b.group().spec().to_string());
}

Subset translate(Element g, const Subset& s) {
  const Group& G = s.group();
  if (!G.contains(g)) throw Error(ErrorCode::invalid_argument, "translating element outside the group");
  Subset out(G);
  s.for_each([&](Element x) { out.insert(G.mul(g, x)); });
  return out;
}

Subset right_translate(const Subset& s, Element g) {
  const Group& G = s.group();
  if (!G.contains(g)) throw Error(ErrorCode::invalid_argument, "translating element outside the group");
  Subset out(G);
  s.for_each([&](Element x) { out.insert(G.mul(x, g)); });
  return out;
}

namespace {

// Z/nZ: S + T is the union of the rotations of T by a in S, done a word at a
// time on a doubled copy of T.
void cyclic_sum(const Subset& s, const Subset& t, std::vector<std::uint64_t>& out) {
  const std::uint64_t n = s.group().order();
  std::vector<std::uint64_t> doubled((2 * n + 63) / 64 + 1, 0);
  t.for_each([&](Element b) {
    doubled[b >> 6] |= std::uint64_t{1} << (b & 63);
    doubled[(b + n) >> 6] |= std::uint64_t{1} << ((b + n) & 63);
  });
  const std::size_t words = out.size();
  const std::uint64_t tail = n % 64 == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << (n % 64)) - 1;
  s.for_each([&](Element a) {
    // out[c] |= doubled[c + n - a]
    const std::uint64_t off = n - a;
    const std::size_t base = off >> 6;
    const unsigned shift = off & 63;
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t v = doubled[base + w] >> shift;
      if (shift != 0) v |= doubled[base + w + 1] << (64 - shift);
      out[w] |= v;
    }
    out[words - 1] &= tail;
  });
}

}  // namespace

Subset product_set(const Subset& s, const Subset& t) {
  require_same_group(s, t);
  const Group& G = s.group();
  if (G.kind() == GroupSpec::Kind::cyclic && std::min(s.size(), t.size()) > 64) {
    Subset out(G);
    cyclic_sum(s.size() <= t.size() ? s : t, s.size() <= t.size() ? t : s, out.words_);
    out.count_ = 0;
    for (auto w : out.words_) out.count_ += static_cast<std::size_t>(std::popcount(w));
    return out;
  }
  const auto ts = t.elements();
  Subset out(G);
  s.for_each([&](Element a) {
    for (Element b : ts) out.insert(G.mul(a, b));
  });
  return out;
}

Subset inverse_set(const Subset& s) {
  Subset out(s.group());
  s.for_each([&](Element a) { out.insert(s.group().inv(a)); });
  return out;
}

DoublingCheck is_non_doubling(const Subset& x) {
  if (x.empty()) throw Error(ErrorCode::empty_set, "is_non_doubling of empty set");
  const std::size_t pp = product_set(x, x).size();
  return {pp <= 3 * x.size(), pp};
}

bool is_subgroup(const Subset& h) {
  const Group& G = h.group();
  if (!h.contains(G.identity())) return false;
  if (h.is_full()) return true;
  const auto elems = h.elements();
  for (Element a : elems) {
    if (!h.contains(G.inv(a))) return false;
    for (Element b : elems)
      if (!h.contains(G.mul(a, b))) return false;
  }
  return true;
}

std::vector<Element> right_coset_representatives(const Subset& h) {
  const Group& G = h.group();
  const auto hs = h.elements();
  std::vector<char> seen(G.order(), 0);
  std::vector<Element> reps;
  for (Element g = 0; g < G.order(); ++g) {
    if (seen[g]) continue;
    reps.push_back(g);
    for (Element x : hs) seen[G.mul(x, g)] = 1;
  }
  return reps;
}

}  // namespace unisets
