#include "unisets/group.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>
#include <sstream>

#include "unisets/error.hpp"
#include "unisets/numeric.hpp"
#include "unisets/rng.hpp"

namespace unisets {

namespace {

// Orders up to this size get a full Cayley table at construction.
constexpr std::uint64_t kCachedTableOrder = 1024;
// Table-kind groups up to this order are checked for associativity on every triple.
constexpr std::uint64_t kExhaustiveAssociativity = 256;
constexpr std::uint64_t kSampledAssociativityTrials = 1'000'000;

}  // namespace

GroupSpec GroupSpec::cyclic(std::uint64_t n) {
  GroupSpec s;
  s.kind = Kind::cyclic;
  s.n = n;
  return s;
}

GroupSpec GroupSpec::symmetric(std::uint64_t degree) {
  GroupSpec s;
  s.kind = Kind::symmetric;
  s.n = degree;
  return s;
}

GroupSpec GroupSpec::product(std::vector<GroupSpec> factors) {
  GroupSpec s;
  s.kind = Kind::product;
  s.n = factors.size();
  s.factors = std::move(factors);
  return s;
}

GroupSpec GroupSpec::from_table(std::vector<std::vector<Element>> table) {
  GroupSpec s;
  s.kind = Kind::table;
  s.n = table.size();
  s.table = std::move(table);
  return s;
}

std::string_view to_string(GroupSpec::Kind kind) noexcept {
  switch (kind) {
    case GroupSpec::Kind::cyclic: return "cyclic";
    case GroupSpec::Kind::product: return "product";
    case GroupSpec::Kind::symmetric: return "symmetric";
    case GroupSpec::Kind::table: return "table";
  }
  return "unknown";
}

std::string GroupSpec::to_string() const {
  switch (kind) {
    case Kind::cyclic: return "cyclic:" + std::to_string(n);
    case Kind::symmetric: return "sym:" + std::to_string(n);
    case Kind::table: return "table:" + std::to_string(n);
    case Kind::product: {
      std::string out = "product(";
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) out += ';';
        out += factors[i].to_string();
      }
      return out + ")";
    }
  }
  return {};
}

namespace {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  GroupSpec parse() {
    GroupSpec spec = parse_one();
    if (pos_ != text_.size()) fail("trailing characters");
    return spec;
  }

 private:
  GroupSpec parse_one() {
    if (consume("product(")) {
      std::vector<GroupSpec> factors;
      factors.push_back(parse_one());
      while (consume(";")) factors.push_back(parse_one());
      if (!consume(")")) fail("expected ')'");
      return GroupSpec::product(std::move(factors));
    }
    if (consume("cyclic:")) return GroupSpec::cyclic(number());
    if (consume("symmetric:") || consume("sym:")) return GroupSpec::symmetric(number());
    if (consume("abelian:")) {
      std::vector<GroupSpec> factors;
      factors.push_back(GroupSpec::cyclic(number()));
      while (consume(",")) factors.push_back(GroupSpec::cyclic(number()));
      if (factors.size() == 1) return factors.front();
      return GroupSpec::product(std::move(factors));
    }
    fail("unknown group kind");
  }

  bool consume(std::string_view token) {
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  std::uint64_t number() {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc{} || ptr == text_.data() + pos_) fail("expected a number");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::parse_error,
                "group spec '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + why);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupSpec parse_group_spec(std::string_view text) { return SpecParser(text).parse(); }

std::uint64_t permutation_rank(std::span<const unsigned> perm) {
  const auto n = static_cast<unsigned>(perm.size());
  std::uint64_t rank = 0;
  std::uint32_t used = 0;
  for (unsigned i = 0; i < n; ++i) {
    // Count unused values smaller than perm[i].
    const std::uint32_t below = (1u << perm[i]) - 1u;
    const auto smaller = static_cast<unsigned>(std::popcount(below & ~used));
    rank = rank * (n - i) + smaller;
    used |= 1u << perm[i];
  }
  return rank;
}

std::vector<unsigned> permutation_unrank(std::uint64_t rank, unsigned n) {
  std::vector<unsigned> digits(n);
  for (unsigned i = 1; i <= n; ++i) {
    digits[n - i] = static_cast<unsigned>(rank % i);
    rank /= i;
  }
  std::vector<unsigned> perm(n);
  std::uint32_t used = 0;
  for (unsigned i = 0; i < n; ++i) {
    unsigned skip = digits[i];
    for (unsigned v = 0; v < n; ++v) {
      if (used & (1u << v)) continue;
      if (skip-- == 0) {
        perm[i] = v;
        used |= 1u << v;
        break;
      }
    }
  }
  return perm;
}

struct Group::Impl {
  GroupSpec spec;
  std::uint64_t order = 1;
  Element identity = 0;
  std::vector<Group> factors;
  std::vector<std::uint64_t> strides;
  unsigned degree = 0;
  std::vector<Element> table;    // order*order, when cached
  std::vector<Element> inverse;  // cached inverses (table kind and small orders)

  Element mul_uncached(Element a, Element b) const {
    switch (spec.kind) {
      case GroupSpec::Kind::cyclic: {
        const std::uint64_t s = std::uint64_t{a} + b;
        return static_cast<Element>(s >= order ? s - order : s);
      }
      case GroupSpec::Kind::product: {
        std::uint64_t out = 0;
        std::uint64_t ra = a, rb = b;
        for (std::size_t i = 0; i < factors.size(); ++i) {
          const auto ca = static_cast<Element>(ra / strides[i]);
          const auto cb = static_cast<Element>(rb / strides[i]);
          ra %= strides[i];
          rb %= strides[i];
          out += std::uint64_t{factors[i].mul(ca, cb)} * strides[i];
        }
        return static_cast<Element>(out);
      }
      case GroupSpec::Kind::symmetric: {
        const auto pa = permutation_unrank(a, degree);
        const auto pb = permutation_unrank(b, degree);
        std::vector<unsigned> c(degree);
        for (unsigned i = 0; i < degree; ++i) c[i] = pa[pb[i]];
        return static_cast<Element>(permutation_rank(c));
      }
      case GroupSpec::Kind::table:
        return spec.table[a][b];
    }
    return 0;
  }

  Element inv_uncached(Element a) const {
    switch (spec.kind) {
      case GroupSpec::Kind::cyclic:
        return a == 0 ? 0 : static_cast<Element>(order - a);
      case GroupSpec::Kind::product: {
        std::uint64_t out = 0;
        std::uint64_t ra = a;
        for (std::size_t i = 0; i < factors.size(); ++i) {
          const auto ca = static_cast<Element>(ra / strides[i]);
          ra %= strides[i];
          out += std::uint64_t{factors[i].inv(ca)} * strides[i];
        }
        return static_cast<Element>(out);
      }
      case GroupSpec::Kind::symmetric: {
        const auto p = permutation_unrank(a, degree);
        std::vector<unsigned> q(degree);
        for (unsigned i = 0; i < degree; ++i) q[p[i]] = i;
        return static_cast<Element>(permutation_rank(q));
      }
      case GroupSpec::Kind::table:
        return inverse[a];
    }
    return 0;
  }
};

namespace {

void validate_table(const GroupSpec& spec, Element& identity, std::vector<Element>& inverse) {
  const auto& t = spec.table;
  const std::size_t n = t.size();
  if (n == 0) throw Error(ErrorCode::not_a_group, "empty table");
  for (const auto& row : t) {
    if (row.size() != n) throw Error(ErrorCode::not_a_group, "table is not square");
    for (Element v : row)
      if (v >= n) throw Error(ErrorCode::not_a_group, "table entry out of range");
  }
  // Latin square: every row and column is a permutation.
  std::vector<char> seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[t[i][j]]++) throw Error(ErrorCode::not_a_group, "row " + std::to_string(i) + " repeats an entry");
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[t[j][i]]++) throw Error(ErrorCode::not_a_group, "column " + std::to_string(i) + " repeats an entry");
    }
  }
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = t[e][x] == x && t[x][e] == x;
    if (ok) {
      identity = static_cast<Element>(e);
      found = true;
    }
  }
  if (!found) throw Error(ErrorCode::not_a_group, "no identity element");
  inverse.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    bool has = false;
    for (std::size_t b = 0; b < n; ++b) {
      if (t[a][b] == identity) {
        if (t[b][a] != identity) throw Error(ErrorCode::not_a_group, "left and right inverses differ");
        inverse[a] = static_cast<Element>(b);
        has = true;
        break;
      }
    }
    if (!has) throw Error(ErrorCode::not_a_group, "element without inverse");
  }
  auto check = [&](std::size_t a, std::size_t b, std::size_t c) {
    if (t[t[a][b]][c] != t[a][t[b][c]])
      throw Error(ErrorCode::not_a_group, "associativity fails on (" + std::to_string(a) + "," +
                                              std::to_string(b) + "," + std::to_string(c) + ")");
  };
  if (n <= kExhaustiveAssociativity) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) check(a, b, c);
  } else {
    Rng rng(0x7ab1e);
    for (std::uint64_t i = 0; i < kSampledAssociativityTrials; ++i)
      check(rng.uniform(n), rng.uniform(n), rng.uniform(n));
  }
}

}  // namespace

Group Group::make(const GroupSpec& spec, const GroupLimits& limits) {
  auto impl = std::make_shared<Impl>();
  impl->spec = spec;
  switch (spec.kind) {
    case GroupSpec::Kind::cyclic:
      if (spec.n < 1) throw Error(ErrorCode::invalid_argument, "cyclic group needs n >= 1");
      if (spec.n > limits.max_order)
        throw Error(ErrorCode::overflowing_order, "cyclic order " + std::to_string(spec.n) + " exceeds " +
                                                      std::to_string(limits.max_order));
      impl->order = spec.n;
      impl->identity = 0;
      break;
    case GroupSpec::Kind::symmetric:
      if (spec.n < 1) throw Error(ErrorCode::invalid_argument, "symmetric group needs degree >= 1");
      if (spec.n > limits.max_symmetric_degree)
        throw Error(ErrorCode::overflowing_order, "symmetric degree " + std::to_string(spec.n) + " exceeds cap " +
                                                      std::to_string(limits.max_symmetric_degree));
      impl->degree = static_cast<unsigned>(spec.n);
      impl->order = factorial(impl->degree);
      impl->identity = 0;
      break;
    case GroupSpec::Kind::product: {
      if (spec.factors.empty()) throw Error(ErrorCode::invalid_argument, "product needs at least one factor");
      std::uint64_t order = 1;
      for (const auto& f : spec.factors) {
        impl->factors.push_back(Group::make(f, limits));
        order *= impl->factors.back().order();
        if (order > limits.max_order)
          throw Error(ErrorCode::overflowing_order, "product order exceeds " + std::to_string(limits.max_order));
      }
      impl->order = order;
      impl->strides.resize(impl->factors.size());
      std::uint64_t stride = 1;
      for (std::size_t i = impl->factors.size(); i-- > 0;) {
        impl->strides[i] = stride;
        stride *= impl->factors[i].order();
      }
      std::uint64_t id = 0;
      for (std::size_t i = 0; i < impl->factors.size(); ++i) id += impl->factors[i].identity() * impl->strides[i];
      impl->identity = static_cast<Element>(id);
      break;
    }
    case GroupSpec::Kind::table:
      if (spec.table.size() > limits.max_order)
        throw Error(ErrorCode::overflowing_order, "table order exceeds " + std::to_string(limits.max_order));
      validate_table(spec, impl->identity, impl->inverse);
      impl->order = spec.table.size();
      impl->spec.n = impl->order;
      break;
  }

  if (impl->order <= kCachedTableOrder && spec.kind != GroupSpec::Kind::table) {
    const auto n = static_cast<Element>(impl->order);
    impl->table.resize(std::size_t{n} * n);
    impl->inverse.resize(n);
    for (Element a = 0; a < n; ++a) {
      impl->inverse[a] = impl->inv_uncached(a);
      for (Element b = 0; b < n; ++b) impl->table[std::size_t{a} * n + b] = impl->mul_uncached(a, b);
    }
  }
  return Group(std::move(impl));
}

const GroupSpec& Group::spec() const noexcept { return impl_->spec; }
GroupSpec::Kind Group::kind() const noexcept { return impl_->spec.kind; }
std::uint64_t Group::order() const noexcept { return impl_->order; }
Element Group::identity() const noexcept { return impl_->identity; }

Element Group::mul(Element a, Element b) const {
  if (!impl_->table.empty()) return impl_->table[std::size_t{a} * impl_->order + b];
  return impl_->mul_uncached(a, b);
}

Element Group::inv(Element a) const {
  if (!impl_->inverse.empty()) return impl_->inverse[a];
  return impl_->inv_uncached(a);
}

Element Group::pow(Element a, std::uint64_t e) const {
  Element result = identity();
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

bool Group::is_abelian_cyclic_form() const noexcept {
  if (kind() == GroupSpec::Kind::cyclic) return true;
  if (kind() != GroupSpec::Kind::product) return false;
  return std::all_of(impl_->factors.begin(), impl_->factors.end(),
                     [](const Group& f) { return f.kind() == GroupSpec::Kind::cyclic; });
}

std::vector<std::uint64_t> Group::cyclic_factor_orders() const {
  if (!is_abelian_cyclic_form())
    throw Error(ErrorCode::invalid_argument, "group " + spec().to_string() + " is not a product of cyclic groups");
  if (kind() == GroupSpec::Kind::cyclic) return {order()};
  std::vector<std::uint64_t> out;
  for (const auto& f : impl_->factors) out.push_back(f.order());
  return out;
}

std::span<const Group> Group::factors() const noexcept { return impl_->factors; }

std::vector<Element> Group::decode_tuple(Element a) const {
  if (kind() != GroupSpec::Kind::product) throw Error(ErrorCode::invalid_argument, "decode_tuple on non-product group");
  std::vector<Element> out(impl_->factors.size());
  std::uint64_t r = a;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<Element>(r / impl_->strides[i]);
    r %= impl_->strides[i];
  }
  return out;
}

Element Group::encode_tuple(std::span<const Element> coords) const {
  if (kind() != GroupSpec::Kind::product || coords.size() != impl_->factors.size())
    throw Error(ErrorCode::invalid_argument, "encode_tuple arity mismatch");
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] >= impl_->factors[i].order()) throw Error(ErrorCode::invalid_argument, "tuple coordinate out of range");
    out += std::uint64_t{coords[i]} * impl_->strides[i];
  }
  return static_cast<Element>(out);
}

unsigned Group::degree() const noexcept { return impl_->degree; }

std::vector<unsigned> Group::decode_permutation(Element a) const {
  if (kind() != GroupSpec::Kind::symmetric)
    throw Error(ErrorCode::invalid_argument, "decode_permutation on non-symmetric group");
  return permutation_unrank(a, impl_->degree);
}

Element Group::encode_permutation(std::span<const unsigned> perm) const {
  if (kind() != GroupSpec::Kind::symmetric || perm.size() != impl_->degree)
    throw Error(ErrorCode::invalid_argument, "encode_permutation degree mismatch");
  std::uint32_t seen = 0;
  for (unsigned v : perm) {
    if (v >= impl_->degree || (seen & (1u << v))) throw Error(ErrorCode::invalid_argument, "not a permutation");
    seen |= 1u << v;
  }
  return static_cast<Element>(permutation_rank(perm));
}

std::string Group::element_to_string(Element a) const {
  std::ostringstream out;
  switch (kind()) {
    case GroupSpec::Kind::cyclic: out << a; break;
    case GroupSpec::Kind::table: out << '#' << a; break;
    case GroupSpec::Kind::product: {
      const auto coords = decode_tuple(a);
      out << '(';
      for (std::size_t i = 0; i < coords.size(); ++i) out << (i ? "," : "") << impl_->factors[i].element_to_string(coords[i]);
      out << ')';
      break;
    }
    case GroupSpec::Kind::symmetric: {
      const auto p = decode_permutation(a);
      out << '[';
      for (std::size_t i = 0; i < p.size(); ++i) out << (i ? "," : "") << p[i];
      out << ']';
      break;
    }
  }
  return out.str();
}

bool Group::operator==(const Group& other) const noexcept {
  return impl_ == other.impl_ || impl_->spec == other.impl_->spec;
}

}  // namespace unisets
