#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace unisets {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// {t^d : t = 1..n}, increasing. Throws InvalidArgument for d < 2 or n < 1.
std::vector<BigInt> power_set(unsigned d, std::uint64_t n);

struct GraphEdge {
  std::size_t u = 0;  // indices into BasisGraph::vertices, u <= v
  std::size_t v = 0;
  BigInt label;       // vertices[u] + vertices[v]
};

/// Graph on a candidate basis A with one edge per represented power.
struct BasisGraph {
  std::vector<BigInt> vertices;  // sorted, distinct
  std::vector<GraphEdge> edges;  // sorted by label
  std::vector<BigInt> missing;   // powers with no representation in A + A
  unsigned d = 0;
  std::uint64_t n = 0;

  bool complete() const noexcept { return missing.empty(); }
  /// Incident edges per vertex; a loop counts once.
  std::vector<std::size_t> degrees() const;
  std::optional<std::size_t> index_of(const BigInt& a) const;
};

/// Joins, for every power p, the lexicographically first pair a <= a' of A with a + a' = p.
/// Throws InvalidArgument on negative entries.
BasisGraph build_basis_graph(std::span<const BigInt> a, unsigned d, std::uint64_t n);

enum class PeelOrder { lowest_first, highest_first };

/// Maximal induced subgraph of minimum degree >= delta, by repeated removal of
/// low-degree vertices. Throws InvalidArgument unless delta > 0.
BasisGraph min_degree_subgraph(const BasisGraph& g, const Rational& delta, PeelOrder order = PeelOrder::lowest_first);

struct EmittedPath {
  std::vector<std::size_t> vertices;  // k+1 entries
  std::vector<std::size_t> edges;     // k entries, pairwise distinct
  BigInt alternating_sum;             // x_1^d - x_2^d + ... from the labels
};

struct PathCount {
  std::uint64_t count = 0;
  bool budget_exceeded = false;  // count is then a lower bound
  std::uint64_t steps = 0;
  std::uint64_t identities_checked = 0;
  std::vector<EmittedPath> paths;
};

struct PathOptions {
  std::uint64_t step_budget = 50'000'000;
  bool emit = false;
  std::size_t emit_limit = 10'000;
};

/// Walks of length k from vertex index `from` to `to` whose k edges are pairwise
/// distinct. Every such walk has its alternating label sum checked against
/// a + (-1)^{k-1} a'; a mismatch throws std::logic_error.
PathCount count_paths(const BasisGraph& g, std::size_t from, std::size_t to, unsigned k, const PathOptions& opts = {});

/// Same, with any end vertex.
PathCount count_walks(const BasisGraph& g, std::size_t from, unsigned k, const PathOptions& opts = {});

/// prod_{i<k} (delta - i), the greedy count of distinct-edge walks from a vertex
/// of a delta-core, and (delta - k)^k.
double walk_product_bound(double delta, unsigned k);
double walk_power_bound(double delta, unsigned k);

/// 3/4 - 1/(2 sqrt d) - 1/(2(d-1)). Throws InvalidArgument for d < 2.
double powers_exponent(unsigned d);

}  // namespace unisets
