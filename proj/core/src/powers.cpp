#include "unisets/powers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "unisets/error.hpp"

namespace unisets {

std::vector<BigInt> power_set(unsigned d, std::uint64_t n) {
  if (d < 2) throw Error(ErrorCode::invalid_argument, "power_set needs d >= 2");
  if (n < 1) throw Error(ErrorCode::invalid_argument, "power_set needs n >= 1");
  std::vector<BigInt> out;
  out.reserve(n);
  for (std::uint64_t t = 1; t <= n; ++t) out.push_back(boost::multiprecision::pow(BigInt(t), d));
  return out;
}

std::vector<std::size_t> BasisGraph::degrees() const {
  std::vector<std::size_t> deg(vertices.size(), 0);
  for (const auto& e : edges) {
    ++deg[e.u];
    if (e.v != e.u) ++deg[e.v];
  }
  return deg;
}

std::optional<std::size_t> BasisGraph::index_of(const BigInt& a) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), a);
  if (it == vertices.end() || *it != a) return std::nullopt;
  return static_cast<std::size_t>(it - vertices.begin());
}

BasisGraph build_basis_graph(std::span<const BigInt> a, unsigned d, std::uint64_t n) {
  BasisGraph g;
  g.d = d;
  g.n = n;
  g.vertices.assign(a.begin(), a.end());
  std::sort(g.vertices.begin(), g.vertices.end());
  g.vertices.erase(std::unique(g.vertices.begin(), g.vertices.end()), g.vertices.end());
  if (!g.vertices.empty() && g.vertices.front() < 0)
    throw Error(ErrorCode::invalid_argument, "basis entries must be nonnegative");

  for (const BigInt& p : power_set(d, n)) {
    bool found = false;
    for (std::size_t i = 0; i < g.vertices.size() && 2 * g.vertices[i] <= p; ++i) {
      if (auto j = g.index_of(p - g.vertices[i])) {
        g.edges.push_back({i, *j, p});
        found = true;
        break;
      }
    }
    if (!found) g.missing.push_back(p);
  }
  return g;
}

BasisGraph min_degree_subgraph(const BasisGraph& g, const Rational& delta, PeelOrder order) {
  if (delta <= 0) throw Error(ErrorCode::invalid_argument, "delta must be positive");
  const std::size_t m = g.vertices.size();
  std::vector<std::vector<std::size_t>> incident(m);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    incident[g.edges[e].u].push_back(e);
    if (g.edges[e].v != g.edges[e].u) incident[g.edges[e].v].push_back(e);
  }
  std::vector<std::size_t> deg = g.degrees();
  std::vector<char> alive(m, 1), edge_alive(g.edges.size(), 1);
  auto low = [&](std::size_t v) { return alive[v] && Rational(deg[v]) < delta; };

  for (;;) {
    std::optional<std::size_t> pick;
    if (order == PeelOrder::lowest_first) {
      for (std::size_t v = 0; v < m && !pick; ++v)
        if (low(v)) pick = v;
    } else {
      for (std::size_t v = m; v-- > 0 && !pick;)
        if (low(v)) pick = v;
    }
    if (!pick) break;
    alive[*pick] = 0;
    for (std::size_t e : incident[*pick]) {
      if (!edge_alive[e]) continue;
      edge_alive[e] = 0;
      const auto& ed = g.edges[e];
      --deg[ed.u];
      if (ed.v != ed.u) --deg[ed.v];
    }
  }

  BasisGraph out;
  out.d = g.d;
  out.n = g.n;
  out.missing = g.missing;
  std::vector<std::size_t> remap(m);
  for (std::size_t v = 0; v < m; ++v) {
    if (!alive[v]) continue;
    remap[v] = out.vertices.size();
    out.vertices.push_back(g.vertices[v]);
  }
  for (std::size_t e = 0; e < g.edges.size(); ++e)
    if (edge_alive[e]) out.edges.push_back({remap[g.edges[e].u], remap[g.edges[e].v], g.edges[e].label});
  return out;
}

namespace {

struct Walker {
  const BasisGraph& g;
  std::optional<std::size_t> target;
  unsigned k;
  const PathOptions& opts;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj;  // (edge, other end)
  std::vector<char> used;
  std::vector<std::size_t> vpath, epath;
  PathCount result;

  Walker(const BasisGraph& graph, std::optional<std::size_t> to, unsigned len, const PathOptions& o)
      : g(graph), target(to), k(len), opts(o), adj(graph.vertices.size()), used(graph.edges.size(), 0) {
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      const auto& ed = g.edges[e];
      adj[ed.u].emplace_back(e, ed.v);
      if (ed.v != ed.u) adj[ed.v].emplace_back(e, ed.u);
    }
  }

  void finish() {
    // sum_i (-1)^{i-1} x_i^d telescopes to a + (-1)^{k-1} a'.
    BigInt alt = 0;
    for (std::size_t i = 0; i < epath.size(); ++i) {
      if (i % 2 == 0)
        alt += g.edges[epath[i]].label;
      else
        alt -= g.edges[epath[i]].label;
    }
    const BigInt& a = g.vertices[vpath.front()];
    const BigInt& b = g.vertices[vpath.back()];
    const BigInt expected = k % 2 == 1 ? BigInt(a + b) : BigInt(a - b);
    if (alt != expected) throw std::logic_error("count_paths: alternating-sum identity failed");
    ++result.identities_checked;
    ++result.count;
    if (opts.emit && result.paths.size() < opts.emit_limit) result.paths.push_back({vpath, epath, alt});
  }

  void dfs(std::size_t v) {
    if (result.budget_exceeded) return;
    if (++result.steps > opts.step_budget) {
      result.budget_exceeded = true;
      return;
    }
    if (epath.size() == k) {
      if (!target || v == *target) finish();
      return;
    }
    for (const auto& [e, w] : adj[v]) {
      if (used[e]) continue;
      used[e] = 1;
      epath.push_back(e);
      vpath.push_back(w);
      dfs(w);
      vpath.pop_back();
      epath.pop_back();
      used[e] = 0;
      if (result.budget_exceeded) return;
    }
  }
};

PathCount run(const BasisGraph& g, std::size_t from, std::optional<std::size_t> to, unsigned k,
              const PathOptions& opts) {
  if (k < 1) throw Error(ErrorCode::invalid_argument, "path length must be >= 1");
  if (from >= g.vertices.size() || (to && *to >= g.vertices.size()))
    throw Error(ErrorCode::invalid_argument, "vertex index out of range");
  Walker w(g, to, k, opts);
  w.vpath.push_back(from);
  w.dfs(from);
  return std::move(w.result);
}

}  // namespace

PathCount count_paths(const BasisGraph& g, std::size_t from, std::size_t to, unsigned k, const PathOptions& opts) {
  return run(g, from, to, k, opts);
}

PathCount count_walks(const BasisGraph& g, std::size_t from, unsigned k, const PathOptions& opts) {
  return run(g, from, std::nullopt, k, opts);
}

double walk_product_bound(double delta, unsigned k) {
  double p = 1.0;
  for (unsigned i = 0; i < k; ++i) p *= delta - i;
  return p;
}

double walk_power_bound(double delta, unsigned k) { return std::pow(delta - k, static_cast<double>(k)); }

double powers_exponent(unsigned d) {
  if (d < 2) throw Error(ErrorCode::invalid_argument, "exponent needs d >= 2");
  const double dd = d;
  return 0.75 - 1.0 / (2.0 * std::sqrt(dd)) - 1.0 / (2.0 * (dd - 1.0));
}

}  // namespace unisets
