#pragma once

// Brute-force reference implementations used by the tests. They share nothing
// with the library beyond Group::mul/inv, and favour obviousness over speed.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "unisets/group.hpp"
#include "unisets/powers.hpp"

namespace oracle {

using unisets::Element;
using unisets::Group;

inline std::vector<char> mask(const Group& g, const std::vector<Element>& s) {
  std::vector<char> m(g.order(), 0);
  for (Element e : s) m[e] = 1;
  return m;
}

inline bool translate_into(const Group& g, const std::vector<char>& u, const std::vector<Element>& w) {
  for (Element t = 0; t < g.order(); ++t) {
    bool ok = true;
    for (Element x : w) ok = ok && u[g.mul(t, x)];
    if (ok) return true;
  }
  return false;
}

// Every k-subset of X (no identity trick) against every left translate.
inline bool universal_for(const Group& g, const std::vector<Element>& u, const std::vector<Element>& x, unsigned k) {
  const auto um = mask(g, u);
  if (k == 0) return true;
  if (k > x.size()) return true;
  std::vector<Element> w;
  std::function<bool(std::size_t)> rec = [&](std::size_t start) {
    if (w.size() == k) return translate_into(g, um, w);
    for (std::size_t i = start; i < x.size(); ++i) {
      w.push_back(x[i]);
      const bool ok = rec(i + 1);
      w.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  return rec(0);
}

inline std::vector<Element> all(const Group& g) {
  std::vector<Element> v(g.order());
  std::iota(v.begin(), v.end(), Element{0});
  return v;
}

// Every w in G^k against every g.
inline bool universal_tuple(const Group& g, const std::vector<std::vector<Element>>& sets) {
  std::vector<std::vector<char>> ms;
  for (const auto& s : sets) ms.push_back(mask(g, s));
  const std::size_t k = sets.size();
  std::vector<Element> w(k, 0);
  for (;;) {
    bool found = false;
    for (Element t = 0; t < g.order() && !found; ++t) {
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i) ok = ms[i][g.mul(t, w[i])];
      found = ok;
    }
    if (!found) return false;
    std::size_t i = 0;
    while (i < k && ++w[i] == g.order()) w[i++] = 0;
    if (i == k) return true;
  }
}

inline std::set<Element> product(const Group& g, const std::vector<Element>& a, const std::vector<Element>& b) {
  std::set<Element> out;
  for (Element x : a)
    for (Element y : b) out.insert(g.mul(x, y));
  return out;
}

// Plain modular arithmetic, no Group involved.
inline bool cyclic_universal(std::uint64_t r, const std::vector<std::uint64_t>& u, unsigned k) {
  std::vector<char> in(r, 0);
  for (auto e : u) in[e % r] = 1;
  std::vector<std::uint64_t> w{0};
  std::function<bool(std::uint64_t)> rec = [&](std::uint64_t start) {
    if (w.size() == k) {
      for (std::uint64_t t = 0; t < r; ++t) {
        bool ok = true;
        for (auto x : w) ok = ok && in[(x + t) % r];
        if (ok) return true;
      }
      return false;
    }
    for (std::uint64_t x = start; x < r; ++x) {
      w.push_back(x);
      const bool ok = rec(x + 1);
      w.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  // Translation invariance of the property lets the first element be 0.
  return rec(1);
}

// Peels every low-degree vertex in rounds until nothing changes.
inline std::vector<unisets::BigInt> core_vertices(const unisets::BasisGraph& g, const unisets::Rational& delta) {
  std::vector<char> alive(g.vertices.size(), 1);
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<std::size_t> deg(g.vertices.size(), 0);
    for (const auto& e : g.edges) {
      if (!alive[e.u] || !alive[e.v]) continue;
      ++deg[e.u];
      if (e.u != e.v) ++deg[e.v];
    }
    for (std::size_t v = 0; v < alive.size(); ++v) {
      if (alive[v] && unisets::Rational(deg[v]) < delta) {
        alive[v] = 0;
        changed = true;
      }
    }
  }
  std::vector<unisets::BigInt> out;
  for (std::size_t v = 0; v < alive.size(); ++v)
    if (alive[v]) out.push_back(g.vertices[v]);
  return out;
}

// Distinct-edge walks by scanning the whole edge list at each step.
inline std::uint64_t walks(const unisets::BasisGraph& g, std::size_t from, long to, unsigned k) {
  std::vector<char> used(g.edges.size(), 0);
  std::function<std::uint64_t(std::size_t, unsigned)> rec = [&](std::size_t v, unsigned left) -> std::uint64_t {
    if (left == 0) return to < 0 || static_cast<long>(v) == to ? 1 : 0;
    std::uint64_t total = 0;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      if (used[e]) continue;
      const auto& ed = g.edges[e];
      if (ed.u != v && ed.v != v) continue;
      const std::size_t w = ed.u == v ? ed.v : ed.u;
      used[e] = 1;
      total += rec(w, left - 1);
      used[e] = 0;
    }
    return total;
  };
  return rec(from, k);
}

}  // namespace oracle
