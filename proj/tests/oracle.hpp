#pragma once

// Literal set-based recomputation of the objects the library builds, for
// cross-checking. Nothing here uses the library's tables, ideals or lattice.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Elems = std::vector<std::uint32_t>;  // sorted element indices
using Tuple = std::vector<std::uint32_t>;

struct Model {
  std::vector<std::uint32_t> moduli;                              // ring factors
  std::vector<std::pair<std::size_t, std::uint32_t>> summands;    // (factor, order)
  std::vector<Tuple> ring;                                        // residue tuples, index order
  std::vector<Tuple> module;                                      // coordinate tuples, index order

  Model(std::vector<std::uint32_t> m, std::vector<std::vector<std::uint32_t>> groups) : moduli(std::move(m)) {
    for (std::size_t i = 0; i < groups.size(); ++i)
      for (auto d : groups[i])
        if (d > 1) summands.push_back({i, d});
    ring = enumerate(moduli);
    std::vector<std::uint32_t> orders;
    for (auto& s : summands) orders.push_back(s.second);
    module = enumerate(orders);
  }

  static std::vector<Tuple> enumerate(const std::vector<std::uint32_t>& bases) {
    std::vector<Tuple> out{Tuple{}};
    for (auto b : bases) {
      std::vector<Tuple> next;
      for (auto& t : out)
        for (std::uint32_t v = 0; v < b; ++v) {
          auto u = t;
          u.push_back(v);
          next.push_back(u);
        }
      out = std::move(next);
    }
    return out;
  }

  std::uint32_t ring_index(const Tuple& t) const {
    std::uint32_t idx = 0;
    for (std::size_t i = 0; i < moduli.size(); ++i) idx = idx * moduli[i] + t[i] % moduli[i];
    return idx;
  }
  std::uint32_t module_index(const Tuple& t) const {
    std::uint32_t idx = 0;
    for (std::size_t j = 0; j < summands.size(); ++j) idx = idx * summands[j].second + t[j] % summands[j].second;
    return idx;
  }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    Tuple t(moduli.size());
    for (std::size_t i = 0; i < moduli.size(); ++i) t[i] = ring[a][i] * ring[b][i] % moduli[i];
    return ring_index(t);
  }
  std::uint32_t add(std::uint32_t x, std::uint32_t y) const {
    Tuple t(summands.size());
    for (std::size_t j = 0; j < summands.size(); ++j) t[j] = (module[x][j] + module[y][j]) % summands[j].second;
    return module_index(t);
  }
  std::uint32_t act(std::uint32_t r, std::uint32_t x) const {
    Tuple t(summands.size());
    for (std::size_t j = 0; j < summands.size(); ++j)
      t[j] = ring[r][summands[j].first] * module[x][j] % summands[j].second;
    return module_index(t);
  }

  // Smallest submodule containing `gens`, by saturating under + and R-action.
  Elems close(const std::vector<std::uint32_t>& gens) const {
    std::set<std::uint32_t> s(gens.begin(), gens.end());
    s.insert(0);
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<std::uint32_t> cur(s.begin(), s.end());
      for (auto x : cur) {
        for (std::uint32_t r = 0; r < ring.size(); ++r) grew |= s.insert(act(r, x)).second;
        for (auto y : cur) grew |= s.insert(add(x, y)).second;
      }
    }
    return {s.begin(), s.end()};
  }

  // Closure BFS: start at (0), repeatedly add one element and close.
  std::vector<Elems> submodules() const {
    std::set<Elems> seen{close({})};
    std::vector<Elems> frontier{close({})};
    while (!frontier.empty()) {
      std::vector<Elems> next;
      for (auto& n : frontier)
        for (std::uint32_t x = 0; x < module.size(); ++x) {
          if (std::binary_search(n.begin(), n.end(), x)) continue;
          auto gens = n;
          gens.push_back(x);
          auto k = close(gens);
          if (seen.insert(k).second) next.push_back(k);
        }
      frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
  }

  Elems whole() const {
    Elems all(module.size());
    std::iota(all.begin(), all.end(), 0u);
    return all;
  }
  Elems zero() const { return {0}; }

  static bool in(const Elems& s, std::uint32_t x) { return std::binary_search(s.begin(), s.end(), x); }
  static bool subset(const Elems& a, const Elems& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

  Elems colon(const Elems& n) const {
    Elems out;
    for (std::uint32_t r = 0; r < ring.size(); ++r) {
      bool ok = true;
      for (std::uint32_t x = 0; x < module.size() && ok; ++x) ok = in(n, act(r, x));
      if (ok) out.push_back(r);
    }
    return out;
  }

  Elems annihilator() const { return colon(zero()); }

  // (N:M)(K:M)M, generated by i j x.
  Elems product(const Elems& n, const Elems& k) const {
    auto a = colon(n), b = colon(k);
    std::set<std::uint32_t> scalars;
    for (auto i : a)
      for (auto j : b) scalars.insert(mul(i, j));
    std::vector<std::uint32_t> gens;
    for (auto s : scalars)
      for (std::uint32_t x = 0; x < module.size(); ++x) gens.push_back(act(s, x));
    return close(gens);
  }

  bool is_prime(const Elems& p) const {
    if (p == whole()) return false;
    auto c = colon(p);
    for (std::uint32_t r = 0; r < ring.size(); ++r) {
      if (in(c, r)) continue;
      for (std::uint32_t e = 0; e < module.size(); ++e)
        if (!in(p, e) && in(p, act(r, e))) return false;
    }
    return true;
  }
};

struct Graph {
  std::vector<Elems> vertices;
  std::set<std::pair<Elems, Elems>> edges;  // ordered pair (a < b)
};

/// Literal AG(M): nonzero N with some nonzero proper K (possibly N) and NK = 0.
inline Graph ag(const Model& m) {
  auto subs = m.submodules();
  Graph g;
  auto zero = m.zero(), whole = m.whole();
  for (auto& n : subs) {
    if (n == zero) continue;
    for (auto& k : subs)
      if (k != zero && k != whole && m.product(n, k) == zero) {
        g.vertices.push_back(n);
        break;
      }
  }
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < g.vertices.size(); ++j)
      if (m.product(g.vertices[i], g.vertices[j]) == zero)
        g.edges.insert(std::minmax(g.vertices[i], g.vertices[j]));
  return g;
}

/// Literal AG(M)*: proper N with (N:M) != Ann(M) and a partner of the same kind.
inline Graph ag_star(const Model& m) {
  auto subs = m.submodules();
  auto zero = m.zero(), whole = m.whole();
  auto ann = m.annihilator();
  std::vector<Elems> admissible;
  for (auto& n : subs)
    if (n != whole && m.colon(n) != ann) admissible.push_back(n);
  Graph g;
  for (auto& n : admissible)
    for (auto& k : admissible)
      if (m.product(n, k) == zero) {
        g.vertices.push_back(n);
        break;
      }
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < g.vertices.size(); ++j)
      if (m.product(g.vertices[i], g.vertices[j]) == zero)
        g.edges.insert(std::minmax(g.vertices[i], g.vertices[j]));
  return g;
}

/// Exhaustive clique number of an adjacency matrix.
inline std::size_t clique_number(const std::vector<std::vector<bool>>& adj) {
  const std::size_t n = adj.size();
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::size_t> vs;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) vs.push_back(i);
    bool clique = true;
    for (std::size_t a = 0; a < vs.size() && clique; ++a)
      for (std::size_t b = a + 1; b < vs.size() && clique; ++b) clique = adj[vs[a]][vs[b]];
    if (clique) best = std::max(best, vs.size());
  }
  return best;
}

/// Exhaustive chromatic number: smallest k admitting a proper k-colouring.
inline std::size_t chromatic_number(const std::vector<std::vector<bool>>& adj) {
  const std::size_t n = adj.size();
  if (n == 0) return 0;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::size_t> colour(n, 0);
    // Odometer over all k^n assignments.
    while (true) {
      bool ok = true;
      for (std::size_t a = 0; a < n && ok; ++a)
        for (std::size_t b = a + 1; b < n && ok; ++b) ok = !(adj[a][b] && colour[a] == colour[b]);
      if (ok) return k;
      std::size_t i = 0;
      while (i < n && ++colour[i] == k) colour[i++] = 0;
      if (i == n) break;
    }
  }
  return n;
}

inline std::size_t distinct_prime_factors(std::uint32_t n) {
  std::size_t count = 0;
  for (std::uint32_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ++count;
      while (n % p == 0) n /= p;
    }
  return count + (n > 1);
}

}  // namespace oracle
