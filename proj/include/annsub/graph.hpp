#pragma once

// The annihilating-submodule graph AG(M), its subgraph AG(M)*, and exact
// analytics (connectivity, diameter, star/bipartite shape, clique number,
// chromatic number with certificates).

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "annsub/bitset.hpp"
#include "annsub/error.hpp"
#include "annsub/lattice.hpp"

namespace annsub {

inline constexpr std::size_t kDefaultMaxExactVertices = 64;

enum class GraphVariant { ag, ag_star };

inline std::string to_string(GraphVariant v) { return v == GraphVariant::ag ? "AG" : "AG*"; }

struct AnnGraph {
  GraphVariant variant = GraphVariant::ag;
  std::vector<SubmoduleId> vertices;  // lattice order
  std::vector<Bitset> adjacency;      // indexed by vertex position

  std::size_t vertex_count() const { return vertices.size(); }
  bool adjacent(std::size_t i, std::size_t j) const { return adjacency[i].test(j); }
  std::size_t degree(std::size_t i) const { return adjacency[i].count(); }
  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& row : adjacency) twice += row.count();
    return twice / 2;
  }
  std::optional<std::size_t> position_of(SubmoduleId id) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), id);
    if (it == vertices.end() || *it != id) return std::nullopt;
    return static_cast<std::size_t>(it - vertices.begin());
  }
  /// Edges as (i, j) vertex positions with i < j, in row-major order.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < adjacency.size(); ++i)
      adjacency[i].for_each([&](std::size_t j) {
        if (i < j) out.emplace_back(i, j);
      });
    return out;
  }
};

namespace detail {

inline bool product_is_zero(const SubmoduleLattice& lattice, std::size_t colon_a, std::size_t colon_b) {
  return lattice.ideal_times_module(lattice.ideal_product_index(colon_a, colon_b)) == lattice.zero();
}

inline AnnGraph assemble(const SubmoduleLattice& lattice, GraphVariant variant, std::vector<SubmoduleId> vertices) {
  AnnGraph g;
  g.variant = variant;
  g.vertices = std::move(vertices);
  const std::size_t n = g.vertices.size();
  g.adjacency.assign(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (lattice.product(g.vertices[i], g.vertices[j]) == lattice.zero()) {
        g.adjacency[i].set(j);
        g.adjacency[j].set(i);
      }
  return g;
}

// Distinct colon indices among the given submodules.
template <typename Pred>
std::vector<std::size_t> partner_colons(const SubmoduleLattice& lattice, Pred&& admissible) {
  std::vector<bool> seen(lattice.ideals().size(), false);
  std::vector<std::size_t> out;
  for (SubmoduleId k = 0; k < lattice.size(); ++k)
    if (admissible(k) && !seen[lattice.colon_index(k)]) {
      seen[lattice.colon_index(k)] = true;
      out.push_back(lattice.colon_index(k));
    }
  return out;
}

}  // namespace detail

/// Vertices: nonzero N (M allowed) with NK = (0) for some nonzero proper K (K = N allowed).
inline AnnGraph build_ag(const SubmoduleLattice& lattice) {
  auto partners = detail::partner_colons(lattice, [&](SubmoduleId k) { return lattice.is_nonzero_proper(k); });
  std::vector<SubmoduleId> vertices;
  for (SubmoduleId n = 1; n < lattice.size(); ++n) {
    auto cn = lattice.colon_index(n);
    if (std::any_of(partners.begin(), partners.end(), [&](std::size_t ck) { return detail::product_is_zero(lattice, cn, ck); }))
      vertices.push_back(n);
  }
  return detail::assemble(lattice, GraphVariant::ag, std::move(vertices));
}

/// Vertices: proper N with (N:M) != Ann(M) and NK = (0) for some proper K with (K:M) != Ann(M).
inline AnnGraph build_ag_star(const SubmoduleLattice& lattice) {
  const auto ann = lattice.colon_index(lattice.zero());
  auto admissible = [&](SubmoduleId k) { return lattice.is_proper(k) && lattice.colon_index(k) != ann; };
  auto partners = detail::partner_colons(lattice, admissible);
  std::vector<SubmoduleId> vertices;
  for (SubmoduleId n = 0; n < lattice.size(); ++n) {
    if (!admissible(n)) continue;
    auto cn = lattice.colon_index(n);
    if (std::any_of(partners.begin(), partners.end(), [&](std::size_t ck) { return detail::product_is_zero(lattice, cn, ck); }))
      vertices.push_back(n);
  }
  return detail::assemble(lattice, GraphVariant::ag_star, std::move(vertices));
}

inline AnnGraph build(const SubmoduleLattice& lattice, GraphVariant variant) {
  return variant == GraphVariant::ag ? build_ag(lattice) : build_ag_star(lattice);
}

/// M ∈ V(AG(M)) iff some nonzero proper N has (N:M) = Ann(M).
inline bool whole_is_vertex_by_colon(const SubmoduleLattice& lattice) {
  for (SubmoduleId n = 1; n < lattice.whole(); ++n)
    if (lattice.colon_index(n) == lattice.colon_index(lattice.zero())) return true;
  return false;
}

/// Vertex positions adjacent to every other vertex.
inline std::vector<std::size_t> universal_vertices(const AnnGraph& g) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.vertex_count(); ++i)
    if (g.degree(i) + 1 == g.vertex_count()) out.push_back(i);
  return out;
}

struct AnalysisLimits {
  std::size_t max_exact_vertices = kDefaultMaxExactVertices;
};

struct GraphAnalysis {
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  bool connected = true;
  std::optional<std::size_t> diameter = 0;  // nullopt: infinite
  bool complete = true;
  bool star = false;
  std::optional<std::size_t> center;
  bool bipartite = true;
  std::vector<std::size_t> part_a, part_b;
  bool complete_bipartite = false;
  std::vector<std::size_t> universal;

  std::size_t clique_lower = 0, clique_upper = 0;
  std::optional<std::size_t> clique_number;
  std::vector<std::size_t> clique;  // largest clique found

  std::size_t chromatic_lower = 0, chromatic_upper = 0;
  std::optional<std::size_t> chromatic_number;
  std::vector<std::size_t> coloring;  // best proper coloring found, color per vertex

  bool exact() const { return clique_number.has_value() && chromatic_number.has_value(); }
};

namespace detail {

class CliqueSearch {
 public:
  explicit CliqueSearch(const AnnGraph& g) : g_(g) {}

  std::vector<std::size_t> run(std::vector<std::size_t> seed) {
    best_ = std::move(seed);
    Bitset all(g_.vertex_count());
    all.set_all();
    std::vector<std::size_t> current;
    expand(current, all);
    return best_;
  }

 private:
  void expand(std::vector<std::size_t>& current, Bitset candidates) {
    if (candidates.none()) {
      if (current.size() > best_.size()) best_ = current;
      return;
    }
    if (current.size() + candidates.count() <= best_.size()) return;
    // Pivot on the candidate with most candidate neighbours; branch on the rest.
    std::size_t pivot = candidates.find_first();
    std::size_t pivot_deg = 0;
    candidates.for_each([&](std::size_t u) {
      auto d = (g_.adjacency[u] & candidates).count();
      if (d >= pivot_deg) {
        pivot_deg = d;
        pivot = u;
      }
    });
    Bitset branch = candidates;
    branch.subtract(g_.adjacency[pivot]);
    for (std::size_t v = branch.find_first(); v < branch.width(); v = branch.find_next(v + 1)) {
      if (current.size() + candidates.count() <= best_.size()) return;
      current.push_back(v);
      expand(current, candidates & g_.adjacency[v]);
      current.pop_back();
      candidates.reset(v);
    }
  }

  const AnnGraph& g_;
  std::vector<std::size_t> best_;
};

inline std::vector<std::size_t> by_degree(const AnnGraph& g) {
  std::vector<std::size_t> order(g.vertex_count());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return g.degree(x) > g.degree(y); });
  return order;
}

// Greedy cliques grown from the highest-degree starts, always adding the
// highest-degree remaining candidate.
inline std::vector<std::size_t> greedy_clique(const AnnGraph& g, std::size_t max_starts = 32) {
  auto order = by_degree(g);
  std::vector<std::size_t> best;
  for (std::size_t s = 0; s < order.size() && s < max_starts; ++s) {
    std::vector<std::size_t> clique{order[s]};
    Bitset cand = g.adjacency[order[s]];
    for (auto v : order)
      if (cand.test(v)) {
        clique.push_back(v);
        cand &= g.adjacency[v];
      }
    if (clique.size() > best.size()) best = std::move(clique);
  }
  std::sort(best.begin(), best.end());
  return best;
}

// Largest-first greedy coloring.
inline std::vector<int> greedy_coloring(const AnnGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> color(n, -1);
  std::vector<char> taken;
  for (auto v : by_degree(g)) {
    taken.assign(n + 1, 0);
    g.adjacency[v].for_each([&](std::size_t u) {
      if (color[u] >= 0) taken[static_cast<std::size_t>(color[u])] = 1;
    });
    int c = 0;
    while (taken[static_cast<std::size_t>(c)]) ++c;
    color[v] = c;
  }
  return color;
}

class ColoringSearch {
 public:
  ColoringSearch(const AnnGraph& g, std::size_t lower, std::vector<int> best)
      : g_(g), n_(g.vertex_count()), lower_(lower), best_(std::move(best)) {
    best_count_ = count_colors(best_);
  }

  std::vector<int> run(const std::vector<std::size_t>& clique) {
    if (best_count_ <= lower_) return best_;
    color_.assign(n_, -1);
    neighbour_colors_.assign(n_, std::vector<int>(n_ + 1, 0));
    int used = 0;
    for (auto v : clique) assign(v, used++);
    search(clique.size(), used);
    return best_;
  }

 private:
  static std::size_t count_colors(const std::vector<int>& c) {
    int mx = -1;
    for (auto x : c) mx = std::max(mx, x);
    return static_cast<std::size_t>(mx + 1);
  }

  void assign(std::size_t v, int c) {
    color_[v] = c;
    g_.adjacency[v].for_each([&](std::size_t u) { ++neighbour_colors_[u][static_cast<std::size_t>(c)]; });
  }
  void unassign(std::size_t v) {
    int c = color_[v];
    color_[v] = -1;
    g_.adjacency[v].for_each([&](std::size_t u) { --neighbour_colors_[u][static_cast<std::size_t>(c)]; });
  }

  // Returns true once the lower bound is reached.
  bool search(std::size_t colored, int used) {
    if (static_cast<std::size_t>(used) >= best_count_) return false;
    if (colored == n_) {
      best_ = color_;
      best_count_ = static_cast<std::size_t>(used);
      return best_count_ <= lower_;
    }
    std::size_t pick = n_;
    int best_sat = -1;
    std::size_t best_deg = 0;
    for (std::size_t v = 0; v < n_; ++v) {
      if (color_[v] >= 0) continue;
      int sat = 0;
      for (int c = 0; c < used; ++c) sat += neighbour_colors_[v][static_cast<std::size_t>(c)] > 0;
      auto deg = g_.degree(v);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        pick = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    for (int c = 0; c <= used; ++c) {
      if (c == used && static_cast<std::size_t>(used + 1) >= best_count_) break;
      if (c < used && neighbour_colors_[pick][static_cast<std::size_t>(c)] > 0) continue;
      assign(pick, c);
      bool done = search(colored + 1, c == used ? used + 1 : used);
      unassign(pick);
      if (done) return true;
    }
    return false;
  }

  const AnnGraph& g_;
  std::size_t n_;
  std::size_t lower_;
  std::vector<int> best_;
  std::size_t best_count_ = 0;
  std::vector<int> color_;
  std::vector<std::vector<int>> neighbour_colors_;
};

}  // namespace detail

/// Whether `coloring` is a proper coloring of g.
inline bool is_proper_coloring(const AnnGraph& g, const std::vector<std::size_t>& coloring) {
  if (coloring.size() != g.vertex_count()) return false;
  for (auto [i, j] : g.edges())
    if (coloring[i] == coloring[j]) return false;
  return true;
}

inline bool is_clique(const AnnGraph& g, const std::vector<std::size_t>& vs) {
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b)
      if (!g.adjacent(vs[a], vs[b])) return false;
  return true;
}

inline GraphAnalysis analyze(const AnnGraph& g, AnalysisLimits limits = {}) {
  GraphAnalysis a;
  const std::size_t n = g.vertex_count();
  a.vertex_count = n;
  a.edge_count = g.edge_count();
  a.complete = a.edge_count == n * (n > 0 ? n - 1 : 0) / 2;
  a.universal = universal_vertices(g);

  // Connectivity and diameter by BFS from every vertex; a universal vertex bounds the diameter by 2.
  std::size_t diameter = 0;
  const bool shortcut = n >= 2 && !a.universal.empty();
  if (shortcut) diameter = a.complete ? 1 : 2;
  for (std::size_t s = 0; s < n && a.connected && !shortcut; ++s) {
    Bitset visited(n);
    visited.set(s);
    Bitset frontier = visited;
    std::size_t depth = 0;
    while (true) {
      Bitset next(n);
      frontier.for_each([&](std::size_t v) { next |= g.adjacency[v]; });
      next.subtract(visited);
      if (next.none()) break;
      ++depth;
      visited |= next;
      frontier = std::move(next);
    }
    if (visited.count() != n) a.connected = false;
    diameter = std::max(diameter, depth);
  }
  a.diameter = a.connected ? std::optional<std::size_t>(diameter) : std::nullopt;

  if (n >= 2 && a.edge_count == n - 1 && !a.universal.empty()) {
    a.star = true;
    a.center = a.universal.front();
  }

  // Two-coloring; component roots take side A.
  std::vector<int> side(n, -1);
  for (std::size_t s = 0; s < n && a.bipartite; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::deque<std::size_t> q{s};
    while (!q.empty() && a.bipartite) {
      auto v = q.front();
      q.pop_front();
      g.adjacency[v].for_each([&](std::size_t u) {
        if (side[u] < 0) {
          side[u] = 1 - side[v];
          q.push_back(u);
        } else if (side[u] == side[v]) {
          a.bipartite = false;
        }
      });
    }
  }
  if (a.bipartite) {
    for (std::size_t v = 0; v < n; ++v) (side[v] == 0 ? a.part_a : a.part_b).push_back(v);
    a.complete_bipartite =
        !a.part_a.empty() && !a.part_b.empty() && a.edge_count == a.part_a.size() * a.part_b.size();
  }

  // Clique number.
  a.clique = detail::greedy_clique(g);
  auto greedy_colors = detail::greedy_coloring(g);
  std::vector<int> best_coloring = greedy_colors;
  std::size_t greedy_count = 0;
  for (auto c : greedy_colors) greedy_count = std::max(greedy_count, static_cast<std::size_t>(c + 1));
  a.clique_lower = a.clique.size();
  a.clique_upper = greedy_count;
  if (n <= limits.max_exact_vertices) {
    a.clique = detail::CliqueSearch(g).run(a.clique);
    std::sort(a.clique.begin(), a.clique.end());
    a.clique_lower = a.clique_upper = a.clique.size();
  } else if (a.bipartite) {
    a.clique_upper = std::min<std::size_t>(a.clique_upper, a.edge_count > 0 ? 2 : (n > 0 ? 1 : 0));
  }
  if (a.clique_lower == a.clique_upper) a.clique_number = a.clique_lower;

  // Chromatic number.
  a.chromatic_lower = a.clique_lower;
  a.chromatic_upper = greedy_count;
  if (a.bipartite) {
    // Side assignment is an optimal coloring.
    best_coloring.assign(n, 0);
    for (std::size_t v = 0; v < n; ++v) best_coloring[v] = side[v];
    a.chromatic_upper = a.edge_count > 0 ? 2 : (n > 0 ? 1 : 0);
  } else if (n <= limits.max_exact_vertices && a.chromatic_lower < a.chromatic_upper) {
    best_coloring = detail::ColoringSearch(g, a.chromatic_lower, best_coloring).run(a.clique);
    std::size_t used = 0;
    for (auto c : best_coloring) used = std::max(used, static_cast<std::size_t>(c + 1));
    a.chromatic_upper = used;
    a.chromatic_lower = used;
  }
  if (a.chromatic_lower == a.chromatic_upper) a.chromatic_number = a.chromatic_lower;
  a.coloring.assign(best_coloring.begin(), best_coloring.end());
  return a;
}

/// Star K_{1,m}; with `allow_single`, the one-vertex graph K_{1,0} also counts.
inline bool is_star(const GraphAnalysis& a, bool allow_single = false) {
  return a.star || (allow_single && a.vertex_count == 1);
}

}  // namespace annsub
