#pragma once

// Brute-force reference implementations. Deliberately naive: they share no
// code with the library beyond the Graph container, so agreement between the
// two is evidence rather than tautology. Only usable on small graphs.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "asymcolor/graph.hpp"

namespace oracle {

using asymcolor::Graph;
using asymcolor::Vertex;
using Perm = std::vector<int>;
using Rotation = std::vector<std::vector<int>>;

inline std::vector<std::vector<char>> adjacency_matrix(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const auto& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = 1;
  return adj;
}

inline bool connected_without(const Graph& g, const std::vector<char>& removed) {
  const int n = g.vertex_count();
  int start = -1, alive = 0;
  for (int v = 0; v < n; ++v) {
    if (!removed[v]) {
      ++alive;
      if (start < 0) start = v;
    }
  }
  if (alive <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v)) {
      if (!removed[w] && !seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == alive;
}

// Smallest vertex subset whose removal disconnects; n-1 for complete graphs.
inline int vertex_connectivity(const Graph& g) {
  const int n = g.vertex_count();
  int best = n - 1;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size >= best || n - size < 2) continue;
    std::vector<char> removed(n, 0);
    for (int v = 0; v < n; ++v) removed[v] = mask >> v & 1;
    if (!connected_without(g, removed)) best = size;
  }
  return best;
}

inline void simple_paths(const Graph& g, int from, int to, const std::vector<char>& banned,
                         std::vector<int>& path, std::vector<char>& on,
                         const std::function<void(const std::vector<int>&)>& visit) {
  path.push_back(from);
  on[from] = 1;
  if (from == to) {
    visit(path);
  } else {
    for (int w : g.neighbors(from)) {
      if (!on[w] && !banned[w]) simple_paths(g, w, to, banned, path, on, visit);
    }
  }
  on[from] = 0;
  path.pop_back();
}

// Every simple a..c path against every simple b..d path.
inline bool disjoint_paths(const Graph& g, int a, int c, int b, int d) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> first, second;
  std::vector<char> none(n, 0), on(n, 0);
  std::vector<int> path;
  simple_paths(g, a, c, none, path, on, [&](const std::vector<int>& p) { first.push_back(p); });
  simple_paths(g, b, d, none, path, on, [&](const std::vector<int>& p) { second.push_back(p); });
  for (const auto& p : first) {
    std::vector<char> used(n, 0);
    for (int v : p) used[v] = 1;
    for (const auto& q : second) {
      if (std::none_of(q.begin(), q.end(), [&](int v) { return used[v]; })) return true;
    }
  }
  return false;
}

inline bool is_automorphism(const std::vector<std::vector<char>>& adj, const Perm& p) {
  const int n = static_cast<int>(p.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (adj[i][j] != adj[p[i]][p[j]]) return false;
    }
  }
  return true;
}

// All n! permutations filtered; sorted because next_permutation is lexicographic.
inline std::vector<Perm> automorphisms(const Graph& g) {
  const auto adj = adjacency_matrix(g);
  Perm p(g.vertex_count());
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do {
    if (is_automorphism(adj, p)) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline int edge_of(const Graph& g, int u, int v) { return g.edge_id(u, v); }

// Colour given as one bool per edge id (true = grey).
inline bool preserves(const Graph& g, const Perm& p, const std::vector<bool>& grey) {
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& edge = g.edge(e);
    if (grey[e] != grey[edge_of(g, p[edge.u], p[edge.v])]) return false;
  }
  return true;
}

inline std::vector<Perm> color_preserving(const Graph& g, const std::vector<bool>& grey) {
  std::vector<Perm> out;
  for (const Perm& p : oracle::automorphisms(g)) {
    if (preserves(g, p, grey)) out.push_back(p);
  }
  return out;
}

inline bool is_identity(const Perm& p) {
  for (int i = 0; i < static_cast<int>(p.size()); ++i) {
    if (p[i] != i) return false;
  }
  return true;
}

inline int successor(const Rotation& r, int v, int u) {
  const auto& around = r[v];
  const auto it = std::find(around.begin(), around.end(), u);
  return std::next(it) == around.end() ? around.front() : *std::next(it);
}

// Number of dart orbits under u->v  =>  v->succ_v(u).
inline int face_count(const Graph& g, const Rotation& r) {
  if (g.edge_count() == 0) return 1;
  std::set<std::pair<int, int>> seen;
  int faces = 0;
  for (const auto& e : g.edges()) {
    for (auto dart : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      if (seen.count(dart)) continue;
      ++faces;
      auto d = dart;
      while (seen.insert(d).second) d = {d.second, successor(r, d.second, d.first)};
    }
  }
  return faces;
}

inline bool genus_zero(const Graph& g, const Rotation& r) {
  return g.vertex_count() - g.edge_count() + face_count(g, r) == 2;
}

// Full product of cyclic orders: first neighbour fixed, the rest permuted.
inline void for_each_rotation(const Graph& g, const std::function<bool(const Rotation&)>& visit) {
  const int n = g.vertex_count();
  Rotation r(n);
  for (int v = 0; v < n; ++v) r[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
  for (auto& around : r) std::sort(around.begin(), around.end());
  std::function<bool(int)> rec = [&](int v) -> bool {
    if (v == n) return visit(r);
    auto& around = r[v];
    if (around.size() <= 2) return rec(v + 1);
    std::sort(around.begin() + 1, around.end());
    do {
      if (rec(v + 1)) return true;
    } while (std::next_permutation(around.begin() + 1, around.end()));
    std::sort(around.begin() + 1, around.end());
    return false;
  };
  rec(0);
}

inline std::size_t rotation_count(const Graph& g) {
  std::size_t count = 0;
  for_each_rotation(g, [&](const Rotation&) {
    ++count;
    return false;
  });
  return count;
}

inline Rotation normalized(Rotation r) {
  for (auto& around : r) {
    if (!around.empty()) {
      std::rotate(around.begin(), std::min_element(around.begin(), around.end()), around.end());
    }
  }
  return r;
}

inline Rotation mirrored(const Rotation& r) {
  Rotation out = r;
  for (auto& around : out) std::reverse(around.begin(), around.end());
  return normalized(out);
}

inline Rotation transported(const Perm& p, const Rotation& r) {
  Rotation out(r.size());
  for (std::size_t v = 0; v < r.size(); ++v) {
    for (int u : r[v]) out[p[v]].push_back(p[u]);
  }
  return normalized(out);
}

inline std::vector<Rotation> planar_rotations(const Graph& g) {
  std::vector<Rotation> out;
  for_each_rotation(g, [&](const Rotation& r) {
    if (genus_zero(g, r)) out.push_back(normalized(r));
    return false;
  });
  std::sort(out.begin(), out.end());
  return out;
}

inline bool planar(const Graph& g) {
  bool found = false;
  for_each_rotation(g, [&](const Rotation& r) { return found = genus_zero(g, r); });
  return found;
}

// Does some genus-0 rotation admit a non-identity colour-preserving
// automorphism acting as the rotation (preserving) or its mirror (reversing)?
inline bool has_map_symmetry(const Graph& g, const std::vector<bool>& grey, bool reversing_only) {
  std::vector<Perm> group;
  for (const Perm& p : color_preserving(g, grey)) {
    if (!is_identity(p)) group.push_back(p);
  }
  if (group.empty()) return false;
  for (const Rotation& r : planar_rotations(g)) {
    const Rotation m = mirrored(r);
    for (const Perm& p : group) {
      const Rotation t = transported(p, r);
      if (t == m || (!reversing_only && t == r)) return true;
    }
  }
  return false;
}

inline bool s2_asymmetric(const Graph& g, const std::vector<bool>& grey) {
  return !has_map_symmetry(g, grey, false);
}

inline bool s2_chiral(const Graph& g, const std::vector<bool>& grey) {
  return !has_map_symmetry(g, grey, true);
}

// Minimum adjacency bit string over all vertex orders.
inline std::vector<char> canonical_code(const Graph& g) {
  const auto adj = adjacency_matrix(g);
  const int n = g.vertex_count();
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<char> best;
  do {
    std::vector<char> code;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < i; ++j) code.push_back(adj[p[i]][p[j]]);
    }
    if (best.empty() || code < best) best = std::move(code);
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  return a.vertex_count() == b.vertex_count() && a.edge_count() == b.edge_count() &&
         canonical_code(a) == canonical_code(b);
}

// Isomorphism classes of connected planar graphs on exactly n vertices,
// from all labelled graphs.
inline std::size_t connected_planar_classes(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  }
  std::set<std::vector<char>> classes;
  for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if (mask >> s & 1) edges.push_back(slots[s]);
    }
    if (n > 1 && static_cast<int>(edges.size()) < n - 1) continue;
    Graph g;
    try {
      g = Graph::from_indices(n, edges);
    } catch (...) {
      continue;
    }
    const auto code = canonical_code(g);
    if (classes.count(code)) continue;
    if (planar(g)) classes.insert(code);
  }
  return classes.size();
}

}  // namespace oracle
