#include "asymcolor/graph.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <set>

#include "asymcolor/error.hpp"
#include "flow.hpp"

namespace asymcolor {

namespace {

bool is_digit(char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; }

std::string_view strip_zeros(std::string_view s) {
  std::size_t k = 0;
  while (k + 1 < s.size() && s[k] == '0') ++k;
  return s.substr(k);
}

}  // namespace

bool token_less(std::string_view a, std::string_view b) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (is_digit(a[i]) && is_digit(b[j])) {
      std::size_t i2 = i;
      std::size_t j2 = j;
      while (i2 < a.size() && is_digit(a[i2])) ++i2;
      while (j2 < b.size() && is_digit(b[j2])) ++j2;
      const auto na = strip_zeros(a.substr(i, i2 - i));
      const auto nb = strip_zeros(b.substr(j, j2 - j));
      if (na.size() != nb.size()) return na.size() < nb.size();
      if (na != nb) return na < nb;
      if (i2 - i != j2 - j) return i2 - i < j2 - j;
      i = i2;
      j = j2;
    } else {
      if (a[i] != b[j]) return static_cast<unsigned char>(a[i]) < static_cast<unsigned char>(b[j]);
      ++i;
      ++j;
    }
  }
  return a.size() - i < b.size() - j;
}

// ---- Graph ------------------------------------------------------------------

Graph Graph::from_labels(const std::vector<std::string>& vertices,
                         const std::vector<LabelEdge>& edges) {
  // An empty vertex list means the vertex set is implied by the edges.
  std::vector<std::string> labels = vertices;
  if (labels.empty()) {
    for (const auto& [a, b] : edges) {
      labels.push_back(a);
      labels.push_back(b);
    }
  }
  std::sort(labels.begin(), labels.end(),
            [](const std::string& x, const std::string& y) { return token_less(x, y); });
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  if (labels.empty()) throw Error(Errc::EmptyGraph, "graph has no vertices");

  auto index_of = [&](const std::string& name) -> Vertex {
    auto it = std::lower_bound(labels.begin(), labels.end(), name,
                               [](const std::string& x, const std::string& y) {
                                 return token_less(x, y);
                               });
    if (it == labels.end() || *it != name) {
      throw Error(Errc::DanglingEndpoint, "edge endpoint '" + name + "' is not a vertex");
    }
    return static_cast<Vertex>(it - labels.begin());
  };

  Graph g;
  g.labels_ = labels;
  const std::size_t n = g.labels_.size();
  std::set<Edge> seen;
  for (const auto& [a, b] : edges) {
    if (a == b) throw Error(Errc::SelfLoop, "self-loop at '" + a + "'");
    Vertex u = index_of(a);
    Vertex v = index_of(b);
    if (u > v) std::swap(u, v);
    if (!seen.insert(Edge{u, v}).second) {
      throw Error(Errc::DuplicateEdge, "duplicate edge " + a + "-" + b);
    }
  }
  g.edges_.assign(seen.begin(), seen.end());
  g.adjacency_.assign(n, {});
  g.edge_index_.assign(n * n, -1);
  for (EdgeId e = 0; e < static_cast<EdgeId>(g.edges_.size()); ++e) {
    const auto [u, v] = g.edges_[e];
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
    g.edge_index_[u * n + v] = e;
    g.edge_index_[v * n + u] = e;
  }
  for (auto& row : g.adjacency_) std::sort(row.begin(), row.end());
  if (!is_connected(g)) throw Error(Errc::Disconnected, "graph is not connected");
  return g;
}

Graph Graph::from_indices(int n, const std::vector<std::pair<int, int>>& edges,
                          std::vector<std::string> labels) {
  if (labels.empty()) {
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  }
  if (static_cast<int>(labels.size()) != n) {
    throw Error(Errc::BadParams, "label count does not match vertex count");
  }
  std::vector<LabelEdge> named;
  named.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(Errc::DanglingEndpoint, "edge index out of range");
    }
    named.emplace_back(labels[u], labels[v]);
  }
  return from_labels(labels, named);
}

Graph validate_graph(const std::vector<std::string>& vertices,
                     const std::vector<Graph::LabelEdge>& edges) {
  return Graph::from_labels(vertices, edges);
}

std::optional<Vertex> Graph::find(std::string_view label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label,
                             [](const std::string& x, std::string_view y) { return token_less(x, y); });
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<Vertex>(it - labels_.begin());
}

Vertex Graph::at(std::string_view label) const {
  auto v = find(label);
  if (!v) throw Error(Errc::BadParams, "unknown vertex '" + std::string(label) + "'");
  return *v;
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& row : adjacency_) best = std::max(best, static_cast<int>(row.size()));
  return best;
}

std::string Graph::edge_name(EdgeId e) const {
  return labels_[edges_[e].u] + "-" + labels_[edges_[e].v];
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  std::vector<char> in(labels_.size(), 0);
  std::vector<std::string> names;
  for (Vertex v : keep) {
    in[v] = 1;
    names.push_back(labels_[v]);
  }
  std::vector<LabelEdge> sub;
  for (const auto& e : edges_) {
    if (in[e.u] && in[e.v]) sub.emplace_back(labels_[e.u], labels_[e.v]);
  }
  return from_labels(names, sub);
}

Graph Graph::edge_subgraph(std::span<const EdgeId> edge_ids) const {
  std::vector<std::string> names;
  std::vector<LabelEdge> sub;
  for (EdgeId e : edge_ids) {
    names.push_back(labels_[edges_[e].u]);
    names.push_back(labels_[edges_[e].v]);
    sub.emplace_back(labels_[edges_[e].u], labels_[edges_[e].v]);
  }
  return from_labels(names, sub);
}

// ---- EdgeColoring -----------------------------------------------------------

EdgeColoring::EdgeColoring(const Graph& g, Color fill)
    : colors_(static_cast<std::size_t>(g.edge_count()), fill) {}

EdgeColoring EdgeColoring::with_grey(const Graph& g, std::span<const EdgeId> grey) {
  EdgeColoring c(g);
  for (EdgeId e : grey) c.set(e, Color::Grey);
  return c;
}

EdgeColoring EdgeColoring::with_grey(const Graph& g, const std::vector<Graph::LabelEdge>& grey) {
  EdgeColoring c(g);
  for (const auto& [a, b] : grey) {
    const auto u = g.find(a);
    const auto v = g.find(b);
    if (!u || !v || !g.adjacent(*u, *v)) {
      throw Error(Errc::InvalidColoring, a + "-" + b + " is not an edge");
    }
    c.set(g.edge_id(*u, *v), Color::Grey);
  }
  return c;
}

EdgeColoring EdgeColoring::from_mask(const Graph& g, std::uint64_t mask) {
  EdgeColoring c(g);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (mask >> e & 1) c.set(e, Color::Grey);
  }
  return c;
}

std::vector<EdgeId> EdgeColoring::grey_edges() const {
  std::vector<EdgeId> out;
  for (std::size_t e = 0; e < colors_.size(); ++e) {
    if (colors_[e] == Color::Grey) out.push_back(static_cast<EdgeId>(e));
  }
  return out;
}

int EdgeColoring::grey_count() const {
  return static_cast<int>(std::count(colors_.begin(), colors_.end(), Color::Grey));
}

EdgeColoring EdgeColoring::swapped() const {
  EdgeColoring out = *this;
  for (auto& c : out.colors_) c = c == Color::Grey ? Color::Black : Color::Grey;
  return out;
}

void EdgeColoring::check_against(const Graph& g) const {
  if (colors_.size() != static_cast<std::size_t>(g.edge_count())) {
    throw Error(Errc::InvalidColoring, "coloring covers " + std::to_string(colors_.size()) +
                                           " edges, graph has " + std::to_string(g.edge_count()));
  }
}

// ---- Automorphism -----------------------------------------------------------

Automorphism Automorphism::identity(int n) {
  Automorphism a;
  a.image.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) a.image[i] = i;
  return a;
}

bool Automorphism::is_identity() const {
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (image[i] != static_cast<Vertex>(i)) return false;
  }
  return true;
}

Automorphism Automorphism::inverse() const {
  Automorphism inv;
  inv.image.resize(image.size());
  for (std::size_t i = 0; i < image.size(); ++i) inv.image[image[i]] = static_cast<Vertex>(i);
  return inv;
}

Automorphism operator*(const Automorphism& a, const Automorphism& b) {
  Automorphism out;
  out.image.resize(b.image.size());
  for (std::size_t i = 0; i < b.image.size(); ++i) out.image[i] = a.image[b.image[i]];
  return out;
}

EdgeId Automorphism::edge_image(const Graph& g, EdgeId e) const {
  const Edge& ed = g.edge(e);
  return g.edge_id(image[ed.u], image[ed.v]);
}

bool Automorphism::is_automorphism_of(const Graph& g) const {
  const int n = g.vertex_count();
  if (static_cast<int>(image.size()) != n) return false;
  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  for (Vertex v : image) {
    if (v < 0 || v >= n || hit[v]) return false;
    hit[v] = 1;
  }
  for (const Edge& e : g.edges()) {
    if (!g.adjacent(image[e.u], image[e.v])) return false;
  }
  // Injective on a finite edge set of equal size, so non-edges map to non-edges.
  return true;
}

bool Automorphism::preserves(const Graph& g, const EdgeColoring& c) const {
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (c[e] != c[edge_image(g, e)]) return false;
  }
  return true;
}

// ---- structural queries -----------------------------------------------------

bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return false;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

bool is_tree(const Graph& g) { return g.edge_count() == g.vertex_count() - 1; }

int vertex_connectivity(const Graph& g) {
  const int n = g.vertex_count();
  const long complete_edges = static_cast<long>(n) * (n - 1) / 2;
  if (g.edge_count() == complete_edges) return n - 1;
  int best = n - 1;
  for (Vertex v = 0; v < n; ++v) best = std::min(best, g.degree(v));
  // Some vertex among the first best+1 lies outside a minimum cut.
  for (Vertex s = 0; s <= best && s < n; ++s) {
    for (Vertex t = 0; t < n; ++t) {
      if (t == s || g.adjacent(s, t)) continue;
      best = std::min(best, detail::local_vertex_connectivity(g, {s}, {t}, best));
    }
  }
  return best;
}

std::optional<int> girth(const Graph& g) {
  const int n = g.vertex_count();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<Vertex> parent(static_cast<std::size_t>(n));
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::deque<Vertex> queue{root};
    dist[root] = 0;
    parent[root] = -1;
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      if (2 * dist[u] + 1 >= best) break;
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u]) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

bool disjoint_paths_exist(const Graph& g, Vertex a, Vertex c, Vertex b, Vertex d) {
  const std::set<Vertex> distinct{a, b, c, d};
  if (distinct.size() != 4) {
    throw Error(Errc::VerticesNotDistinct, "disjoint_paths_exist needs four distinct vertices");
  }
  // Two disjoint {a,b} -> {c,d} paths are necessary (they may pair the wrong
  // way, so this only prunes).
  if (detail::local_vertex_connectivity(g, {a, b}, {c, d}, 2) < 2) return false;

  const int n = g.vertex_count();
  std::vector<char> blocked(static_cast<std::size_t>(n), 0);
  auto b_reaches_d = [&]() {
    std::vector<char> seen(blocked);
    std::vector<Vertex> stack{b};
    seen[b] = 1;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      if (v == d) return true;
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    return false;
  };

  // Enumerate simple a..c paths avoiding b and d; removing more vertices can
  // only disconnect b from d, so prune as soon as that happens.
  std::function<bool(Vertex)> extend = [&](Vertex v) -> bool {
    if (v == c) return true;  // caller already checked b..d
    for (Vertex w : g.neighbors(v)) {
      if (blocked[w] || w == b || w == d) continue;
      blocked[w] = 1;
      if (b_reaches_d() && extend(w)) return true;
      blocked[w] = 0;
    }
    return false;
  };
  blocked[a] = 1;
  return b_reaches_d() && extend(a);
}

std::vector<std::vector<EdgeId>> biconnected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<EdgeId> stack;
  std::vector<std::vector<EdgeId>> blocks;
  int timer = 0;

  std::function<void(Vertex, Vertex)> dfs = [&](Vertex u, Vertex parent) {
    disc[u] = low[u] = timer++;
    for (Vertex w : g.neighbors(u)) {
      if (w == parent) continue;
      const EdgeId e = g.edge_id(u, w);
      if (disc[w] < 0) {
        stack.push_back(e);
        dfs(w, u);
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= disc[u]) {
          std::vector<EdgeId> block;
          while (true) {
            const EdgeId top = stack.back();
            stack.pop_back();
            block.push_back(top);
            if (top == e) break;
          }
          std::sort(block.begin(), block.end());
          blocks.push_back(std::move(block));
        }
      } else if (disc[w] < disc[u]) {
        stack.push_back(e);
        low[u] = std::min(low[u], disc[w]);
      }
    }
  };
  dfs(0, -1);
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

}  // namespace asymcolor
