#include "asymcolor/special_graphs.hpp"

#include <algorithm>
#include <deque>

#include "asymcolor/error.hpp"
#include "asymcolor/planar_maps.hpp"

namespace asymcolor {

std::string to_string(Space s) { return s == Space::S2 ? "s2" : "s3"; }

std::string to_string(Mode m) {
  return m == Mode::Asymmetric ? "asymmetric" : "faithfully-chiral";
}

std::string GraphClass::to_string() const {
  switch (tag) {
    case Tag::SingleVertex: return "single-vertex";
    case Tag::Path: return "path(" + std::to_string(n) + ")";
    case Tag::Cycle: return "cycle(" + std::to_string(n) + ")";
    case Tag::Star: return "star(" + std::to_string(n) + ")";
    case Tag::DoubleStar: return "double-star(" + std::to_string(n) + "," + std::to_string(m) + ")";
    case Tag::CompleteBipartite2m: return "K2," + std::to_string(n);
    case Tag::K4: return "K4";
    case Tag::Other: return "other";
  }
  return "other";
}

namespace {

using Tag = GraphClass::Tag;

GraphClass make(Tag tag, int n = 0, int m = 0) { return GraphClass{tag, n, m}; }

std::optional<GraphClass> classify_tree(const Graph& g) {
  const int count = g.vertex_count();
  if (g.max_degree() <= 2) return make(Tag::Path, g.edge_count());

  std::vector<Vertex> hubs;
  for (Vertex v = 0; v < count; ++v) {
    if (g.degree(v) >= 3) hubs.push_back(v);
  }
  if (hubs.size() == 1) {
    const Vertex h = hubs[0];
    if (g.degree(h) == count - 1) return make(Tag::Star, g.degree(h));
    // Spider: S_{1,m} has exactly one leg longer than an edge.
    int long_legs = 0;
    for (Vertex w : g.neighbors(h)) long_legs += g.degree(w) == 2 ? 1 : 0;
    if (long_legs == 1) return make(Tag::DoubleStar, 1, g.degree(h) - 1);
    return std::nullopt;
  }
  if (hubs.size() == 2) {
    const Vertex u = hubs[0];
    const Vertex w = hubs[1];
    std::vector<Vertex> parent(static_cast<std::size_t>(count), -1);
    std::deque<Vertex> queue{u};
    parent[u] = u;
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      for (Vertex y : g.neighbors(x)) {
        if (parent[y] < 0) {
          parent[y] = x;
          queue.push_back(y);
        }
      }
    }
    std::vector<char> on_path(static_cast<std::size_t>(count), 0);
    for (Vertex x = w; x != u; x = parent[x]) on_path[x] = 1;
    on_path[u] = 1;
    for (Vertex x = 0; x < count; ++x) {
      if (on_path[x]) continue;
      if (g.degree(x) != 1) return std::nullopt;
      const Vertex anchor = g.neighbors(x)[0];
      if (anchor != u && anchor != w) return std::nullopt;
    }
    const int a = g.degree(u) - 1;
    const int b = g.degree(w) - 1;
    return make(Tag::DoubleStar, std::min(a, b), std::max(a, b));
  }
  return std::nullopt;
}

bool is_k2m(const Graph& g) {
  const int count = g.vertex_count();
  const int m = count - 2;
  if (m < 3 || g.edge_count() != 2 * m) return false;
  std::vector<Vertex> hubs;
  for (Vertex v = 0; v < count; ++v) {
    if (g.degree(v) == m) hubs.push_back(v);
  }
  // For m = 3 there may be more degree-3 vertices only if the graph is not K2,3.
  if (hubs.size() < 2) return false;
  for (std::size_t i = 0; i < hubs.size(); ++i) {
    for (std::size_t j = i + 1; j < hubs.size(); ++j) {
      const Vertex a = hubs[i];
      const Vertex c = hubs[j];
      if (g.adjacent(a, c)) continue;
      bool ok = true;
      for (Vertex x = 0; x < count && ok; ++x) {
        if (x == a || x == c) continue;
        ok = g.degree(x) == 2 && g.adjacent(x, a) && g.adjacent(x, c);
      }
      if (ok) return true;
    }
  }
  return false;
}

std::string short_name(const GraphClass& k) {
  switch (k.tag) {
    case Tag::SingleVertex: return "single-vertex";
    case Tag::Cycle:
      return k.n == 3 ? "triangle" : k.n == 4 ? "square" : k.n == 5 ? "pentagon" : "cycle";
    case Tag::Path: return k.n == 1 ? "K1,n" : "path";
    case Tag::Star: return "K1,n";
    case Tag::DoubleStar: return "Snm-odd";
    case Tag::CompleteBipartite2m: return "K2,4";
    case Tag::K4: return "K4";
    case Tag::Other: return "other";
  }
  return "other";
}

bool in_chiral_list(const GraphClass& k) {
  switch (k.tag) {
    case Tag::Cycle: return k.n <= 5;
    case Tag::Path: return k.n == 1;
    case Tag::Star: return true;
    case Tag::DoubleStar: return k.n % 2 == 1 && k.m % 2 == 1 && !(k.n == 1 && k.m == 1);
    default: return false;
  }
}

bool in_asymmetric_list(const GraphClass& k) {
  if (in_chiral_list(k)) return true;
  switch (k.tag) {
    case Tag::SingleVertex: return true;
    case Tag::K4: return true;
    case Tag::CompleteBipartite2m: return k.n == 4;
    default: return false;
  }
}

}  // namespace

GraphClass classify_special(const Graph& g) {
  const int count = g.vertex_count();
  if (count == 1) return make(Tag::SingleVertex);
  bool all_two = true;
  for (Vertex v = 0; v < count; ++v) all_two = all_two && g.degree(v) == 2;
  if (all_two) return make(Tag::Cycle, count);
  if (is_tree(g)) {
    if (auto k = classify_tree(g)) return *k;
    return make(Tag::Other);
  }
  if (is_k2m(g)) return make(Tag::CompleteBipartite2m, count - 2);
  if (count == 4 && g.edge_count() == 6) return make(Tag::K4);
  return make(Tag::Other);
}

std::optional<ExceptionReason> exceptional_for(const Graph& g, Space space, Mode mode) {
  const GraphClass k = classify_special(g);
  if (space == Space::S3) {
    if (!is_planar(g) || vertex_connectivity(g) < 3) {
      throw Error(Errc::UnsupportedScope,
                  "S3 classification covers planar 3-connected graphs only");
    }
    if (k.tag == Tag::K4) return ExceptionReason{space, mode, k, "s3-3connected:K4"};
    return std::nullopt;
  }
  const bool listed = mode == Mode::Asymmetric ? in_asymmetric_list(k) : in_chiral_list(k);
  if (!listed) return std::nullopt;
  const std::string prefix = mode == Mode::Asymmetric ? "s2-asymmetric:" : "s2-faithfully-chiral:";
  return ExceptionReason{space, mode, k, prefix + short_name(k)};
}

}  // namespace asymcolor
