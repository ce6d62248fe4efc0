#include "asymcolor/planar_maps.hpp"

#include <algorithm>
#include <iterator>
#include <limits>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>
#include <boost/property_map/property_map.hpp>

#include "asymcolor/error.hpp"

namespace asymcolor {

namespace {

std::vector<Vertex> normalized(std::vector<Vertex> cycle) {
  if (!cycle.empty()) {
    std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
  }
  return cycle;
}

std::size_t position_of(const std::vector<Vertex>& cycle, Vertex u) {
  const auto it = std::find(cycle.begin(), cycle.end(), u);
  return static_cast<std::size_t>(it - cycle.begin());
}

}  // namespace

RotationSystem::RotationSystem(std::vector<std::vector<Vertex>> around) : around_(std::move(around)) {
  for (auto& cycle : around_) cycle = normalized(std::move(cycle));
}

Vertex RotationSystem::successor(Vertex v, Vertex u) const {
  const auto& cycle = around_[v];
  return cycle[(position_of(cycle, u) + 1) % cycle.size()];
}

Vertex RotationSystem::predecessor(Vertex v, Vertex u) const {
  const auto& cycle = around_[v];
  return cycle[(position_of(cycle, u) + cycle.size() - 1) % cycle.size()];
}

void check_rotation(const Graph& g, const RotationSystem& r) {
  if (r.vertex_count() != g.vertex_count()) {
    throw Error(Errc::InvalidRotation, "rotation system has the wrong number of vertices");
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::vector<Vertex> listed = r.around(v);
    std::sort(listed.begin(), listed.end());
    const auto nbrs = g.neighbors(v);
    if (!std::equal(listed.begin(), listed.end(), nbrs.begin(), nbrs.end())) {
      throw Error(Errc::InvalidRotation, "rotation at '" + g.label(v) +
                                             "' does not list exactly its neighbours");
    }
  }
}

std::vector<Face> trace_faces(const Graph& g, const RotationSystem& r) {
  std::vector<Face> faces;
  if (g.edge_count() == 0) {
    Face lone;
    lone.vertices = {0};
    faces.push_back(std::move(lone));
    return faces;
  }
  auto dart_index = [&](Vertex origin, Vertex target) {
    const EdgeId e = g.edge_id(origin, target);
    return 2 * e + (origin == g.edge(e).u ? 0 : 1);
  };
  std::vector<char> used(static_cast<std::size_t>(2 * g.edge_count()), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    for (int side = 0; side < 2; ++side) {
      if (used[2 * e + side]) continue;
      Face face;
      Vertex from = side == 0 ? g.edge(e).u : g.edge(e).v;
      Vertex to = g.edge(e).other(from);
      while (!used[dart_index(from, to)]) {
        used[dart_index(from, to)] = 1;
        face.boundary_walk.push_back(Dart{g.edge_id(from, to), from});
        face.vertices.push_back(from);
        const Vertex next = r.successor(to, from);
        from = to;
        to = next;
      }
      std::vector<Vertex> sorted = face.vertices;
      std::sort(sorted.begin(), sorted.end());
      face.is_simple_cycle =
          sorted.size() >= 3 && std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

int genus_of(const Graph& g, const RotationSystem& r) {
  const long faces = static_cast<long>(trace_faces(g, r).size());
  const long defect = 2 - g.vertex_count() + g.edge_count() - faces;
  if (defect % 2 != 0 || defect < 0) {
    throw Error(Errc::OddEulerDefect, "Euler defect " + std::to_string(defect));
  }
  return static_cast<int>(defect / 2);
}

RotationSystem mirror_rotation(const RotationSystem& r) {
  std::vector<std::vector<Vertex>> around = r.cycles();
  for (auto& cycle : around) std::reverse(cycle.begin(), cycle.end());
  return RotationSystem(std::move(around));
}

RotationSystem transport_rotation(const Automorphism& phi, const RotationSystem& r) {
  std::vector<std::vector<Vertex>> around(static_cast<std::size_t>(r.vertex_count()));
  for (Vertex v = 0; v < r.vertex_count(); ++v) {
    auto& image = around[phi(v)];
    for (Vertex u : r.around(v)) image.push_back(phi(u));
  }
  return RotationSystem(std::move(around));
}

EmbeddedMap make_map(const Graph& g, const RotationSystem& r) {
  check_rotation(g, r);
  EmbeddedMap map{g, r, trace_faces(g, r), 0};
  map.genus = genus_of(g, r);
  return map;
}

// ---- planarity --------------------------------------------------------------

PlanarityResult test_planarity_and_embed(const Graph& g) {
  const int n = g.vertex_count();
  if (g.edge_count() == 0) {
    return make_map(g, RotationSystem(std::vector<std::vector<Vertex>>(static_cast<std::size_t>(n))));
  }
  using BoostGraph =
      boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                            boost::property<boost::vertex_index_t, int>,
                            boost::property<boost::edge_index_t, int>>;
  using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

  BoostGraph bg(static_cast<std::size_t>(n));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    boost::add_edge(g.edge(e).u, g.edge(e).v, e, bg);
  }
  std::vector<std::vector<BoostEdge>> embedding(static_cast<std::size_t>(n));
  std::vector<BoostEdge> kuratowski;
  const bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding =
          boost::make_iterator_property_map(embedding.begin(), boost::get(boost::vertex_index, bg)),
      boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));

  auto edge_of = [&](const BoostEdge& be) {
    return static_cast<EdgeId>(boost::get(boost::edge_index, bg, be));
  };
  if (!planar) {
    NonPlanarWitness witness;
    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    for (const auto& be : kuratowski) {
      const EdgeId e = edge_of(be);
      witness.edges.push_back(e);
      ++degree[g.edge(e).u];
      ++degree[g.edge(e).v];
    }
    std::sort(witness.edges.begin(), witness.edges.end());
    witness.edges.erase(std::unique(witness.edges.begin(), witness.edges.end()), witness.edges.end());
    witness.kind = std::any_of(degree.begin(), degree.end(), [](int d) { return d >= 4; })
                       ? NonPlanarWitness::Kind::K5
                       : NonPlanarWitness::Kind::K33;
    return witness;
  }
  std::vector<std::vector<Vertex>> around(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    for (const auto& be : embedding[v]) around[v].push_back(g.edge(edge_of(be)).other(v));
  }
  EmbeddedMap map = make_map(g, RotationSystem(std::move(around)));
  if (map.genus != 0) {
    throw Error(Errc::InternalVerificationFailure, "planar embedding traced to genus " +
                                                       std::to_string(map.genus));
  }
  return map;
}

bool is_planar(const Graph& g) {
  return std::holds_alternative<EmbeddedMap>(test_planarity_and_embed(g));
}

std::size_t rotation_space_size(const Graph& g) {
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
  std::size_t total = 1;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (int k = 2; k < g.degree(v); ++k) {
      if (total > kMax / static_cast<std::size_t>(k)) return kMax;
      total *= static_cast<std::size_t>(k);
    }
  }
  return total;
}

// ---- genus-0 enumeration ----------------------------------------------------
//
// Every genus-0 map of g is obtained exactly once by taking a rotation of a
// fixed spanning tree (trees are always planar) and inserting the remaining
// edges in a fixed order, each into a face that contains both endpoints, at a
// corner of each endpoint on that face. Deleting the edges again recovers the
// unique sequence, so no map is produced twice.

namespace {

class PlanarMapBuilder {
 public:
  PlanarMapBuilder(const Graph& g, const Budget& budget) : g_(g), budget_(budget) {
    const int n = g.vertex_count();
    tree_.assign(static_cast<std::size_t>(n), {});
    std::vector<char> in_tree(static_cast<std::size_t>(g.edge_count()), 0);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> stack{0};
    std::vector<std::size_t> cursor(static_cast<std::size_t>(n), 0);
    seen[0] = 1;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      const auto nbrs = g.neighbors(v);
      if (cursor[v] == nbrs.size()) {
        stack.pop_back();
        continue;
      }
      const Vertex w = nbrs[cursor[v]++];
      if (seen[w]) continue;
      seen[w] = 1;
      in_tree[g.edge_id(v, w)] = 1;
      tree_[v].push_back(w);
      tree_[w].push_back(v);
      stack.push_back(w);
    }
    for (auto& row : tree_) std::sort(row.begin(), row.end());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (!in_tree[e]) extra_.push_back(g.edge(e));
    }
    around_.assign(static_cast<std::size_t>(n), {});
  }

  std::vector<RotationSystem> run() {
    tree_level(0);
    return std::move(out_);
  }

 private:
  void tick() {
    if (++nodes_ > 16 * budget_.max_rotations) {
      throw Error(Errc::BudgetExceeded, "planar rotation search exceeded its node budget");
    }
  }

  void tree_level(Vertex v) {
    if (v == g_.vertex_count()) {
      insert(0);
      return;
    }
    std::vector<Vertex> rest = tree_[v];
    if (rest.size() <= 2) {
      around_[v] = rest;
      tree_level(v + 1);
      return;
    }
    const Vertex first = rest.front();
    rest.erase(rest.begin());
    do {
      around_[v] = {first};
      around_[v].insert(around_[v].end(), rest.begin(), rest.end());
      tree_level(v + 1);
    } while (std::next_permutation(rest.begin(), rest.end()));
  }

  /// Face id of every corner; corner (v, i) sits between around[v][i] and
  /// around[v][i+1] and belongs to the face of the dart around[v][i] -> v.
  std::vector<std::vector<int>> corner_faces() const {
    const int n = g_.vertex_count();
    std::vector<std::vector<int>> face(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) face[v].assign(around_[v].size(), -1);
    int next_id = 0;
    for (Vertex v = 0; v < n; ++v) {
      for (std::size_t i = 0; i < around_[v].size(); ++i) {
        if (face[v][i] >= 0) continue;
        // Walk the face containing corner (v, i).
        Vertex at = v;
        std::size_t pos = i;
        while (face[at][pos] < 0) {
          face[at][pos] = next_id;
          // Leave `at` along around[at][pos+1], arrive at `to`; the corner there
          // follows the incoming neighbour `at`.
          const Vertex to = around_[at][(pos + 1) % around_[at].size()];
          pos = position_of(around_[to], at);
          at = to;
        }
        ++next_id;
      }
    }
    return face;
  }

  void insert(std::size_t k) {
    tick();
    if (k == extra_.size()) {
      out_.emplace_back(around_);
      if (out_.size() > budget_.max_rotations) {
        throw Error(Errc::BudgetExceeded, "more than " + std::to_string(budget_.max_rotations) +
                                              " genus-0 rotation systems");
      }
      return;
    }
    const Vertex u = extra_[k].u;
    const Vertex w = extra_[k].v;
    const auto face = corner_faces();
    const std::size_t du = around_[u].size();
    const std::size_t dw = around_[w].size();
    for (std::size_t i = 0; i < du; ++i) {
      for (std::size_t j = 0; j < dw; ++j) {
        if (face[u][i] != face[w][j]) continue;
        around_[u].insert(around_[u].begin() + static_cast<long>(i) + 1, w);
        around_[w].insert(around_[w].begin() + static_cast<long>(j) + 1, u);
        insert(k + 1);
        around_[w].erase(around_[w].begin() + static_cast<long>(j) + 1);
        around_[u].erase(around_[u].begin() + static_cast<long>(i) + 1);
      }
    }
  }

  const Graph& g_;
  const Budget& budget_;
  std::vector<std::vector<Vertex>> tree_;
  std::vector<Edge> extra_;
  std::vector<std::vector<Vertex>> around_;
  std::vector<RotationSystem> out_;
  std::size_t nodes_ = 0;
};

}  // namespace

std::vector<RotationSystem> enumerate_planar_rotations(const Graph& g, bool dedup_mirror,
                                                       const Budget& budget) {
  if (!is_planar(g)) return {};
  std::vector<RotationSystem> all = PlanarMapBuilder(g, budget).run();
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  if (dedup_mirror) {
    std::erase_if(all, [](const RotationSystem& r) { return mirror_rotation(r) < r; });
  }
  return all;
}

}  // namespace asymcolor
