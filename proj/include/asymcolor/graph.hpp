#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace asymcolor {

/// Index of a vertex inside its Graph. Indices follow natural token order
/// of the vertex labels, so they are independent of insertion order.
using Vertex = int;
using EdgeId = int;

/// Natural ordering of vertex tokens: digit runs compare numerically,
/// everything else byte-wise ("2" < "10" < "a2" < "a10" < "b").
bool token_less(std::string_view a, std::string_view b);

struct Edge {
  Vertex u = 0;  // u < v
  Vertex v = 0;

  Vertex other(Vertex x) const { return x == u ? v : u; }
  auto operator<=>(const Edge&) const = default;
};

/// A finite, simple, connected, undirected graph with opaque vertex labels.
/// Immutable after construction.
class Graph {
 public:
  using LabelEdge = std::pair<std::string, std::string>;

  Graph() = default;

  /// Validating constructor. Throws Error with SelfLoop, DuplicateEdge,
  /// DanglingEndpoint, Disconnected or EmptyGraph.
  static Graph from_labels(const std::vector<std::string>& vertices,
                           const std::vector<LabelEdge>& edges);

  /// Convenience for generators: vertices are labelled "0".."n-1" unless
  /// `labels` is given.
  static Graph from_indices(int n, const std::vector<std::pair<int, int>>& edges,
                            std::vector<std::string> labels = {});

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::string& label(Vertex v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Vertex> find(std::string_view label) const;
  /// Like find() but throws BadParams for an unknown label.
  Vertex at(std::string_view label) const;

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  int max_degree() const;

  bool adjacent(Vertex a, Vertex b) const { return edge_id(a, b) >= 0; }
  /// Edge index of {a,b}, or -1.
  EdgeId edge_id(Vertex a, Vertex b) const {
    return edge_index_[static_cast<std::size_t>(a) * labels_.size() + b];
  }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }

  /// "u-v" with labels.
  std::string edge_name(EdgeId e) const;

  /// Subgraph on `keep` (all edges of this graph among them), labels kept.
  /// The result must be connected.
  Graph induced(std::span<const Vertex> keep) const;
  /// Subgraph formed by the given edges (and their endpoints), labels kept.
  Graph edge_subgraph(std::span<const EdgeId> edge_ids) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.labels_ == b.labels_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<EdgeId> edge_index_;
};

/// Spec-facing alias of Graph::from_labels.
Graph validate_graph(const std::vector<std::string>& vertices,
                     const std::vector<Graph::LabelEdge>& edges);

enum class Color : std::uint8_t { Black = 0, Grey = 1 };

/// Total Black/Grey assignment on the edges of one graph, indexed by EdgeId.
class EdgeColoring {
 public:
  EdgeColoring() = default;
  explicit EdgeColoring(const Graph& g, Color fill = Color::Black);
  explicit EdgeColoring(std::vector<Color> colors) : colors_(std::move(colors)) {}

  /// All black except the listed edges.
  static EdgeColoring with_grey(const Graph& g, std::span<const EdgeId> grey);
  /// Grey edges given as label pairs; throws InvalidColoring for non-edges.
  static EdgeColoring with_grey(const Graph& g,
                                const std::vector<Graph::LabelEdge>& grey);
  /// Bit i of `mask` set means edge i is grey.
  static EdgeColoring from_mask(const Graph& g, std::uint64_t mask);

  Color operator[](EdgeId e) const { return colors_[e]; }
  void set(EdgeId e, Color c) { colors_[e] = c; }
  std::size_t size() const { return colors_.size(); }
  const std::vector<Color>& colors() const { return colors_; }

  std::vector<EdgeId> grey_edges() const;
  int grey_count() const;
  EdgeColoring swapped() const;

  /// Throws InvalidColoring unless defined on exactly g's edge set.
  void check_against(const Graph& g) const;

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

 private:
  std::vector<Color> colors_;
};

/// Vertex bijection of a graph; image[v] is the image of v.
struct Automorphism {
  std::vector<Vertex> image;

  static Automorphism identity(int n);

  Vertex operator()(Vertex v) const { return image[v]; }
  bool is_identity() const;
  bool fixes(Vertex v) const { return image[v] == v; }
  Automorphism inverse() const;
  /// (a * b)(v) = a(b(v)).
  friend Automorphism operator*(const Automorphism& a, const Automorphism& b);
  EdgeId edge_image(const Graph& g, EdgeId e) const;
  /// True when the vertex map is a bijection preserving adjacency and
  /// non-adjacency of g.
  bool is_automorphism_of(const Graph& g) const;
  bool preserves(const Graph& g, const EdgeColoring& c) const;

  auto operator<=>(const Automorphism&) const = default;
};

// ---- structural queries -----------------------------------------------------

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

/// Size of a minimum vertex cut; |V|-1 for complete graphs.
int vertex_connectivity(const Graph& g);

/// Length of a shortest cycle, or nullopt for trees.
std::optional<int> girth(const Graph& g);

/// True iff there are vertex-disjoint paths a..c and b..d (endpoints
/// included). Throws VerticesNotDistinct.
bool disjoint_paths_exist(const Graph& g, Vertex a, Vertex c, Vertex b, Vertex d);

/// Blocks (biconnected components) as sorted edge lists, ordered by their
/// smallest edge.
std::vector<std::vector<EdgeId>> biconnected_components(const Graph& g);

}  // namespace asymcolor
