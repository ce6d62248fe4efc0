#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "asymcolor/budget.hpp"
#include "asymcolor/error.hpp"
#include "asymcolor/graph.hpp"
#include "asymcolor/special_graphs.hpp"
#include "asymcolor/symmetry.hpp"

namespace asymcolor {

enum class Predicate { S2Asymmetric, S2FaithfullyChiral, TrivialAutGroup };

std::string to_string(Predicate p);

/// Visits every coloring modulo the global colour swap (edge 0 fixed Black),
/// ordered by number of grey edges, then colexicographically by grey set
/// ({1,2} < {1,3} < {2,3} < {1,4} ...).
/// Stops when the visitor returns true and yields that coloring.
/// Throws BudgetExceeded when 2^(E-1) exceeds budget.max_colorings.
template <typename Visitor>
std::optional<EdgeColoring> for_each_coloring_mod_swap(const Graph& g, const Budget& budget,
                                                       Visitor&& visit);

/// First coloring (canonical order, modulo swap) satisfying the predicate.
std::optional<EdgeColoring> exhaustive_coloring_search(const Graph& g, Predicate p,
                                                       const Budget& budget = {});
/// Same, reusing a prebuilt catalog for the S^2 predicates.
std::optional<EdgeColoring> exhaustive_coloring_search(const EmbeddingCatalog& catalog,
                                                       Predicate p, const Budget& budget = {});

/// One representative per isomorphism class of connected planar graphs with
/// 1..max_n vertices, in canonical order (vertex count, edge count, code).
/// Vertices are labelled "0".."n-1" along the canonical order.
std::vector<Graph> enumerate_connected_planar_graphs(int max_n, const Budget& budget = {});

/// Named families with deterministic labels:
///   single_vertex; path(n edges); cycle(n); star(n) = K1,n;
///   double_star(n, m[, internal path length = 1]); complete(n);
///   complete_bipartite(p, q); k4; k24; wheel(n rim vertices); prism(n);
///   tetrahedron, cube, octahedron, dodecahedron, icosahedron; petersen.
/// Throws BadParams.
Graph named_graph(const std::string& family, const std::vector<int>& params = {});

struct CorpusSpec {
  int max_vertices = 5;
  bool three_connected_only = false;
  Space space = Space::S2;
  Mode mode = Mode::Asymmetric;
  /// Extra graphs appended after the enumerated ones (family, params).
  std::vector<std::pair<std::string, std::vector<int>>> named;
  bool include_enumerated = true;
  bool include_timings = false;
};

struct CrossCheckRow {
  std::string canonical;
  int vertices = 0;
  int edges = 0;
  std::string graph_class;
  std::string published;        // "colorable", "exceptional:<citation>", "out-of-scope"
  std::string synthesizer;  // "colored:<case>", "exceptional", "unsupported:<reason>"
  std::string oracle;       // "found", "none"
  bool synthesized_verified = false;
  std::string status;  // "agree", "known-divergence", "disagree"
  std::vector<std::string> grey_edges;     // synthesizer coloring
  std::vector<std::string> oracle_grey;    // oracle coloring, when found
  std::string edge_list;                   // reproducible input
  double millis = 0.0;
};

struct CrossCheckReport {
  CorpusSpec spec;
  std::vector<CrossCheckRow> rows;

  std::size_t count(const std::string& status) const;
  bool all_agree() const { return count("disagree") == 0; }
};

CrossCheckReport cross_check_theorems(const CorpusSpec& spec, const Budget& budget = {});

// ---- template implementation ------------------------------------------------

template <typename Visitor>
std::optional<EdgeColoring> for_each_coloring_mod_swap(const Graph& g, const Budget& budget,
                                                       Visitor&& visit) {
  const int e = g.edge_count();
  if (e == 0) {
    EdgeColoring empty(g);
    if (visit(empty)) return empty;
    return std::nullopt;
  }
  const int free_bits = e - 1;
  if (free_bits >= 63 || (std::size_t{1} << free_bits) > budget.max_colorings) {
    throw Error(Errc::BudgetExceeded, "2^" + std::to_string(free_bits) +
                                          " colorings exceed the coloring budget");
  }
  // Gosper's hack over the free edges 1..e-1 (bit b is edge b+1).
  for (int k = 0; k <= free_bits; ++k) {
    if (k == 0) {
      EdgeColoring c(g);
      if (visit(c)) return c;
      continue;
    }
    std::uint64_t mask = (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = std::uint64_t{1} << free_bits;
    while (mask < limit) {
      EdgeColoring c(g);
      for (int b = 0; b < free_bits; ++b) {
        if (mask >> b & 1) c.set(b + 1, Color::Grey);
      }
      if (visit(c)) return c;
      const std::uint64_t lowest = mask & (~mask + 1);
      const std::uint64_t ripple = mask + lowest;
      mask = (((ripple ^ mask) >> 2) / lowest) | ripple;
    }
  }
  return std::nullopt;
}

}  // namespace asymcolor
