#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "asymcolor/budget.hpp"
#include "asymcolor/graph.hpp"

namespace asymcolor {

/// Isomorphism-invariant vertex classes from colour refinement, seeded by
/// degree (and grey degree when a coloring is given). Class ids are dense
/// ranks of the stable signatures, so equal graphs give equal ids.
std::vector<int> refine_classes(const Graph& g, const EdgeColoring* coloring = nullptr);

/// The full automorphism group, each element once, sorted by image sequence.
/// Throws SizeLimitExceeded past the vertex bound or group-order cap.
std::vector<Automorphism> automorphisms(const Graph& g, const Budget& budget = {});

/// Automorphisms whose induced edge map preserves `c`; same order and
/// limits as automorphisms(). Always contains the identity.
std::vector<Automorphism> color_preserving_automorphisms(const Graph& g,
                                                         const EdgeColoring& c,
                                                         const Budget& budget = {});

/// Up to `limit` color-preserving automorphisms in search order (not sorted).
/// Used for cheap triviality tests: limit 2 decides whether the group is trivial.
std::vector<Automorphism> first_color_preserving_automorphisms(const Graph& g,
                                                               const EdgeColoring* c,
                                                               std::size_t limit);

/// Some color-preserving automorphism with from -> to, if one exists.
std::optional<Automorphism> find_automorphism_mapping(const Graph& g,
                                                      const EdgeColoring* c,
                                                      Vertex from, Vertex to);

/// Orbit id per vertex under the color-preserving group, computed without
/// enumerating the group. Orbit ids are the smallest vertex of each orbit.
std::vector<Vertex> vertex_orbits(const Graph& g, const EdgeColoring* c = nullptr);

/// Canonical labelling: the vertex order minimising the packed adjacency
/// code among orders compatible with refine_classes().
struct CanonicalForm {
  int vertex_count = 0;
  std::vector<bool> code;     // adjacency bits, row k lists adj(order[k], order[j]) for j < k
  std::vector<Vertex> order;  // order[k] = vertex placed at canonical position k

  std::string to_string() const;  // "n<count>:<hex>"
  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.vertex_count == b.vertex_count && a.code == b.code;
  }
};

CanonicalForm canonical_form(const Graph& g);

/// g relabelled along its canonical order, vertices named "0".."n-1".
Graph canonical_graph(const Graph& g);

}  // namespace asymcolor
