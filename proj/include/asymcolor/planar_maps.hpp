#pragma once

// Combinatorial maps. An embedding of a connected graph in S^2 is modelled by
// a rotation system (a cyclic order of the darts around each vertex) of
// genus 0; the mirror image reverses every cyclic order.

#include <compare>
#include <optional>
#include <variant>
#include <vector>

#include "asymcolor/budget.hpp"
#include "asymcolor/graph.hpp"

namespace asymcolor {

/// Half-edge: `edge` seen from its endpoint `origin`.
struct Dart {
  EdgeId edge = 0;
  Vertex origin = 0;
  auto operator<=>(const Dart&) const = default;
};

/// Cyclic neighbour order around each vertex. Stored normalised (each cycle
/// rotated so its smallest neighbour comes first), so == is equality of
/// cyclic orders and <=> is a canonical total order.
class RotationSystem {
 public:
  RotationSystem() = default;
  explicit RotationSystem(std::vector<std::vector<Vertex>> around);

  int vertex_count() const { return static_cast<int>(around_.size()); }
  const std::vector<Vertex>& around(Vertex v) const { return around_[v]; }
  const std::vector<std::vector<Vertex>>& cycles() const { return around_; }

  /// Neighbour following u in the cyclic order at v.
  Vertex successor(Vertex v, Vertex u) const;
  Vertex predecessor(Vertex v, Vertex u) const;

  auto operator<=>(const RotationSystem&) const = default;

 private:
  std::vector<std::vector<Vertex>> around_;
};

/// Throws InvalidRotation unless every vertex lists exactly its neighbours once.
void check_rotation(const Graph& g, const RotationSystem& r);

struct Face {
  std::vector<Dart> boundary_walk;  // closed under the face successor
  std::vector<Vertex> vertices;     // origins along the walk
  bool is_simple_cycle = false;     // no vertex repeats (and length >= 3)

  int length() const { return static_cast<int>(boundary_walk.size()); }
};

/// Face tracing: the dart after u->v is v->succ_v(u). The darts are
/// partitioned into closed walks. An edgeless graph has a single face with
/// an empty walk, so V - E + F = 2 - 2g holds throughout.
std::vector<Face> trace_faces(const Graph& g, const RotationSystem& r);

/// (2 - V + E - F) / 2. Throws OddEulerDefect if the defect is odd.
int genus_of(const Graph& g, const RotationSystem& r);

RotationSystem mirror_rotation(const RotationSystem& r);

/// Rotation at phi(v) is the phi-image of the rotation at v.
RotationSystem transport_rotation(const Automorphism& phi, const RotationSystem& r);

struct EmbeddedMap {
  Graph graph;
  RotationSystem rotation;
  std::vector<Face> faces;
  int genus = 0;
};

EmbeddedMap make_map(const Graph& g, const RotationSystem& r);

struct NonPlanarWitness {
  enum class Kind { K5, K33 };
  Kind kind = Kind::K33;
  std::vector<EdgeId> edges;  // a Kuratowski subdivision
};

using PlanarityResult = std::variant<EmbeddedMap, NonPlanarWitness>;

/// Deterministic genus-0 embedding, or a Kuratowski subdivision.
PlanarityResult test_planarity_and_embed(const Graph& g);
bool is_planar(const Graph& g);

/// All genus-0 rotation systems in canonical (sorted) order; with
/// dedup_mirror only the smaller of {r, mirror(r)} is kept. Returns an empty
/// list for non-planar graphs. Throws BudgetExceeded when the number of
/// maps (or search nodes) exceeds budget.max_rotations.
std::vector<RotationSystem> enumerate_planar_rotations(const Graph& g, bool dedup_mirror,
                                                       const Budget& budget = {});

/// Product of (deg(v) - 1)! over vertices, saturating at SIZE_MAX.
std::size_t rotation_space_size(const Graph& g);

}  // namespace asymcolor
