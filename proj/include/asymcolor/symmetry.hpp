#pragma once

// Symmetries of 2-coloured sphere embeddings.
//
// A colour-preserving homeomorphism of (S^2, G) is modelled combinatorially
// as a colour-preserving automorphism phi together with a sign:
//   Preserving:  transport(phi, r) == r
//   Reversing:   transport(phi, r) == mirror(r)
// for the rotation system r of the embedding. Quantifying over every genus-0
// rotation system quantifies over every embedding of a connected graph.
//
// Orientation-reversing symmetries that induce the identity automorphism
// (r == mirror(r), i.e. maximum degree <= 2) are allowed by both the
// asymmetry and the faithful-chirality predicates.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "asymcolor/budget.hpp"
#include "asymcolor/graph.hpp"
#include "asymcolor/planar_maps.hpp"

namespace asymcolor {

enum class Orientation { Preserving, Reversing };

struct MapSymmetry {
  Automorphism automorphism;
  Orientation orientation = Orientation::Preserving;
  auto operator<=>(const MapSymmetry&) const = default;
};

/// Checks the orientation equation of `s` against r.
bool satisfies_orientation(const MapSymmetry& s, const RotationSystem& r);

/// All colour-preserving map symmetries of (g, c, r), sorted. An automorphism
/// appears with both signs exactly when r == mirror(r).
std::vector<MapSymmetry> map_symmetries(const Graph& g, const EdgeColoring& c,
                                        const RotationSystem& r);
/// Uncoloured variant.
std::vector<MapSymmetry> map_symmetries(const Graph& g, const RotationSystem& r);

enum class CertificateKind { TrivialAutGroup, FixedStar, OracleVerified };

struct Certificate {
  CertificateKind kind = CertificateKind::TrivialAutGroup;
  std::optional<Vertex> center;    // FixedStar
  std::vector<EdgeId> star_edges;  // FixedStar: three edges at center
  std::size_t group_order = 0;     // size of the colour-preserving group, when enumerated
  std::size_t embeddings_checked = 0;
};

std::string to_string(CertificateKind k);

/// Evidence for a false verdict. For embedding predicates the rotation is
/// always present; for the trivial-group predicate it is attached when the
/// automorphism is realised by the graph's own planar embedding.
struct Witness {
  std::optional<RotationSystem> rotation;
  Automorphism automorphism;
  std::optional<Orientation> orientation;
};

struct VerificationStats {
  std::size_t embeddings = 0;              // genus-0 rotation systems examined
  std::size_t automorphisms_filtered = 0;  // colour-preserving automorphisms considered
};

struct VerificationReport {
  std::string predicate;
  bool verdict = false;
  std::optional<Witness> witness;
  VerificationStats stats;
};

/// True iff the witness is a colour-preserving automorphism and, when a
/// rotation is attached, satisfies the orientation equation against it.
bool witness_rechecks(const Graph& g, const EdgeColoring& c, const Witness& w);

VerificationReport is_s2_asymmetric(const Graph& g, const EdgeColoring& c,
                                    const Budget& budget = {});
VerificationReport is_s2_faithfully_chiral(const Graph& g, const EdgeColoring& c,
                                           const Budget& budget = {});
VerificationReport has_trivial_color_automorphisms(const Graph& g, const EdgeColoring& c,
                                                   const Budget& budget = {});

/// Fixed-star certificate: a vertex v and three incident edges whose
/// endpoints are fixed by every colour-preserving automorphism. Sufficient
/// for S^2 asymmetry. Picks the first such v and its three first fixed
/// neighbours in vertex order.
std::optional<Certificate> lemma3_certificate(const Graph& g, const EdgeColoring& c);

/// Precomputed genus-0 rotation systems and their uncoloured map symmetries
/// for one graph, so many colorings can be judged without re-enumerating.
/// Gives the same verdicts as the free predicates.
class EmbeddingCatalog {
 public:
  EmbeddingCatalog(const Graph& g, const Budget& budget = {});

  const Graph& graph() const { return graph_; }
  const std::vector<RotationSystem>& rotations() const { return rotations_; }
  const std::vector<Automorphism>& automorphisms() const { return automorphisms_; }
  /// Uncoloured map symmetries of rotation i.
  std::vector<MapSymmetry> symmetries(std::size_t i) const;

  bool trivial_color_group(const EdgeColoring& c) const;
  VerificationReport s2_asymmetric(const EdgeColoring& c) const;
  VerificationReport s2_faithfully_chiral(const EdgeColoring& c) const;

 private:
  struct Entry {
    std::size_t automorphism;  // index into automorphisms_
    Orientation orientation;
  };

  bool preserves(std::size_t automorphism, const EdgeColoring& c) const;
  VerificationReport judge(const EdgeColoring& c, bool reversing_only,
                           const char* name) const;

  Graph graph_;
  std::vector<RotationSystem> rotations_;
  std::vector<Automorphism> automorphisms_;
  std::vector<std::vector<EdgeId>> edge_maps_;
  std::vector<std::vector<Entry>> entries_;
};

}  // namespace asymcolor
