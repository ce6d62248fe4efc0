#include "asymcolor/symmetry.hpp"

#include <algorithm>
#include <deque>

#include "asymcolor/automorphisms.hpp"
#include "asymcolor/error.hpp"

namespace asymcolor {

bool satisfies_orientation(const MapSymmetry& s, const RotationSystem& r) {
  const RotationSystem moved = transport_rotation(s.automorphism, r);
  return s.orientation == Orientation::Preserving ? moved == r : moved == mirror_rotation(r);
}

namespace {

/// Extends the dart assignment (v0 -> x, u0 -> y) along the rotation, turning
/// the same way (Preserving) or the opposite way (Reversing) at the image.
std::optional<Automorphism> propagate(const Graph& g, const EdgeColoring* c,
                                      const RotationSystem& r, Vertex v0, Vertex u0, Vertex x,
                                      Vertex y, Orientation orientation) {
  const int n = g.vertex_count();
  std::vector<Vertex> image(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  auto assign = [&](Vertex from, Vertex to) {
    if (image[from] >= 0) return image[from] == to;
    if (used[to] || g.degree(from) != g.degree(to)) return false;
    image[from] = to;
    used[to] = 1;
    return true;
  };
  if (!assign(v0, x) || !assign(u0, y)) return std::nullopt;

  // Each queued pair is a dart v->u whose image is known.
  std::deque<std::pair<Vertex, Vertex>> queue{{v0, u0}};
  std::vector<char> done(static_cast<std::size_t>(n), 0);
  while (!queue.empty()) {
    const auto [v, u] = queue.front();
    queue.pop_front();
    if (done[v]) continue;
    done[v] = 1;
    Vertex from = u;
    Vertex to = image[u];
    for (int step = 0; step < g.degree(v); ++step) {
      if (c != nullptr && (*c)[g.edge_id(v, from)] != (*c)[g.edge_id(image[v], to)]) {
        return std::nullopt;
      }
      if (!done[from]) queue.emplace_back(from, v);
      from = r.successor(v, from);
      to = orientation == Orientation::Preserving ? r.successor(image[v], to)
                                                  : r.predecessor(image[v], to);
      if (!assign(from, to)) return std::nullopt;
    }
  }
  return Automorphism{std::move(image)};
}

std::vector<MapSymmetry> symmetries_impl(const Graph& g, const EdgeColoring* c,
                                         const RotationSystem& r) {
  check_rotation(g, r);
  if (c != nullptr) c->check_against(g);
  std::vector<MapSymmetry> out;
  if (g.edge_count() == 0) {
    const Automorphism id = Automorphism::identity(g.vertex_count());
    out.push_back({id, Orientation::Preserving});
    out.push_back({id, Orientation::Reversing});
    return out;
  }
  const Vertex v0 = 0;
  const Vertex u0 = r.around(v0).front();
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    if (g.degree(x) != g.degree(v0)) continue;
    for (Vertex y : r.around(x)) {
      for (Orientation o : {Orientation::Preserving, Orientation::Reversing}) {
        if (auto phi = propagate(g, c, r, v0, u0, x, y, o)) out.push_back({*phi, o});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Shared search for the embedding predicates: first (rotation, automorphism,
/// sign) in canonical order that is a non-identity colour-preserving symmetry.
VerificationReport search_embeddings(const Graph& g, const EdgeColoring& c, bool reversing_only,
                                     const char* name, const Budget& budget) {
  c.check_against(g);
  if (!is_planar(g)) throw Error(Errc::NotPlanar, "S2 predicates need a planar graph");
  VerificationReport report;
  report.predicate = name;
  report.verdict = true;
  if (first_color_preserving_automorphisms(g, &c, 2).size() < 2) return report;

  std::vector<Automorphism> group = color_preserving_automorphisms(g, c, budget);
  std::erase_if(group, [](const Automorphism& a) { return a.is_identity(); });
  report.stats.automorphisms_filtered = group.size();
  for (const RotationSystem& r : enumerate_planar_rotations(g, true, budget)) {
    ++report.stats.embeddings;
    const RotationSystem mirrored = mirror_rotation(r);
    for (const Automorphism& phi : group) {
      const RotationSystem moved = transport_rotation(phi, r);
      std::optional<Orientation> sign;
      if (!reversing_only && moved == r) {
        sign = Orientation::Preserving;
      } else if (moved == mirrored) {
        sign = Orientation::Reversing;
      }
      if (sign) {
        report.verdict = false;
        report.witness = Witness{r, phi, sign};
        return report;
      }
    }
  }
  return report;
}

}  // namespace

std::vector<MapSymmetry> map_symmetries(const Graph& g, const EdgeColoring& c,
                                        const RotationSystem& r) {
  return symmetries_impl(g, &c, r);
}

std::vector<MapSymmetry> map_symmetries(const Graph& g, const RotationSystem& r) {
  return symmetries_impl(g, nullptr, r);
}

std::string to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::TrivialAutGroup: return "trivial-aut-group";
    case CertificateKind::FixedStar: return "fixed-star";
    case CertificateKind::OracleVerified: return "oracle-verified";
  }
  return "unknown";
}

bool witness_rechecks(const Graph& g, const EdgeColoring& c, const Witness& w) {
  if (static_cast<int>(w.automorphism.image.size()) != g.vertex_count()) return false;
  if (w.automorphism.is_identity() || !w.automorphism.is_automorphism_of(g) ||
      !w.automorphism.preserves(g, c)) {
    return false;
  }
  if (!w.rotation) return true;
  try {
    check_rotation(g, *w.rotation);
    if (genus_of(g, *w.rotation) != 0) return false;
  } catch (const Error&) {
    return false;
  }
  if (!w.orientation) return false;
  return satisfies_orientation(MapSymmetry{w.automorphism, *w.orientation}, *w.rotation);
}

VerificationReport is_s2_asymmetric(const Graph& g, const EdgeColoring& c, const Budget& budget) {
  return search_embeddings(g, c, false, "s2-asymmetric", budget);
}

VerificationReport is_s2_faithfully_chiral(const Graph& g, const EdgeColoring& c,
                                           const Budget& budget) {
  return search_embeddings(g, c, true, "s2-faithfully-chiral", budget);
}

VerificationReport has_trivial_color_automorphisms(const Graph& g, const EdgeColoring& c,
                                                   const Budget& budget) {
  c.check_against(g);
  VerificationReport report;
  report.predicate = "trivial-aut-group";
  report.verdict = true;
  if (first_color_preserving_automorphisms(g, &c, 2).size() < 2) {
    report.stats.automorphisms_filtered = 1;
    return report;
  }
  const std::vector<Automorphism> group = color_preserving_automorphisms(g, c, budget);
  report.stats.automorphisms_filtered = group.size();
  report.verdict = false;
  Witness w;
  w.automorphism = *std::find_if(group.begin(), group.end(),
                                 [](const Automorphism& a) { return !a.is_identity(); });
  const PlanarityResult planar = test_planarity_and_embed(g);
  if (const auto* map = std::get_if<EmbeddedMap>(&planar)) {
    const RotationSystem moved = transport_rotation(w.automorphism, map->rotation);
    if (moved == map->rotation) {
      w.rotation = map->rotation;
      w.orientation = Orientation::Preserving;
    } else if (moved == mirror_rotation(map->rotation)) {
      w.rotation = map->rotation;
      w.orientation = Orientation::Reversing;
    }
    report.stats.embeddings = 1;
  }
  report.witness = std::move(w);
  return report;
}

std::optional<Certificate> lemma3_certificate(const Graph& g, const EdgeColoring& c) {
  c.check_against(g);
  const std::vector<Vertex> orbit = vertex_orbits(g, &c);
  std::vector<int> orbit_size(orbit.size(), 0);
  for (Vertex root : orbit) ++orbit_size[root];
  auto fixed = [&](Vertex v) { return orbit_size[orbit[v]] == 1; };
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!fixed(v)) continue;
    std::vector<EdgeId> star;
    for (Vertex w : g.neighbors(v)) {
      if (fixed(w)) star.push_back(g.edge_id(v, w));
      if (star.size() == 3) break;
    }
    if (star.size() == 3) {
      Certificate cert;
      cert.kind = CertificateKind::FixedStar;
      cert.center = v;
      cert.star_edges = std::move(star);
      return cert;
    }
  }
  return std::nullopt;
}

// ---- catalog ----------------------------------------------------------------

EmbeddingCatalog::EmbeddingCatalog(const Graph& g, const Budget& budget)
    : graph_(g),
      rotations_(enumerate_planar_rotations(g, true, budget)),
      automorphisms_(asymcolor::automorphisms(g, budget)) {
  if (!is_planar(g)) throw Error(Errc::NotPlanar, "S2 predicates need a planar graph");
  for (const Automorphism& a : automorphisms_) {
    std::vector<EdgeId> map(static_cast<std::size_t>(g.edge_count()));
    for (EdgeId e = 0; e < g.edge_count(); ++e) map[e] = a.edge_image(g, e);
    edge_maps_.push_back(std::move(map));
  }
  for (const RotationSystem& r : rotations_) {
    const RotationSystem mirrored = mirror_rotation(r);
    std::vector<Entry> row;
    for (std::size_t i = 0; i < automorphisms_.size(); ++i) {
      const RotationSystem moved = transport_rotation(automorphisms_[i], r);
      if (moved == r) row.push_back({i, Orientation::Preserving});
      if (moved == mirrored) row.push_back({i, Orientation::Reversing});
    }
    entries_.push_back(std::move(row));
  }
}

std::vector<MapSymmetry> EmbeddingCatalog::symmetries(std::size_t i) const {
  std::vector<MapSymmetry> out;
  for (const Entry& entry : entries_.at(i)) {
    out.push_back({automorphisms_[entry.automorphism], entry.orientation});
  }
  return out;
}

bool EmbeddingCatalog::preserves(std::size_t automorphism, const EdgeColoring& c) const {
  const auto& map = edge_maps_[automorphism];
  for (EdgeId e = 0; e < graph_.edge_count(); ++e) {
    if (c[e] != c[map[e]]) return false;
  }
  return true;
}

bool EmbeddingCatalog::trivial_color_group(const EdgeColoring& c) const {
  for (std::size_t i = 0; i < automorphisms_.size(); ++i) {
    if (!automorphisms_[i].is_identity() && preserves(i, c)) return false;
  }
  return true;
}

VerificationReport EmbeddingCatalog::judge(const EdgeColoring& c, bool reversing_only,
                                           const char* name) const {
  c.check_against(graph_);
  VerificationReport report;
  report.predicate = name;
  report.verdict = true;
  std::vector<char> keeps(automorphisms_.size(), 0);
  for (std::size_t i = 0; i < automorphisms_.size(); ++i) {
    if (!automorphisms_[i].is_identity() && preserves(i, c)) {
      keeps[i] = 1;
      ++report.stats.automorphisms_filtered;
    }
  }
  if (report.stats.automorphisms_filtered == 0) return report;
  for (std::size_t ri = 0; ri < rotations_.size(); ++ri) {
    ++report.stats.embeddings;
    for (const Entry& entry : entries_[ri]) {
      if (!keeps[entry.automorphism]) continue;
      if (reversing_only && entry.orientation == Orientation::Preserving) continue;
      report.verdict = false;
      report.witness = Witness{rotations_[ri], automorphisms_[entry.automorphism], entry.orientation};
      return report;
    }
  }
  return report;
}

VerificationReport EmbeddingCatalog::s2_asymmetric(const EdgeColoring& c) const {
  return judge(c, false, "s2-asymmetric");
}

VerificationReport EmbeddingCatalog::s2_faithfully_chiral(const EdgeColoring& c) const {
  return judge(c, true, "s2-faithfully-chiral");
}

}  // namespace asymcolor
