#include <gtest/gtest.h>

#include <random>
#include <set>

#include "asymcolor/automorphisms.hpp"
#include "asymcolor/error.hpp"
#include "asymcolor/io.hpp"
#include "asymcolor/oracle.hpp"
#include "asymcolor/planar_maps.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace asymcolor;

namespace {

std::vector<RotationSystem> all_rotations(const Graph& g) {
  std::vector<RotationSystem> out;
  oracle::for_each_rotation(g, [&](const oracle::Rotation& r) {
    out.emplace_back(r);
    return false;
  });
  return out;
}

std::vector<oracle::Rotation> as_oracle(const std::vector<RotationSystem>& rs) {
  std::vector<oracle::Rotation> out;
  for (const auto& r : rs) out.push_back(r.cycles());
  return out;
}

}  // namespace

TEST(Planarity, Examples) {
  const auto k4 = test_planarity_and_embed(named_graph("k4"));
  ASSERT_TRUE(std::holds_alternative<EmbeddedMap>(k4));
  EXPECT_EQ(std::get<EmbeddedMap>(k4).faces.size(), 4u);
  EXPECT_EQ(std::get<EmbeddedMap>(k4).genus, 0);

  const auto k5 = test_planarity_and_embed(named_graph("complete", {5}));
  ASSERT_TRUE(std::holds_alternative<NonPlanarWitness>(k5));
  EXPECT_EQ(std::get<NonPlanarWitness>(k5).kind, NonPlanarWitness::Kind::K5);

  const auto k33 = test_planarity_and_embed(named_graph("complete_bipartite", {3, 3}));
  ASSERT_TRUE(std::holds_alternative<NonPlanarWitness>(k33));
  EXPECT_EQ(std::get<NonPlanarWitness>(k33).kind, NonPlanarWitness::Kind::K33);
  EXPECT_EQ(std::get<NonPlanarWitness>(k33).edges.size(), 9u);

  const auto c6 = test_planarity_and_embed(named_graph("cycle", {6}));
  ASSERT_TRUE(std::holds_alternative<EmbeddedMap>(c6));
  EXPECT_EQ(std::get<EmbeddedMap>(c6).faces.size(), 2u);
  EXPECT_FALSE(is_planar(named_graph("petersen")));
  EXPECT_TRUE(is_planar(named_graph("icosahedron")));
}

TEST(Planarity, AgreesWithRotationSearch) {
  std::mt19937 rng(43);
  for (int i = 0; i < 120; ++i) {
    const int n = 1 + static_cast<int>(rng() % 7);
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(static_cast<int>(rng() % v), v);
    for (int k = static_cast<int>(rng() % (2 * n + 1)); k > 0; --k) {
      int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      if (std::find(edges.begin(), edges.end(), std::pair{a, b}) == edges.end()) edges.emplace_back(a, b);
    }
    const Graph g = Graph::from_indices(n, edges);
    if (oracle::rotation_count(g) > 200000) continue;
    EXPECT_EQ(is_planar(g), oracle::planar(g)) << format_graph_file(g);
    const auto result = test_planarity_and_embed(g);
    if (const auto* map = std::get_if<EmbeddedMap>(&result)) {
      EXPECT_EQ(genus_of(g, map->rotation), 0);
    } else {
      const auto& w = std::get<NonPlanarWitness>(result);
      const Graph sub = g.edge_subgraph(w.edges);
      EXPECT_FALSE(is_planar(sub));
    }
  }
}

TEST(TraceFaces, Examples) {
  const Graph k4 = named_graph("k4");
  const auto planar = enumerate_planar_rotations(k4, false);
  ASSERT_FALSE(planar.empty());
  const auto faces = trace_faces(k4, planar.front());
  ASSERT_EQ(faces.size(), 4u);
  for (const auto& f : faces) {
    EXPECT_EQ(f.length(), 3);
    EXPECT_TRUE(f.is_simple_cycle);
  }

  const Graph tree = named_graph("double_star", {2, 3});
  for (const auto& r : all_rotations(tree)) {
    const auto tf = trace_faces(tree, r);
    ASSERT_EQ(tf.size(), 1u);
    EXPECT_EQ(tf[0].length(), 2 * tree.edge_count());
    EXPECT_EQ(genus_of(tree, r), 0);
  }

  const Graph c6 = named_graph("cycle", {6});
  const auto cf = trace_faces(c6, enumerate_planar_rotations(c6, false).at(0));
  ASSERT_EQ(cf.size(), 2u);
  EXPECT_EQ(cf[0].length(), 6);
  EXPECT_EQ(cf[1].length(), 6);

  const Graph single = named_graph("single_vertex");
  const RotationSystem empty(std::vector<std::vector<Vertex>>(1));
  EXPECT_EQ(trace_faces(single, empty).size(), 1u);
  EXPECT_EQ(genus_of(single, empty), 0);
}

TEST(Genus, K4HasTwoSphericalRotationsOutOfSixteen) {
  const Graph k4 = named_graph("k4");
  const auto all = all_rotations(k4);
  ASSERT_EQ(all.size(), 16u);
  EXPECT_EQ(rotation_space_size(k4), 16u);
  int spherical = 0;
  for (const auto& r : all) {
    const int genus = genus_of(k4, r);
    EXPECT_EQ(genus, genus_of(k4, mirror_rotation(r)));
    EXPECT_EQ(oracle::genus_zero(k4, r.cycles()), genus == 0);
    if (genus == 0) {
      ++spherical;
    } else {
      EXPECT_EQ(genus, 1);
      EXPECT_EQ(trace_faces(k4, r).size(), 2u);
    }
    for (const auto& phi : automorphisms(k4)) {
      EXPECT_EQ(genus_of(k4, transport_rotation(phi, r)), genus);
    }
  }
  EXPECT_EQ(spherical, 2);
  EXPECT_EQ(enumerate_planar_rotations(k4, false).size(), 2u);
  EXPECT_EQ(enumerate_planar_rotations(k4, true).size(), 1u);
}

TEST(EnumeratePlanarRotations, SmallFamilies) {
  for (int n = 3; n <= 8; ++n) EXPECT_EQ(enumerate_planar_rotations(named_graph("cycle", {n}), false).size(), 1u);
  const Graph k13 = named_graph("star", {3});
  EXPECT_EQ(enumerate_planar_rotations(k13, false).size(), 2u);
  EXPECT_EQ(enumerate_planar_rotations(k13, true).size(), 1u);
  EXPECT_TRUE(enumerate_planar_rotations(named_graph("complete", {5}), false).empty());
}

TEST(EnumeratePlanarRotations, MatchesProductFilter) {
  std::mt19937 rng(47);
  int compared = 0;
  for (int i = 0; i < 200 && compared < 80; ++i) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const Graph g = gen::connected_planar(rng, n, static_cast<int>(rng() % (2 * n)));
    if (oracle::rotation_count(g) > 100000) continue;
    ++compared;
    const auto ours = enumerate_planar_rotations(g, false);
    EXPECT_EQ(as_oracle(ours), oracle::planar_rotations(g)) << format_graph_file(g);
    std::set<RotationSystem> reduced;
    for (const auto& r : ours) reduced.insert(std::min(r, mirror_rotation(r)));
    const auto deduped = enumerate_planar_rotations(g, true);
    EXPECT_EQ(std::vector<RotationSystem>(reduced.begin(), reduced.end()), deduped);
  }
  EXPECT_GE(compared, 40);
}

TEST(EnumeratePlanarRotations, BudgetIsEnforced) {
  Budget tight;
  tight.max_rotations = 3;
  try {
    enumerate_planar_rotations(named_graph("star", {5}), false, tight);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BudgetExceeded);
  }
}

TEST(Rotation, MirrorAndTransportAxioms) {
  const Graph k4 = named_graph("k4");
  const auto group = automorphisms(k4);
  for (const auto& r : all_rotations(k4)) {
    EXPECT_EQ(mirror_rotation(mirror_rotation(r)), r);
    EXPECT_EQ(transport_rotation(Automorphism::identity(4), r), r);
    for (const auto& a : group) {
      for (const auto& b : {group[3], group[10], group[17]}) {
        EXPECT_EQ(transport_rotation(a * b, r), transport_rotation(a, transport_rotation(b, r)));
      }
      EXPECT_EQ(mirror_rotation(transport_rotation(a, r)), transport_rotation(a, mirror_rotation(r)));
    }
  }
  const Graph c5 = named_graph("cycle", {5});
  const auto r = enumerate_planar_rotations(c5, false).at(0);
  EXPECT_EQ(mirror_rotation(r), r);
}

TEST(Rotation, CheckRejectsBadCycles) {
  const Graph c4 = named_graph("cycle", {4});
  const RotationSystem bad(std::vector<std::vector<Vertex>>{{1, 3}, {0, 2}, {1, 3}, {0, 1}});
  try {
    check_rotation(c4, bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InvalidRotation);
  }
}

TEST(Faces, EulerOnRandomRotations) {
  std::mt19937 rng(53);
  for (int i = 0; i < 150; ++i) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const Graph g = gen::connected_planar(rng, n, static_cast<int>(rng() % (2 * n)));
    std::vector<std::vector<Vertex>> around(n);
    for (int v = 0; v < n; ++v) {
      around[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
      std::shuffle(around[v].begin(), around[v].end(), rng);
    }
    const RotationSystem r(around);
    const auto faces = trace_faces(g, r);
    const int genus = genus_of(g, r);
    EXPECT_GE(genus, 0);
    EXPECT_EQ(g.vertex_count() - g.edge_count() + static_cast<int>(faces.size()), 2 - 2 * genus);
    EXPECT_EQ(static_cast<int>(faces.size()), oracle::face_count(g, r.cycles()));
    std::size_t darts = 0;
    for (const auto& f : faces) darts += f.boundary_walk.size();
    EXPECT_EQ(darts, 2u * g.edge_count());
  }
}

TEST(Faces, ThreeConnectedMapsHaveSimpleFacesOnTwoSides) {
  for (const Graph& g : enumerate_connected_planar_graphs(7)) {
    if (g.vertex_count() < 4 || vertex_connectivity(g) < 3) continue;
    for (const auto& r : enumerate_planar_rotations(g, true)) {
      const auto faces = trace_faces(g, r);
      std::vector<std::set<int>> sides(g.edge_count());
      for (std::size_t f = 0; f < faces.size(); ++f) {
        EXPECT_TRUE(faces[f].is_simple_cycle);
        for (const auto& d : faces[f].boundary_walk) sides[d.edge].insert(static_cast<int>(f));
      }
      for (const auto& s : sides) EXPECT_EQ(s.size(), 2u);
    }
  }
}
