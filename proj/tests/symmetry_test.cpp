#include <gtest/gtest.h>

#include <random>
#include <set>

#include "asymcolor/automorphisms.hpp"
#include "asymcolor/error.hpp"
#include "asymcolor/io.hpp"
#include "asymcolor/oracle.hpp"
#include "asymcolor/symmetry.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace asymcolor;

namespace {

int count_sign(const std::vector<MapSymmetry>& s, Orientation o) {
  return static_cast<int>(std::count_if(s.begin(), s.end(), [&](const MapSymmetry& m) { return m.orientation == o; }));
}

std::set<std::string> edge_names(const Graph& g, const std::vector<EdgeId>& edges) {
  std::set<std::string> out;
  for (EdgeId e : edges) out.insert(g.edge_name(e));
  return out;
}

EdgeColoring k25_case3(const Graph& g) {
  return EdgeColoring::with_grey(g, {{"a", "2"}, {"a", "4"}, {"a", "5"}, {"c", "2"}, {"c", "3"}});
}

Graph tree41() {
  return Graph::from_labels({}, {{"v", "a"}, {"v", "b"}, {"v", "e"}, {"a", "c"}, {"b", "d"}});
}

// Random small planar graphs, kept where the brute-force rotation product is cheap.
std::vector<Graph> small_graphs(std::uint32_t seed, int count, int max_n) {
  std::mt19937 rng(seed);
  std::vector<Graph> out;
  while (static_cast<int>(out.size()) < count) {
    const int n = 1 + static_cast<int>(rng() % max_n);
    Graph g = gen::connected_planar(rng, n, static_cast<int>(rng() % (2 * n)));
    if (oracle::rotation_count(g) <= 20000) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

TEST(MapSymmetries, Examples) {
  const Graph c4 = named_graph("cycle", {4});
  const auto r4 = enumerate_planar_rotations(c4, false).at(0);
  const auto s4 = map_symmetries(c4, EdgeColoring(c4), r4);
  EXPECT_EQ(count_sign(s4, Orientation::Preserving), 8);
  EXPECT_EQ(count_sign(s4, Orientation::Reversing), 8);

  const Graph k4 = named_graph("k4");
  const auto rk = enumerate_planar_rotations(k4, false).at(0);
  const auto sk = map_symmetries(k4, EdgeColoring(k4), rk);
  EXPECT_EQ(count_sign(sk, Orientation::Preserving), 12);
  EXPECT_EQ(count_sign(sk, Orientation::Reversing), 12);

  const Graph c6 = named_graph("cycle", {6});
  const auto c = EdgeColoring::with_grey(c6, {{"1", "2"}, {"3", "4"}, {"4", "5"}});
  const auto s6 = map_symmetries(c6, c, enumerate_planar_rotations(c6, false).at(0));
  ASSERT_EQ(s6.size(), 2u);
  EXPECT_TRUE(s6[0].automorphism.is_identity());
  EXPECT_TRUE(s6[1].automorphism.is_identity());
  EXPECT_NE(s6[0].orientation, s6[1].orientation);
}

TEST(MapSymmetries, MatchTransportFilter) {
  std::mt19937 rng(59);
  for (const Graph& g : small_graphs(61, 60, 6)) {
    const EdgeColoring c = gen::coloring(rng, g);
    const auto group = oracle::color_preserving(g, gen::grey_bits(c));
    for (const auto& r : enumerate_planar_rotations(g, false)) {
      std::vector<MapSymmetry> expected;
      const auto mirrored = oracle::mirrored(r.cycles());
      for (const auto& p : group) {
        const auto moved = oracle::transported(p, r.cycles());
        if (moved == r.cycles()) expected.push_back({Automorphism{p}, Orientation::Preserving});
        if (moved == mirrored) expected.push_back({Automorphism{p}, Orientation::Reversing});
      }
      std::sort(expected.begin(), expected.end());
      const auto actual = map_symmetries(g, c, r);
      EXPECT_EQ(actual, expected) << format_graph_file(g);
      for (const auto& s : actual) EXPECT_TRUE(satisfies_orientation(s, r));
    }
  }
}

TEST(S2Asymmetric, Examples) {
  const Graph k25 = named_graph("k2m", {5});
  EXPECT_TRUE(is_s2_asymmetric(k25, k25_case3(k25)).verdict);

  const Graph c4 = named_graph("cycle", {4});
  for_each_coloring_mod_swap(c4, Budget{}, [&](const EdgeColoring& c) {
    const auto report = is_s2_asymmetric(c4, c);
    EXPECT_FALSE(report.verdict);
    if (!report.witness) {
      ADD_FAILURE() << "missing witness";
      return false;
    }
    const auto& a = report.witness->automorphism;
    // Reflections of the square reverse the cyclic order 1-2-3-4-1.
    auto at = [&](int i) { return std::stoi(c4.label(a(c4.at(std::to_string(i))))); };
    EXPECT_EQ(at(2) % 4 + 1, at(1)) << format_coloring_file(c4, c);
    EXPECT_TRUE(witness_rechecks(c4, c, *report.witness));
    return false;
  });

  const Graph k4 = named_graph("k4");
  EXPECT_FALSE(is_s2_asymmetric(k4, EdgeColoring(k4)).verdict);
}

TEST(S2Asymmetric, NonPlanarInputThrows) {
  const Graph k5 = named_graph("complete", {5});
  try {
    is_s2_asymmetric(k5, EdgeColoring(k5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotPlanar);
  }
}

TEST(S2Chiral, Examples) {
  const Graph k24 = named_graph("k24");
  const auto distinct = EdgeColoring::with_grey(k24, {{"c", "2"}, {"a", "3"}, {"a", "4"}, {"c", "4"}});
  EXPECT_TRUE(is_s2_faithfully_chiral(k24, distinct).verdict);
  EXPECT_FALSE(is_s2_asymmetric(k24, distinct).verdict);

  for (const Graph& g : {named_graph("star", {4}), named_graph("double_star", {3, 3})}) {
    for_each_coloring_mod_swap(g, Budget{}, [&](const EdgeColoring& c) {
      const auto report = is_s2_faithfully_chiral(g, c);
      EXPECT_FALSE(report.verdict) << format_coloring_file(g, c);
      EXPECT_TRUE(report.witness && report.witness->orientation == Orientation::Reversing);
      return false;
    });
  }
}

TEST(TrivialGroup, Examples) {
  const Graph c6 = named_graph("cycle", {6});
  EXPECT_TRUE(has_trivial_color_automorphisms(
                  c6, EdgeColoring::with_grey(c6, {{"1", "2"}, {"3", "4"}, {"4", "5"}}))
                  .verdict);
  const Graph k4 = named_graph("k4");
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    const auto c = EdgeColoring::from_mask(k4, mask);
    const auto report = has_trivial_color_automorphisms(k4, c);
    EXPECT_FALSE(report.verdict);
    ASSERT_TRUE(report.witness);
    EXPECT_TRUE(witness_rechecks(k4, c, *report.witness));
  }
}

TEST(Lemma3, Examples) {
  const Graph tree = tree41();
  const auto grey = EdgeColoring::with_grey(tree, {{"c", "a"}, {"a", "v"}, {"v", "e"}, {"b", "d"}});
  const auto cert = lemma3_certificate(tree, grey);
  ASSERT_TRUE(cert);
  EXPECT_EQ(cert->kind, CertificateKind::FixedStar);
  EXPECT_EQ(tree.label(*cert->center), "v");
  EXPECT_EQ(edge_names(tree, cert->star_edges), (std::set<std::string>{"a-v", "b-v", "e-v"}));
  EXPECT_TRUE(is_s2_asymmetric(tree, grey).verdict);

  const Graph k4 = named_graph("k4");
  EXPECT_FALSE(lemma3_certificate(k4, EdgeColoring(k4)));

  const Graph k25 = named_graph("k2m", {5});
  const auto k25_cert = lemma3_certificate(k25, k25_case3(k25));
  ASSERT_TRUE(k25_cert);
  EXPECT_EQ(k25.label(*k25_cert->center), "a");
  EXPECT_EQ(edge_names(k25, k25_cert->star_edges), (std::set<std::string>{"1-a", "2-a", "3-a"}));
}

TEST(Predicates, MatchBruteForceOracle) {
  std::mt19937 rng(67);
  for (const Graph& g : small_graphs(71, 80, 6)) {
    for (int k = 0; k < 4; ++k) {
      const EdgeColoring c = gen::coloring(rng, g);
      const auto bits = gen::grey_bits(c);
      EXPECT_EQ(is_s2_asymmetric(g, c).verdict, oracle::s2_asymmetric(g, bits)) << format_graph_file(g);
      EXPECT_EQ(is_s2_faithfully_chiral(g, c).verdict, oracle::s2_chiral(g, bits));
      EXPECT_EQ(has_trivial_color_automorphisms(g, c).verdict,
                oracle::color_preserving(g, bits).size() == 1);
    }
  }
}

TEST(Predicates, CatalogAgreesWithFreePredicates) {
  std::mt19937 rng(73);
  for (const Graph& g : small_graphs(79, 60, 7)) {
    const EmbeddingCatalog catalog(g);
    for (int k = 0; k < 6; ++k) {
      const EdgeColoring c = gen::coloring(rng, g);
      const auto a = catalog.s2_asymmetric(c);
      const auto b = is_s2_asymmetric(g, c);
      EXPECT_EQ(a.verdict, b.verdict);
      EXPECT_EQ(catalog.s2_faithfully_chiral(c).verdict, is_s2_faithfully_chiral(g, c).verdict);
      EXPECT_EQ(catalog.trivial_color_group(c), has_trivial_color_automorphisms(g, c).verdict);
      if (!a.verdict) EXPECT_TRUE(witness_rechecks(g, c, *a.witness));
    }
  }
}

TEST(Predicates, SwapAndRelabelInvariance) {
  std::mt19937 rng(83);
  for (const Graph& g : small_graphs(89, 60, 7)) {
    const EdgeColoring c = gen::coloring(rng, g);
    const auto moved = gen::relabel(rng, g);
    const EdgeColoring mc = gen::carry(g, c, moved);
    const bool asym = is_s2_asymmetric(g, c).verdict;
    const bool chiral = is_s2_faithfully_chiral(g, c).verdict;
    const bool trivial = has_trivial_color_automorphisms(g, c).verdict;
    EXPECT_EQ(is_s2_asymmetric(g, c.swapped()).verdict, asym);
    EXPECT_EQ(is_s2_faithfully_chiral(g, c.swapped()).verdict, chiral);
    EXPECT_EQ(has_trivial_color_automorphisms(g, c.swapped()).verdict, trivial);
    EXPECT_EQ(is_s2_asymmetric(moved.graph, mc).verdict, asym);
    EXPECT_EQ(is_s2_faithfully_chiral(moved.graph, mc).verdict, chiral);
    EXPECT_EQ(has_trivial_color_automorphisms(moved.graph, mc).verdict, trivial);
  }
}

TEST(Predicates, ImplicationsAndWitnesses) {
  std::mt19937 rng(97);
  for (const Graph& g : small_graphs(101, 80, 7)) {
    for (int k = 0; k < 4; ++k) {
      const EdgeColoring c = gen::coloring(rng, g);
      const auto asym = is_s2_asymmetric(g, c);
      const auto chiral = is_s2_faithfully_chiral(g, c);
      const auto trivial = has_trivial_color_automorphisms(g, c);
      if (trivial.verdict) EXPECT_TRUE(asym.verdict);
      if (asym.verdict) EXPECT_TRUE(chiral.verdict);
      if (lemma3_certificate(g, c)) EXPECT_TRUE(asym.verdict);
      for (const auto* report : {&asym, &chiral, &trivial}) {
        if (report->verdict) continue;
        ASSERT_TRUE(report->witness);
        EXPECT_TRUE(witness_rechecks(g, c, *report->witness));
      }
      if (!asym.verdict) EXPECT_TRUE(asym.witness->rotation.has_value());
    }
  }
}

TEST(Witness, TamperedWitnessFailsRecheck) {
  const Graph k4 = named_graph("k4");
  const auto c = EdgeColoring::with_grey(k4, {{"1", "2"}});
  auto report = is_s2_asymmetric(k4, c);
  ASSERT_FALSE(report.verdict);
  Witness w = *report.witness;
  EXPECT_TRUE(witness_rechecks(k4, c, w));
  w.orientation = *w.orientation == Orientation::Preserving ? Orientation::Reversing : Orientation::Preserving;
  EXPECT_FALSE(witness_rechecks(k4, c, w));
  w.automorphism = Automorphism::identity(4);
  EXPECT_FALSE(witness_rechecks(k4, c, w));
}
