#include <gtest/gtest.h>

#include <set>

#include "asymcolor/automorphisms.hpp"
#include "asymcolor/error.hpp"
#include "asymcolor/io.hpp"
#include "asymcolor/oracle.hpp"
#include "asymcolor/synthesizer.hpp"
#include "support/oracles.hpp"
#include "support/generators.hpp"

using namespace asymcolor;

namespace {

std::set<std::string> grey_names(const Graph& g, const EdgeColoring& c) {
  std::set<std::string> out;
  for (EdgeId e : c.grey_edges()) out.insert(g.edge_name(e));
  return out;
}

bool three_connected(const Graph& g) { return g.vertex_count() >= 4 && vertex_connectivity(g) >= 3; }

// Grey edges form a simple path (connected, max degree 2, acyclic).
bool is_path(const Graph& g, const std::vector<EdgeId>& edges) {
  const Graph sub = g.edge_subgraph(edges);
  return sub.max_degree() <= 2 && sub.edge_count() == sub.vertex_count() - 1;
}

}  // namespace

TEST(Theorem1, K4IsExceptional) {
  const auto r = synthesize_theorem1(named_graph("k4"));
  ASSERT_TRUE(r.exceptional());
  EXPECT_EQ(r.as_exceptional().reason.citation, "s3-3connected:K4");
}

TEST(Theorem1, CubeGetsGreyFourPath) {
  const Graph cube = named_graph("cube");
  const auto r = synthesize_theorem1(cube);
  ASSERT_TRUE(r.colored());
  const auto& c = r.as_colored();
  EXPECT_EQ(c.case_tag, "T1-Case1");
  EXPECT_EQ(c.certificate.kind, CertificateKind::TrivialAutGroup);
  EXPECT_EQ(c.coloring.grey_count(), 4);
  EXPECT_TRUE(is_path(cube, c.coloring.grey_edges()));
  EXPECT_EQ(oracle::color_preserving(cube, gen::grey_bits(c.coloring)).size(), 1u);
}

TEST(Theorem1, OctahedronUsesCase2) {
  const Graph oct = named_graph("octahedron");
  const auto r = synthesize_theorem1(oct);
  ASSERT_TRUE(r.colored());
  const auto& c = r.as_colored();
  EXPECT_EQ(c.case_tag, "T1-Case2");
  // v = 1, its link cycle 3-5-4-6 in rotation order: grey v3, 35, 5v, v4.
  EXPECT_EQ(grey_names(oct, c.coloring), (std::set<std::string>{"1-3", "3-5", "1-5", "1-4"}));
  EXPECT_EQ(oracle::color_preserving(oct, gen::grey_bits(c.coloring)).size(), 1u);
}

TEST(Theorem1, RejectsOutOfScopeInput) {
  for (const auto& [g, code] : std::vector<std::pair<Graph, Errc>>{
           {named_graph("cycle", {6}), Errc::NotThreeConnected},
           {named_graph("complete", {5}), Errc::NotPlanar}}) {
    try {
      synthesize_theorem1(g);
      ADD_FAILURE();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), code);
    }
  }
}

TEST(Theorem1, FourGreyEdgesOnSmallPolyhedra) {
  for (const Graph& g : enumerate_connected_planar_graphs(7)) {
    if (!three_connected(g)) continue;
    const auto r = synthesize_theorem1(g);
    if (r.exceptional()) {
      EXPECT_EQ(classify_special(g).tag, GraphClass::Tag::K4);
      continue;
    }
    ASSERT_TRUE(r.colored());
    EXPECT_EQ(r.as_colored().coloring.grey_count(), 4);
    EXPECT_TRUE(has_trivial_color_automorphisms(g, r.as_colored().coloring).verdict);
  }
  for (const char* f : {"icosahedron", "dodecahedron"}) {
    const Graph g = named_graph(f);
    const auto r = synthesize_theorem1(g);
    ASSERT_TRUE(r.colored()) << f;
    EXPECT_EQ(r.as_colored().coloring.grey_count(), 4);
    EXPECT_EQ(color_preserving_automorphisms(g, r.as_colored().coloring).size(), 1u);
  }
}

TEST(Theorem2, CycleSix) {
  const Graph c6 = named_graph("cycle", {6});
  const auto r = synthesize_theorem2_asymmetric(c6);
  ASSERT_TRUE(r.colored());
  EXPECT_EQ(r.as_colored().case_tag, "T2-Cycle");
  EXPECT_EQ(grey_names(c6, r.as_colored().coloring), (std::set<std::string>{"1-2", "3-4", "4-5"}));
}

TEST(Theorem2, EvenDoubleStarGreysPendantAtEvenHub) {
  const Graph s23 = named_graph("double_star", {2, 3});
  const auto r = synthesize_theorem2_asymmetric(s23);
  ASSERT_TRUE(r.colored());
  const auto& c = r.as_colored();
  EXPECT_EQ(c.case_tag, "T2-Case4.2");
  ASSERT_EQ(c.coloring.grey_count(), 1);
  const Edge e = s23.edge(c.coloring.grey_edges()[0]);
  const Vertex hub = s23.degree(e.u) == 3 ? e.u : e.v;
  EXPECT_EQ(s23.label(hub), "v1");
  EXPECT_EQ(s23.degree(e.other(hub)), 1);
  EXPECT_TRUE(is_s2_asymmetric(s23, c.coloring).verdict);
}

TEST(Theorem2, SquareIsExceptional) {
  const auto r = synthesize_theorem2_asymmetric(named_graph("cycle", {4}));
  ASSERT_TRUE(r.exceptional());
  EXPECT_EQ(r.as_exceptional().reason.citation, "s2-asymmetric:square");
}

TEST(Theorem2, NamedCases) {
  const Graph k25 = named_graph("k2m", {5});
  const auto r = synthesize_theorem2_asymmetric(k25);
  ASSERT_TRUE(r.colored());
  EXPECT_EQ(r.as_colored().case_tag, "T2-Case3-K2m");
  EXPECT_EQ(grey_names(k25, r.as_colored().coloring),
            (std::set<std::string>{"2-a", "4-a", "5-a", "2-c", "3-c"}));
  EXPECT_EQ(r.as_colored().certificate.kind, CertificateKind::FixedStar);

  const Graph tree = Graph::from_labels({}, {{"v", "a"}, {"v", "b"}, {"v", "e"}, {"a", "c"}, {"b", "d"}});
  const auto t = synthesize_theorem2_asymmetric(tree);
  ASSERT_TRUE(t.colored());
  EXPECT_EQ(t.as_colored().case_tag, "T2-Case4.1");
  EXPECT_TRUE(is_s2_asymmetric(tree, t.as_colored().coloring).verdict);

  const Graph path = named_graph("path", {4});
  const auto p = synthesize_theorem2_asymmetric(path);
  ASSERT_TRUE(p.colored());
  EXPECT_EQ(p.as_colored().case_tag, "T2-Path");
  EXPECT_EQ(p.as_colored().coloring.grey_count(), 1);
}

TEST(Theorem2, CaseDispatchIsTotalAndVerified) {
  const std::set<std::string> tags{"T2-Cycle", "T2-Path", "T2-Case1.1", "T2-Case1.2", "T2-Case2",
                                   "T2-Case3", "T2-Case3-K2m", "T2-Case4.1", "T2-Case4.2"};
  for (const Graph& g : enumerate_connected_planar_graphs(6)) {
    const auto r = synthesize_theorem2_asymmetric(g);
    const bool listed = exceptional_for(g, Space::S2, Mode::Asymmetric).has_value();
    ASSERT_EQ(r.exceptional(), listed) << format_graph_file(g);
    if (listed) continue;
    ASSERT_TRUE(r.colored());
    EXPECT_TRUE(tags.count(r.as_colored().case_tag)) << r.as_colored().case_tag;
    EXPECT_TRUE(is_s2_asymmetric(g, r.as_colored().coloring).verdict) << format_graph_file(g);
  }
}

TEST(Theorem2, LongCyclesUseSubcase11) {
  // A triangle-free, square-free graph whose short cycle bounds a face with a branch vertex.
  const Graph g = Graph::from_labels({}, {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"5", "6"},
                                          {"6", "7"}, {"7", "1"}, {"1", "x"}, {"4", "y"}});
  const auto r = synthesize_theorem2_asymmetric(g);
  ASSERT_TRUE(r.colored());
  EXPECT_EQ(r.as_colored().case_tag.rfind("T2-Case1", 0), 0u);
  EXPECT_TRUE(is_s2_asymmetric(g, r.as_colored().coloring).verdict);
}

TEST(Chiral, Examples) {
  const Graph k4 = named_graph("k4");
  const auto r = synthesize_s2_chiral(k4);
  ASSERT_TRUE(r.colored());
  EXPECT_TRUE(is_s2_faithfully_chiral(k4, r.as_colored().coloring).verdict);

  const auto c5 = synthesize_s2_chiral(named_graph("cycle", {5}));
  ASSERT_TRUE(c5.exceptional());
  EXPECT_EQ(c5.as_exceptional().reason.citation, "s2-faithfully-chiral:pentagon");

  const Graph k24 = named_graph("k24");
  const auto k = synthesize_s2_chiral(k24);
  ASSERT_TRUE(k.colored());
  const auto& c = k.as_colored().coloring;
  EXPECT_TRUE(is_s2_faithfully_chiral(k24, c).verdict);
  // The four a..c paths are coloured pairwise differently.
  std::set<std::pair<Color, Color>> paths;
  for (const char* m : {"1", "2", "3", "4"}) {
    paths.emplace(c[k24.edge_id(k24.at("a"), k24.at(m))], c[k24.edge_id(k24.at(m), k24.at("c"))]);
  }
  EXPECT_EQ(paths.size(), 4u);
}

TEST(Synthesize, Dispatch) {
  const auto cube = synthesize(named_graph("cube"), Space::S3, Mode::Asymmetric);
  ASSERT_TRUE(cube.colored());
  EXPECT_EQ(cube.as_colored().case_tag, "T1-Case1");
  EXPECT_EQ(cube.as_colored().certificate.kind, CertificateKind::TrivialAutGroup);

  const Graph c6 = named_graph("cycle", {6});
  const auto opportunistic = synthesize(c6, Space::S3, Mode::Asymmetric);
  ASSERT_TRUE(opportunistic.colored());
  EXPECT_EQ(opportunistic.as_colored().certificate.kind, CertificateKind::TrivialAutGroup);
  EXPECT_FALSE(opportunistic.as_colored().notes.empty());

  const auto k5 = synthesize(named_graph("complete", {5}), Space::S2, Mode::Asymmetric);
  ASSERT_TRUE(k5.unsupported());
  EXPECT_EQ(k5.as_unsupported().reason, Unsupported::Reason::NonPlanar);

  const auto k4 = synthesize(named_graph("k4"), Space::S3, Mode::FaithfullyChiral);
  ASSERT_TRUE(k4.exceptional());
  EXPECT_EQ(k4.as_exceptional().reason.mode, Mode::FaithfullyChiral);

  const auto star = synthesize(named_graph("star", {3}), Space::S3, Mode::Asymmetric);
  EXPECT_TRUE(star.unsupported());
}

TEST(Synthesize, Deterministic) {
  for (const char* f : {"cube", "octahedron", "icosahedron"}) {
    const Graph g = named_graph(f);
    const auto a = synthesize(g, Space::S3, Mode::Asymmetric);
    const auto b = synthesize(g, Space::S3, Mode::Asymmetric);
    EXPECT_EQ(a.as_colored().coloring, b.as_colored().coloring);
  }
  const Graph g = named_graph("wheel", {6});
  EXPECT_EQ(synthesize(g, Space::S2, Mode::Asymmetric).as_colored().coloring,
            synthesize(g, Space::S2, Mode::Asymmetric).as_colored().coloring);
}
