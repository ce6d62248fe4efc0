#include "asymcolor/oracle.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <map>
#include <tuple>

#include "asymcolor/automorphisms.hpp"
#include "asymcolor/planar_maps.hpp"
#include "asymcolor/synthesizer.hpp"

namespace asymcolor {

std::string to_string(Predicate p) {
  switch (p) {
    case Predicate::S2Asymmetric: return "s2-asymmetric";
    case Predicate::S2FaithfullyChiral: return "s2-faithfully-chiral";
    case Predicate::TrivialAutGroup: return "trivial-aut-group";
  }
  return "unknown";
}

std::optional<EdgeColoring> exhaustive_coloring_search(const EmbeddingCatalog& catalog,
                                                       Predicate p, const Budget& budget) {
  return for_each_coloring_mod_swap(catalog.graph(), budget, [&](const EdgeColoring& c) {
    switch (p) {
      case Predicate::S2Asymmetric: return catalog.s2_asymmetric(c).verdict;
      case Predicate::S2FaithfullyChiral: return catalog.s2_faithfully_chiral(c).verdict;
      case Predicate::TrivialAutGroup: return catalog.trivial_color_group(c);
    }
    return false;
  });
}

std::optional<EdgeColoring> exhaustive_coloring_search(const Graph& g, Predicate p,
                                                       const Budget& budget) {
  if (p == Predicate::TrivialAutGroup) {
    return for_each_coloring_mod_swap(g, budget, [&](const EdgeColoring& c) {
      return first_color_preserving_automorphisms(g, &c, 2).size() < 2;
    });
  }
  // Fail on the coloring budget before paying for the catalog.
  if (g.edge_count() > 0) {
    const int free_bits = g.edge_count() - 1;
    if (free_bits >= 63 || (std::size_t{1} << free_bits) > budget.max_colorings) {
      throw Error(Errc::BudgetExceeded, "2^" + std::to_string(free_bits) +
                                            " colorings exceed the coloring budget");
    }
  }
  return exhaustive_coloring_search(EmbeddingCatalog(g, budget), p, budget);
}

// ---- enumeration ------------------------------------------------------------

std::vector<Graph> enumerate_connected_planar_graphs(int max_n, const Budget& budget) {
  if (max_n < 1) throw Error(Errc::BadParams, "max_n must be positive");
  if (static_cast<std::size_t>(max_n) > budget.max_corpus_vertices) {
    throw Error(Errc::BudgetExceeded, "corpus of " + std::to_string(max_n) +
                                          " vertices exceeds the enumeration cap of " +
                                          std::to_string(budget.max_corpus_vertices));
  }
  std::vector<Graph> out{Graph::from_indices(1, {})};
  std::vector<Graph> layer = out;
  for (int n = 2; n <= max_n; ++n) {
    // Every connected graph has a vertex whose removal leaves it connected,
    // and planarity is inherited by subgraphs, so extending each (n-1)-vertex
    // representative by one vertex in every possible way reaches all classes.
    using Key = std::tuple<int, std::vector<bool>>;
    std::map<Key, Graph> found;
    for (const Graph& base : layer) {
      std::vector<std::pair<int, int>> edges;
      for (const Edge& e : base.edges()) edges.emplace_back(e.u, e.v);
      const int m = base.edge_count();
      for (unsigned mask = 1; mask < (1u << (n - 1)); ++mask) {
        const int extra = std::popcount(mask);
        if (n >= 3 && m + extra > 3 * n - 6) continue;
        std::vector<std::pair<int, int>> grown = edges;
        for (int v = 0; v < n - 1; ++v) {
          if (mask >> v & 1) grown.emplace_back(v, n - 1);
        }
        const Graph candidate = Graph::from_indices(n, grown);
        const CanonicalForm cf = canonical_form(candidate);
        Key key{candidate.edge_count(), cf.code};
        if (found.contains(key) || !is_planar(candidate)) continue;
        found.emplace(std::move(key), canonical_graph(candidate));
      }
    }
    layer.clear();
    for (auto& [key, g] : found) layer.push_back(std::move(g));
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

// ---- named families ---------------------------------------------------------

namespace {

using LabelEdges = std::vector<Graph::LabelEdge>;

std::string num(int i) { return std::to_string(i); }

int param(const std::vector<int>& params, std::size_t i, const std::string& family, int lo) {
  if (i >= params.size()) throw Error(Errc::BadParams, family + " needs parameter " + num(static_cast<int>(i) + 1));
  if (params[i] < lo) {
    throw Error(Errc::BadParams, family + " parameter " + num(static_cast<int>(i) + 1) + " must be >= " + num(lo));
  }
  return params[i];
}

void expect_params(const std::vector<int>& params, std::size_t lo, std::size_t hi,
                   const std::string& family) {
  if (params.size() < lo || params.size() > hi) {
    throw Error(Errc::BadParams, family + " takes " + num(static_cast<int>(lo)) +
                                     (hi != lo ? "-" + num(static_cast<int>(hi)) : "") +
                                     " parameters");
  }
}

Graph from_edges(const LabelEdges& edges, std::vector<std::string> vertices = {}) {
  for (const auto& [u, v] : edges) {
    vertices.push_back(u);
    vertices.push_back(v);
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return Graph::from_labels(vertices, edges);
}

Graph generalized_petersen(int n, int k) {
  LabelEdges e;
  for (int i = 0; i < n; ++i) {
    e.emplace_back(num(i), num((i + 1) % n));
    e.emplace_back(num(i), num(i + n));
    e.emplace_back(num(i + n), num((i + k) % n + n));
  }
  return from_edges(e);
}

}  // namespace

Graph named_graph(const std::string& family, const std::vector<int>& params) {
  LabelEdges e;
  if (family == "single_vertex") {
    expect_params(params, 0, 0, family);
    return Graph::from_labels({"1"}, {});
  }
  if (family == "path") {
    expect_params(params, 1, 1, family);
    const int n = param(params, 0, family, 1);
    for (int i = 1; i <= n; ++i) e.emplace_back(num(i), num(i + 1));
    return from_edges(e);
  }
  if (family == "cycle") {
    expect_params(params, 1, 1, family);
    const int n = param(params, 0, family, 3);
    for (int i = 1; i <= n; ++i) e.emplace_back(num(i), num(i % n + 1));
    return from_edges(e);
  }
  if (family == "star") {
    expect_params(params, 1, 1, family);
    const int n = param(params, 0, family, 1);
    for (int i = 1; i <= n; ++i) e.emplace_back("v", num(i));
    return from_edges(e);
  }
  if (family == "double_star") {
    expect_params(params, 2, 3, family);
    const int n = param(params, 0, family, 1);
    const int m = param(params, 1, family, 1);
    const int len = params.size() > 2 ? param(params, 2, family, 1) : 1;
    for (int i = 1; i <= n; ++i) e.emplace_back("v1", "a" + num(i));
    for (int i = 1; i <= m; ++i) e.emplace_back("v2", "b" + num(i));
    std::string prev = "v1";
    for (int i = 1; i < len; ++i) {
      e.emplace_back(prev, "i" + num(i));
      prev = "i" + num(i);
    }
    e.emplace_back(prev, "v2");
    return from_edges(e);
  }
  if (family == "complete" || family == "k4" || family == "tetrahedron") {
    const bool fixed = family != "complete";
    expect_params(params, fixed ? 0 : 1, fixed ? 0 : 1, family);
    const int n = fixed ? 4 : param(params, 0, family, 1);
    if (n == 1) return named_graph("single_vertex");
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) e.emplace_back(num(i), num(j));
    }
    return from_edges(e);
  }
  if (family == "complete_bipartite") {
    expect_params(params, 2, 2, family);
    const int p = param(params, 0, family, 1);
    const int q = param(params, 1, family, 1);
    for (int i = 1; i <= p; ++i) {
      for (int j = 1; j <= q; ++j) e.emplace_back("a" + num(i), "b" + num(j));
    }
    return from_edges(e);
  }
  if (family == "k2m" || family == "k24") {
    const bool fixed = family == "k24";
    expect_params(params, fixed ? 0 : 1, fixed ? 0 : 1, family);
    const int m = fixed ? 4 : param(params, 0, family, 1);
    for (int i = 1; i <= m; ++i) {
      e.emplace_back("a", num(i));
      e.emplace_back("c", num(i));
    }
    return from_edges(e);
  }
  if (family == "wheel") {
    expect_params(params, 1, 1, family);
    const int n = param(params, 0, family, 3);
    for (int i = 1; i <= n; ++i) {
      e.emplace_back(num(i), num(i % n + 1));
      e.emplace_back("h", num(i));
    }
    return from_edges(e);
  }
  if (family == "prism") {
    expect_params(params, 1, 1, family);
    const int n = param(params, 0, family, 3);
    for (int i = 1; i <= n; ++i) {
      e.emplace_back("a" + num(i), "a" + num(i % n + 1));
      e.emplace_back("b" + num(i), "b" + num(i % n + 1));
      e.emplace_back("a" + num(i), "b" + num(i));
    }
    return from_edges(e);
  }
  if (family == "cube") {
    expect_params(params, 0, 0, family);
    for (int v = 0; v < 8; ++v) {
      for (int bit = 1; bit < 8; bit <<= 1) {
        if ((v & bit) == 0) e.emplace_back(num(v), num(v | bit));
      }
    }
    return from_edges(e);
  }
  if (family == "octahedron") {
    expect_params(params, 0, 0, family);
    for (int i = 1; i <= 6; ++i) {
      for (int j = i + 1; j <= 6; ++j) {
        if (!(i % 2 == 1 && j == i + 1)) e.emplace_back(num(i), num(j));
      }
    }
    return from_edges(e);
  }
  if (family == "dodecahedron") {
    expect_params(params, 0, 0, family);
    return generalized_petersen(10, 2);
  }
  if (family == "petersen") {
    expect_params(params, 0, 0, family);
    return generalized_petersen(5, 2);
  }
  if (family == "icosahedron") {
    expect_params(params, 0, 0, family);
    for (int i = 1; i <= 5; ++i) {
      const int next = i % 5 + 1;
      e.emplace_back("0", num(i));
      e.emplace_back(num(i), num(next));
      e.emplace_back(num(i + 5), num(next + 5));
      e.emplace_back(num(i), num(i + 5));
      e.emplace_back(num(i), num(next + 5));
      e.emplace_back("11", num(i + 5));
    }
    return from_edges(e);
  }
  throw Error(Errc::BadParams, "unknown graph family '" + family + "'");
}

// ---- cross-check ------------------------------------------------------------

std::size_t CrossCheckReport::count(const std::string& status) const {
  return static_cast<std::size_t>(std::count_if(
      rows.begin(), rows.end(), [&](const CrossCheckRow& r) { return r.status == status; }));
}

namespace {

std::vector<std::string> grey_names(const Graph& g, const EdgeColoring& c) {
  std::vector<std::string> out;
  for (EdgeId e : c.grey_edges()) out.push_back(g.edge_name(e));
  return out;
}

std::string edge_list(const Graph& g) {
  std::string out;
  if (g.edge_count() == 0) return "vertex " + g.label(0) + "\n";
  for (const Edge& e : g.edges()) out += g.label(e.u) + " " + g.label(e.v) + "\n";
  return out;
}

bool in_s3_scope(const Graph& g) {
  return g.vertex_count() >= 4 && is_planar(g) && vertex_connectivity(g) >= 3;
}

CrossCheckRow check_one(const Graph& g, const CorpusSpec& spec, const Budget& budget) {
  const auto started = std::chrono::steady_clock::now();
  CrossCheckRow row;
  row.canonical = canonical_form(g).to_string();
  row.vertices = g.vertex_count();
  row.edges = g.edge_count();
  row.graph_class = classify_special(g).to_string();
  row.edge_list = edge_list(g);

  const bool planar = is_planar(g);
  const bool in_scope = planar && (spec.space == Space::S2 || in_s3_scope(g));
  std::optional<ExceptionReason> listed;
  if (in_scope) listed = exceptional_for(g, spec.space, spec.mode);
  row.published = !in_scope ? "out-of-scope" : listed ? "exceptional:" + listed->citation : "colorable";

  const SynthesisResult result = synthesize(g, spec.space, spec.mode, budget);
  std::optional<EdgeColoring> synthesized;
  if (result.colored()) {
    const Colored& col = result.as_colored();
    row.synthesizer = "colored:" + col.case_tag;
    synthesized = col.coloring;
    row.grey_edges = grey_names(g, col.coloring);
  } else if (result.exceptional()) {
    row.synthesizer = "exceptional";
  } else {
    row.synthesizer = "unsupported:" + to_string(result.as_unsupported().reason);
  }

  const Predicate predicate = spec.space == Space::S3 ? Predicate::TrivialAutGroup
                              : spec.mode == Mode::Asymmetric ? Predicate::S2Asymmetric
                                                              : Predicate::S2FaithfullyChiral;
  std::optional<EdgeColoring> oracle;
  if (planar) {
    std::optional<EmbeddingCatalog> catalog;
    if (predicate != Predicate::TrivialAutGroup) catalog.emplace(g, budget);
    oracle = catalog ? exhaustive_coloring_search(*catalog, predicate, budget)
                     : exhaustive_coloring_search(g, predicate, budget);
    row.oracle = oracle ? "found" : "none";
    if (oracle) row.oracle_grey = grey_names(g, *oracle);
    if (synthesized) {
      switch (predicate) {
        case Predicate::S2Asymmetric: row.synthesized_verified = catalog->s2_asymmetric(*synthesized).verdict; break;
        case Predicate::S2FaithfullyChiral:
          row.synthesized_verified = catalog->s2_faithfully_chiral(*synthesized).verdict;
          break;
        case Predicate::TrivialAutGroup:
          row.synthesized_verified = first_color_preserving_automorphisms(g, &*synthesized, 2).size() < 2;
          break;
      }
    }
  } else {
    row.oracle = "skipped";
  }

  const bool colored = result.colored() && row.synthesized_verified;
  if (!in_scope) {
    const bool consistent = result.unsupported() || (colored && row.oracle == "found");
    row.status = consistent ? "agree" : "disagree";
  } else if (!listed) {
    row.status = colored && row.oracle == "found" ? "agree" : "disagree";
  } else if (result.exceptional() && row.oracle == "none") {
    row.status = "agree";
  } else if (result.exceptional() && listed->graph_class.tag == GraphClass::Tag::SingleVertex) {
    // Listed as exceptional, yet the empty coloring is asymmetric under the
    // literal definition.
    row.status = "known-divergence";
  } else {
    row.status = "disagree";
  }
  if (spec.include_timings) {
    row.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  }
  return row;
}

}  // namespace

CrossCheckReport cross_check_theorems(const CorpusSpec& spec, const Budget& budget) {
  CrossCheckReport report;
  report.spec = spec;
  std::vector<Graph> corpus;
  if (spec.include_enumerated) {
    for (Graph& g : enumerate_connected_planar_graphs(spec.max_vertices, budget)) {
      if (spec.three_connected_only && !in_s3_scope(g)) continue;
      corpus.push_back(std::move(g));
    }
  }
  for (const auto& [family, params] : spec.named) corpus.push_back(named_graph(family, params));
  for (const Graph& g : corpus) report.rows.push_back(check_one(g, spec, budget));
  return report;
}

}  // namespace asymcolor
