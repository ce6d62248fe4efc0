#include "asymcolor/synthesizer.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

#include "asymcolor/automorphisms.hpp"
#include "asymcolor/error.hpp"
#include "asymcolor/oracle.hpp"
#include "asymcolor/planar_maps.hpp"

namespace asymcolor {

std::string to_string(Unsupported::Reason r) {
  return r == Unsupported::Reason::NonPlanar ? "non-planar" : "open-problem";
}

namespace {

using Path = std::vector<Vertex>;

EdgeColoring grey_path(const Graph& g, const Path& path) {
  EdgeColoring c(g);
  for (std::size_t i = 0; i + 1 < path.size(); ++i) c.set(g.edge_id(path[i], path[i + 1]), Color::Grey);
  return c;
}

void add_grey(const Graph& g, EdgeColoring& c, Vertex a, Vertex b) {
  c.set(g.edge_id(a, b), Color::Grey);
}

bool trivial_group(const Graph& g, const EdgeColoring& c) {
  return first_color_preserving_automorphisms(g, &c, 2).size() < 2;
}

Certificate trivial_certificate() {
  Certificate cert;
  cert.kind = CertificateKind::TrivialAutGroup;
  cert.group_order = 1;
  return cert;
}

/// Certificate for S^2 asymmetry, cheapest first.
std::optional<Certificate> certify_s2_asymmetric(const Graph& g, const EdgeColoring& c,
                                                 const Budget& budget) {
  if (auto cert = lemma3_certificate(g, c)) return cert;
  if (trivial_group(g, c)) return trivial_certificate();
  const VerificationReport report = is_s2_asymmetric(g, c, budget);
  if (!report.verdict) return std::nullopt;
  Certificate cert;
  cert.kind = CertificateKind::OracleVerified;
  cert.group_order = report.stats.automorphisms_filtered + 1;
  cert.embeddings_checked = report.stats.embeddings;
  return cert;
}

SynthesisResult finish_s2(const Graph& g, EdgeColoring c, std::string tag, const Budget& budget,
                          std::vector<std::string> notes = {}) {
  auto cert = certify_s2_asymmetric(g, c, budget);
  if (!cert) {
    throw Error(Errc::InternalVerificationFailure,
                tag + " coloring is not asymmetric in S2 (grey " + std::to_string(c.grey_count()) +
                    " edges)");
  }
  return SynthesisResult{Colored{std::move(c), std::move(tag), *cert, std::move(notes)}};
}

void require_planar(const Graph& g) {
  if (!is_planar(g)) throw Error(Errc::NotPlanar, "graph is not planar");
}

/// Simple paths with `length` edges using only `allowed` vertices, each
/// undirected path once (first < last), in lexicographic vertex order.
/// Stops and returns true when `visit` does.
bool for_each_path(const Graph& g, const std::vector<char>& allowed, int length,
                   const std::function<bool(const Path&)>& visit) {
  Path path;
  std::vector<char> on(static_cast<std::size_t>(g.vertex_count()), 0);
  std::function<bool()> extend = [&]() {
    if (static_cast<int>(path.size()) == length + 1) {
      return path.front() < path.back() && visit(path);
    }
    for (Vertex w : g.neighbors(path.back())) {
      if (!allowed[w] || on[w]) continue;
      path.push_back(w);
      on[w] = 1;
      const bool stop = extend();
      on[w] = 0;
      path.pop_back();
      if (stop) return true;
    }
    return false;
  };
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (!allowed[s]) continue;
    path = {s};
    on[s] = 1;
    const bool stop = extend();
    on[s] = 0;
    if (stop) return true;
  }
  return false;
}

/// Grey-path search by increasing length. With `allow_trivial`, colorings
/// with a trivial colour-preserving group are accepted as well.
std::optional<EdgeColoring> search_grey_paths(const Graph& g, const std::vector<char>& allowed,
                                              int max_length, bool allow_trivial,
                                              std::size_t& candidates, const Budget& budget) {
  std::optional<EdgeColoring> found;
  for (int length = 1; length <= max_length && !found; ++length) {
    for_each_path(g, allowed, length, [&](const Path& p) {
      if (++candidates > budget.max_path_candidates) return true;
      EdgeColoring c = grey_path(g, p);
      if (lemma3_certificate(g, c) || (allow_trivial && trivial_group(g, c))) {
        found = std::move(c);
        return true;
      }
      return false;
    });
    if (candidates > budget.max_path_candidates) break;
  }
  return found;
}

/// Last-resort searches shared by the table-driven cases.
SynthesisResult fallback(const Graph& g, const std::string& tag, std::size_t& candidates,
                         const Budget& budget) {
  const std::vector<char> all(static_cast<std::size_t>(g.vertex_count()), 1);
  if (auto c = search_grey_paths(g, all, 5, true, candidates, budget)) {
    return finish_s2(g, std::move(*c), tag, budget, {"grey path found by search over the whole graph"});
  }
  if (g.edge_count() <= 1 || (std::size_t{1} << (g.edge_count() - 1)) <= budget.max_colorings) {
    if (auto c = exhaustive_coloring_search(g, Predicate::S2Asymmetric, budget)) {
      return finish_s2(g, std::move(*c), tag, budget, {"coloring found by exhaustive search"});
    }
  }
  throw Error(Errc::SearchExhausted, tag + ": no verified coloring found");
}

// ---- Theorem 1 --------------------------------------------------------------

SynthesisResult theorem1_case1(const Graph& g, const Face& face) {
  const std::vector<Vertex>& cyc = face.vertices;
  const int n = static_cast<int>(cyc.size());
  const auto start = std::min_element(cyc.begin(), cyc.end()) - cyc.begin();
  const Vertex next = cyc[(start + 1) % n];
  const Vertex prev = cyc[(start + n - 1) % n];
  const int step = next < prev ? 1 : n - 1;
  Path label(static_cast<std::size_t>(n));  // label[i] is vertex i+1
  for (int i = 0; i < n; ++i) label[i] = cyc[(start + static_cast<long>(i) * step) % n];
  Vertex w = -1;
  for (Vertex u : g.neighbors(label[0])) {
    if (u != label[1] && u != label[n - 1]) {
      w = u;
      break;
    }
  }
  EdgeColoring c = grey_path(g, {w, label[0], label[1], label[2], label[3]});
  if (!trivial_group(g, c)) {
    throw Error(Errc::InternalVerificationFailure, "T1-Case1 coloring has a non-trivial symmetry");
  }
  return SynthesisResult{Colored{std::move(c), "T1-Case1", trivial_certificate(), {}}};
}

SynthesisResult theorem1_case2(const Graph& g, const RotationSystem& r) {
  Vertex v = -1;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    if (g.degree(u) >= 4) {
      v = u;
      break;
    }
  }
  if (v < 0) throw Error(Errc::InternalVerificationFailure, "triangulation without a degree-4 vertex");
  const Vertex one = r.around(v).front();
  const Vertex succ = r.successor(v, one);
  const Vertex pred = r.predecessor(v, one);
  const bool forward = succ < pred;
  const Vertex two = forward ? succ : pred;
  const Vertex three = forward ? r.successor(v, two) : r.predecessor(v, two);
  EdgeColoring c(g);
  add_grey(g, c, v, one);
  add_grey(g, c, one, two);
  add_grey(g, c, two, v);
  add_grey(g, c, v, three);
  if (!trivial_group(g, c)) {
    throw Error(Errc::InternalVerificationFailure, "T1-Case2 coloring has a non-trivial symmetry");
  }
  return SynthesisResult{Colored{std::move(c), "T1-Case2", trivial_certificate(), {}}};
}

// ---- Theorem 2 --------------------------------------------------------------

SynthesisResult t2_cycle(const Graph& g, const Budget& budget) {
  const Vertex one = 0;
  const Vertex two = g.neighbors(one)[0];
  Path label{one, two};
  while (static_cast<int>(label.size()) < 5) {
    const Vertex last = label.back();
    const Vertex before = label[label.size() - 2];
    const auto nb = g.neighbors(last);
    label.push_back(nb[0] == before ? nb[1] : nb[0]);
  }
  EdgeColoring c(g);
  add_grey(g, c, label[0], label[1]);
  add_grey(g, c, label[2], label[3]);
  add_grey(g, c, label[3], label[4]);
  return finish_s2(g, std::move(c), "T2-Cycle", budget);
}

SynthesisResult t2_path(const Graph& g, const Budget& budget) {
  Vertex leaf = -1;
  for (Vertex v = 0; v < g.vertex_count() && leaf < 0; ++v) {
    if (g.degree(v) == 1) leaf = v;
  }
  EdgeColoring c(g);
  add_grey(g, c, leaf, g.neighbors(leaf)[0]);
  return finish_s2(g, std::move(c), "T2-Path", budget);
}

/// Face of a 2-connected block's embedding for Case 1, as vertices of g.
Path case1_face(const Graph& g) {
  for (const auto& block : biconnected_components(g)) {
    if (block.size() < 3) continue;
    const Graph piece = g.edge_subgraph(block);
    const auto planar = test_planarity_and_embed(piece);
    const EmbeddedMap& map = std::get<EmbeddedMap>(planar);
    std::vector<std::pair<int, Path>> faces;
    for (const Face& f : map.faces) {
      if (!f.is_simple_cycle) continue;
      Path cyc;
      for (Vertex v : f.vertices) cyc.push_back(g.at(piece.label(v)));
      bool branch = false;
      for (Vertex v : cyc) branch = branch || g.degree(v) >= 3;
      if (!branch) continue;
      faces.emplace_back(static_cast<int>(cyc.size()), std::move(cyc));
    }
    if (faces.empty()) continue;
    std::stable_sort(faces.begin(), faces.end(), [](const auto& x, const auto& y) {
      if (x.first != y.first) return x.first < y.first;
      Path kx = x.second, ky = y.second;
      std::sort(kx.begin(), kx.end());
      std::sort(ky.begin(), ky.end());
      return kx < ky;
    });
    return faces.front().second;
  }
  throw Error(Errc::InternalVerificationFailure, "no block face with a branch vertex");
}

SynthesisResult t2_case1(const Graph& g, const Budget& budget) {
  const Path cyc = case1_face(g);
  const int n = static_cast<int>(cyc.size());
  long start = -1;
  for (int i = 0; i < n; ++i) {
    if (g.degree(cyc[i]) >= 3 && (start < 0 || cyc[i] < cyc[start])) start = i;
  }
  auto labeled = [&](int step) {
    Path label(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) label[i] = cyc[(start + static_cast<long>(i) * step) % n];
    return label;
  };
  Path label = labeled(1);
  Vertex w = -1;
  for (Vertex u : g.neighbors(label[0])) {
    if (u != label[1] && u != label[n - 1]) {
      w = u;
      break;
    }
  }
  const auto w_at = std::find(label.begin(), label.end(), w);
  if (w_at != label.end()) {
    // Subcase 1.1: orient so that w gets the smaller index, ties by token order.
    const int k = static_cast<int>(w_at - label.begin());
    if (n - k < k || (n - k == k && label[n - 1] < label[1])) label = labeled(n - 1);
    const int wi = static_cast<int>(std::find(label.begin(), label.end(), w) - label.begin());
    EdgeColoring c(g);
    for (int i = 0; i < wi; ++i) add_grey(g, c, label[i], label[i + 1]);
    add_grey(g, c, label[wi], label[0]);
    add_grey(g, c, label[0], label[n - 1]);
    for (int i = n - 1; i > wi + 1; --i) add_grey(g, c, label[i], label[i - 1]);
    return finish_s2(g, std::move(c), "T2-Case1.1", budget);
  }
  // Subcase 1.2: run towards the smaller cycle neighbour of 1.
  if (label[n - 1] < label[1]) label = labeled(n - 1);
  Path grey{w};
  grey.insert(grey.end(), label.begin(), label.end());
  return finish_s2(g, grey_path(g, grey), "T2-Case1.2", budget);
}

SynthesisResult t2_case2(const Graph& g, const Budget& budget) {
  const int count = g.vertex_count();
  // Least triangle in lexicographic order.
  Vertex t0 = -1, t1 = -1, t2 = -1;
  for (Vertex p = 0; p < count && t0 < 0; ++p) {
    for (Vertex q : g.neighbors(p)) {
      if (q <= p || t0 >= 0) continue;
      for (Vertex s : g.neighbors(q)) {
        if (s > q && g.adjacent(p, s)) {
          std::tie(t0, t1, t2) = std::tie(p, q, s);
          break;
        }
      }
    }
  }
  const Path tri{t0, t1, t2};
  auto in_tri = [&](Vertex u) { return u == t0 || u == t1 || u == t2; };
  Vertex x = -1;
  for (Vertex u = 0; u < count && x < 0; ++u) {
    if (in_tri(u)) continue;
    for (Vertex t : tri) {
      if (g.adjacent(u, t)) {
        x = u;
        break;
      }
    }
  }
  Vertex a = -1;
  for (Vertex t : tri) {
    if (g.adjacent(t, x)) {
      a = t;
      break;
    }
  }
  Path others;
  for (Vertex t : tri) {
    if (t != a) others.push_back(t);
  }
  if (count == 4) {
    const bool b0 = g.adjacent(others[0], x);
    const bool b1 = g.adjacent(others[1], x);
    if (!b0 && !b1) {
      return finish_s2(g, grey_path(g, {x, a, others[0], others[1]}), "T2-Case2", budget);
    }
    EdgeColoring c(g);
    add_grey(g, c, a, x);
    return finish_s2(g, std::move(c), "T2-Case2", budget);
  }
  Vertex y = -1;
  for (Vertex u = 0; u < count && y < 0; ++u) {
    if (in_tri(u) || u == x) continue;
    for (Vertex t : {t0, t1, t2, x}) {
      if (g.adjacent(u, t)) {
        y = u;
        break;
      }
    }
  }
  std::vector<char> allowed(static_cast<std::size_t>(count), 0);
  for (Vertex u : {t0, t1, t2, x, y}) allowed[u] = 1;
  std::size_t candidates = 0;
  if (auto c = search_grey_paths(g, allowed, 5, false, candidates, budget)) {
    return finish_s2(g, std::move(*c), "T2-Case2", budget);
  }
  return fallback(g, "T2-Case2", candidates, budget);
}

/// Labelled 4-cycles a-b-c-v-a in lexicographic order of (a, b, c, v).
void for_each_square(const Graph& g, const std::function<bool(Vertex, Vertex, Vertex, Vertex)>& f) {
  for (Vertex a = 0; a < g.vertex_count(); ++a) {
    for (Vertex b : g.neighbors(a)) {
      for (Vertex c : g.neighbors(b)) {
        if (c == a) continue;
        for (Vertex v : g.neighbors(c)) {
          if (v == b || v == a || !g.adjacent(v, a)) continue;
          if (f(a, b, c, v)) return;
        }
      }
    }
  }
}

SynthesisResult t2_case3(const Graph& g, const Budget& budget) {
  const int count = g.vertex_count();
  std::optional<Path> explicit_path;
  for_each_square(g, [&](Vertex a, Vertex b, Vertex c, Vertex v) {
    for (Vertex x : g.neighbors(a)) {
      if (x == b || x == v || g.adjacent(x, c)) continue;
      explicit_path = Path{v, c, b, a, x};
      return true;
    }
    return false;
  });
  if (explicit_path) return finish_s2(g, grey_path(g, *explicit_path), "T2-Case3", budget);

  const GraphClass k = classify_special(g);
  if (k.tag == GraphClass::Tag::CompleteBipartite2m) {
    Path hubs, middles;
    for (Vertex u = 0; u < count; ++u) (g.degree(u) == k.n ? hubs : middles).push_back(u);
    if (k.n == 3) {
      std::optional<EdgeColoring> found = for_each_coloring_mod_swap(g, budget, [&](const EdgeColoring& c) {
        return lemma3_certificate(g, c).has_value() || trivial_group(g, c);
      });
      if (!found) found = exhaustive_coloring_search(g, Predicate::S2Asymmetric, budget);
      if (!found) throw Error(Errc::SearchExhausted, "T2-Case3: no coloring of K2,3");
      return finish_s2(g, std::move(*found), "T2-Case3-K2m", budget);
    }
    const Vertex a = hubs[0];
    const Vertex c = hubs[1];
    EdgeColoring col(g);
    for (std::size_t i = 0; i < middles.size(); ++i) {
      if (i != 0 && i != 2) add_grey(g, col, a, middles[i]);
    }
    add_grey(g, col, c, middles[1]);
    add_grey(g, col, c, middles[2]);
    return finish_s2(g, std::move(col), "T2-Case3-K2m", budget);
  }

  // H spanned by V = {a, c, y} and W = {x, b, v}, a subgraph of K3,3.
  std::size_t candidates = 0;
  std::optional<EdgeColoring> found;
  for_each_square(g, [&](Vertex a, Vertex b, Vertex c, Vertex v) {
    for (Vertex x : g.neighbors(a)) {
      if (x == b || x == v || !g.adjacent(x, c)) continue;
      for (Vertex y = 0; y < count; ++y) {
        if (y == a || y == b || y == c || y == v || y == x) continue;
        if (g.adjacent(y, a) || g.adjacent(y, c)) continue;
        if (!g.adjacent(y, b) && !g.adjacent(y, v) && !g.adjacent(y, x)) continue;
        std::vector<char> allowed(static_cast<std::size_t>(count), 0);
        for (Vertex u : {a, b, c, v, x, y}) allowed[u] = 1;
        found = search_grey_paths(g, allowed, 5, false, candidates, budget);
        if (found || candidates > budget.max_path_candidates) return true;
      }
    }
    return false;
  });
  if (found) return finish_s2(g, std::move(*found), "T2-Case3", budget);
  return fallback(g, "T2-Case3", candidates, budget);
}

SynthesisResult t2_case4(const Graph& g, const Budget& budget) {
  const int count = g.vertex_count();
  for (Vertex v = 0; v < count; ++v) {
    if (g.degree(v) < 3) continue;
    Path inner;
    for (Vertex u : g.neighbors(v)) {
      if (g.degree(u) >= 2) inner.push_back(u);
    }
    if (inner.size() < 2) continue;
    const Vertex a = inner[0];
    const Vertex b = inner[1];
    Vertex e = -1;
    for (Vertex u : g.neighbors(v)) {
      if (u != a && u != b) {
        e = u;
        break;
      }
    }
    auto away = [&](Vertex from) {
      for (Vertex u : g.neighbors(from)) {
        if (u != v) return u;
      }
      return Vertex{-1};
    };
    const Vertex c = away(a);
    const Vertex d = away(b);
    EdgeColoring col = grey_path(g, {c, a, v, e});
    add_grey(g, col, b, d);
    return finish_s2(g, std::move(col), "T2-Case4.1", budget);
  }
  // Subcase 4.2: a double star; use a hub with an even number of pendants.
  for (Vertex v = 0; v < count; ++v) {
    if (g.degree(v) < 3 || (g.degree(v) - 1) % 2 != 0) continue;
    for (Vertex b : g.neighbors(v)) {
      if (g.degree(b) == 1) {
        EdgeColoring col(g);
        add_grey(g, col, v, b);
        return finish_s2(g, std::move(col), "T2-Case4.2", budget);
      }
    }
  }
  throw Error(Errc::SearchExhausted, "T2-Case4: tree matches neither subcase");
}

/// K2,4: hubs a < c, middles 1..4 carry the paths BB, BG, GB, GG.
EdgeColoring k24_seed(const Graph& g) {
  Path hubs, middles;
  for (Vertex u = 0; u < g.vertex_count(); ++u) (g.degree(u) == 4 ? hubs : middles).push_back(u);
  EdgeColoring c(g);
  add_grey(g, c, hubs[1], middles[1]);
  add_grey(g, c, hubs[0], middles[2]);
  add_grey(g, c, hubs[0], middles[3]);
  add_grey(g, c, hubs[1], middles[3]);
  return c;
}

Certificate chiral_certificate(const VerificationReport& report) {
  Certificate cert;
  cert.kind = CertificateKind::OracleVerified;
  cert.group_order = report.stats.automorphisms_filtered + 1;
  cert.embeddings_checked = report.stats.embeddings;
  return cert;
}

}  // namespace

SynthesisResult synthesize_theorem1(const Graph& g, const Budget& budget) {
  (void)budget;
  const PlanarityResult planar = test_planarity_and_embed(g);
  const auto* map = std::get_if<EmbeddedMap>(&planar);
  if (map == nullptr) throw Error(Errc::NotPlanar, "graph is not planar");
  if (g.vertex_count() < 4 || vertex_connectivity(g) < 3) {
    throw Error(Errc::NotThreeConnected, "graph is not 3-connected");
  }
  if (auto reason = exceptional_for(g, Space::S3, Mode::Asymmetric)) {
    return SynthesisResult{Exceptional{*reason}};
  }
  const Face* best = nullptr;
  auto sorted_vertices = [](const Face& f) {
    Path key = f.vertices;
    std::sort(key.begin(), key.end());
    return key;
  };
  for (const Face& f : map->faces) {
    if (f.length() < 4) continue;
    if (best == nullptr || f.length() < best->length() ||
        (f.length() == best->length() && sorted_vertices(f) < sorted_vertices(*best))) {
      best = &f;
    }
  }
  if (best != nullptr) return theorem1_case1(g, *best);
  return theorem1_case2(g, map->rotation);
}

SynthesisResult synthesize_theorem2_asymmetric(const Graph& g, const Budget& budget) {
  require_planar(g);
  if (auto reason = exceptional_for(g, Space::S2, Mode::Asymmetric)) {
    return SynthesisResult{Exceptional{*reason}};
  }
  const GraphClass k = classify_special(g);
  if (k.tag == GraphClass::Tag::Cycle) return t2_cycle(g, budget);
  if (k.tag == GraphClass::Tag::Path) return t2_path(g, budget);
  const std::optional<int> shortest = girth(g);
  if (!shortest) return t2_case4(g, budget);
  if (*shortest == 3) return t2_case2(g, budget);
  if (*shortest == 4) return t2_case3(g, budget);
  return t2_case1(g, budget);
}

SynthesisResult synthesize_s2_chiral(const Graph& g, const Budget& budget) {
  require_planar(g);
  if (auto reason = exceptional_for(g, Space::S2, Mode::FaithfullyChiral)) {
    return SynthesisResult{Exceptional{*reason}};
  }
  const GraphClass k = classify_special(g);
  using Tag = GraphClass::Tag;
  if (k.tag == Tag::SingleVertex) {
    EdgeColoring empty(g);
    const VerificationReport report = is_s2_faithfully_chiral(g, empty, budget);
    if (!report.verdict) throw Error(Errc::InternalVerificationFailure, "single vertex not chiral");
    return SynthesisResult{Colored{std::move(empty), "T2-Chiral-SingleVertex", trivial_certificate(),
                                   {"single vertex: listed as asymmetric-exceptional, chiral under "
                                    "the literal definition"}}};
  }
  if (k.tag == Tag::K4 || (k.tag == Tag::CompleteBipartite2m && k.n == 4)) {
    const EmbeddingCatalog catalog(g, budget);
    std::optional<EdgeColoring> found;
    if (k.tag == Tag::CompleteBipartite2m) {
      EdgeColoring seed = k24_seed(g);
      if (catalog.s2_faithfully_chiral(seed).verdict) found = std::move(seed);
    }
    if (!found) found = exhaustive_coloring_search(catalog, Predicate::S2FaithfullyChiral, budget);
    if (!found) throw Error(Errc::SearchExhausted, "no faithfully chiral coloring found");
    const VerificationReport report = catalog.s2_faithfully_chiral(*found);
    const std::string tag = k.tag == Tag::K4 ? "T2-Chiral-K4" : "T2-Chiral-K2,4";
    return SynthesisResult{Colored{std::move(*found), tag, chiral_certificate(report), {}}};
  }
  return synthesize_theorem2_asymmetric(g, budget);
}

SynthesisResult synthesize(const Graph& g, Space space, Mode mode, const Budget& budget) {
  if (!is_planar(g)) {
    return SynthesisResult{Unsupported{Unsupported::Reason::NonPlanar, "graph is not planar"}};
  }
  if (space == Space::S2) {
    return mode == Mode::Asymmetric ? synthesize_theorem2_asymmetric(g, budget)
                                    : synthesize_s2_chiral(g, budget);
  }
  if (g.vertex_count() >= 4 && vertex_connectivity(g) >= 3) {
    SynthesisResult result = synthesize_theorem1(g, budget);
    if (result.exceptional()) {
      return SynthesisResult{Exceptional{*exceptional_for(g, Space::S3, mode)}};
    }
    return result;
  }
  const SynthesisResult s2 = synthesize_theorem2_asymmetric(g, budget);
  if (s2.colored() && trivial_group(g, s2.as_colored().coloring)) {
    Colored out = s2.as_colored();
    out.certificate = trivial_certificate();
    out.notes.push_back("beyond characterised scope: sufficient condition only");
    return SynthesisResult{std::move(out)};
  }
  return SynthesisResult{Unsupported{Unsupported::Reason::OpenProblem,
                                     "S3 classification for graphs that are not 3-connected is open"}};
}

}  // namespace asymcolor
