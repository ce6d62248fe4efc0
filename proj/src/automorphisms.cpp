#include "asymcolor/automorphisms.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

#include "asymcolor/error.hpp"

namespace asymcolor {

namespace {

int edge_color(const EdgeColoring* c, EdgeId e) {
  return c == nullptr ? 0 : static_cast<int>((*c)[e]);
}

std::vector<int> rank_signatures(const std::vector<std::vector<int>>& sigs) {
  std::vector<std::vector<int>> sorted = sigs;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> ranks(sigs.size());
  for (std::size_t v = 0; v < sigs.size(); ++v) {
    ranks[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sigs[v]) -
                                sorted.begin());
  }
  return ranks;
}

int class_count(const std::vector<int>& cls) {
  return cls.empty() ? 0 : *std::max_element(cls.begin(), cls.end()) + 1;
}

/// Backtracking over vertex images in BFS order, pruned by refined classes
/// and by adjacency/colour consistency with already-placed vertices.
class AutomorphismSearch {
 public:
  AutomorphismSearch(const Graph& g, const EdgeColoring* c) : g_(g), c_(c) {
    const int n = g.vertex_count();
    cls_ = refine_classes(g, c);
    std::vector<int> class_size(static_cast<std::size_t>(class_count(cls_)), 0);
    for (int k : cls_) ++class_size[k];
    Vertex start = 0;
    for (Vertex v = 1; v < n; ++v) {
      if (class_size[cls_[v]] < class_size[cls_[start]]) start = v;
    }
    order_from(start);
    image_.assign(static_cast<std::size_t>(n), -1);
    used_.assign(static_cast<std::size_t>(n), 0);
  }

  /// Restricts the search to automorphisms with from -> to.
  void pin(Vertex from, Vertex to) {
    order_from(from);
    pinned_ = to;
  }

  /// Calls `emit` for each automorphism until it returns false.
  void run(const std::function<bool(const Automorphism&)>& emit) {
    emit_ = &emit;
    stop_ = false;
    if (pinned_ >= 0 && cls_[order_[0]] != cls_[pinned_]) return;
    place(0);
  }

 private:
  void order_from(Vertex start) {
    const int n = g_.vertex_count();
    order_.clear();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::deque<Vertex> queue{start};
    seen[start] = 1;
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      order_.push_back(v);
      for (Vertex w : g_.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
  }

  bool compatible(Vertex x, Vertex t) const {
    int placed_x = 0;
    for (Vertex y : g_.neighbors(x)) {
      if (image_[y] < 0) continue;
      ++placed_x;
      const EdgeId target = g_.edge_id(t, image_[y]);
      if (target < 0) return false;
      if (edge_color(c_, g_.edge_id(x, y)) != edge_color(c_, target)) return false;
    }
    int placed_t = 0;
    for (Vertex z : g_.neighbors(t)) placed_t += used_[z];
    return placed_x == placed_t;
  }

  void place(std::size_t k) {
    if (stop_) return;
    if (k == order_.size()) {
      Automorphism a{image_};
      if (!(*emit_)(a)) stop_ = true;
      return;
    }
    const Vertex x = order_[k];
    const int n = g_.vertex_count();
    for (Vertex t = 0; t < n && !stop_; ++t) {
      if (k == 0 && pinned_ >= 0 && t != pinned_) continue;
      if (used_[t] || cls_[t] != cls_[x] || !compatible(x, t)) continue;
      image_[x] = t;
      used_[t] = 1;
      place(k + 1);
      used_[t] = 0;
      image_[x] = -1;
    }
  }

  const Graph& g_;
  const EdgeColoring* c_;
  std::vector<int> cls_;
  std::vector<Vertex> order_;
  std::vector<Vertex> image_;
  std::vector<char> used_;
  Vertex pinned_ = -1;
  const std::function<bool(const Automorphism&)>* emit_ = nullptr;
  bool stop_ = false;
};

std::vector<Automorphism> enumerate_group(const Graph& g, const EdgeColoring* c,
                                          const Budget& budget) {
  if (static_cast<std::size_t>(g.vertex_count()) > budget.max_automorphism_vertices) {
    throw Error(Errc::SizeLimitExceeded,
                std::to_string(g.vertex_count()) + " vertices exceed the automorphism bound");
  }
  if (c != nullptr) c->check_against(g);
  std::vector<Automorphism> out;
  AutomorphismSearch search(g, c);
  search.run([&](const Automorphism& a) {
    out.push_back(a);
    if (out.size() > budget.max_group_order) {
      throw Error(Errc::SizeLimitExceeded, "automorphism group larger than " +
                                               std::to_string(budget.max_group_order));
    }
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<int> refine_classes(const Graph& g, const EdgeColoring* coloring) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> sigs(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    int grey = 0;
    for (Vertex w : g.neighbors(v)) grey += edge_color(coloring, g.edge_id(v, w));
    sigs[v] = {g.degree(v), grey};
  }
  std::vector<int> cls = rank_signatures(sigs);
  while (true) {
    for (Vertex v = 0; v < n; ++v) {
      std::vector<int> sig;
      sig.reserve(static_cast<std::size_t>(g.degree(v)) + 1);
      for (Vertex w : g.neighbors(v)) {
        sig.push_back(cls[w] * 2 + edge_color(coloring, g.edge_id(v, w)));
      }
      std::sort(sig.begin(), sig.end());
      sig.insert(sig.begin(), cls[v]);
      sigs[v] = std::move(sig);
    }
    std::vector<int> next = rank_signatures(sigs);
    const bool stable = class_count(next) == class_count(cls);
    cls = std::move(next);
    if (stable) break;
  }
  return cls;
}

std::vector<Automorphism> automorphisms(const Graph& g, const Budget& budget) {
  return enumerate_group(g, nullptr, budget);
}

std::vector<Automorphism> color_preserving_automorphisms(const Graph& g, const EdgeColoring& c,
                                                         const Budget& budget) {
  return enumerate_group(g, &c, budget);
}

std::vector<Automorphism> first_color_preserving_automorphisms(const Graph& g,
                                                               const EdgeColoring* c,
                                                               std::size_t limit) {
  if (c != nullptr) c->check_against(g);
  std::vector<Automorphism> out;
  AutomorphismSearch search(g, c);
  search.run([&](const Automorphism& a) {
    out.push_back(a);
    return out.size() < limit;
  });
  return out;
}

std::optional<Automorphism> find_automorphism_mapping(const Graph& g, const EdgeColoring* c,
                                                      Vertex from, Vertex to) {
  std::optional<Automorphism> found;
  AutomorphismSearch search(g, c);
  search.pin(from, to);
  search.run([&](const Automorphism& a) {
    found = a;
    return false;
  });
  return found;
}

std::vector<Vertex> vertex_orbits(const Graph& g, const EdgeColoring* c) {
  const int n = g.vertex_count();
  std::vector<Vertex> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<Vertex(Vertex)> find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  auto unite = [&](Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  const std::vector<int> cls = refine_classes(g, c);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u = v + 1; u < n; ++u) {
      if (cls[u] != cls[v] || find(u) == find(v)) continue;
      if (auto phi = find_automorphism_mapping(g, c, v, u)) {
        for (Vertex w = 0; w < n; ++w) unite(w, (*phi)(w));
      }
    }
  }
  std::vector<Vertex> orbit(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) orbit[v] = find(v);
  return orbit;
}

std::string CanonicalForm::to_string() const {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out = "n" + std::to_string(vertex_count) + ":";
  for (std::size_t i = 0; i < code.size(); i += 4) {
    int nibble = 0;
    for (std::size_t j = 0; j < 4; ++j) {
      nibble = nibble * 2 + ((i + j < code.size() && code[i + j]) ? 1 : 0);
    }
    out += kHex[nibble];
  }
  return out;
}

CanonicalForm canonical_form(const Graph& g) {
  const int n = g.vertex_count();
  const std::vector<int> cls = refine_classes(g);
  std::vector<int> cell_at(static_cast<std::size_t>(n));
  {
    std::vector<int> sorted = cls;
    std::sort(sorted.begin(), sorted.end());
    cell_at = sorted;
  }

  CanonicalForm best;
  best.vertex_count = n;
  bool have_best = false;
  int best_version = 0;
  std::vector<Vertex> order;
  std::vector<bool> code;
  std::vector<char> used(static_cast<std::size_t>(n), 0);

  // Sign of code[0, len) against best.code[0, len).
  auto compare_prefix = [&](std::size_t len) {
    for (std::size_t i = 0; i < len; ++i) {
      if (code[i] != best.code[i]) return code[i] ? 1 : -1;
    }
    return 0;
  };

  // state: 0 = prefix equals best, -1 = prefix already smaller than best,
  // valid for best as of `version`.
  std::function<void(int, int, int)> place = [&](int k, int state, int version) {
    if (have_best && version != best_version) {
      state = compare_prefix(code.size());
      version = best_version;
      if (state > 0) return;
    }
    if (k == n) {
      if (!have_best || state < 0) {
        best.code = code;
        best.order = order;
        have_best = true;
        ++best_version;
      }
      return;
    }
    const std::size_t row_start = static_cast<std::size_t>(k) * (k - 1) / 2;
    for (Vertex v = 0; v < n; ++v) {
      if (used[v] || cls[v] != cell_at[k]) continue;
      if (have_best && version != best_version) {
        state = compare_prefix(row_start);
        version = best_version;
        if (state > 0) return;
      }
      int next_state = state;
      bool prune = false;
      for (int j = 0; j < k; ++j) {
        const bool bit = g.adjacent(v, order[j]);
        code.push_back(bit);
        if (have_best && next_state == 0) {
          const bool ref = best.code[row_start + j];
          if (bit && !ref) prune = true;
          if (!bit && ref) next_state = -1;
        }
        if (prune) break;
      }
      if (!prune) {
        used[v] = 1;
        order.push_back(v);
        place(k + 1, next_state, have_best ? best_version : 0);
        order.pop_back();
        used[v] = 0;
      }
      code.resize(row_start);
    }
  };
  place(0, 0, 0);
  return best;
}

Graph canonical_graph(const Graph& g) {
  const CanonicalForm cf = canonical_form(g);
  std::vector<int> position(static_cast<std::size_t>(g.vertex_count()));
  for (int k = 0; k < g.vertex_count(); ++k) position[cf.order[k]] = k;
  std::vector<std::pair<int, int>> edges;
  for (const Edge& e : g.edges()) edges.emplace_back(position[e.u], position[e.v]);
  return Graph::from_indices(g.vertex_count(), edges);
}

}  // namespace asymcolor
