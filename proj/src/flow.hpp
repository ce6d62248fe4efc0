#pragma once

#include <algorithm>
#include <deque>
#include <vector>

#include "asymcolor/graph.hpp"

namespace asymcolor::detail {

/// Maximum number of vertex-disjoint paths from `sources` to `sinks`, capped
/// at `cap`. A singleton terminal set may be shared by all paths; terminals
/// of larger sets are used by at most one path each.
inline int local_vertex_connectivity(const Graph& g, const std::vector<Vertex>& sources,
                                     const std::vector<Vertex>& sinks, int cap) {
  const int n = g.vertex_count();
  const int big = n + 1;
  const int super_source = 2 * n;
  const int super_sink = 2 * n + 1;
  struct Arc {
    int to;
    int cap;
  };
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> out(static_cast<std::size_t>(2 * n + 2));
  auto add = [&](int from, int to, int c) {
    out[from].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({to, c});
    out[to].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({from, 0});
  };
  auto vertex_cap = [&](Vertex v) {
    const bool src = std::find(sources.begin(), sources.end(), v) != sources.end();
    const bool snk = std::find(sinks.begin(), sinks.end(), v) != sinks.end();
    if ((src && sources.size() == 1) || (snk && sinks.size() == 1)) return big;
    return 1;
  };
  for (Vertex v = 0; v < n; ++v) add(2 * v, 2 * v + 1, vertex_cap(v));
  for (const Edge& e : g.edges()) {
    add(2 * e.u + 1, 2 * e.v, big);
    add(2 * e.v + 1, 2 * e.u, big);
  }
  for (Vertex s : sources) add(super_source, 2 * s, big);
  for (Vertex t : sinks) add(2 * t + 1, super_sink, big);

  int flow = 0;
  std::vector<int> via(out.size());
  while (flow < cap) {
    std::fill(via.begin(), via.end(), -1);
    std::deque<int> queue{super_source};
    via[super_source] = -2;
    while (!queue.empty() && via[super_sink] == -1) {
      const int x = queue.front();
      queue.pop_front();
      for (int a : out[x]) {
        if (arcs[a].cap > 0 && via[arcs[a].to] == -1) {
          via[arcs[a].to] = a;
          queue.push_back(arcs[a].to);
        }
      }
    }
    if (via[super_sink] == -1) break;
    for (int x = super_sink; x != super_source;) {
      const int a = via[x];
      arcs[a].cap -= 1;
      arcs[a ^ 1].cap += 1;
      x = arcs[a ^ 1].to;
    }
    ++flow;
  }
  return flow;
}

}  // namespace asymcolor::detail
