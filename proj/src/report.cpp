#include "asymcolor/report.hpp"

#include "asymcolor/error.hpp"

namespace asymcolor::report {

namespace {

std::string color_name(Color c) { return c == Color::Grey ? "grey" : "black"; }

std::string orientation_name(Orientation o) {
  return o == Orientation::Preserving ? "preserving" : "reversing";
}

}  // namespace

Json graph_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({g.label(e.u), g.label(e.v)});
  return Json{{"vertices", g.labels()}, {"edges", std::move(edges)}};
}

Json coloring_json(const Graph& g, const EdgeColoring& c) {
  Json out = Json::array();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    out.push_back({g.label(edge.u), g.label(edge.v), color_name(c[e])});
  }
  return out;
}

Json rotation_json(const Graph& g, const RotationSystem& r) {
  Json out = Json::object();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    Json around = Json::array();
    for (Vertex u : r.around(v)) around.push_back(g.label(u));
    out[g.label(v)] = std::move(around);
  }
  return out;
}

Json automorphism_json(const Graph& g, const Automorphism& a) {
  Json out = Json::object();
  for (Vertex v = 0; v < g.vertex_count(); ++v) out[g.label(v)] = g.label(a(v));
  return out;
}

Json witness_json(const Graph& g, const Witness& w) {
  Json out = Json::object();
  out["automorphism"] = automorphism_json(g, w.automorphism);
  out["rotation"] = w.rotation ? rotation_json(g, *w.rotation) : Json(nullptr);
  out["orientation"] = w.orientation ? Json(orientation_name(*w.orientation)) : Json(nullptr);
  return out;
}

Json certificate_json(const Graph& g, const Certificate& c) {
  Json out = Json::object();
  out["kind"] = to_string(c.kind);
  if (c.center) {
    out["center"] = g.label(*c.center);
    Json star = Json::array();
    for (EdgeId e : c.star_edges) star.push_back(g.edge_name(e));
    out["star_edges"] = std::move(star);
  }
  if (c.group_order > 0) out["group_order"] = c.group_order;
  if (c.kind == CertificateKind::OracleVerified) out["embeddings_checked"] = c.embeddings_checked;
  return out;
}

Json verification_json(const Graph& g, const VerificationReport& r) {
  Json out = Json::object();
  out["predicate"] = r.predicate;
  out["verdict"] = r.verdict;
  out["witness"] = r.witness ? witness_json(g, *r.witness) : Json(nullptr);
  out["stats"] = Json{{"embeddings", r.stats.embeddings},
                      {"automorphisms_filtered", r.stats.automorphisms_filtered}};
  return out;
}

Json exception_json(const ExceptionReason& r) {
  return Json{{"space", to_string(r.space)},
              {"mode", to_string(r.mode)},
              {"class", r.graph_class.to_string()},
              {"citation", r.citation}};
}

Json synthesis_json(const Graph& g, const SynthesisResult& r) {
  Json out = Json::object();
  if (r.colored()) {
    const Colored& c = r.as_colored();
    Json grey = Json::array();
    for (EdgeId e : c.coloring.grey_edges()) grey.push_back(g.edge_name(e));
    out["outcome"] = "colored";
    out["case"] = c.case_tag;
    out["certificate"] = certificate_json(g, c.certificate);
    out["grey_edges"] = std::move(grey);
    out["coloring"] = coloring_json(g, c.coloring);
    out["notes"] = c.notes;
  } else if (r.exceptional()) {
    out["outcome"] = "exceptional";
    out["exception"] = exception_json(r.as_exceptional().reason);
  } else {
    out["outcome"] = "unsupported";
    out["reason"] = to_string(r.as_unsupported().reason);
    out["detail"] = r.as_unsupported().detail;
  }
  return out;
}

Json cross_check_json(const CrossCheckReport& r) {
  Json named = Json::array();
  for (const auto& [family, params] : r.spec.named) named.push_back({{"family", family}, {"params", params}});
  Json spec{{"max_vertices", r.spec.max_vertices},
            {"three_connected_only", r.spec.three_connected_only},
            {"space", to_string(r.spec.space)},
            {"mode", to_string(r.spec.mode)},
            {"include_enumerated", r.spec.include_enumerated},
            {"named", std::move(named)}};
  Json rows = Json::array();
  for (const CrossCheckRow& row : r.rows) {
    Json j{{"canonical", row.canonical},
           {"vertices", row.vertices},
           {"edges", row.edges},
           {"class", row.graph_class},
           {"published", row.published},
           {"synthesizer", row.synthesizer},
           {"oracle", row.oracle},
           {"synthesized_verified", row.synthesized_verified},
           {"status", row.status},
           {"grey_edges", row.grey_edges},
           {"oracle_grey_edges", row.oracle_grey}};
    if (row.status == "disagree") j["edge_list"] = row.edge_list;
    if (r.spec.include_timings) j["millis"] = row.millis;
    rows.push_back(std::move(j));
  }
  Json summary{{"rows", r.rows.size()},
               {"agree", r.count("agree")},
               {"known-divergence", r.count("known-divergence")},
               {"disagree", r.count("disagree")}};
  return Json{{"spec", std::move(spec)}, {"summary", std::move(summary)}, {"rows", std::move(rows)}};
}

EdgeColoring coloring_from_json(const Json& doc, const Graph& g) {
  const Json* list = &doc;
  if (doc.is_object()) {
    if (doc.contains("coloring")) {
      list = &doc["coloring"];
    } else if (doc.contains("result") && doc["result"].is_object() && doc["result"].contains("coloring")) {
      list = &doc["result"]["coloring"];
    } else {
      throw Error(Errc::InvalidColoring, "report carries no coloring");
    }
  }
  if (!list->is_array()) throw Error(Errc::InvalidColoring, "coloring must be an array");
  std::vector<Color> colors(static_cast<std::size_t>(g.edge_count()), Color::Black);
  std::vector<char> given(static_cast<std::size_t>(g.edge_count()), 0);
  for (const Json& entry : *list) {
    if (!entry.is_array() || entry.size() != 3 || !entry[0].is_string() || !entry[1].is_string() ||
        !entry[2].is_string()) {
      throw Error(Errc::InvalidColoring, "coloring entries must be [u, v, color]");
    }
    const auto u = g.find(entry[0].get<std::string>());
    const auto v = g.find(entry[1].get<std::string>());
    const EdgeId e = u && v ? g.edge_id(*u, *v) : -1;
    if (e < 0) throw Error(Errc::InvalidColoring, "coloring names a non-edge");
    if (given[e]) throw Error(Errc::InvalidColoring, "edge " + g.edge_name(e) + " colored twice");
    given[e] = 1;
    const std::string word = entry[2].get<std::string>();
    if (word == "grey" || word == "gray") {
      colors[e] = Color::Grey;
    } else if (word != "black") {
      throw Error(Errc::InvalidColoring, "unknown color '" + word + "'");
    }
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!given[e]) throw Error(Errc::InvalidColoring, "edge " + g.edge_name(e) + " has no color");
  }
  return EdgeColoring(std::move(colors));
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace asymcolor::report
