#include "asymcolor/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "asymcolor/automorphisms.hpp"
#include "asymcolor/budget.hpp"
#include "asymcolor/error.hpp"
#include "asymcolor/io.hpp"
#include "asymcolor/oracle.hpp"
#include "asymcolor/planar_maps.hpp"
#include "asymcolor/report.hpp"
#include "asymcolor/special_graphs.hpp"
#include "asymcolor/symmetry.hpp"
#include "asymcolor/synthesizer.hpp"

namespace asymcolor {

namespace {

using report::Json;

constexpr int kOracleVertexLimit = 9;

/// Library error tagged with the file it came from.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::BadParams, "cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Graph load_graph(const std::string& path) {
  try {
    return parse_graph_file(read_file(path));
  } catch (const Error& e) {
    throw InputError(path + ": " + e.what());
  }
}

EdgeColoring load_coloring(const std::string& path, const Graph& g) {
  try {
    return parse_coloring_file(read_file(path), g);
  } catch (const Error& e) {
    throw InputError(path + ": " + e.what());
  }
}

Space parse_space(const std::string& s) { return s == "s3" ? Space::S3 : Space::S2; }
Mode parse_mode(const std::string& s) {
  return s == "chiral" ? Mode::FaithfullyChiral : Mode::Asymmetric;
}

bool three_connected_planar(const Graph& g) {
  return g.vertex_count() >= 4 && is_planar(g) && vertex_connectivity(g) >= 3;
}

Json exception_or_null(const Graph& g, Space space, Mode mode) {
  try {
    if (auto reason = exceptional_for(g, space, mode)) return report::exception_json(*reason);
    return Json(nullptr);
  } catch (const Error& e) {
    if (e.code() == Errc::UnsupportedScope) return Json("out-of-scope");
    throw;
  }
}

int cmd_classify(const std::string& file, const Budget& budget, std::ostream& out) {
  const Graph g = load_graph(file);
  Json doc = Json::object();
  doc["command"] = "classify";
  doc["graph"] = report::graph_json(g);
  doc["class"] = classify_special(g).to_string();
  const PlanarityResult planar = test_planarity_and_embed(g);
  if (const auto* w = std::get_if<NonPlanarWitness>(&planar)) {
    doc["planar"] = false;
    Json edges = Json::array();
    for (EdgeId e : w->edges) edges.push_back(g.edge_name(e));
    doc["kuratowski"] = Json{{"kind", w->kind == NonPlanarWitness::Kind::K5 ? "K5" : "K3,3"},
                             {"edges", std::move(edges)}};
  } else {
    doc["planar"] = true;
  }
  doc["vertex_connectivity"] = vertex_connectivity(g);
  const auto shortest = girth(g);
  doc["girth"] = shortest ? Json(*shortest) : Json(nullptr);
  try {
    doc["automorphism_group_order"] = automorphisms(g, budget).size();
  } catch (const Error& e) {
    if (e.code() != Errc::SizeLimitExceeded) throw;
    doc["automorphism_group_order"] = nullptr;
  }
  if (std::holds_alternative<EmbeddedMap>(planar)) {
    doc["exceptional"] = Json{
        {"s2-asymmetric", exception_or_null(g, Space::S2, Mode::Asymmetric)},
        {"s2-faithfully-chiral", exception_or_null(g, Space::S2, Mode::FaithfullyChiral)},
        {"s3-asymmetric", exception_or_null(g, Space::S3, Mode::Asymmetric)},
        {"s3-faithfully-chiral", exception_or_null(g, Space::S3, Mode::FaithfullyChiral)}};
  } else {
    doc["exceptional"] = nullptr;
  }
  out << report::dump(doc);
  return kExitOk;
}

VerificationReport run_predicate(const Graph& g, const EdgeColoring& c, Space space, Mode mode,
                                 const Budget& budget) {
  if (space == Space::S3) return has_trivial_color_automorphisms(g, c, budget);
  return mode == Mode::Asymmetric ? is_s2_asymmetric(g, c, budget)
                                  : is_s2_faithfully_chiral(g, c, budget);
}

int cmd_color(const std::string& file, Space space, Mode mode, std::string verify,
              const Budget& budget, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(file);
  if (verify.empty()) verify = g.vertex_count() <= kOracleVertexLimit ? "oracle" : "certificate";
  const SynthesisResult result = synthesize(g, space, mode, budget);
  Json doc = Json::object();
  doc["command"] = "color";
  doc["space"] = to_string(space);
  doc["mode"] = to_string(mode);
  doc["graph"] = report::graph_json(g);
  doc["result"] = report::synthesis_json(g, result);
  doc["verification"] = verify;
  if (result.colored()) {
    doc["coloring"] = doc["result"]["coloring"];
    if (verify == "oracle") {
      const VerificationReport check = run_predicate(g, result.as_colored().coloring, space, mode, budget);
      doc["oracle"] = report::verification_json(g, check);
      if (!check.verdict) {
        out << report::dump(doc);
        err << "error: synthesized coloring failed oracle verification\n";
        return kExitError;
      }
    }
  }
  out << report::dump(doc);
  if (result.colored()) return kExitOk;
  return result.exceptional() ? kExitNegative : kExitUnsupported;
}

int cmd_verify(const std::string& file, const std::string& coloring_file, Space space, Mode mode,
               const Budget& budget, std::ostream& out) {
  const Graph g = load_graph(file);
  const EdgeColoring c = load_coloring(coloring_file, g);
  Json doc = Json::object();
  doc["command"] = "verify";
  doc["space"] = to_string(space);
  doc["mode"] = to_string(mode);
  doc["graph"] = report::graph_json(g);
  doc["coloring"] = report::coloring_json(g, c);
  if (!is_planar(g)) {
    doc["verdict"] = "unknown";
    doc["detail"] = "non-planar input is outside the characterised scope";
    out << report::dump(doc);
    return kExitUnsupported;
  }
  const VerificationReport check = run_predicate(g, c, space, mode, budget);
  doc["report"] = report::verification_json(g, check);
  int code = check.verdict ? kExitOk : kExitNegative;
  if (space == Space::S3 && !check.verdict && !three_connected_planar(g)) {
    // A non-trivial colour-preserving automorphism need not be realised by
    // any homeomorphism of S3 unless the embedding is rigid.
    code = kExitUnsupported;
  }
  doc["verdict"] = code == kExitOk ? "true" : code == kExitNegative ? "false" : "unknown";
  out << report::dump(doc);
  return code;
}

int cmd_exhaust(const std::string& file, const std::string& mode, const Budget& budget,
                std::ostream& out) {
  const Graph g = load_graph(file);
  const Predicate p = mode == "chiral"  ? Predicate::S2FaithfullyChiral
                      : mode == "trivial" ? Predicate::TrivialAutGroup
                                          : Predicate::S2Asymmetric;
  if (p != Predicate::TrivialAutGroup && !is_planar(g)) {
    throw Error(Errc::NotPlanar, "exhaustive S2 search needs a planar graph");
  }
  const auto found = exhaustive_coloring_search(g, p, budget);
  Json doc = Json::object();
  doc["command"] = "exhaust";
  doc["predicate"] = to_string(p);
  doc["graph"] = report::graph_json(g);
  doc["found"] = found.has_value();
  doc["coloring"] = found ? report::coloring_json(g, *found) : Json(nullptr);
  out << report::dump(doc);
  return found ? kExitOk : kExitNegative;
}

int cmd_corpus(const CorpusSpec& spec, const Budget& budget, std::ostream& out) {
  const CrossCheckReport result = cross_check_theorems(spec, budget);
  out << report::dump(report::cross_check_json(result));
  return result.all_agree() ? kExitOk : kExitNegative;
}

int cmd_export_dot(const std::string& file, const std::string& coloring_file, std::ostream& out) {
  const Graph g = load_graph(file);
  std::optional<EdgeColoring> c;
  if (!coloring_file.empty()) c = load_coloring(coloring_file, g);
  out << export_dot(g, c);
  return kExitOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Asymmetric and chiral 2-colorings of planar graphs", "asymcolor"};
  app.require_subcommand(1);

  const std::vector<std::string> spaces{"s2", "s3"};
  const std::vector<std::string> modes{"asymmetric", "chiral"};

  std::string file, coloring_file, space = "s2", mode = "asymmetric", verify, exhaust_mode = "asymmetric";
  int max_n = 5;
  bool three_connected = false, timings = false;

  auto* classify = app.add_subcommand("classify", "Classify a graph file");
  classify->add_option("file", file, "graph file")->required();

  auto* color = app.add_subcommand("color", "Synthesize a coloring");
  color->add_option("file", file, "graph file")->required();
  color->add_option("--space", space)->check(CLI::IsMember(spaces));
  color->add_option("--mode", mode)->check(CLI::IsMember(modes));
  color->add_option("--verify", verify, "certificate|oracle|none (default: oracle up to 9 vertices)")
      ->check(CLI::IsMember({"certificate", "oracle", "none"}));

  auto* verify_cmd = app.add_subcommand("verify", "Check a coloring");
  verify_cmd->add_option("file", file, "graph file")->required();
  verify_cmd->add_option("--coloring", coloring_file, "coloring file or JSON report")->required();
  verify_cmd->add_option("--space", space)->check(CLI::IsMember(spaces));
  verify_cmd->add_option("--mode", mode)->check(CLI::IsMember(modes));

  auto* exhaust = app.add_subcommand("exhaust", "Search all colorings");
  exhaust->add_option("file", file, "graph file")->required();
  exhaust->add_option("--mode", exhaust_mode)->check(CLI::IsMember({"asymmetric", "chiral", "trivial"}));

  auto* corpus = app.add_subcommand("corpus", "Cross-check the classification on small graphs");
  corpus->add_option("--max-n", max_n)->check(CLI::PositiveNumber);
  corpus->add_option("--space", space)->check(CLI::IsMember(spaces));
  corpus->add_option("--mode", mode)->check(CLI::IsMember(modes));
  corpus->add_flag("--three-connected", three_connected);
  corpus->add_flag("--timings", timings);

  auto* dot = app.add_subcommand("export-dot", "Write Graphviz DOT");
  dot->add_option("file", file, "graph file")->required();
  dot->add_option("--coloring", coloring_file, "coloring file or JSON report");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    const Budget budget = budget_from_environment();
    if (*classify) return cmd_classify(file, budget, out);
    if (*color) return cmd_color(file, parse_space(space), parse_mode(mode), verify, budget, out, err);
    if (*verify_cmd) return cmd_verify(file, coloring_file, parse_space(space), parse_mode(mode), budget, out);
    if (*exhaust) return cmd_exhaust(file, exhaust_mode, budget, out);
    if (*corpus) {
      CorpusSpec spec;
      spec.max_vertices = max_n;
      spec.space = parse_space(space);
      spec.mode = parse_mode(mode);
      spec.three_connected_only = three_connected;
      spec.include_timings = timings;
      return cmd_corpus(spec, budget, out);
    }
    if (*dot) return cmd_export_dot(file, coloring_file, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace asymcolor
