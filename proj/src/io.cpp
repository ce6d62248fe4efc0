#include "asymcolor/io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <vector>

#include "asymcolor/error.hpp"
#include "asymcolor/report.hpp"

namespace asymcolor {

namespace {

struct Token {
  std::string text;
  int column = 0;  // 1-based
};

/// Splits one line into whitespace-separated tokens, dropping a '#' comment.
std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char ch = line[i];
    if (ch == '#') break;
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != '#' && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({std::string(line.substr(start, i - start)), static_cast<int>(start) + 1});
  }
  return out;
}

template <typename F>
void for_each_line(std::string_view text, F&& f) {
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++number;
    if (pos == text.size() && line.empty()) break;
    f(number, line);
    pos = end + 1;
  }
}

void check_name(const Token& t, int line) {
  const bool ok = !t.text.empty() && std::all_of(t.text.begin(), t.text.end(), [](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
  });
  if (!ok) {
    throw Error(Errc::ParseError, "invalid vertex name '" + t.text + "'", line, t.column);
  }
}

}  // namespace

Graph parse_graph_file(std::string_view text) {
  std::vector<std::string> vertices;
  std::set<std::string> seen_vertices;
  std::vector<Graph::LabelEdge> edges;
  std::map<std::pair<std::string, std::string>, int> edge_line;
  auto add_vertex = [&](const std::string& v) {
    if (seen_vertices.insert(v).second) vertices.push_back(v);
  };
  for_each_line(text, [&](int number, std::string_view line) {
    const std::vector<Token> tokens = tokenize(line);
    if (tokens.empty()) return;
    if (tokens.size() == 2 && tokens[0].text == "vertex") {
      check_name(tokens[1], number);
      add_vertex(tokens[1].text);
      return;
    }
    if (tokens.size() != 2) {
      const int column = tokens.size() > 2 ? tokens[2].column : tokens.front().column;
      throw Error(Errc::ParseError, "expected an edge 'u v'", number, column);
    }
    check_name(tokens[0], number);
    check_name(tokens[1], number);
    const std::string& u = tokens[0].text;
    const std::string& v = tokens[1].text;
    if (u == v) throw Error(Errc::SelfLoop, "self-loop at '" + u + "'", number, tokens[1].column);
    const auto key = std::minmax(u, v);
    const auto [it, inserted] = edge_line.emplace(std::pair{key.first, key.second}, number);
    if (!inserted) {
      throw Error(Errc::DuplicateEdge,
                  "edge " + u + "-" + v + " already given on line " + std::to_string(it->second),
                  number, tokens[0].column);
    }
    add_vertex(u);
    add_vertex(v);
    edges.emplace_back(u, v);
  });
  return Graph::from_labels(vertices, edges);
}

EdgeColoring parse_coloring_file(std::string_view text, const Graph& g) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    report::Json doc;
    try {
      doc = report::Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw Error(Errc::ParseError, std::string("malformed JSON report: ") + e.what());
    }
    return report::coloring_from_json(doc, g);
  }
  std::vector<Color> colors(static_cast<std::size_t>(g.edge_count()), Color::Black);
  std::vector<int> given(static_cast<std::size_t>(g.edge_count()), 0);
  for_each_line(text, [&](int number, std::string_view line) {
    const std::vector<Token> tokens = tokenize(line);
    if (tokens.empty()) return;
    if (tokens.size() != 3) {
      const int column = tokens.size() > 3 ? tokens[3].column : tokens.front().column;
      throw Error(Errc::ParseError, "expected 'u v color'", number, column);
    }
    const auto u = g.find(tokens[0].text);
    const auto v = g.find(tokens[1].text);
    if (!u || !v) {
      const Token& bad = u ? tokens[1] : tokens[0];
      throw Error(Errc::InvalidColoring, "unknown vertex '" + bad.text + "'", number, bad.column);
    }
    const EdgeId e = g.edge_id(*u, *v);
    if (e < 0) {
      throw Error(Errc::InvalidColoring, tokens[0].text + "-" + tokens[1].text + " is not an edge",
                  number, tokens[0].column);
    }
    if (given[e]) {
      throw Error(Errc::InvalidColoring, "edge " + g.edge_name(e) + " colored twice (first on line " +
                                             std::to_string(given[e]) + ")",
                  number, tokens[0].column);
    }
    given[e] = number;
    const std::string& word = tokens[2].text;
    if (word == "black") {
      colors[e] = Color::Black;
    } else if (word == "grey" || word == "gray") {
      colors[e] = Color::Grey;
    } else {
      throw Error(Errc::ParseError, "unknown color '" + word + "'", number, tokens[2].column);
    }
  });
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!given[e]) throw Error(Errc::InvalidColoring, "edge " + g.edge_name(e) + " has no color");
  }
  return EdgeColoring(std::move(colors));
}

std::string format_coloring_file(const Graph& g, const EdgeColoring& c) {
  c.check_against(g);
  std::string out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    out += g.label(edge.u) + " " + g.label(edge.v) + (c[e] == Color::Grey ? " grey\n" : " black\n");
  }
  return out;
}

std::string format_graph_file(const Graph& g) {
  std::string out;
  for (const Edge& e : g.edges()) out += g.label(e.u) + " " + g.label(e.v) + "\n";
  if (g.edge_count() == 0) {
    for (const std::string& v : g.labels()) out += "vertex " + v + "\n";
  }
  return out;
}

std::string export_dot(const Graph& g, const std::optional<EdgeColoring>& c) {
  if (c) c->check_against(g);
  std::string out = "graph G {\n";
  for (const std::string& v : g.labels()) out += "  \"" + v + "\";\n";
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    out += "  \"" + g.label(edge.u) + "\" -- \"" + g.label(edge.v) + "\"";
    if (c) out += (*c)[e] == Color::Grey ? " [color=\"gray50\"]" : " [color=\"black\"]";
    out += ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace asymcolor
