#pragma once

#include <optional>
#include <string>

#include "asymcolor/graph.hpp"

namespace asymcolor {

enum class Space { S2, S3 };
enum class Mode { Asymmetric, FaithfullyChiral };

std::string to_string(Space s);
std::string to_string(Mode m);

/// Named families that appear in the exceptional lists.
///
/// Overlapping names resolve by priority
/// SingleVertex > Cycle > Path > Star > DoubleStar > CompleteBipartite2m > K4 > Other,
/// so K_{1,1} and K_{1,2} are Path(1) and Path(2), and S_{1,1} is a path.
struct GraphClass {
  enum class Tag { SingleVertex, Path, Cycle, Star, DoubleStar, CompleteBipartite2m, K4, Other };

  Tag tag = Tag::Other;
  int n = 0;  // Path: edges; Cycle: length; Star: leaves; DoubleStar: smaller side; K2,m: m
  int m = 0;  // DoubleStar: larger side

  std::string to_string() const;
  friend bool operator==(const GraphClass&, const GraphClass&) = default;
};

GraphClass classify_special(const Graph& g);

struct ExceptionReason {
  Space space = Space::S2;
  Mode mode = Mode::Asymmetric;
  GraphClass graph_class;
  /// Stable key naming the clause of the classification that applies,
  /// e.g. "s2-asymmetric:pentagon".
  std::string citation;
};

/// The published exceptional lists:
///   (S2, Asymmetric): single vertex, C3, C4, C5, K4, K2,4, K1,n (n != 2),
///                     S_{n,m} (n, m odd, not n = m = 1)
///   (S2, FaithfullyChiral): C3, C4, C5, K1,n (n != 2), S_{n,m} odd-odd
///   (S3, either mode): K4, for planar 3-connected input only
/// Throws UnsupportedScope for S3 with input that is not planar and 3-connected.
std::optional<ExceptionReason> exceptional_for(const Graph& g, Space space, Mode mode);

}  // namespace asymcolor
