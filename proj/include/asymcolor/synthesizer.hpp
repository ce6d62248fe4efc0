#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "asymcolor/budget.hpp"
#include "asymcolor/graph.hpp"
#include "asymcolor/special_graphs.hpp"
#include "asymcolor/symmetry.hpp"

namespace asymcolor {

struct Colored {
  EdgeColoring coloring;
  std::string case_tag;  // e.g. "T1-Case1", "T2-Case4.1"
  Certificate certificate;
  std::vector<std::string> notes;
};

struct Exceptional {
  ExceptionReason reason;
};

struct Unsupported {
  enum class Reason { NonPlanar, OpenProblem };
  Reason reason = Reason::OpenProblem;
  std::string detail;
};

struct SynthesisResult {
  std::variant<Colored, Exceptional, Unsupported> outcome;

  bool colored() const { return std::holds_alternative<Colored>(outcome); }
  bool exceptional() const { return std::holds_alternative<Exceptional>(outcome); }
  bool unsupported() const { return std::holds_alternative<Unsupported>(outcome); }
  const Colored& as_colored() const { return std::get<Colored>(outcome); }
  const Exceptional& as_exceptional() const { return std::get<Exceptional>(outcome); }
  const Unsupported& as_unsupported() const { return std::get<Unsupported>(outcome); }
};

std::string to_string(Unsupported::Reason r);

/// Dispatch on (space, mode). Non-planar input is Unsupported(NonPlanar).
/// S3 covers planar 3-connected graphs; other planar graphs get an S^2
/// coloring returned only if its colour-preserving group is trivial
/// (a sufficient condition), else Unsupported(OpenProblem).
SynthesisResult synthesize(const Graph& g, Space space, Mode mode, const Budget& budget = {});

/// 3-connected planar graphs. Throws NotPlanar / NotThreeConnected, and
/// InternalVerificationFailure if a construction fails its check.
SynthesisResult synthesize_theorem1(const Graph& g, const Budget& budget = {});

/// Intrinsically asymmetric coloring in S^2 for planar graphs.
SynthesisResult synthesize_theorem2_asymmetric(const Graph& g, const Budget& budget = {});

/// Intrinsically faithfully chiral coloring in S^2 for planar graphs.
SynthesisResult synthesize_s2_chiral(const Graph& g, const Budget& budget = {});

}  // namespace asymcolor
