#include "asymcolor/error.hpp"

#include <cstdlib>
#include <string>

#include "asymcolor/budget.hpp"

namespace asymcolor {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::Disconnected: return "Disconnected";
    case Errc::DanglingEndpoint: return "DanglingEndpoint";
    case Errc::EmptyGraph: return "EmptyGraph";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidColoring: return "InvalidColoring";
    case Errc::InvalidRotation: return "InvalidRotation";
    case Errc::VerticesNotDistinct: return "VerticesNotDistinct";
    case Errc::SizeLimitExceeded: return "SizeLimitExceeded";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::OddEulerDefect: return "OddEulerDefect";
    case Errc::UnsupportedScope: return "UnsupportedScope";
    case Errc::NotPlanar: return "NotPlanar";
    case Errc::NotThreeConnected: return "NotThreeConnected";
    case Errc::SearchExhausted: return "SearchExhausted";
    case Errc::InternalVerificationFailure: return "InternalVerificationFailure";
    case Errc::BadParams: return "BadParams";
  }
  return "Unknown";
}

namespace {

std::string decorate(Errc code, const std::string& message, int line, int column) {
  std::string out(errc_name(code));
  if (line > 0) {
    out += " at line " + std::to_string(line);
    if (column > 0) out += ", column " + std::to_string(column);
  }
  if (!message.empty()) out += ": " + message;
  return out;
}

void read_env(const char* name, std::size_t& slot) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0') {
    throw Error(Errc::BadParams, std::string(name) + " must be a non-negative integer");
  }
  slot = static_cast<std::size_t>(value);
}

}  // namespace

Error::Error(Errc code, const std::string& message, int line, int column)
    : std::runtime_error(decorate(code, message, line, column)),
      code_(code),
      line_(line),
      column_(column) {}

Budget budget_from_environment() {
  Budget b;
  read_env("ASYMCOLOR_MAX_AUT_VERTICES", b.max_automorphism_vertices);
  read_env("ASYMCOLOR_MAX_GROUP_ORDER", b.max_group_order);
  read_env("ASYMCOLOR_MAX_ROTATIONS", b.max_rotations);
  read_env("ASYMCOLOR_MAX_COLORINGS", b.max_colorings);
  read_env("ASYMCOLOR_MAX_CORPUS_N", b.max_corpus_vertices);
  read_env("ASYMCOLOR_MAX_PATH_CANDIDATES", b.max_path_candidates);
  return b;
}

}  // namespace asymcolor
