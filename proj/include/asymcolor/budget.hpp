#pragma once

#include <cstddef>

namespace asymcolor {

/// Hard caps for the exhaustive engines. Exceeding one raises
/// Errc::BudgetExceeded (or SizeLimitExceeded for automorphism search)
/// instead of silently truncating.
struct Budget {
  std::size_t max_automorphism_vertices = 512;
  std::size_t max_group_order = 1'000'000;
  /// Genus-0 rotation systems per graph (and search nodes visited to find them).
  std::size_t max_rotations = 1'000'000;
  std::size_t max_colorings = std::size_t{1} << 20;
  std::size_t max_corpus_vertices = 8;
  /// Grey-path candidates tried by the synthesizer's fallback search.
  std::size_t max_path_candidates = 200'000;
};

/// Budget with overrides read from ASYMCOLOR_MAX_* environment variables.
Budget budget_from_environment();

}  // namespace asymcolor
