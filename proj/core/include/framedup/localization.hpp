#pragma once

#include <array>
#include <string>
#include <vector>

#include "framedup/fine.hpp"
#include "framedup/frame.hpp"

namespace fdup {

/// Per-boundary class scores (none, drop, break) for the N-1 boundaries of a
/// clip; boundary t sits between frames t and t+1. The builtin scorer emits
/// non-negative triples summing to 1.
struct BoundaryScores {
  std::vector<std::array<double, 3>> triples;

  std::size_t count() const { return triples.size(); }
};

struct ScorerSpec {
  enum class Kind { builtin, external_file };
  Kind kind = Kind::builtin;
  std::string path;  // external: FDEB with dim=3, one row per boundary

  void validate() const;
};

/// Builtin scorer: standardizes each boundary's mean absolute intensity change
/// against a sliding 16-boundary median/MAD context and maps the resulting
/// z-value through fixed soft thresholds (larger z moves mass none -> drop ->
/// break). External mode loads one (none, drop, break) row per boundary.
BoundaryScores score_boundaries(const VideoClip& clip, const ScorerSpec& scorer);

/// Combined inconsistency per boundary: drop + break - lambda * none.
struct InconsistencySeries {
  std::vector<double> s;
  double lambda = 0.1;
};

InconsistencySeries inconsistency_series(const BoundaryScores& scores, double lambda = 0.1);

enum class LocalizationDecision { first_gt_second, second_ge_first };

struct LocalizationResult {
  IndexRange duplicated_range;
  IndexRange selected_range;
  double first_score = 0.0;   // windowed boundary sum at the earlier run
  double second_score = 0.0;  // windowed boundary sum at the later run
  LocalizationDecision decided_by = LocalizationDecision::second_ge_first;
};

/// Sums inconsistency over +-wind boundaries around each run's entering and
/// leaving boundary. Out-of-range indices are skipped; if that leaves the two
/// runs with different term counts, means are compared instead of sums. The
/// run with the larger score is declared duplicated; ties go to the later run.
LocalizationResult localize(const DuplicationMatch& match, const InconsistencySeries& s,
                            std::size_t wind = 3);

}  // namespace fdup
