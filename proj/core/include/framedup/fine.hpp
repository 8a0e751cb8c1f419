#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "framedup/embedding.hpp"

namespace fdup {

/// Half-open frame-index interval [start, end).
struct IndexRange {
  std::size_t start = 0;
  std::size_t count = 0;

  std::size_t end() const { return start + count; }
  bool contains(std::size_t i) const { return i >= start && i < end(); }
  bool overlaps(const IndexRange& other) const {
    return start < other.end() && other.start < end();
  }
  bool operator==(const IndexRange&) const = default;
};

/// Normalized frame pair distance in [0, 1]: (1 - cosine similarity) / 2.
/// Bitwise-equal vectors give exactly 0. Two zero vectors count as identical
/// (0); a zero against a non-zero vector is treated like an orthogonal pair
/// (0.5) since cosine is undefined there.
double frame_distance(std::span<const double> a, std::span<const double> b);

/// Dense distances between two per-frame embedding slices. Rows and columns
/// carry the absolute frame indices they cover, which may overlap (whole-video
/// mode uses rows == cols).
struct FrameDistanceMatrix {
  IndexRange rows;
  IndexRange cols;
  std::vector<double> values;  // rows.count * cols.count

  double at(std::size_t r, std::size_t c) const { return values[r * cols.count + c]; }
};

FrameDistanceMatrix frame_distance_matrix(const EmbeddingSeries& frames,
                                          IndexRange rows, IndexRange cols,
                                          unsigned jobs = 1);

/// One duplicated run: frames [first_index - back_extent, first_index +
/// forward_extent] matched frames [second_index - ..., ...] along a diagonal
/// of near-constant distance.
struct DuplicationMatch {
  std::size_t first_index = 0;   // argmin cell, smaller absolute frame index
  std::size_t second_index = 0;  // argmin cell, larger absolute frame index
  double min_distance = 0.0;
  std::size_t back_extent = 0;
  std::size_t forward_extent = 0;
  std::size_t run_length = 1;  // back_extent + forward_extent + 1
  double confidence = 0.0;     // video-level score, always <= 0

  IndexRange first_run() const {
    return {first_index - back_extent, run_length};
  }
  IndexRange second_run() const {
    return {second_index - back_extent, run_length};
  }
};

/// Extraction knobs. eps bounds the per-step deviation from the minimum during
/// diagonal extension; near_band masks |i - j| <= near_band at argmin time
/// (extension itself is not masked). Runs are kept short enough that the two
/// matched ranges stay disjoint.
struct RunExtractionParams {
  double eps = 0.01;
  std::size_t near_band = 8;
  double d_floor = 1e-6;  // stands in for an exact-zero minimum in the score
};

std::optional<DuplicationMatch> extract_run(const FrameDistanceMatrix& m,
                                            const RunExtractionParams& params = {});

/// Repeats extraction, masking a band of one run length around each accepted
/// run, until the minimum reaches t2 or max_events matches are found.
std::vector<DuplicationMatch> extract_runs(const FrameDistanceMatrix& m, double t2,
                                           std::size_t max_events,
                                           const RunExtractionParams& params = {});

/// -min_distance / (run_length * (second_index - first_index)); an exact-zero
/// minimum is replaced by d_floor so perfect copies still rank by length and
/// temporal gap.
double video_score(double min_distance, std::size_t run_length, std::size_t first_index,
                   std::size_t second_index, double d_floor = 1e-6);

}  // namespace fdup
