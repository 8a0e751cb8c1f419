#pragma once

#include <cstddef>
#include <vector>

#include "framedup/embedding.hpp"
#include "framedup/windowing.hpp"

namespace fdup {

/// Symmetric pairwise L2 distances between window embeddings, zero diagonal.
struct SequenceDistanceMatrix {
  std::size_t size = 0;
  std::vector<double> values;  // size * size, row-major

  double at(std::size_t a, std::size_t b) const { return values[a * size + b]; }
};

struct CandidatePair {
  std::size_t window_a = 0;
  std::size_t window_b = 0;  // window_a < window_b
  double distance = 0.0;
};

SequenceDistanceMatrix sequence_distance_matrix(const EmbeddingSeries& series,
                                                unsigned jobs = 1);

/// Gating threshold picked from the matrix itself: the given percentile of
/// off-band values (pairs with b - a >= min_window_gap), floored at min value.
double auto_threshold(const SequenceDistanceMatrix& m, std::size_t min_window_gap,
                      double percentile = 5.0, double floor = 1e-9);

/// All pairs (a, b) with a < b, b - a >= min_window_gap and distance < t1,
/// sorted by ascending distance, ties by (a, b).
std::vector<CandidatePair> candidate_pairs(const SequenceDistanceMatrix& m, double t1,
                                           std::size_t min_window_gap = 1);

}  // namespace fdup
