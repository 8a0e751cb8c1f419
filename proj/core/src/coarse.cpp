#include "framedup/coarse.hpp"

#include <algorithm>
#include <cmath>

#include "framedup/error.hpp"
#include "framedup/parallel.hpp"

namespace fdup {

SequenceDistanceMatrix sequence_distance_matrix(const EmbeddingSeries& series,
                                                unsigned jobs) {
  if (series.granularity != Granularity::per_window)
    throw Error(errc::invalid_argument, "sequence matrix needs a per-window series");
  SequenceDistanceMatrix m;
  m.size = series.count();
  m.values.assign(m.size * m.size, 0.0);
  // Each row computes only b > a; mirror after the parallel section so the
  // result does not depend on scheduling.
  parallel_for(m.size, jobs, [&](std::size_t a) {
    const auto ra = series.row(a);
    for (std::size_t b = a + 1; b < m.size; ++b) {
      const auto rb = series.row(b);
      double acc = 0.0;
      for (std::size_t i = 0; i < series.dim; ++i) {
        const double d = ra[i] - rb[i];
        acc += d * d;
      }
      m.values[a * m.size + b] = std::sqrt(acc);
    }
  });
  for (std::size_t a = 0; a < m.size; ++a)
    for (std::size_t b = a + 1; b < m.size; ++b)
      m.values[b * m.size + a] = m.values[a * m.size + b];
  return m;
}

double auto_threshold(const SequenceDistanceMatrix& m, std::size_t min_window_gap,
                      double percentile, double floor) {
  if (percentile <= 0.0 || percentile >= 100.0)
    throw Error(errc::invalid_argument, "percentile must be in (0, 100)");
  std::vector<double> off_band;
  for (std::size_t a = 0; a < m.size; ++a)
    for (std::size_t b = a + std::max<std::size_t>(min_window_gap, 1); b < m.size; ++b)
      off_band.push_back(m.at(a, b));
  if (off_band.empty()) return floor;
  std::sort(off_band.begin(), off_band.end());
  const auto rank = static_cast<std::size_t>(
      std::ceil(percentile / 100.0 * double(off_band.size())));
  const std::size_t idx = rank == 0 ? 0 : rank - 1;
  return std::max(off_band[idx], floor);
}

std::vector<CandidatePair> candidate_pairs(const SequenceDistanceMatrix& m, double t1,
                                           std::size_t min_window_gap) {
  if (t1 <= 0.0) throw Error(errc::invalid_argument, "t1 must be positive");
  std::vector<CandidatePair> pairs;
  for (std::size_t a = 0; a < m.size; ++a) {
    for (std::size_t b = a + std::max<std::size_t>(min_window_gap, 1); b < m.size; ++b) {
      const double d = m.at(a, b);
      if (d < t1) pairs.push_back({a, b, d});
    }
  }
  std::sort(pairs.begin(), pairs.end(), [](const CandidatePair& x, const CandidatePair& y) {
    if (x.distance != y.distance) return x.distance < y.distance;
    if (x.window_a != y.window_a) return x.window_a < y.window_a;
    return x.window_b < y.window_b;
  });
  return pairs;
}

}  // namespace fdup
