#include "framedup/fine.hpp"

#include <algorithm>
#include <cmath>

#include "framedup/error.hpp"
#include "framedup/parallel.hpp"

namespace fdup {

double frame_distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size())
    throw Error(errc::dim_mismatch, "frame vectors differ in dimension");
  if (std::equal(a.begin(), a.end(), b.begin())) return 0.0;
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 && nb == 0.0) return 0.0;
  if (na == 0.0 || nb == 0.0) return 0.5;
  const double cosine = dot / (std::sqrt(na) * std::sqrt(nb));
  return std::clamp((1.0 - cosine) / 2.0, 0.0, 1.0);
}

FrameDistanceMatrix frame_distance_matrix(const EmbeddingSeries& frames,
                                          IndexRange rows, IndexRange cols,
                                          unsigned jobs) {
  if (rows.count == 0 || cols.count == 0)
    throw Error(errc::invalid_argument, "empty range for frame distance matrix");
  if (rows.end() > frames.count() || cols.end() > frames.count())
    throw Error(errc::range_out_of_bounds, "range exceeds embedding series");

  FrameDistanceMatrix m;
  m.rows = rows;
  m.cols = cols;
  m.values.resize(rows.count * cols.count);
  parallel_for(rows.count, jobs, [&](std::size_t r) {
    const auto va = frames.row(rows.start + r);
    for (std::size_t c = 0; c < cols.count; ++c)
      m.values[r * cols.count + c] = frame_distance(va, frames.row(cols.start + c));
  });
  return m;
}

double video_score(double min_distance, std::size_t run_length, std::size_t first_index,
                   std::size_t second_index, double d_floor) {
  if (second_index <= first_index)
    throw Error(errc::degenerate_gap, "matched frame indices must differ");
  if (run_length == 0) throw Error(errc::invalid_argument, "run length must be >= 1");
  const double d = min_distance == 0.0 ? d_floor : min_distance;
  return -d / (double(run_length) * double(second_index - first_index));
}

namespace {

struct Cell {
  std::size_t r, c;
  std::size_t lo, hi;  // canonical absolute indices, lo < hi
  double d;
};

// Argmin over unmasked cells outside the near band; ties prefer the smaller
// (lo, hi) pair.
std::optional<Cell> find_minimum(const FrameDistanceMatrix& m,
                                 const std::vector<std::uint8_t>& masked,
                                 std::size_t near_band) {
  std::optional<Cell> best;
  for (std::size_t r = 0; r < m.rows.count; ++r) {
    const std::size_t ai = m.rows.start + r;
    for (std::size_t c = 0; c < m.cols.count; ++c) {
      if (masked[r * m.cols.count + c]) continue;
      const std::size_t aj = m.cols.start + c;
      const std::size_t lo = std::min(ai, aj);
      const std::size_t hi = std::max(ai, aj);
      if (hi - lo <= near_band) continue;
      const double d = m.values[r * m.cols.count + c];
      if (!best || d < best->d ||
          (d == best->d && (lo < best->lo || (lo == best->lo && hi < best->hi))))
        best = Cell{r, c, lo, hi, d};
    }
  }
  return best;
}

DuplicationMatch extend_run(const FrameDistanceMatrix& m, const Cell& cell,
                            const RunExtractionParams& params) {
  const double d_min = cell.d;
  const std::size_t gap = cell.hi - cell.lo;

  // Backward and forward extension along the diagonal. Every step must stay
  // within eps of the minimum; total length is capped so the two matched
  // ranges cannot touch.
  std::size_t back = 0;
  while (back + 1 < gap && cell.r > back && cell.c > back) {
    const double d = m.at(cell.r - back - 1, cell.c - back - 1);
    if (std::abs(d - d_min) > params.eps) break;
    ++back;
  }
  std::size_t forward = 0;
  while (back + forward + 1 < gap && cell.r + forward + 1 < m.rows.count &&
         cell.c + forward + 1 < m.cols.count) {
    const double d = m.at(cell.r + forward + 1, cell.c + forward + 1);
    if (std::abs(d - d_min) > params.eps) break;
    ++forward;
  }

  DuplicationMatch match;
  match.first_index = cell.lo;
  match.second_index = cell.hi;
  match.min_distance = d_min;
  match.back_extent = back;
  match.forward_extent = forward;
  match.run_length = back + forward + 1;
  match.confidence = video_score(d_min, match.run_length, cell.lo, cell.hi, params.d_floor);
  return match;
}

void mask_rect(std::vector<std::uint8_t>& masked, const FrameDistanceMatrix& m,
               const IndexRange& row_span, const IndexRange& col_span, std::size_t pad) {
  const std::size_t abs_r0 = row_span.start > pad ? row_span.start - pad : 0;
  const std::size_t abs_r1 = row_span.end() + pad;
  const std::size_t abs_c0 = col_span.start > pad ? col_span.start - pad : 0;
  const std::size_t abs_c1 = col_span.end() + pad;
  const std::size_t r0 = abs_r0 > m.rows.start ? abs_r0 - m.rows.start : 0;
  const std::size_t r1 =
      abs_r1 > m.rows.start ? std::min(m.rows.count, abs_r1 - m.rows.start) : 0;
  const std::size_t c0 = abs_c0 > m.cols.start ? abs_c0 - m.cols.start : 0;
  const std::size_t c1 =
      abs_c1 > m.cols.start ? std::min(m.cols.count, abs_c1 - m.cols.start) : 0;
  for (std::size_t r = r0; r < r1; ++r)
    for (std::size_t c = c0; c < c1; ++c) masked[r * m.cols.count + c] = 1;
}

}  // namespace

std::optional<DuplicationMatch> extract_run(const FrameDistanceMatrix& m,
                                            const RunExtractionParams& params) {
  if (params.eps <= 0.0) throw Error(errc::invalid_argument, "eps must be positive");
  std::vector<std::uint8_t> masked(m.values.size(), 0);
  const auto cell = find_minimum(m, masked, params.near_band);
  if (!cell) return std::nullopt;
  return extend_run(m, *cell, params);
}

std::vector<DuplicationMatch> extract_runs(const FrameDistanceMatrix& m, double t2,
                                           std::size_t max_events,
                                           const RunExtractionParams& params) {
  if (params.eps <= 0.0) throw Error(errc::invalid_argument, "eps must be positive");
  std::vector<DuplicationMatch> matches;
  std::vector<std::uint8_t> masked(m.values.size(), 0);
  while (matches.size() < max_events) {
    const auto cell = find_minimum(m, masked, params.near_band);
    if (!cell || cell->d >= t2) break;
    const DuplicationMatch match = extend_run(m, *cell, params);
    matches.push_back(match);
    // Mask both orientations of the matched band so self-comparisons do not
    // rediscover the mirrored run.
    mask_rect(masked, m, match.first_run(), match.second_run(), match.run_length);
    mask_rect(masked, m, match.second_run(), match.first_run(), match.run_length);
  }
  return matches;
}

}  // namespace fdup
