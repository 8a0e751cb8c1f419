#include "framedup/localization.hpp"

#include <algorithm>
#include <cmath>

#include "framedup/embedding.hpp"
#include "framedup/error.hpp"

namespace fdup {
namespace {

constexpr std::size_t kContextBoundaries = 16;
constexpr double kMadFloor = 0.05;   // gray levels, keeps z finite on flat clips
constexpr double kDropKnee = 5.0;    // z where mass starts moving none -> drop
constexpr double kDropWidth = 1.0;
constexpr double kBreakKnee = 12.0;  // z where drop mass moves on to break
constexpr double kBreakWidth = 2.0;

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

double median_of(std::vector<double> v) {
  const std::size_t mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + mid, v.end());
  double m = v[mid];
  if (v.size() % 2 == 0) {
    std::nth_element(v.begin(), v.begin() + mid - 1, v.end());
    m = (m + v[mid - 1]) / 2.0;
  }
  return m;
}

}  // namespace

void ScorerSpec::validate() const {
  if (kind == Kind::external_file && path.empty())
    throw Error(errc::bad_config, "external scorer needs a path");
}

BoundaryScores score_boundaries(const VideoClip& clip, const ScorerSpec& scorer) {
  if (clip.frame_count() < 17)
    throw Error(errc::too_few_frames, "boundary scoring needs at least 17 frames");

  BoundaryScores scores;
  const std::size_t n_boundaries = clip.frame_count() - 1;

  if (scorer.kind == ScorerSpec::Kind::external_file) {
    const EmbeddingSeries series = read_embeddings(scorer.path);
    if (series.dim != 3)
      throw Error(errc::count_mismatch, "boundary score file must have dim=3");
    if (series.count() != n_boundaries)
      throw Error(errc::count_mismatch,
                  "boundary score file has " + std::to_string(series.count()) +
                      " rows, clip has " + std::to_string(n_boundaries) + " boundaries");
    scores.triples.resize(n_boundaries);
    for (std::size_t t = 0; t < n_boundaries; ++t) {
      const auto row = series.row(t);
      scores.triples[t] = {row[0], row[1], row[2]};
    }
    return scores;
  }

  const std::vector<double> energy = boundary_energies(clip);
  scores.triples.resize(n_boundaries);
  for (std::size_t t = 0; t < n_boundaries; ++t) {
    const std::size_t half = kContextBoundaries / 2;
    const std::size_t lo = t > half ? t - half : 0;
    const std::size_t hi = std::min(n_boundaries, lo + kContextBoundaries);
    std::vector<double> context(energy.begin() + lo, energy.begin() + hi);
    const double med = median_of(context);
    for (double& v : context) v = std::abs(v - med);
    const double mad = std::max(median_of(std::move(context)), kMadFloor);
    const double z = (energy[t] - med) / mad;

    const double p_break = sigmoid((z - kBreakKnee) / kBreakWidth);
    const double p_drop = (1.0 - p_break) * sigmoid((z - kDropKnee) / kDropWidth);
    scores.triples[t] = {1.0 - p_break - p_drop, p_drop, p_break};
  }
  return scores;
}

InconsistencySeries inconsistency_series(const BoundaryScores& scores, double lambda) {
  InconsistencySeries series;
  series.lambda = lambda;
  series.s.reserve(scores.count());
  for (const auto& [none, drop, brk] : scores.triples)
    series.s.push_back(drop + brk - lambda * none);
  return series;
}

namespace {

// Sum of s over boundary indices [center-wind, center+wind] for both run ends,
// counting only indices that exist.
std::pair<double, std::size_t> windowed_sum(const std::vector<double>& s,
                                            std::ptrdiff_t enter, std::ptrdiff_t leave,
                                            std::ptrdiff_t wind) {
  double sum = 0.0;
  std::size_t terms = 0;
  const auto n = static_cast<std::ptrdiff_t>(s.size());
  for (std::ptrdiff_t k = -wind; k <= wind; ++k) {
    for (const std::ptrdiff_t idx : {enter + k, leave + k}) {
      if (idx >= 0 && idx < n) {
        sum += s[static_cast<std::size_t>(idx)];
        ++terms;
      }
    }
  }
  return {sum, terms};
}

}  // namespace

LocalizationResult localize(const DuplicationMatch& match, const InconsistencySeries& s,
                            std::size_t wind) {
  const IndexRange first = match.first_run();
  const IndexRange second = match.second_run();
  const auto w = static_cast<std::ptrdiff_t>(wind);

  // Boundary t sits between frames t and t+1, so a run [b, e) is entered at
  // boundary b-1 and left at boundary e-1.
  const auto enter1 = static_cast<std::ptrdiff_t>(first.start) - 1;
  const auto leave1 = static_cast<std::ptrdiff_t>(first.end()) - 1;
  const auto enter2 = static_cast<std::ptrdiff_t>(second.start) - 1;
  const auto leave2 = static_cast<std::ptrdiff_t>(second.end()) - 1;

  auto [sum1, terms1] = windowed_sum(s.s, enter1, leave1, w);
  auto [sum2, terms2] = windowed_sum(s.s, enter2, leave2, w);

  double score1 = sum1;
  double score2 = sum2;
  if (terms1 != terms2) {  // edge clamping removed terms; compare means instead
    score1 = terms1 ? sum1 / double(terms1) : 0.0;
    score2 = terms2 ? sum2 / double(terms2) : 0.0;
  }

  LocalizationResult result;
  result.first_score = score1;
  result.second_score = score2;
  if (score1 > score2) {
    result.decided_by = LocalizationDecision::first_gt_second;
    result.duplicated_range = first;
    result.selected_range = second;
  } else {
    result.decided_by = LocalizationDecision::second_ge_first;
    result.duplicated_range = second;
    result.selected_range = first;
  }
  return result;
}

}  // namespace fdup
