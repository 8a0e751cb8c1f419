#include "framedup/windowing.hpp"

#include "framedup/error.hpp"

namespace fdup {

WindowingPlan plan_windows(std::size_t n_frames, std::size_t length, std::size_t overlap) {
  if (n_frames < 17)
    throw Error(errc::too_few_frames, "windowed search needs at least 17 frames");
  if (length < 2) throw Error(errc::invalid_argument, "window length must be >= 2");
  if (overlap >= length) throw Error(errc::invalid_argument, "overlap must be < length");

  WindowingPlan plan;
  plan.length = length;
  plan.overlap = overlap;
  plan.hop = length - overlap;

  if (n_frames < length) {
    plan.windows.push_back({0, n_frames});
    return plan;
  }
  for (std::size_t start = 0; start + length <= n_frames; start += plan.hop)
    plan.windows.push_back({start, length});
  const std::size_t last_end = plan.windows.back().end();
  if (last_end < n_frames) plan.windows.push_back({n_frames - length, length});
  return plan;
}

}  // namespace fdup
