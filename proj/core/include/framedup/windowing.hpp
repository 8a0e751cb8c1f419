#pragma once

#include <cstddef>
#include <vector>

namespace fdup {

struct Window {
  std::size_t start = 0;
  std::size_t length = 0;

  std::size_t end() const { return start + length; }
  bool operator==(const Window&) const = default;
};

/// Overlapping analysis windows over a clip. Consecutive starts differ by
/// hop = length - overlap; a trailing partial window is clamped back so the
/// final window ends exactly at the last frame.
struct WindowingPlan {
  std::size_t length = 64;
  std::size_t overlap = 16;
  std::size_t hop = 48;
  std::vector<Window> windows;

  std::size_t count() const { return windows.size(); }
};

/// Requires n_frames >= 17 and overlap < length. Clips shorter than one full
/// window get a single window spanning the whole clip.
WindowingPlan plan_windows(std::size_t n_frames, std::size_t length = 64,
                           std::size_t overlap = 16);

}  // namespace fdup
