#pragma once

#include <cstdint>
#include <string>

#include "framedup/frame.hpp"

namespace fdup {

enum class Y4mChroma { c420, c444 };

/// Reads a YUV4MPEG2 stream with C420* or C444 chroma. With grayscale=true the
/// luma plane is returned as 1-channel frames; otherwise frames are converted
/// to full-range BT.601 RGB.
VideoClip read_y4m(const std::string& path, bool grayscale = false);

/// Writes a clip as YUV4MPEG2. Gray clips map to Y with flat chroma, which
/// round-trips exactly through read_y4m(path, true) when chroma is C444.
/// RGB clips are converted via full-range BT.601. C420 requires even sizes.
void write_y4m(const VideoClip& clip, const std::string& path,
               Y4mChroma chroma = Y4mChroma::c444);

/// Smallest-denominator rational close to fps (|num/den - fps| < 1e-9).
std::pair<std::uint32_t, std::uint32_t> fps_to_rational(double fps);

}  // namespace fdup
