#include "framedup/frame.hpp"

#include <cmath>

#include "framedup/error.hpp"

namespace fdup {

FrameBuffer FrameBuffer::solid(std::uint32_t w, std::uint32_t h, std::uint32_t c,
                               std::uint8_t value) {
  FrameBuffer f;
  f.width = w;
  f.height = h;
  f.channels = c;
  f.data.assign(std::size_t(w) * h * c, value);
  return f;
}

void FrameBuffer::validate() const {
  if (channels != 1 && channels != 3)
    throw Error(errc::dimension_mismatch, "channels must be 1 or 3");
  if (data.size() != sample_count())
    throw Error(errc::dimension_mismatch, "sample count does not match width*height*channels");
}

void VideoClip::validate() const {
  if (frames.empty()) throw Error(errc::empty_sequence, "clip has no frames");
  if (fps <= 0.0) throw Error(errc::invalid_argument, "fps must be positive");
  frames.front().validate();
  for (std::size_t i = 1; i < frames.size(); ++i) {
    frames[i].validate();
    if (!frames[i].same_shape(frames.front()))
      throw Error(errc::dimension_mismatch, "frames differ in shape within one clip");
  }
}

std::vector<TemporalDiffFrame> temporal_diffs(const VideoClip& clip) {
  if (clip.frame_count() < 2)
    throw Error(errc::too_few_frames, "temporal diffs need at least 2 frames");
  std::vector<TemporalDiffFrame> diffs;
  diffs.reserve(clip.frame_count() - 1);
  const std::size_t pixels = clip.frames.front().pixel_count();
  for (std::size_t t = 0; t + 1 < clip.frame_count(); ++t) {
    const FrameBuffer& a = clip.frames[t];
    const FrameBuffer& b = clip.frames[t + 1];
    TemporalDiffFrame d;
    d.width = a.width;
    d.height = a.height;
    d.data.resize(pixels);
    for (std::size_t p = 0; p < pixels; ++p)
      d.data[p] = static_cast<std::int16_t>(std::llround(b.intensity(p) - a.intensity(p)));
    diffs.push_back(std::move(d));
  }
  return diffs;
}

std::vector<double> boundary_energies(const VideoClip& clip) {
  if (clip.frame_count() < 2)
    throw Error(errc::too_few_frames, "boundary energies need at least 2 frames");
  std::vector<double> energies;
  energies.reserve(clip.frame_count() - 1);
  const std::size_t pixels = clip.frames.front().pixel_count();
  for (std::size_t t = 0; t + 1 < clip.frame_count(); ++t) {
    const FrameBuffer& a = clip.frames[t];
    const FrameBuffer& b = clip.frames[t + 1];
    double sum = 0.0;
    for (std::size_t p = 0; p < pixels; ++p) sum += std::abs(b.intensity(p) - a.intensity(p));
    energies.push_back(pixels ? sum / double(pixels) : 0.0);
  }
  return energies;
}

}  // namespace fdup
