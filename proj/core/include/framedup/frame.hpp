#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fdup {

/// A single decoded frame. 8-bit samples, row-major, interleaved channels.
struct FrameBuffer {
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::uint32_t channels = 1;  // 1 (gray) or 3 (RGB)
  std::vector<std::uint8_t> data;

  std::size_t pixel_count() const { return std::size_t(width) * height; }
  std::size_t sample_count() const { return pixel_count() * channels; }
  bool same_shape(const FrameBuffer& other) const {
    return width == other.width && height == other.height && channels == other.channels;
  }

  /// Channel-mean intensity of pixel p (row-major index), in [0, 255].
  double intensity(std::size_t p) const {
    if (channels == 1) return double(data[p]);
    const std::uint8_t* s = data.data() + p * channels;
    double sum = 0.0;
    for (std::uint32_t c = 0; c < channels; ++c) sum += s[c];
    return sum / channels;
  }

  static FrameBuffer solid(std::uint32_t w, std::uint32_t h, std::uint32_t c, std::uint8_t value);

  void validate() const;

  bool operator==(const FrameBuffer&) const = default;
};

/// An ordered frame collection with frame-rate metadata.
struct VideoClip {
  std::vector<FrameBuffer> frames;
  double fps = 30.0;
  std::string source_id;

  std::size_t frame_count() const { return frames.size(); }
  std::uint32_t width() const { return frames.empty() ? 0 : frames.front().width; }
  std::uint32_t height() const { return frames.empty() ? 0 : frames.front().height; }
  std::uint32_t channels() const { return frames.empty() ? 0 : frames.front().channels; }

  void validate() const;
};

/// Signed per-pixel intensity step between two consecutive frames.
struct TemporalDiffFrame {
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::vector<std::int16_t> data;  // rounded intensity(frame_{t+1}) - intensity(frame_t)
};

/// One diff frame per consecutive frame pair, N-1 total. Throws too_few_frames
/// for clips shorter than 2 frames.
std::vector<TemporalDiffFrame> temporal_diffs(const VideoClip& clip);

/// Mean absolute intensity change across each of the N-1 frame boundaries,
/// in [0, 255]. Empty clip handling matches temporal_diffs.
std::vector<double> boundary_energies(const VideoClip& clip);

}  // namespace fdup
