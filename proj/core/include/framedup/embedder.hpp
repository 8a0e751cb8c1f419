#pragma once

#include <deque>
#include <string>
#include <vector>

#include "framedup/embedding.hpp"
#include "framedup/frame.hpp"
#include "framedup/windowing.hpp"

namespace fdup {

enum class EmbedderKind {
  downsample_intensity,  // bilinear g x g intensity grid, scaled to [0,1]
  color_histogram,       // per-channel b-bin histogram, normalized per channel
  temporal_diff_stats,   // sequence-only: stats of inter-frame change energy
  external_file,         // features computed elsewhere, loaded from FDEB files
};

const char* embedder_kind_name(EmbedderKind k) noexcept;
EmbedderKind embedder_kind_from_name(const std::string& name);

struct EmbedderSpec {
  EmbedderKind kind = EmbedderKind::downsample_intensity;
  std::size_t grid = 16;  // downsample_intensity
  std::size_t bins = 32;  // color_histogram
  std::string frame_path;   // external_file: per-frame FDEB
  std::string window_path;  // external_file: per-window FDEB

  void validate() const;
  bool frame_capable() const {
    return kind == EmbedderKind::downsample_intensity ||
           kind == EmbedderKind::color_histogram;
  }
  std::size_t frame_dim(std::uint32_t channels) const;
  /// Window vectors are mean+std pooled frame features plus mean+std of the
  /// window's inter-frame change energies.
  std::size_t sequence_dim(std::uint32_t channels) const;
};

std::vector<double> embed_frame(const FrameBuffer& frame, const EmbedderSpec& spec);

/// Embeds frames [start, start+length) of the clip. length >= 2.
std::vector<double> embed_sequence(const VideoClip& clip, std::size_t start,
                                   std::size_t length, const EmbedderSpec& spec);

/// Incremental window embedding: after the first window, moving the start by
/// one frame costs one frame embedding instead of re-reading the whole window.
/// Starts passed to embed() must be non-decreasing.
class RollingSequenceEmbedder {
public:
  RollingSequenceEmbedder(const VideoClip& clip, std::size_t window_length,
                          const EmbedderSpec& spec);

  std::vector<double> embed(std::size_t start);

private:
  void push_frame(std::size_t t);
  void pop_frame();

  const VideoClip& clip_;
  EmbedderSpec spec_;
  std::size_t window_length_;
  std::size_t frame_dim_;
  std::size_t begin_ = 0;  // first frame currently inside the window
  std::size_t frames_in_window_ = 0;
  bool primed_ = false;
  std::deque<std::vector<double>> frame_cache_;
  std::deque<double> energy_cache_;
  std::vector<double> sum_;
  std::vector<double> sum_sq_;
  double energy_sum_ = 0.0;
  double energy_sum_sq_ = 0.0;
};

EmbeddingSeries embed_all_frames(const VideoClip& clip, const EmbedderSpec& spec,
                                 unsigned jobs = 1);

EmbeddingSeries embed_windows(const VideoClip& clip, const WindowingPlan& plan,
                              const EmbedderSpec& spec);

/// Loads an FDEB series and checks the row count against what the pipeline
/// expects (frame count or window count).
EmbeddingSeries import_external(const std::string& path, Granularity granularity,
                                std::size_t expected_count);

}  // namespace fdup
