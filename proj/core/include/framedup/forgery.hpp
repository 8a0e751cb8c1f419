#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "framedup/fine.hpp"
#include "framedup/frame.hpp"

namespace fdup {

/// Copies source_range and re-inserts it at insert_at, optionally degrading
/// the copy with per-sample Gaussian noise. insert_at indexes the original
/// timeline and must not fall strictly inside the source range.
struct ManipulationSpec {
  std::size_t source_start = 0;
  std::size_t source_length = 0;
  std::size_t insert_at = 0;
  double noise_sigma = 0.0;
  std::uint64_t seed = 0;
};

enum class TruthLabel : char { pristine = 'p', selected = 's', duplicated = 'd' };

struct TruthMask {
  std::vector<TruthLabel> labels;  // one per output frame
  IndexRange selected_range;
  IndexRange duplicated_range;

  /// Frames between the end of the earlier range and the start of the later.
  std::size_t gap() const;
};

std::pair<VideoClip, TruthMask> apply_duplication(const VideoClip& clip,
                                                  const ManipulationSpec& spec);

/// Hard-cut concatenation; returns the boundary index of the cut.
std::pair<VideoClip, std::size_t> synthesize_shot_break(const VideoClip& a,
                                                        const VideoClip& b);

/// Synthetic source material for corpora. ar_field evolves a low-resolution
/// Gaussian field with AR(1) dynamics and upsamples it; static_scenes
/// alternates that motion with held (near-frozen) segments; noise emits
/// independent uniform frames.
struct SynthSpec {
  enum class Kind { ar_field, static_scenes, noise };
  Kind kind = Kind::ar_field;
  std::size_t frames = 300;
  std::size_t width = 64;
  std::size_t height = 64;
  std::size_t grid = 16;     // field resolution before upsampling
  double rho = 0.8;          // frame-to-frame field correlation
  double contrast = 0.3;     // field amplitude as a fraction of full scale
  double pixel_noise = 2.0;  // iid per-pixel sigma, gray levels
  std::size_t hold_min = 24;
  std::size_t hold_max = 40;
  std::size_t move_min = 20;
  std::size_t move_max = 40;
  double hold_noise = 1.5;  // per-pixel sigma while a scene is held
  double fps = 30.0;
  std::uint64_t seed = 0;
};

VideoClip synth_clip(const SynthSpec& spec);

struct CorpusParams {
  std::size_t n_manipulated = 8;
  std::size_t n_pristine = 8;
  std::vector<double> durations_s = {0.5, 1.0, 2.0, 5.0, 10.0};
  std::vector<double> sigmas = {0.0};
  std::size_t gap_min = 32;
  std::optional<std::size_t> gap_max;
  double zero_gap_fraction = 0.0;  // leading fraction of manipulated items
};

struct CorpusItem {
  std::string id;
  std::string path;        // relative to the manifest directory
  std::string truth_path;  // empty for pristine items
  bool pristine = false;
  std::size_t frames = 0;
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::uint32_t channels = 1;
  double fps = 30.0;
  std::optional<ManipulationSpec> spec;
};

struct CorpusManifest {
  std::string base_dir;  // not serialized; where the manifest was read/written
  std::vector<CorpusItem> items;
};

/// Builds n_manipulated + n_pristine items from the seed clips (cycled in
/// order), writes Y4M clips plus truth JSON under out_dir and returns the
/// manifest (also written to out_dir/manifest.json). Fully determined by the
/// inputs and seed. Throws insufficient_frames when no requested duration fits
/// a seed clip at the required gap.
CorpusManifest generate_corpus(const std::vector<VideoClip>& seed_clips,
                               const CorpusParams& params, std::uint64_t seed,
                               const std::string& out_dir);

CorpusManifest read_manifest(const std::string& path);
void write_manifest(const CorpusManifest& manifest, const std::string& path);
TruthMask read_truth(const std::string& path);
void write_truth(const TruthMask& truth, const std::string& path);

}  // namespace fdup
