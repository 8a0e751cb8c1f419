#include "framedup/embedder.hpp"

#include <algorithm>
#include <cmath>

#include "framedup/error.hpp"
#include "framedup/parallel.hpp"

namespace fdup {
namespace {

// Snaps variance that is pure accumulation residue to zero so that rolling
// and recomputed paths agree exactly on static content.
double finalize_std(double sum, double sum_sq, double n) {
  const double mean = sum / n;
  double var = sum_sq / n - mean * mean;
  if (var < 1e-14 * (sum_sq / n + 1.0)) var = 0.0;
  return std::sqrt(var);
}

std::vector<double> downsample_grid(const FrameBuffer& frame, std::size_t grid) {
  std::vector<double> out(grid * grid);
  const double sx = double(frame.width) / double(grid);
  const double sy = double(frame.height) / double(grid);
  for (std::size_t gy = 0; gy < grid; ++gy) {
    double fy = (double(gy) + 0.5) * sy - 0.5;
    fy = std::clamp(fy, 0.0, double(frame.height - 1));
    const auto y0 = static_cast<std::size_t>(fy);
    const std::size_t y1 = std::min<std::size_t>(y0 + 1, frame.height - 1);
    const double wy = fy - double(y0);
    for (std::size_t gx = 0; gx < grid; ++gx) {
      double fx = (double(gx) + 0.5) * sx - 0.5;
      fx = std::clamp(fx, 0.0, double(frame.width - 1));
      const auto x0 = static_cast<std::size_t>(fx);
      const std::size_t x1 = std::min<std::size_t>(x0 + 1, frame.width - 1);
      const double wx = fx - double(x0);
      const double v00 = frame.intensity(y0 * frame.width + x0);
      const double v01 = frame.intensity(y0 * frame.width + x1);
      const double v10 = frame.intensity(y1 * frame.width + x0);
      const double v11 = frame.intensity(y1 * frame.width + x1);
      const double top = v00 + (v01 - v00) * wx;
      const double bottom = v10 + (v11 - v10) * wx;
      out[gy * grid + gx] = (top + (bottom - top) * wy) / 255.0;
    }
  }
  return out;
}

std::vector<double> color_histogram(const FrameBuffer& frame, std::size_t bins) {
  std::vector<double> out(bins * frame.channels, 0.0);
  const std::size_t pixels = frame.pixel_count();
  for (std::size_t p = 0; p < pixels; ++p) {
    for (std::uint32_t c = 0; c < frame.channels; ++c) {
      const std::size_t bin = std::size_t(frame.data[p * frame.channels + c]) * bins / 256;
      out[c * bins + bin] += 1.0;
    }
  }
  if (pixels > 0)
    for (double& v : out) v /= double(pixels);
  return out;
}

double boundary_energy(const FrameBuffer& a, const FrameBuffer& b) {
  const std::size_t pixels = a.pixel_count();
  double sum = 0.0;
  for (std::size_t p = 0; p < pixels; ++p) sum += std::abs(b.intensity(p) - a.intensity(p));
  return pixels ? sum / (double(pixels) * 255.0) : 0.0;
}

std::vector<double> assemble_window_vector(const std::vector<double>& sum,
                                           const std::vector<double>& sum_sq,
                                           std::size_t n_frames, double energy_sum,
                                           double energy_sum_sq, std::size_t n_energies) {
  const std::size_t f = sum.size();
  std::vector<double> out(2 * f + 2);
  const double n = double(n_frames);
  for (std::size_t i = 0; i < f; ++i) {
    out[i] = sum[i] / n;
    out[f + i] = finalize_std(sum[i], sum_sq[i], n);
  }
  const double ne = double(n_energies);
  out[2 * f] = n_energies ? energy_sum / ne : 0.0;
  out[2 * f + 1] = n_energies ? finalize_std(energy_sum, energy_sum_sq, ne) : 0.0;
  return out;
}

}  // namespace

const char* embedder_kind_name(EmbedderKind k) noexcept {
  switch (k) {
    case EmbedderKind::downsample_intensity: return "downsample-intensity";
    case EmbedderKind::color_histogram: return "color-histogram";
    case EmbedderKind::temporal_diff_stats: return "temporal-diff-stats";
    case EmbedderKind::external_file: return "external-file";
  }
  return "unknown";
}

EmbedderKind embedder_kind_from_name(const std::string& name) {
  if (name == "downsample-intensity") return EmbedderKind::downsample_intensity;
  if (name == "color-histogram") return EmbedderKind::color_histogram;
  if (name == "temporal-diff-stats") return EmbedderKind::temporal_diff_stats;
  if (name == "external-file") return EmbedderKind::external_file;
  throw Error(errc::bad_config, "unknown embedder kind '" + name + "'");
}

void EmbedderSpec::validate() const {
  switch (kind) {
    case EmbedderKind::downsample_intensity:
      if (grid < 1 || grid > 512)
        throw Error(errc::bad_config, "downsample grid must be in [1, 512]");
      break;
    case EmbedderKind::color_histogram:
      if (bins < 2 || bins > 256)
        throw Error(errc::bad_config, "histogram bins must be in [2, 256]");
      break;
    case EmbedderKind::temporal_diff_stats:
      break;
    case EmbedderKind::external_file:
      if (frame_path.empty() && window_path.empty())
        throw Error(errc::bad_config, "external embedder needs frame_path or window_path");
      break;
  }
}

std::size_t EmbedderSpec::frame_dim(std::uint32_t channels) const {
  switch (kind) {
    case EmbedderKind::downsample_intensity: return grid * grid;
    case EmbedderKind::color_histogram: return bins * channels;
    default:
      throw Error(errc::incompatible_kind,
                  std::string(embedder_kind_name(kind)) + " cannot embed single frames");
  }
}

std::size_t EmbedderSpec::sequence_dim(std::uint32_t channels) const {
  if (kind == EmbedderKind::temporal_diff_stats) return 2;
  return 2 * frame_dim(channels) + 2;
}

std::vector<double> embed_frame(const FrameBuffer& frame, const EmbedderSpec& spec) {
  if (!spec.frame_capable())
    throw Error(errc::incompatible_kind,
                std::string(embedder_kind_name(spec.kind)) + " cannot embed single frames");
  frame.validate();
  if (spec.kind == EmbedderKind::downsample_intensity)
    return downsample_grid(frame, spec.grid);
  return color_histogram(frame, spec.bins);
}

std::vector<double> embed_sequence(const VideoClip& clip, std::size_t start,
                                   std::size_t length, const EmbedderSpec& spec) {
  if (length < 2) throw Error(errc::window_out_of_bounds, "window length must be >= 2");
  if (start + length > clip.frame_count())
    throw Error(errc::window_out_of_bounds, "window exceeds clip length");

  if (spec.kind == EmbedderKind::temporal_diff_stats) {
    double es = 0.0, es2 = 0.0;
    for (std::size_t t = start; t + 1 < start + length; ++t) {
      const double e = boundary_energy(clip.frames[t], clip.frames[t + 1]);
      es += e;
      es2 += e * e;
    }
    const double n = double(length - 1);
    return {es / n, finalize_std(es, es2, n)};
  }

  const std::size_t f = spec.frame_dim(clip.channels());
  std::vector<double> sum(f, 0.0), sum_sq(f, 0.0);
  for (std::size_t t = start; t < start + length; ++t) {
    const std::vector<double> e = embed_frame(clip.frames[t], spec);
    for (std::size_t i = 0; i < f; ++i) {
      sum[i] += e[i];
      sum_sq[i] += e[i] * e[i];
    }
  }
  double es = 0.0, es2 = 0.0;
  for (std::size_t t = start; t + 1 < start + length; ++t) {
    const double e = boundary_energy(clip.frames[t], clip.frames[t + 1]);
    es += e;
    es2 += e * e;
  }
  return assemble_window_vector(sum, sum_sq, length, es, es2, length - 1);
}

RollingSequenceEmbedder::RollingSequenceEmbedder(const VideoClip& clip,
                                                 std::size_t window_length,
                                                 const EmbedderSpec& spec)
    : clip_(clip), spec_(spec), window_length_(window_length) {
  if (window_length_ < 2)
    throw Error(errc::window_out_of_bounds, "window length must be >= 2");
  if (spec_.kind == EmbedderKind::external_file)
    throw Error(errc::incompatible_kind, "external features are imported, not computed");
  frame_dim_ = spec_.kind == EmbedderKind::temporal_diff_stats
                   ? 0
                   : spec_.frame_dim(clip.channels());
  sum_.assign(frame_dim_, 0.0);
  sum_sq_.assign(frame_dim_, 0.0);
}

void RollingSequenceEmbedder::push_frame(std::size_t t) {
  if (frame_dim_ > 0) {
    std::vector<double> e = embed_frame(clip_.frames[t], spec_);
    for (std::size_t i = 0; i < frame_dim_; ++i) {
      sum_[i] += e[i];
      sum_sq_[i] += e[i] * e[i];
    }
    frame_cache_.push_back(std::move(e));
  }
  if (frames_in_window_ > 0) {  // boundary t-1|t lies inside the window
    const double e = boundary_energy(clip_.frames[t - 1], clip_.frames[t]);
    energy_cache_.push_back(e);
    energy_sum_ += e;
    energy_sum_sq_ += e * e;
  }
  ++frames_in_window_;
}

void RollingSequenceEmbedder::pop_frame() {
  if (frame_dim_ > 0) {
    const std::vector<double>& e = frame_cache_.front();
    for (std::size_t i = 0; i < frame_dim_; ++i) {
      sum_[i] -= e[i];
      sum_sq_[i] -= e[i] * e[i];
    }
    frame_cache_.pop_front();
  }
  const double e = energy_cache_.front();
  energy_sum_ -= e;
  energy_sum_sq_ -= e * e;
  energy_cache_.pop_front();
  --frames_in_window_;
  ++begin_;
}

std::vector<double> RollingSequenceEmbedder::embed(std::size_t start) {
  if (start + window_length_ > clip_.frame_count())
    throw Error(errc::window_out_of_bounds, "window exceeds clip length");
  if (primed_ && start < begin_)
    throw Error(errc::invalid_argument, "rolling starts must be non-decreasing");

  if (!primed_) {
    begin_ = start;
    for (std::size_t t = start; t < start + window_length_; ++t) push_frame(t);
    primed_ = true;
  } else {
    while (begin_ < start) {
      push_frame(begin_ + window_length_);
      pop_frame();
    }
  }

  if (frame_dim_ == 0) {
    const double n = double(window_length_ - 1);
    return {energy_sum_ / n, finalize_std(energy_sum_, energy_sum_sq_, n)};
  }
  return assemble_window_vector(sum_, sum_sq_, window_length_, energy_sum_,
                                energy_sum_sq_, window_length_ - 1);
}

EmbeddingSeries embed_all_frames(const VideoClip& clip, const EmbedderSpec& spec,
                                 unsigned jobs) {
  clip.validate();
  EmbeddingSeries series;
  series.granularity = Granularity::per_frame;
  series.dim = spec.frame_dim(clip.channels());
  series.values.resize(series.dim * clip.frame_count());
  parallel_for(clip.frame_count(), jobs, [&](std::size_t t) {
    const std::vector<double> e = embed_frame(clip.frames[t], spec);
    std::copy(e.begin(), e.end(), series.values.begin() + t * series.dim);
  });
  return series;
}

EmbeddingSeries embed_windows(const VideoClip& clip, const WindowingPlan& plan,
                              const EmbedderSpec& spec) {
  clip.validate();
  EmbeddingSeries series;
  series.granularity = Granularity::per_window;
  series.window_spec = {plan.length, plan.hop};
  series.dim = spec.sequence_dim(clip.channels());
  series.values.reserve(series.dim * plan.count());

  if (plan.count() == 1) {
    const Window w = plan.windows.front();
    const std::vector<double> e = embed_sequence(clip, w.start, w.length, spec);
    series.values.insert(series.values.end(), e.begin(), e.end());
    return series;
  }
  RollingSequenceEmbedder roller(clip, plan.length, spec);
  for (const Window& w : plan.windows) {
    const std::vector<double> e = roller.embed(w.start);
    series.values.insert(series.values.end(), e.begin(), e.end());
  }
  return series;
}

EmbeddingSeries import_external(const std::string& path, Granularity granularity,
                                std::size_t expected_count) {
  EmbeddingSeries series = read_embeddings(path);
  if (series.count() != expected_count)
    throw Error(errc::count_mismatch,
                path + " has " + std::to_string(series.count()) + " rows, expected " +
                    std::to_string(expected_count));
  series.granularity = granularity;
  return series;
}

}  // namespace fdup
