#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fdup {

enum class Granularity { per_frame, per_window };

/// Fixed-dimension feature vectors, one row per frame or per window.
/// Values are held as doubles in memory and stored as 32-bit floats on disk.
struct EmbeddingSeries {
  std::size_t dim = 0;
  Granularity granularity = Granularity::per_frame;
  std::optional<std::pair<std::size_t, std::size_t>> window_spec;  // (length, hop)
  std::vector<double> values;  // count * dim, row-major

  std::size_t count() const { return dim == 0 ? 0 : values.size() / dim; }
  std::span<const double> row(std::size_t i) const {
    return {values.data() + i * dim, dim};
  }
};

// Embedding container file: magic "FDEB", then little-endian u32 version=1,
// u32 count, u32 dim, followed by count*dim little-endian f32 values row-major.
inline constexpr char kEmbeddingMagic[4] = {'F', 'D', 'E', 'B'};
inline constexpr std::uint32_t kEmbeddingVersion = 1;

void write_embeddings(const std::string& path, const EmbeddingSeries& series);

/// Validates magic, version and payload length. Granularity is not stored;
/// the result is tagged per_frame and callers retag as needed.
EmbeddingSeries read_embeddings(const std::string& path);

}  // namespace fdup
