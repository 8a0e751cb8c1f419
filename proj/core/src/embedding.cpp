#include "framedup/embedding.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>

#include "framedup/error.hpp"

namespace fdup {
namespace {

void put_u32le(std::string& out, std::uint32_t v) {
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
  out.push_back(static_cast<char>((v >> 16) & 0xff));
  out.push_back(static_cast<char>((v >> 24) & 0xff));
}

std::uint32_t get_u32le(const unsigned char* p) {
  return std::uint32_t(p[0]) | std::uint32_t(p[1]) << 8 | std::uint32_t(p[2]) << 16 |
         std::uint32_t(p[3]) << 24;
}

}  // namespace

void write_embeddings(const std::string& path, const EmbeddingSeries& series) {
  if (series.dim == 0) throw Error(errc::invalid_argument, "embedding dim must be >= 1");
  if (series.values.size() % series.dim != 0)
    throw Error(errc::length_mismatch, "value count is not a multiple of dim");

  std::string buffer;
  buffer.reserve(16 + series.values.size() * 4);
  buffer.append(kEmbeddingMagic, 4);
  put_u32le(buffer, kEmbeddingVersion);
  put_u32le(buffer, static_cast<std::uint32_t>(series.count()));
  put_u32le(buffer, static_cast<std::uint32_t>(series.dim));
  for (double v : series.values) {
    const auto bits = std::bit_cast<std::uint32_t>(static_cast<float>(v));
    put_u32le(buffer, bits);
  }

  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(errc::io_error, "cannot write " + path);
  out.write(buffer.data(), static_cast<std::streamsize>(buffer.size()));
  if (!out) throw Error(errc::io_error, "short write to " + path);
}

EmbeddingSeries read_embeddings(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(errc::io_error, "cannot open " + path);
  std::string buffer((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto* bytes = reinterpret_cast<const unsigned char*>(buffer.data());

  if (buffer.size() < 16) throw Error(errc::bad_magic, "file too small: " + path);
  if (std::memcmp(buffer.data(), kEmbeddingMagic, 4) != 0)
    throw Error(errc::bad_magic, "bad magic in " + path);
  const std::uint32_t version = get_u32le(bytes + 4);
  if (version != kEmbeddingVersion)
    throw Error(errc::bad_magic, "unsupported version " + std::to_string(version));
  const std::uint64_t count = get_u32le(bytes + 8);
  const std::uint64_t dim = get_u32le(bytes + 12);
  if (dim == 0) throw Error(errc::length_mismatch, "dim must be >= 1 in " + path);
  const std::uint64_t expected = count * dim * 4;
  if (buffer.size() - 16 != expected)
    throw Error(errc::length_mismatch, "declared count*dim does not match payload in " + path);

  EmbeddingSeries series;
  series.dim = static_cast<std::size_t>(dim);
  series.values.resize(static_cast<std::size_t>(count * dim));
  for (std::size_t i = 0; i < series.values.size(); ++i) {
    const auto bits = get_u32le(bytes + 16 + i * 4);
    series.values[i] = double(std::bit_cast<float>(bits));
  }
  return series;
}

}  // namespace fdup
