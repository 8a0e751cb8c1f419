#include "framedup/image_io.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>

#include "framedup/error.hpp"

namespace fdup {
namespace {

int next_non_space(std::istream& in) {
  int c = in.get();
  while (c != EOF) {
    if (c == '#') {  // comment runs to end of line
      while (c != EOF && c != '\n') c = in.get();
    } else if (std::isspace(c)) {
      c = in.get();
    } else {
      break;
    }
  }
  return c;
}

unsigned read_pnm_number(std::istream& in) {
  int c = next_non_space(in);
  if (c == EOF || !std::isdigit(c)) throw Error(errc::malformed_image, "expected integer token");
  unsigned value = 0;
  while (c != EOF && std::isdigit(c)) {
    value = value * 10 + unsigned(c - '0');
    if (value > 1u << 30) throw Error(errc::malformed_image, "integer token out of range");
    c = in.get();
  }
  if (c != EOF) in.unget();
  return value;
}

}  // namespace

FrameBuffer read_pnm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(errc::io_error, "cannot open " + path);
  char m0 = 0, m1 = 0;
  in.get(m0);
  in.get(m1);
  std::uint32_t channels = 0;
  if (m0 == 'P' && m1 == '5')
    channels = 1;
  else if (m0 == 'P' && m1 == '6')
    channels = 3;
  else
    throw Error(errc::malformed_image, "unsupported magic in " + path);

  FrameBuffer frame;
  frame.width = read_pnm_number(in);
  frame.height = read_pnm_number(in);
  const unsigned maxval = read_pnm_number(in);
  frame.channels = channels;
  if (frame.width == 0 || frame.height == 0)
    throw Error(errc::malformed_image, "zero dimension in " + path);
  if (maxval == 0 || maxval > 255)
    throw Error(errc::malformed_image, "only 8-bit maxval supported: " + path);
  int sep = in.get();
  if (sep == EOF || !std::isspace(sep))
    throw Error(errc::malformed_image, "missing separator before raster: " + path);

  frame.data.resize(frame.sample_count());
  in.read(reinterpret_cast<char*>(frame.data.data()),
          static_cast<std::streamsize>(frame.data.size()));
  if (std::size_t(in.gcount()) != frame.data.size())
    throw Error(errc::malformed_image, "raster truncated in " + path);
  return frame;
}

void write_pnm(const FrameBuffer& frame, const std::string& path) {
  frame.validate();
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(errc::io_error, "cannot write " + path);
  out << (frame.channels == 1 ? "P5" : "P6") << "\n"
      << frame.width << " " << frame.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(frame.data.data()),
            static_cast<std::streamsize>(frame.data.size()));
  if (!out) throw Error(errc::io_error, "short write to " + path);
}

bool glob_match(const std::string& pattern, const std::string& name) {
  std::size_t p = 0, n = 0;
  std::size_t star = std::string::npos, mark = 0;
  while (n < name.size()) {
    if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == name[n])) {
      ++p;
      ++n;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = n;
    } else if (star != std::string::npos) {
      p = star + 1;
      n = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

VideoClip read_image_sequence(const std::string& dir_path, const std::string& pattern,
                              double fps) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir_path))
    throw Error(errc::io_error, "not a directory: " + dir_path);

  std::vector<std::string> names;
  for (const auto& entry : fs::directory_iterator(dir_path)) {
    if (!entry.is_regular_file()) continue;
    const std::string name = entry.path().filename().string();
    if (glob_match(pattern, name)) names.push_back(name);
  }
  if (names.empty())
    throw Error(errc::empty_sequence, "no files matching '" + pattern + "' in " + dir_path);
  std::sort(names.begin(), names.end());

  VideoClip clip;
  clip.fps = fps;
  clip.source_id = dir_path;
  clip.frames.reserve(names.size());
  for (const std::string& name : names) {
    FrameBuffer frame = read_pnm((fs::path(dir_path) / name).string());
    if (!clip.frames.empty() && !frame.same_shape(clip.frames.front()))
      throw Error(errc::dimension_mismatch, "frame size changes at " + name);
    clip.frames.push_back(std::move(frame));
  }
  return clip;
}

}  // namespace fdup
