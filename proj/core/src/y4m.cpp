#include "framedup/y4m.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "framedup/error.hpp"

namespace fdup {
namespace {

std::uint8_t clamp_u8(double v) {
  if (v <= 0.0) return 0;
  if (v >= 255.0) return 255;
  return static_cast<std::uint8_t>(std::lround(v));
}

// Full-range BT.601.
void rgb_to_yuv(std::uint8_t r, std::uint8_t g, std::uint8_t b, std::uint8_t& y,
                std::uint8_t& u, std::uint8_t& v) {
  y = clamp_u8(0.299 * r + 0.587 * g + 0.114 * b);
  u = clamp_u8(128.0 - 0.168736 * r - 0.331264 * g + 0.5 * b);
  v = clamp_u8(128.0 + 0.5 * r - 0.418688 * g - 0.081312 * b);
}

void yuv_to_rgb(std::uint8_t y, std::uint8_t u, std::uint8_t v, std::uint8_t& r,
                std::uint8_t& g, std::uint8_t& b) {
  const double cu = double(u) - 128.0;
  const double cv = double(v) - 128.0;
  r = clamp_u8(y + 1.402 * cv);
  g = clamp_u8(y - 0.344136 * cu - 0.714136 * cv);
  b = clamp_u8(y + 1.772 * cu);
}

bool read_line(std::istream& in, std::string& line) {
  line.clear();
  int c;
  while ((c = in.get()) != EOF) {
    if (c == '\n') return true;
    line.push_back(static_cast<char>(c));
    if (line.size() > 4096) return false;
  }
  return false;
}

}  // namespace

std::pair<std::uint32_t, std::uint32_t> fps_to_rational(double fps) {
  if (fps <= 0.0) throw Error(errc::invalid_argument, "fps must be positive");
  for (std::uint32_t den : {1u, 1001u, 1000u, 30000u, 1000000u}) {
    const double scaled = fps * den;
    if (scaled > 4e9) continue;
    const auto num = static_cast<std::uint32_t>(std::llround(scaled));
    if (num > 0 && std::abs(double(num) / den - fps) < 1e-9) return {num, den};
  }
  return {static_cast<std::uint32_t>(std::llround(fps * 1000000.0)), 1000000u};
}

VideoClip read_y4m(const std::string& path, bool grayscale) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(errc::io_error, "cannot open " + path);

  std::string header;
  if (!read_line(in, header) || header.rfind("YUV4MPEG2", 0) != 0)
    throw Error(errc::malformed_header, "missing YUV4MPEG2 signature in " + path);

  std::uint32_t width = 0, height = 0, fps_num = 0, fps_den = 0;
  std::string chroma = "420jpeg";  // stream default when C is absent
  std::istringstream tokens(header);
  std::string tok;
  tokens >> tok;  // signature
  while (tokens >> tok) {
    if (tok.empty()) continue;
    const char tag = tok[0];
    const std::string value = tok.substr(1);
    switch (tag) {
      case 'W': width = static_cast<std::uint32_t>(std::stoul(value)); break;
      case 'H': height = static_cast<std::uint32_t>(std::stoul(value)); break;
      case 'F': {
        const auto colon = value.find(':');
        if (colon == std::string::npos)
          throw Error(errc::malformed_header, "bad frame rate token F" + value);
        fps_num = static_cast<std::uint32_t>(std::stoul(value.substr(0, colon)));
        fps_den = static_cast<std::uint32_t>(std::stoul(value.substr(colon + 1)));
        break;
      }
      case 'C': chroma = value; break;
      default: break;  // I/A/X tokens are irrelevant here
    }
  }
  if (width == 0 || height == 0)
    throw Error(errc::malformed_header, "missing or zero W/H in " + path);
  if (fps_num == 0 || fps_den == 0)
    throw Error(errc::malformed_header, "missing or zero frame rate in " + path);

  bool subsampled;
  if (chroma.rfind("420", 0) == 0)
    subsampled = true;
  else if (chroma == "444")
    subsampled = false;
  else
    throw Error(errc::unsupported_chroma, "C" + chroma + " in " + path);

  const std::size_t luma_size = std::size_t(width) * height;
  const std::size_t chroma_w = subsampled ? (width + 1) / 2 : width;
  const std::size_t chroma_h = subsampled ? (height + 1) / 2 : height;
  const std::size_t chroma_size = chroma_w * chroma_h;

  VideoClip clip;
  clip.fps = double(fps_num) / double(fps_den);
  clip.source_id = path;

  std::vector<std::uint8_t> y(luma_size), u(chroma_size), v(chroma_size);
  std::string frame_line;
  while (true) {
    const int peek = in.peek();
    if (peek == EOF) break;
    if (!read_line(in, frame_line) || frame_line.rfind("FRAME", 0) != 0)
      throw Error(errc::truncated_frame, "bad FRAME marker in " + path);

    auto read_plane = [&](std::vector<std::uint8_t>& plane) {
      in.read(reinterpret_cast<char*>(plane.data()),
              static_cast<std::streamsize>(plane.size()));
      if (std::size_t(in.gcount()) != plane.size())
        throw Error(errc::truncated_frame, "frame payload truncated in " + path);
    };
    read_plane(y);
    read_plane(u);
    read_plane(v);

    FrameBuffer frame;
    frame.width = width;
    frame.height = height;
    if (grayscale) {
      frame.channels = 1;
      frame.data.assign(y.begin(), y.end());
    } else {
      frame.channels = 3;
      frame.data.resize(luma_size * 3);
      for (std::uint32_t row = 0; row < height; ++row) {
        for (std::uint32_t col = 0; col < width; ++col) {
          const std::size_t p = std::size_t(row) * width + col;
          const std::size_t cp = subsampled
                                     ? std::size_t(row / 2) * chroma_w + col / 2
                                     : p;
          yuv_to_rgb(y[p], u[cp], v[cp], frame.data[p * 3], frame.data[p * 3 + 1],
                     frame.data[p * 3 + 2]);
        }
      }
    }
    clip.frames.push_back(std::move(frame));
  }
  if (clip.frames.empty()) throw Error(errc::empty_sequence, "no frames in " + path);
  return clip;
}

void write_y4m(const VideoClip& clip, const std::string& path, Y4mChroma chroma) {
  clip.validate();
  const std::uint32_t width = clip.width();
  const std::uint32_t height = clip.height();
  const bool subsampled = chroma == Y4mChroma::c420;
  if (subsampled && (width % 2 != 0 || height % 2 != 0))
    throw Error(errc::dimension_mismatch, "C420 output needs even dimensions");

  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(errc::io_error, "cannot write " + path);
  const auto [fps_num, fps_den] = fps_to_rational(clip.fps);
  out << "YUV4MPEG2 W" << width << " H" << height << " F" << fps_num << ":" << fps_den
      << " Ip A1:1 C" << (subsampled ? "420jpeg" : "444") << "\n";

  const std::size_t luma_size = std::size_t(width) * height;
  const std::size_t chroma_w = subsampled ? width / 2 : width;
  const std::size_t chroma_h = subsampled ? height / 2 : height;
  std::vector<std::uint8_t> y(luma_size), u(chroma_w * chroma_h), v(chroma_w * chroma_h);

  for (const FrameBuffer& frame : clip.frames) {
    if (frame.channels == 1) {
      y.assign(frame.data.begin(), frame.data.end());
      std::fill(u.begin(), u.end(), 128);
      std::fill(v.begin(), v.end(), 128);
    } else if (!subsampled) {
      for (std::size_t p = 0; p < luma_size; ++p)
        rgb_to_yuv(frame.data[p * 3], frame.data[p * 3 + 1], frame.data[p * 3 + 2], y[p],
                   u[p], v[p]);
    } else {
      // 4:2:0 chroma is averaged over each 2x2 block.
      std::vector<std::uint8_t> fu(luma_size), fv(luma_size);
      for (std::size_t p = 0; p < luma_size; ++p)
        rgb_to_yuv(frame.data[p * 3], frame.data[p * 3 + 1], frame.data[p * 3 + 2], y[p],
                   fu[p], fv[p]);
      for (std::size_t cy = 0; cy < chroma_h; ++cy) {
        for (std::size_t cx = 0; cx < chroma_w; ++cx) {
          const std::size_t p0 = cy * 2 * width + cx * 2;
          const unsigned su = fu[p0] + fu[p0 + 1] + fu[p0 + width] + fu[p0 + width + 1];
          const unsigned sv = fv[p0] + fv[p0 + 1] + fv[p0 + width] + fv[p0 + width + 1];
          u[cy * chroma_w + cx] = static_cast<std::uint8_t>((su + 2) / 4);
          v[cy * chroma_w + cx] = static_cast<std::uint8_t>((sv + 2) / 4);
        }
      }
    }
    out << "FRAME\n";
    out.write(reinterpret_cast<const char*>(y.data()), static_cast<std::streamsize>(y.size()));
    out.write(reinterpret_cast<const char*>(u.data()), static_cast<std::streamsize>(u.size()));
    out.write(reinterpret_cast<const char*>(v.data()), static_cast<std::streamsize>(v.size()));
  }
  if (!out) throw Error(errc::io_error, "short write to " + path);
}

}  // namespace fdup
