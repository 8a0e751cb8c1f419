#pragma once

#include <string>

#include "framedup/frame.hpp"

namespace fdup {

/// Binary PGM (P5) or PPM (P6), 8-bit maxval only.
FrameBuffer read_pnm(const std::string& path);
void write_pnm(const FrameBuffer& frame, const std::string& path);

/// Reads every file under dir_path whose name matches the glob pattern
/// (supports '*' and '?'), in lexicographic filename order. All frames must
/// share one shape. fps is attached as given.
VideoClip read_image_sequence(const std::string& dir_path, const std::string& pattern,
                              double fps = 30.0);

bool glob_match(const std::string& pattern, const std::string& name);

}  // namespace fdup
