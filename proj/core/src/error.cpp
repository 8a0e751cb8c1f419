#include "framedup/error.hpp"

namespace fdup {

const char* errc_name(errc c) noexcept {
  switch (c) {
    case errc::empty_sequence: return "empty_sequence";
    case errc::dimension_mismatch: return "dimension_mismatch";
    case errc::malformed_image: return "malformed_image";
    case errc::malformed_header: return "malformed_header";
    case errc::unsupported_chroma: return "unsupported_chroma";
    case errc::truncated_frame: return "truncated_frame";
    case errc::too_few_frames: return "too_few_frames";
    case errc::bad_magic: return "bad_magic";
    case errc::length_mismatch: return "length_mismatch";
    case errc::count_mismatch: return "count_mismatch";
    case errc::incompatible_kind: return "incompatible_kind";
    case errc::window_out_of_bounds: return "window_out_of_bounds";
    case errc::dim_mismatch: return "dim_mismatch";
    case errc::overlap_violation: return "overlap_violation";
    case errc::range_out_of_bounds: return "range_out_of_bounds";
    case errc::insufficient_frames: return "insufficient_frames";
    case errc::single_class: return "single_class";
    case errc::degenerate_gap: return "degenerate_gap";
    case errc::bad_config: return "bad_config";
    case errc::io_error: return "io_error";
    case errc::invalid_argument: return "invalid_argument";
  }
  return "unknown";
}

Error::Error(errc c, const std::string& message)
    : std::runtime_error(std::string(errc_name(c)) + ": " + message), code_(c) {}

}  // namespace fdup
