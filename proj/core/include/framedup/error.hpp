#pragma once

#include <stdexcept>
#include <string>

namespace fdup {

enum class errc {
  empty_sequence,
  dimension_mismatch,
  malformed_image,
  malformed_header,
  unsupported_chroma,
  truncated_frame,
  too_few_frames,
  bad_magic,
  length_mismatch,
  count_mismatch,
  incompatible_kind,
  window_out_of_bounds,
  dim_mismatch,
  overlap_violation,
  range_out_of_bounds,
  insufficient_frames,
  single_class,
  degenerate_gap,
  bad_config,
  io_error,
  invalid_argument,
};

const char* errc_name(errc c) noexcept;

class Error : public std::runtime_error {
public:
  Error(errc c, const std::string& message);
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

}  // namespace fdup
