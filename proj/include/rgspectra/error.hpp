#pragma once

#include <stdexcept>
#include <string>

namespace rgspectra {

enum class Errc {
  dimension_mismatch,
  empty_set,
  enumeration_too_large,
  missing_site,
  invalid_spec,
  invalid_parameter,
  tag_mismatch,
  support_out_of_volume,
  degenerate_kernel,
  not_in_block,
  window_too_small,
  truncation_violation,
  out_of_disk,
  parse_error,
};

const char* errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it onto a stable exit status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace rgspectra
