#include "rgspectra/error.hpp"

namespace rgspectra {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::dimension_mismatch: return "dimension mismatch";
    case Errc::empty_set: return "empty set";
    case Errc::enumeration_too_large: return "enumeration too large";
    case Errc::missing_site: return "missing site";
    case Errc::invalid_spec: return "invalid spec";
    case Errc::invalid_parameter: return "invalid parameter";
    case Errc::tag_mismatch: return "lattice tag mismatch";
    case Errc::support_out_of_volume: return "support out of volume";
    case Errc::degenerate_kernel: return "degenerate kernel";
    case Errc::not_in_block: return "not in block";
    case Errc::window_too_small: return "window too small";
    case Errc::truncation_violation: return "truncation violation";
    case Errc::out_of_disk: return "out of disk";
    case Errc::parse_error: return "parse error";
  }
  return "unknown error";
}

}  // namespace rgspectra
