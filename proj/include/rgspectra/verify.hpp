#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rgspectra/kernel.hpp"
#include "rgspectra/lattice.hpp"
#include "rgspectra/report.hpp"

namespace rgspectra {

struct VerifyOptions {
  std::optional<KernelKind> transform;  // both kernels when unset (majority only for odd b)
  int b = 3;
  int d = 1;
  int image_sites = 2;
  std::uint64_t seed = 1;
  std::size_t samples = 200;
};

/// kernels, rgmap, jacobian, spectral, witness, all.
const std::vector<std::string>& suite_names();

/// Throws invalid_parameter for an unknown suite name.
Report run_suite(const std::string& suite, const VerifyOptions& options);

/// The first k sites along the first axis, starting at the origin.
SiteSet line_window(int dimension, int k);

/// Kernels the options select, in the order decimation, majority.
std::vector<KernelSpec> selected_specs(const VerifyOptions& options);

}  // namespace rgspectra
