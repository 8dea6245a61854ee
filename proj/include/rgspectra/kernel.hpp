#pragma once

// Deterministic block-spin kernels T_y(sigma, sigma'_y) = 2 * delta(phi_y(sigma), sigma'_y).
//
//   decimation  phi_y(sigma) = sigma_{b y}
//   majority    phi_y(sigma) = sign(sum of sigma over y^o), odd b only

#include <cstdint>
#include <string>
#include <vector>

#include "rgspectra/lattice.hpp"
#include "rgspectra/scalar.hpp"
#include "rgspectra/spin_enum.hpp"

namespace rgspectra {

enum class KernelKind { decimation, majority };

std::string to_string(KernelKind kind);
KernelKind parse_kernel_kind(const std::string& name);

class KernelSpec {
 public:
  /// Throws invalid_spec for majority with even b.
  KernelSpec(KernelKind kind, Geometry geom);
  KernelSpec(KernelKind kind, int b, int d) : KernelSpec(kind, Geometry(d, b)) {}

  KernelKind kind() const { return kind_; }
  const Geometry& geom() const { return geom_; }
  int b() const { return geom_.blocking_factor; }
  int d() const { return geom_.dimension; }
  std::int64_t s() const { return geom_.block_size(); }
  bool is_majority() const { return kind_ == KernelKind::majority; }

  friend bool operator==(const KernelSpec&, const KernelSpec&) = default;

 private:
  KernelKind kind_;
  Geometry geom_;
};

int phi(const KernelSpec& spec, const Site& y, const SpinConfig& config);
/// 2 when phi_y(config) == sprime, else 0.
int t_value(const KernelSpec& spec, const Site& y, const SpinConfig& config, int sprime);

/// C(s-1, (s-1)/2) / 2^(s-1), from exact integer binomials.
Rational nu(const KernelSpec& spec);
/// The same constant as the correlation of a single block site with the block
/// spin, by enumerating all 2^s block configurations.
Rational nu_bruteforce(const KernelSpec& spec);
/// s * nu as a rational.
Rational s_nu(const KernelSpec& spec);
/// nu for an arbitrary odd block size s (no geometry needed).
Rational nu_for_block_size(std::int64_t s);

/// Precompiled phi for a fixed site order and image window; the hot path for
/// exhaustive sums. Block i of the window corresponds to image_sites[i].
class BlockKernel {
 public:
  BlockKernel(const KernelSpec& spec, const SiteIndex& order, const SiteSet& image_sites);

  std::size_t blocks() const { return masks_.size(); }
  int phi(std::size_t i, std::uint64_t negatives) const {
    if (majority_) {
      return 2 * __builtin_popcountll(negatives & masks_[i]) < block_size_ ? 1 : -1;
    }
    return (negatives & masks_[i]) ? -1 : 1;
  }
  /// Bit i set iff phi of block i is -1.
  std::uint64_t image_negatives(std::uint64_t negatives) const {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < masks_.size(); ++i)
      if (phi(i, negatives) < 0) out |= std::uint64_t{1} << i;
    return out;
  }

 private:
  bool majority_;
  int block_size_;
  std::vector<std::uint64_t> masks_;  // whole block (majority) or the site b*y (decimation)
};

}  // namespace rgspectra
