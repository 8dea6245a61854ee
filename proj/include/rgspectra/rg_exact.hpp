#pragma once

// The nonlinear RG map on a finite volume.
//
//   W(sigma')  = avg_sigma prod_y T_y(sigma, sigma'_y) exp(sum_X J(X) sigma_X)
//   J'(Z)      = avg_sigma' sigma'_Z log W(sigma')
//   dJ'(Z)/dJ(W) at J = 0 = avg_{sigma,sigma'} prod_y T_y sigma_W sigma'_Z
//
// The original window is always region(image window), so every factor for a
// block outside Z averages to exactly 1.

#include <vector>

#include "rgspectra/coeff_space.hpp"
#include "rgspectra/kernel.hpp"
#include "rgspectra/lattice.hpp"
#include "rgspectra/scalar.hpp"
#include "rgspectra/spin_enum.hpp"

namespace rgspectra {

struct FiniteVolume {
  SiteSet image_sites;
  SiteSet original_sites;
};

/// Throws empty_set for an empty window and enumeration_too_large when the
/// original window exceeds the enumeration cap.
FiniteVolume make_volume(const SiteSet& image_sites, const Geometry& geom);

/// Throws support_out_of_volume naming the first set of J not inside `sites`.
void check_support(const CoefficientVector<Real>& J, const SiteSet& sites);

/// sum_X J(X) sigma_X, i.e. -H(sigma).
double boltzmann_exponent(const CoefficientVector<Real>& J, const SpinConfig& config);

/// W(sigma') for one block-spin configuration on vol.image_sites, summed
/// directly from the kernel product.
double frozen_partition(const CoefficientVector<Real>& J, const KernelSpec& spec,
                        const FiniteVolume& vol, const SpinConfig& sprime);

/// W for every block configuration at once; entry k is the configuration whose
/// bit i is set iff sigma'_i = -1. One pass over sigma, grouped by phi(sigma).
std::vector<double> frozen_partition_table(const CoefficientVector<Real>& J, const KernelSpec& spec,
                                           const FiniteVolume& vol);

struct RgMapResult {
  CoefficientVector<Real> couplings;  // J'(Z) for nonempty Z, image tagged
  double free_energy = 0.0;           // the Z = {} Fourier coefficient
};

RgMapResult rg_map_full(const CoefficientVector<Real>& J, const KernelSpec& spec,
                        const FiniteVolume& vol);
CoefficientVector<Real> rg_map(const CoefficientVector<Real>& J, const KernelSpec& spec,
                               const FiniteVolume& vol);

/// Exact Jacobian entry by summing over sigma and sigma' with the kernel
/// product; independent of the closed forms in rg_linear.
Rational jacobian_bruteforce(const KernelSpec& spec, const FiniteVolume& vol, const SiteSet& Z,
                             const SiteSet& W);

inline constexpr double kDefaultFdStep = 1e-5;

/// Centered difference (J'_{+h}(Z) - J'_{-h}(Z)) / 2h with J_{+-h} = +-h delta_W.
double jacobian_fd(const KernelSpec& spec, const FiniteVolume& vol, const SiteSet& Z,
                   const SiteSet& W, double h = kDefaultFdStep);

}  // namespace rgspectra
