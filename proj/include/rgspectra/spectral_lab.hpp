#pragma once

// Finite certificates for the spectral structure of the linearizations:
// eigenvector families with eigen-equation residuals, operator-norm probes,
// non-approximability witnesses for the adjoints, and divergence probes for
// the would-be eigenvectors that fail to have finite norm.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rgspectra/coeff_space.hpp"
#include "rgspectra/kernel.hpp"
#include "rgspectra/lattice.hpp"
#include "rgspectra/random_vectors.hpp"
#include "rgspectra/rg_linear.hpp"
#include "rgspectra/scalar.hpp"

namespace rgspectra {

enum class Direction { forward, adjoint };

std::string to_string(Direction direction);

// ---------------------------------------------------------------------------
// Certificates
// ---------------------------------------------------------------------------

enum class CertificateKind { eigenvector, norm_bound, residual_witness, divergence };

std::string to_string(CertificateKind kind);

struct Certificate {
  CertificateKind kind;
  KernelSpec transform;
  Complex lambda;
  std::variant<std::monostate, CoefficientVector<Complex>, TIVector<Complex>> payload;
  double measured = 0.0;
  double bound = 0.0;
  bool pass = false;
};

/// eigenvector / norm-bound pass when measured <= bound; residual-witness and
/// divergence pass when measured >= bound.
bool certificate_passes(CertificateKind kind, double measured, double bound);
Certificate make_certificate(CertificateKind kind, const KernelSpec& transform, Complex lambda,
                             double measured, double bound);

// ---------------------------------------------------------------------------
// Eigenvector families
// ---------------------------------------------------------------------------

/// Where a truncated eigenvector equals the infinite one closely enough for
/// (L K)(Z) to be evaluated exactly.
///   decimation depth N: Z with radius(bZ) <= b^N
///   majority depth N:   Z inside R_{N-1}, where R_k is the set of sites whose
///                       (k+1)-fold block index is the origin and R_{-1} = {0}
struct Truncation {
  KernelSpec spec;
  int depth = 0;

  bool covers(const SiteSet& Z) const;
};

template <class S>
struct EigenCandidate {
  CoefficientVector<S> vector;
  Truncation truncation;
};

/// Number of block-index steps needed to reach the origin (0 for the origin).
int hierarchy_level(const Site& x, const Geometry& geom);

/// K({b^n e}) = lambda^n for n = 0..depth with e the unit vector along `axis`;
/// lambda = 0 gives delta at {e}.
template <class S>
EigenCandidate<S> decimation_eigenvector(const S& lambda, int depth, const Geometry& geom, int axis = 0) {
  if (depth < 0) throw Error(Errc::invalid_parameter, "depth must be >= 0");
  if (axis < 0 || axis >= geom.dimension) throw Error(Errc::invalid_parameter, "axis out of range");
  const KernelSpec spec(KernelKind::decimation, geom);
  CoefficientVector<S> K(geom.dimension, LatticeTag::original);
  if (is_zero(lambda)) {
    K.set(SiteSet{Site::axis(geom.dimension, 1, axis)}, from_int<S>(1));
    return {K, Truncation{spec, depth}};
  }
  S power = from_int<S>(1);
  Coord position = 1;
  for (int n = 0; n <= depth; ++n) {
    K.set(SiteSet{Site::axis(geom.dimension, position, axis)}, power);
    power *= lambda;
    position *= geom.blocking_factor;
  }
  return {K, Truncation{spec, depth}};
}

/// Singleton-supported eigenvector of the majority linearization: on the
/// origin block K = 1 except lambda/nu - (s - 1) at the corner
/// ((b-1)/2, ..., (b-1)/2); outside it K({m}) = lambda/(s nu) K({block_index(m)}),
/// out to hierarchy level `depth`.
template <class S>
EigenCandidate<S> majority_eigenvector(const S& lambda, int depth, const KernelSpec& spec) {
  if (!spec.is_majority()) throw Error(Errc::invalid_spec, "majority eigenvector needs a majority spec");
  if (depth < 0) throw Error(Errc::invalid_parameter, "depth must be >= 0");
  const Geometry& geom = spec.geom();
  const S over_nu = lambda / from_rational<S>(nu(spec));
  const S ratio = over_nu / from_int<S>(static_cast<long>(spec.s()));
  const Site corner(std::vector<Coord>(geom.dimension, (geom.blocking_factor - 1) / 2));

  std::map<Site, S> values;
  SiteSet level = block(Site::origin(geom.dimension), geom);
  for (const auto& x : level) {
    values.emplace(x, x == corner ? S(over_nu - from_int<S>(static_cast<long>(spec.s() - 1)))
                                  : from_int<S>(1));
  }
  for (int k = 1; k <= depth; ++k) {
    level = region(level, geom);
    for (const auto& x : level) {
      if (values.count(x)) continue;
      values.emplace(x, S(ratio * values.at(block_index(x, geom))));
    }
  }
  CoefficientVector<S> K(geom.dimension, LatticeTag::original);
  for (const auto& [x, v] : values) K.set(SiteSet{x}, v);
  return {K, Truncation{spec, depth}};
}

/// Translation-invariant even vector with value lambda^n on the orbit of
/// {0, b^n e} for every axis e, n = 0..depth.
template <class S>
TIVector<S> ti_pair_eigenvector(const S& lambda, int depth, const Geometry& geom) {
  TIVector<S> K(geom.dimension, true);
  for (int axis = 0; axis < geom.dimension; ++axis) {
    S power = from_int<S>(1);
    Coord separation = 1;
    for (int n = 0; n <= depth; ++n) {
      K.set(SiteSet{Site::origin(geom.dimension), Site::axis(geom.dimension, separation, axis)}, power);
      power *= lambda;
      separation *= geom.blocking_factor;
    }
  }
  return K;
}

/// Decimation linearization on orbit values: (L K)(O) = K(bO).
template <class S>
TIVector<S> apply_L_decimation_ti(const TIVector<S>& K, const Geometry& geom) {
  TIVector<S> out(K.dimension(), K.even_only());
  const Coord b = geom.blocking_factor;
  for (const auto& [O, v] : K) {
    std::vector<Site> shrunk;
    bool divisible = true;
    for (const auto& x : O) {
      Site y = x;
      for (auto& c : y.coords) {
        if (c % b != 0) divisible = false;
        c /= b;
      }
      shrunk.push_back(std::move(y));
    }
    if (divisible) out.set(SiteSet(std::move(shrunk)), v);
  }
  return out;
}

/// Chain singletons {b^n e} and neighbouring chain pairs along every axis
/// (decimation) or the singletons of R_{depth-1} (majority) that the
/// truncation covers.
std::vector<SiteSet> default_check_sets(const Truncation& truncation);

/// max over check_sets of |(L K)(Z) - lambda K(Z)|. Throws truncation_violation
/// for any set the truncation does not cover.
template <class S>
double eigen_residual(const EigenCandidate<S>& candidate, const S& lambda,
                      const std::vector<SiteSet>& check_sets) {
  for (const auto& Z : check_sets) {
    if (!candidate.truncation.covers(Z)) {
      throw Error(Errc::truncation_violation,
                  to_string(Z) + " is not fully determined at depth " +
                      std::to_string(candidate.truncation.depth));
    }
  }
  const CoefficientVector<S> image = apply_L(candidate.vector, candidate.truncation.spec);
  double worst = 0.0;
  for (const auto& Z : check_sets) {
    const S diff = image.get(Z) - lambda * candidate.vector.get(Z);
    worst = std::max(worst, magnitude(diff));
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Operator norms
// ---------------------------------------------------------------------------

struct NormProbe {
  double max_ratio = 0.0;
  std::size_t argmax = 0;  // sample index attaining max_ratio
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

/// Sampler settings used by the probes for a given transform and input lattice.
SamplerOptions probe_sampler_options(const KernelSpec& spec, LatticeTag input);

/// Original-lattice window holding region(Y) for every support set Y.
SiteSet adjoint_window(const CoefficientVector<Complex>& K, const Geometry& geom);

/// Max over seeded random vectors of ||op K|| / ||K|| (B_r for the forward
/// operator, B*_r for the adjoint).
NormProbe operator_norm_probe(const KernelSpec& spec, Direction direction, double r,
                              std::size_t samples, std::uint64_t seed);

/// ||op K|| / ||K|| for a single vector.
double operator_norm_ratio(const KernelSpec& spec, Direction direction, double r,
                           const CoefficientVector<Complex>& K);

// ---------------------------------------------------------------------------
// Residual spectrum witnesses
// ---------------------------------------------------------------------------

/// The vector that stays away from Range(lambda I - L*): delta at {(1,0,..)}
/// for decimation and delta at {0} for majority.
CoefficientVector<Complex> witness_target(const KernelSpec& spec);

/// Radius of the disk on which the non-approximability bound is claimed
/// (1 for decimation, nu for majority) and the bound itself (1/2 and 1/4).
double witness_disk_radius(const KernelSpec& spec);
double witness_bound(const KernelSpec& spec);

/// ||target - (lambda S - L* S)||*_r with S image tagged; throws out_of_disk
/// when |lambda| exceeds the disk radius.
double residual_witness_distance(const KernelSpec& spec, Complex lambda,
                                 const CoefficientVector<Complex>& S, double r);

/// The same distance with L* S supplied by the caller, for sweeping lambda.
double residual_witness_distance(const KernelSpec& spec, Complex lambda,
                                 const CoefficientVector<Complex>& S,
                                 const CoefficientVector<Complex>& Lstar_S, double r);

/// Seeded random witness candidates S (image tagged); every fourth one is a
/// chain-aligned vector supported on {0} and {(b^n,0,..)}.
std::vector<CoefficientVector<Complex>> witness_candidates(const KernelSpec& spec, std::size_t count,
                                                           std::uint64_t seed);

// ---------------------------------------------------------------------------
// Divergence probes
// ---------------------------------------------------------------------------

enum class DivergenceFamily { r_positive_scaled_set, ti_unimodular, majority_adjoint_nu };

std::string to_string(DivergenceFamily family);
DivergenceFamily parse_divergence_family(const std::string& name);

struct DivergenceParams {
  Geometry geom{1, 3};
  Complex lambda{0.5, 0.0};
  double r = 0.1;
  SiteSet base;      // scaled-set family: the set X with |X| > 1
  Complex m{1.0, 0.0};
};

/// Truncated norms at each depth:
///   r_positive_scaled_set  ||K||_r with K(b^n X) = lambda^n, n <= N
///   ti_unimodular          ti_norm0 of the pair family with |lambda| = 1
///   majority_adjoint_nu    ||K||*_r with K({0}) = K({(b^n,0,..)}) = m, n < N
std::vector<double> divergence_probe(DivergenceFamily family, const DivergenceParams& params,
                                     const std::vector<int>& depths);

/// Iterates the decimation adjoint (origin convention) on K and counts window
/// sets X that are still nonzero after n >= 1 steps with b^n > radius(X).
/// Every nonempty subset of `window` with at most max_set_size sites is checked.
std::size_t decimation_adjoint_survivors(const CoefficientVector<Rational>& K, const Geometry& geom,
                                         const SiteSet& window, std::size_t max_set_size);

// ---------------------------------------------------------------------------
// Stirling asymptote of s nu
// ---------------------------------------------------------------------------

struct StirlingRow {
  std::int64_t s;
  Rational nu;
  double s_nu;
  double asymptote;  // sqrt(2 s / pi)
  double ratio;
};

StirlingRow stirling_row(std::int64_t s);
std::vector<StirlingRow> stirling_report(const std::vector<std::int64_t>& block_sizes);
/// Rows for s = b^d over the given odd blocking factors.
std::vector<StirlingRow> stirling_report(const std::vector<int>& b_values, int d);

// ---------------------------------------------------------------------------
// Disk grids
// ---------------------------------------------------------------------------

/// radii k R / n_radii (k = 1..n_radii) times n_angles equally spaced angles.
std::vector<Complex> disk_grid(double radius, int n_radii, int n_angles);
/// disk_grid plus 2 n_radii + 1 points on the real segment [-R, R].
std::vector<Complex> disk_grid_with_axis(double radius, int n_radii, int n_angles);

}  // namespace rgspectra
