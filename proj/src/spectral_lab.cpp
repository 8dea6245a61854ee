#include "rgspectra/spectral_lab.hpp"

#include <cmath>
#include <numbers>

namespace rgspectra {

std::string to_string(Direction direction) {
  return direction == Direction::forward ? "forward" : "adjoint";
}

std::string to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::eigenvector: return "eigenvector";
    case CertificateKind::norm_bound: return "norm-bound";
    case CertificateKind::residual_witness: return "residual-witness";
    case CertificateKind::divergence: return "divergence";
  }
  return "unknown";
}

bool certificate_passes(CertificateKind kind, double measured, double bound) {
  switch (kind) {
    case CertificateKind::eigenvector:
    case CertificateKind::norm_bound: return measured <= bound;
    case CertificateKind::residual_witness:
    case CertificateKind::divergence: return measured >= bound;
  }
  return false;
}

Certificate make_certificate(CertificateKind kind, const KernelSpec& transform, Complex lambda,
                             double measured, double bound) {
  return Certificate{kind, transform, lambda, std::monostate{}, measured, bound,
                     certificate_passes(kind, measured, bound)};
}

int hierarchy_level(const Site& x, const Geometry& geom) {
  const Site origin = Site::origin(geom.dimension);
  int steps = 0;
  for (Site y = x; y != origin; y = block_index(y, geom)) ++steps;
  return steps;
}

bool Truncation::covers(const SiteSet& Z) const {
  if (Z.empty() || Z.dimension() != spec.d()) return false;
  if (!spec.is_majority()) {
    Coord limit = 1;
    for (int n = 0; n < depth; ++n) limit *= spec.b();
    return radius(Z) * spec.b() <= limit;
  }
  return std::all_of(Z.begin(), Z.end(),
                     [&](const Site& x) { return hierarchy_level(x, spec.geom()) <= depth; });
}

std::vector<SiteSet> default_check_sets(const Truncation& truncation) {
  const int d = truncation.spec.d();
  std::vector<SiteSet> out;
  if (!truncation.spec.is_majority()) {
    out.push_back(SiteSet{Site::origin(d)});
    for (int axis = 0; axis < d; ++axis) {
      Coord position = 1;
      for (int n = 0; n < truncation.depth; ++n) {
        const Site here = Site::axis(d, position, axis);
        out.push_back(SiteSet{here});
        const SiteSet pair{here, Site::axis(d, position * truncation.spec.b(), axis)};
        if (truncation.covers(pair)) out.push_back(pair);
        position *= truncation.spec.b();
      }
    }
    return out;
  }
  SiteSet level{Site::origin(d)};
  for (int k = 0; k < truncation.depth; ++k) level = region(level, truncation.spec.geom());
  for (const auto& x : level) out.push_back(SiteSet{x});
  return out;
}

SamplerOptions probe_sampler_options(const KernelSpec& spec, LatticeTag input) {
  SamplerOptions opts;
  const int b = spec.b();
  if (input == LatticeTag::original) {
    opts.radius = spec.is_majority() ? 2 * b : b * b;
    opts.lattice_stride = spec.is_majority() ? 1 : b;
  } else {
    opts.radius = spec.is_majority() ? 2 : b;
    opts.lattice_stride = 1;
  }
  if (spec.d() > 1) opts.radius = std::max<Coord>(2, opts.radius / 2);
  opts.max_terms = 6;
  opts.max_set_size = 4;
  if (spec.is_majority() && input == LatticeTag::image) {
    // L* fans a set of n blocks out to (number of chi-nonzero patterns)^n sets.
    opts.max_set_size = spec.s() <= 5 ? 2 : 1;
  }
  return opts;
}

SiteSet adjoint_window(const CoefficientVector<Complex>& K, const Geometry& geom) {
  std::vector<Site> all;
  for (const auto& [Y, v] : K) {
    const SiteSet reach = region(Y, geom);
    all.insert(all.end(), reach.begin(), reach.end());
  }
  return SiteSet(std::move(all));
}

double operator_norm_ratio(const KernelSpec& spec, Direction direction, double r,
                           const CoefficientVector<Complex>& K) {
  if (direction == Direction::forward) {
    const double base = norm_r(K, r);
    return base == 0.0 ? 0.0 : norm_r(apply_L(K, spec), r) / base;
  }
  const double base = norm_r_star(K, r);
  if (base == 0.0) return 0.0;
  return norm_r_star(apply_Lstar(K, spec, adjoint_window(K, spec.geom())), r) / base;
}

NormProbe operator_norm_probe(const KernelSpec& spec, Direction direction, double r,
                              std::size_t samples, std::uint64_t seed) {
  if (samples == 0) throw Error(Errc::invalid_parameter, "need at least one sample");
  check_r(r);
  const LatticeTag input = direction == Direction::forward ? LatticeTag::original : LatticeTag::image;
  const SamplerOptions opts = probe_sampler_options(spec, input);
  VectorSampler sampler(seed);
  NormProbe probe{0.0, 0, samples, seed};
  for (std::size_t i = 0; i < samples; ++i) {
    const auto K = sampler.complex_vector(spec.d(), input, opts);
    const double ratio = operator_norm_ratio(spec, direction, r, K);
    if (ratio > probe.max_ratio) {
      probe.max_ratio = ratio;
      probe.argmax = i;
    }
  }
  return probe;
}

CoefficientVector<Complex> witness_target(const KernelSpec& spec) {
  CoefficientVector<Complex> target(spec.d(), LatticeTag::original);
  const Site at = spec.is_majority() ? Site::origin(spec.d()) : Site::axis(spec.d(), 1);
  target.set(SiteSet{at}, Complex(1.0));
  return target;
}

double witness_disk_radius(const KernelSpec& spec) {
  return spec.is_majority() ? nu(spec).get_d() : 1.0;
}

double witness_bound(const KernelSpec& spec) { return spec.is_majority() ? 0.25 : 0.5; }

double residual_witness_distance(const KernelSpec& spec, Complex lambda,
                                 const CoefficientVector<Complex>& S,
                                 const CoefficientVector<Complex>& Lstar_S, double r) {
  const double disk = witness_disk_radius(spec);
  if (std::abs(lambda) > disk * (1.0 + 1e-12)) {
    throw Error(Errc::out_of_disk, "|lambda| exceeds " + std::to_string(disk));
  }
  if (S.tag() != LatticeTag::image) throw Error(Errc::tag_mismatch, "witness candidates are image vectors");
  CoefficientVector<Complex> residual = witness_target(spec);
  residual -= lambda * S.retagged(LatticeTag::original);
  residual += Lstar_S;
  return norm_r_star(residual, r);
}

double residual_witness_distance(const KernelSpec& spec, Complex lambda,
                                 const CoefficientVector<Complex>& S, double r) {
  const auto image = apply_Lstar(S, spec, adjoint_window(S, spec.geom()));
  return residual_witness_distance(spec, lambda, S, image, r);
}

std::vector<CoefficientVector<Complex>> witness_candidates(const KernelSpec& spec, std::size_t count,
                                                           std::uint64_t seed) {
  VectorSampler sampler(seed);
  SamplerOptions opts = probe_sampler_options(spec, LatticeTag::image);
  std::vector<CoefficientVector<Complex>> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (i % 4 == 3) {
      CoefficientVector<Complex> S(spec.d(), LatticeTag::image);
      S.set(SiteSet{Site::origin(spec.d())}, Complex(sampler.symmetric() * 4, sampler.symmetric()));
      Coord position = 1;
      for (int n = 0; n < 4; ++n) {
        S.set(SiteSet{Site::axis(spec.d(), position)}, Complex(sampler.symmetric() * 4, sampler.symmetric()));
        position *= spec.b();
      }
      out.push_back(std::move(S));
    } else {
      out.push_back(sampler.complex_vector(spec.d(), LatticeTag::image, opts));
    }
  }
  return out;
}

std::string to_string(DivergenceFamily family) {
  switch (family) {
    case DivergenceFamily::r_positive_scaled_set: return "r-positive-scaled-set";
    case DivergenceFamily::ti_unimodular: return "ti-unimodular";
    case DivergenceFamily::majority_adjoint_nu: return "majority-adjoint-nu";
  }
  return "unknown";
}

DivergenceFamily parse_divergence_family(const std::string& name) {
  for (auto f : {DivergenceFamily::r_positive_scaled_set, DivergenceFamily::ti_unimodular,
                 DivergenceFamily::majority_adjoint_nu}) {
    if (to_string(f) == name) return f;
  }
  throw Error(Errc::invalid_parameter, "unknown divergence family '" + name + "'");
}

std::vector<double> divergence_probe(DivergenceFamily family, const DivergenceParams& params,
                                     const std::vector<int>& depths) {
  const Geometry& geom = params.geom;
  std::vector<double> out;
  out.reserve(depths.size());
  for (int depth : depths) {
    if (depth < 0) throw Error(Errc::invalid_parameter, "depth must be >= 0");
    switch (family) {
      case DivergenceFamily::r_positive_scaled_set: {
        if (params.base.size() < 2) throw Error(Errc::invalid_parameter, "base set needs |X| > 1");
        if (!(params.r > 0.0)) throw Error(Errc::invalid_parameter, "scaled-set family needs r > 0");
        CoefficientVector<Complex> K(geom.dimension, LatticeTag::original);
        SiteSet X = params.base;
        Complex power(1.0);
        for (int n = 0; n <= depth; ++n) {
          K.set(X, power);
          power *= params.lambda;
          X = scale_set(X, geom);
        }
        out.push_back(norm_r(K, params.r));
        break;
      }
      case DivergenceFamily::ti_unimodular:
        out.push_back(ti_norm0(ti_pair_eigenvector(params.lambda, depth, geom)));
        break;
      case DivergenceFamily::majority_adjoint_nu: {
        CoefficientVector<Complex> K(geom.dimension, LatticeTag::original);
        K.set(SiteSet{Site::origin(geom.dimension)}, params.m);
        Coord position = 1;
        for (int n = 0; n < depth; ++n) {
          K.set(SiteSet{Site::axis(geom.dimension, position)}, params.m);
          position *= geom.blocking_factor;
        }
        out.push_back(norm_r_star(K, params.r));
        break;
      }
    }
  }
  return out;
}

std::size_t decimation_adjoint_survivors(const CoefficientVector<Rational>& K, const Geometry& geom,
                                         const SiteSet& window, std::size_t max_set_size) {
  const auto sets = subsets(window, max_set_size);
  const Coord reach = radius(window);
  std::size_t survivors = 0;
  CoefficientVector<Rational> current = K.retagged(LatticeTag::image);
  Coord scale = 1;
  for (int n = 1; scale <= reach || n == 1; ++n) {
    current = apply_Lstar_decimation(current, geom, OriginPolicy::drop);
    scale *= geom.blocking_factor;
    for (const auto& X : sets) {
      if (scale > radius(X) && !is_zero(current.get(X))) ++survivors;
    }
    current = current.retagged(LatticeTag::image);
  }
  return survivors;
}

StirlingRow stirling_row(std::int64_t s) {
  const Rational q = nu_for_block_size(s);
  const double s_nu = Rational(Rational(s) * q).get_d();
  const double asymptote = std::sqrt(2.0 * static_cast<double>(s) / std::numbers::pi);
  return StirlingRow{s, q, s_nu, asymptote, s_nu / asymptote};
}

std::vector<StirlingRow> stirling_report(const std::vector<std::int64_t>& block_sizes) {
  std::vector<StirlingRow> rows;
  rows.reserve(block_sizes.size());
  for (auto s : block_sizes) rows.push_back(stirling_row(s));
  return rows;
}

std::vector<StirlingRow> stirling_report(const std::vector<int>& b_values, int d) {
  std::vector<std::int64_t> sizes;
  for (int b : b_values) {
    if (b % 2 == 0) throw Error(Errc::invalid_spec, "Stirling rows need odd b");
    sizes.push_back(Geometry(d, b).block_size());
  }
  return stirling_report(sizes);
}

std::vector<Complex> disk_grid(double radius_, int n_radii, int n_angles) {
  std::vector<Complex> out;
  for (int k = 1; k <= n_radii; ++k) {
    const double rho = radius_ * k / n_radii;
    for (int a = 0; a < n_angles; ++a) out.push_back(std::polar(rho, 2.0 * std::numbers::pi * a / n_angles));
  }
  return out;
}

std::vector<Complex> disk_grid_with_axis(double radius_, int n_radii, int n_angles) {
  std::vector<Complex> out = disk_grid(radius_, n_radii, n_angles);
  for (int k = -n_radii; k <= n_radii; ++k) out.emplace_back(radius_ * k / n_radii, 0.0);
  return out;
}

}  // namespace rgspectra
