#include "rgspectra/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "rgspectra/coeff_space.hpp"
#include "rgspectra/random_vectors.hpp"
#include "rgspectra/rg_exact.hpp"
#include "rgspectra/rg_linear.hpp"
#include "rgspectra/spectral_lab.hpp"
#include "rgspectra/spin_enum.hpp"

namespace rgspectra {

namespace {

std::string label(const KernelSpec& spec) {
  return to_string(spec.kind()) + "[b=" + std::to_string(spec.b()) + ",d=" + std::to_string(spec.d()) + "]";
}

double as_double(const Rational& q) { return q.get_d(); }

CoefficientVector<Real> random_coupling(VectorSampler& rng, const SiteSet& sites, bool even_only,
                                        int terms) {
  CoefficientVector<Real> J(sites.dimension(), LatticeTag::original);
  const auto n = static_cast<std::int64_t>(sites.size());
  for (int t = 0; t < terms; ++t) {
    std::int64_t size = even_only ? 2 * rng.integer(1, 2) : rng.integer(1, 3);
    size = std::min(size, even_only ? n - n % 2 : n);
    if (size <= 0) continue;
    std::vector<std::int64_t> pool(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
    std::vector<Site> pick;
    for (std::int64_t i = 0; i < size; ++i) {
      const auto j = static_cast<std::size_t>(rng.integer(i, n - 1));
      std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
      pick.push_back(sites[static_cast<std::size_t>(pool[static_cast<std::size_t>(i)])]);
    }
    J.add(SiteSet(std::move(pick)), 0.6 * rng.symmetric());
  }
  return J;
}

// ---------------------------------------------------------------------------

void kernel_laws(Report& report, const KernelSpec& spec) {
  const std::string tag = label(spec);
  const Site origin = Site::origin(spec.d());
  const SiteSet B = block(origin, spec.geom());
  std::size_t bad_values = 0, bad_norm = 0, bad_sym = 0;
  for (const SpinConfig config : enumerate_configs(B)) {
    const SpinConfig flip = config.flipped();
    int total = 0;
    for (int sp : {1, -1}) {
      const int t = t_value(spec, origin, config, sp);
      if (t != 0 && t != 2) ++bad_values;
      if (t != t_value(spec, origin, flip, -sp)) ++bad_sym;
      total += t;
    }
    if (total != 2) ++bad_norm;
  }
  report.at_most(tag + "/values", "kernel takes only the values 0 and 2", bad_values, 0);
  report.at_most(tag + "/normalization", "each configuration sums to 1 over the block spin", bad_norm, 0);
  report.at_most(tag + "/flip-symmetry", "kernel is invariant under flipping both spins", bad_sym, 0);

  std::size_t bad_balance = 0;
  for (int sp : {1, -1}) {
    const Rational avg = average_over<Rational>(
        B, [&](const SpinConfig& c) { return t_value(spec, origin, c, sp); });
    if (avg != 1) ++bad_balance;
  }
  report.at_most(tag + "/balance", "average over original spins is 1 for each block spin", bad_balance, 0);

  // Locality: with a neighbouring block present, the block spin equals the
  // block spin of the configuration restricted to the block itself.
  if (2 * spec.s() <= 20) {
    const SiteSet pair = set_union(B, block(Site::axis(spec.d(), 1), spec.geom()));
    auto order = std::make_shared<const SiteIndex>(pair);
    auto own = std::make_shared<const SiteIndex>(B);
    std::vector<std::size_t> position;
    for (const auto& x : B) position.push_back(order->index(x));
    std::size_t bad_local = 0;
    for (std::uint64_t k = 0; k < (std::uint64_t{1} << pair.size()); ++k) {
      std::uint64_t restricted = 0;
      for (std::size_t i = 0; i < position.size(); ++i) restricted |= (k >> position[i] & 1U) << i;
      if (phi(spec, origin, SpinConfig(order, k)) != phi(spec, origin, SpinConfig(own, restricted))) ++bad_local;
    }
    report.at_most(tag + "/locality", "block spin depends only on spins in its own block", bad_local, 0);
  }

  if (!spec.is_majority()) return;
  const Rational exact = nu(spec);
  const Rational brute = nu_bruteforce(spec);
  report.at_most(tag + "/nu", "binomial formula for nu equals the single-site correlation",
                 std::abs(as_double(exact - brute)) + (exact == brute ? 0.0 : 1.0), 0);
  if (spec.s() <= ChiTable::kFullTableLimit) {
    const ChiTable& table = chi_table(spec);
    std::size_t bad_even = 0, bad_bound = 0, bad_single = 0;
    for (std::uint64_t p = 1; p < (std::uint64_t{1} << spec.s()); ++p) {
      const Rational v = table.value(p);
      if (__builtin_popcountll(p) % 2 == 0 && sgn(v) != 0) ++bad_even;
      if (abs(v) > exact) ++bad_bound;
      if (__builtin_popcountll(p) == 1 && v != exact) ++bad_single;
    }
    report.at_most(tag + "/chi-even", "chi vanishes on even patterns", bad_even, 0);
    report.at_most(tag + "/chi-bound", "|chi| is bounded by nu", bad_bound, 0);
    report.at_most(tag + "/chi-singleton", "chi of a single site equals nu", bad_single, 0);
  }
}

// ---------------------------------------------------------------------------

double majority_uniform_field_oracle(std::int64_t s, double h) {
  double plus = 0.0, minus = 0.0;
  double binom = 1.0;
  for (std::int64_t k = 0; k <= s; ++k) {
    const double w = binom * std::exp(h * static_cast<double>(s - 2 * k));
    (2 * k < s ? plus : minus) += w;
    binom = binom * static_cast<double>(s - k) / static_cast<double>(k + 1);
  }
  return 0.5 * std::log(plus / minus);
}

void rgmap_checks(Report& report, const KernelSpec& spec, const VerifyOptions& opt) {
  const std::string tag = label(spec);
  const FiniteVolume vol = make_volume(line_window(spec.d(), opt.image_sites), spec.geom());
  const int dim = spec.d();

  const auto zero = rg_map(CoefficientVector<Real>(dim), spec, vol);
  double worst_zero = 0.0;
  for (const auto& [Z, v] : zero) worst_zero = std::max(worst_zero, std::abs(v));
  report.at_most(tag + "/fixed-point", "zero coupling is a fixed point of the map", worst_zero, 1e-12);

  VectorSampler rng(opt.seed);
  auto image_order = std::make_shared<const SiteIndex>(vol.image_sites);
  const std::uint64_t configs = std::uint64_t{1} << vol.image_sites.size();
  double worst_fourier = 0.0, worst_route = 0.0, worst_flip = 0.0;
  for (int trial = 0; trial < 4; ++trial) {
    const auto J = random_coupling(rng, vol.original_sites, false, 5);
    const auto table = frozen_partition_table(J, spec, vol);
    const auto full = rg_map_full(J, spec, vol);
    for (std::uint64_t k = 0; k < configs; ++k) {
      double rebuilt = full.free_energy;
      for (const auto& [Z, v] : full.couplings) rebuilt += v * parity_sign(k & image_order->mask(Z));
      worst_fourier = std::max(worst_fourier, std::abs(rebuilt - std::log(table[k])));
      const double direct = frozen_partition(J, spec, vol, SpinConfig(image_order, k));
      worst_route = std::max(worst_route, std::abs(direct - table[k]) / table[k]);
    }
    const auto even = rg_map(random_coupling(rng, vol.original_sites, true, 5), spec, vol);
    for (const auto& [Z, v] : even) {
      if (Z.size() % 2 == 1) worst_flip = std::max(worst_flip, std::abs(v));
    }
  }
  report.at_most(tag + "/fourier-consistency", "couplings and free energy reconstruct log W pointwise",
                 worst_fourier, 1e-12, opt.seed);
  report.at_most(tag + "/partition-routes", "grouped and direct frozen partition sums agree", worst_route,
                 1e-12, opt.seed);
  report.at_most(tag + "/spin-flip", "even couplings map to even couplings", worst_flip, 1e-12, opt.seed);

  const FiniteVolume single = make_volume(line_window(dim, 1), spec.geom());
  const SiteSet origin{Site::origin(dim)};
  if (!spec.is_majority()) {
    double worst = 0.0;
    for (double h : {0.1, 0.7, -1.3}) {
      CoefficientVector<Real> J(dim);
      J.set(origin, h);
      worst = std::max(worst, std::abs(rg_map(J, spec, single).get(origin) - h));
    }
    report.at_most(tag + "/field-transparency", "decimation passes a field on the decimated site unchanged",
                   worst, 1e-12);
  } else {
    const double h = 0.1;
    CoefficientVector<Real> J(dim);
    for (const auto& x : single.original_sites) J.set(SiteSet{x}, h);
    const double got = rg_map(J, spec, single).get(origin);
    report.at_most(tag + "/uniform-field", "uniform block field matches the binomial closed form",
                   std::abs(got - majority_uniform_field_oracle(spec.s(), h)), 1e-12);
  }
}

// ---------------------------------------------------------------------------

void jacobian_checks(Report& report, const KernelSpec& spec, const VerifyOptions& opt) {
  const std::string tag = label(spec);
  const FiniteVolume vol = make_volume(line_window(spec.d(), opt.image_sites), spec.geom());
  if (vol.original_sites.size() > 14) {
    throw Error(Errc::invalid_parameter, "jacobian suite needs at most 14 original sites, got " +
                                             std::to_string(vol.original_sites.size()));
  }
  const auto Zs = subsets(vol.image_sites);
  const auto Ws = subsets(vol.original_sites);
  struct Pair {
    const SiteSet* Z;
    const SiteSet* W;
  };
  std::vector<Pair> pairs;
  for (const auto& Z : Zs)
    for (const auto& W : Ws) pairs.push_back({&Z, &W});
  std::size_t mismatches = 0;
  double worst_fd = 0.0;
  for (const auto& [Z, W] : pairs) {
    const Rational closed = jacobian_closed_form(spec, *Z, *W);
    const Rational brute = jacobian_bruteforce(spec, vol, *Z, *W);
    if (closed != brute) ++mismatches;
    worst_fd = std::max(worst_fd, std::abs(jacobian_fd(spec, vol, *Z, *W) - brute.get_d()));
  }
  report.at_most(tag + "/closed-vs-brute", "closed-form Jacobian equals the exhaustive sum exactly",
                 static_cast<double>(mismatches), 0);
  report.at_most(tag + "/fd-vs-exact", "finite differences of the map match the exact Jacobian", worst_fd,
                 1e-6);
  report.finding(tag + "/pairs", "number of (Z, W) pairs compared", static_cast<double>(pairs.size()));
}

// ---------------------------------------------------------------------------

int majority_depth(const KernelSpec& spec) {
  int depth = 0;
  std::int64_t size = spec.s() * spec.s();
  while (size * spec.s() <= 2187) {
    size *= spec.s();
    ++depth;
  }
  return std::max(depth + 1, 1);
}

void eigen_checks(Report& report, const KernelSpec& spec) {
  const std::string tag = label(spec);
  const Geometry& geom = spec.geom();
  if (!spec.is_majority()) {
    const int depth = 8;
    double worst = 0.0;
    for (const Rational& lambda : {Rational(0), Rational(1, 2), Rational(-1, 2), Rational(1)}) {
      const auto cand = decimation_eigenvector(lambda, depth, geom);
      worst = std::max(worst, eigen_residual(cand, lambda, default_check_sets(cand.truncation)));
    }
    report.at_most(tag + "/eigen-exact", "chain vectors are exact eigenvectors at rational lambda", worst, 0);
    double worst_grid = 0.0;
    for (const Complex& lambda : disk_grid(1.0, 4, 32)) {
      const auto cand = decimation_eigenvector(lambda, depth, geom);
      worst_grid = std::max(worst_grid, eigen_residual(cand, lambda, default_check_sets(cand.truncation)));
    }
    report.at_most(tag + "/eigen-disk", "every lambda in the closed unit disk is an eigenvalue", worst_grid,
                   1e-12);

    const Rational half(1, 2);
    const auto K = ti_pair_eigenvector(half, depth, geom);
    const auto LK = apply_L_decimation_ti(K, geom);
    double worst_ti = 0.0;
    for (int axis = 0; axis < spec.d(); ++axis) {
      Coord sep = 1;
      for (int n = 0; n < depth; ++n, sep *= spec.b()) {
        const SiteSet O{Site::origin(spec.d()), Site::axis(spec.d(), sep, axis)};
        worst_ti = std::max(worst_ti, std::abs(Rational(LK.get(O) - half * K.get(O)).get_d()));
      }
    }
    report.at_most(tag + "/eigen-ti", "translation-invariant pair family satisfies the eigen equation",
                   worst_ti, 0);
    return;
  }
  const int depth = majority_depth(spec);
  const Rational n = nu(spec);
  const Rational sn = s_nu(spec);
  double worst = 0.0;
  for (const Rational& lambda : {Rational(0), n, sn, Rational(sn / 2)}) {
    const auto cand = majority_eigenvector(lambda, depth, spec);
    worst = std::max(worst, eigen_residual(cand, lambda, default_check_sets(cand.truncation)));
  }
  report.at_most(tag + "/eigen-exact", "singleton vectors are exact eigenvectors at rational lambda", worst,
                 0);
  double worst_grid = 0.0;
  for (const Complex& lambda : disk_grid(sn.get_d(), 4, 16)) {
    const auto cand = majority_eigenvector(lambda, depth, spec);
    worst_grid = std::max(worst_grid, eigen_residual(cand, lambda, default_check_sets(cand.truncation)));
  }
  report.at_most(tag + "/eigen-disk", "every lambda with |lambda| <= s nu is an eigenvalue", worst_grid,
                 1e-12);
}

CoefficientVector<Complex> singleton(int d, const Site& x, LatticeTag tag) {
  CoefficientVector<Complex> K(d, tag);
  K.set(SiteSet{x}, Complex(1.0));
  return K;
}

void norm_checks(Report& report, const KernelSpec& spec, const VerifyOptions& opt) {
  const std::string tag = label(spec);
  const double sn = spec.is_majority() ? s_nu(spec).get_d() : 1.0;
  const int d = spec.d();
  for (double r : {0.0, 0.5}) {
    const std::string rtag = tag + "/r=" + (r == 0.0 ? std::string("0") : std::string("0.5"));
    const auto fwd = operator_norm_probe(spec, Direction::forward, r, opt.samples, opt.seed);
    if (!spec.is_majority()) {
      report.at_most(rtag + "/L-norm", "decimation L is a contraction on B_r", fwd.max_ratio, 1 + 1e-12,
                     opt.seed);
      const auto adj = operator_norm_probe(spec, Direction::adjoint, r, opt.samples, opt.seed + 1);
      report.at_most(rtag + "/Lstar-norm", "decimation L* is a contraction on B*_r", adj.max_ratio,
                     1 + 1e-12, opt.seed + 1);
      const double w = operator_norm_ratio(spec, Direction::forward, r,
                                           singleton(d, Site::axis(d, spec.b()), LatticeTag::original));
      report.at_least(rtag + "/L-equality", "the L bound is attained", w, 1 - 1e-12);
      const double ws = operator_norm_ratio(spec, Direction::adjoint, r,
                                            singleton(d, Site::axis(d, 1), LatticeTag::image));
      report.at_least(rtag + "/Lstar-equality", "the L* bound is attained", ws, 1 - 1e-12);
    } else {
      report.at_most(rtag + "/L-norm", "majority L is bounded by s nu", fwd.max_ratio, sn + 1e-12, opt.seed);
      CoefficientVector<Complex> field(d, LatticeTag::original);
      for (const auto& x : block(Site::origin(d), spec.geom())) field.set(SiteSet{x}, Complex(1.0));
      const double w = operator_norm_ratio(spec, Direction::forward, r, field);
      report.at_least(rtag + "/L-equality", "a constant block field attains s nu", w / sn, 1 - 1e-12);
      if (spec.s() <= ChiTable::kFullTableLimit) {
        const auto adj = operator_norm_probe(spec, Direction::adjoint, r, opt.samples, opt.seed + 1);
        report.finding(rtag + "/Lstar-ratio", "largest sampled L* ratio (no bound asserted)", adj.max_ratio,
                       opt.seed + 1);
      }
    }
  }
}

void adjoint_checks(Report& report, const KernelSpec& spec, const VerifyOptions& opt) {
  if (spec.is_majority() && spec.s() > ChiTable::kFullTableLimit) return;
  const std::string tag = label(spec);
  VectorSampler rng(opt.seed + 2);
  const SamplerOptions in_opts = probe_sampler_options(spec, LatticeTag::original);
  const SamplerOptions out_opts = probe_sampler_options(spec, LatticeTag::image);
  const SiteSet origin{Site::origin(spec.d())};
  std::size_t mismatches = 0, drop_mismatches = 0;
  for (std::size_t i = 0; i < opt.samples; ++i) {
    const auto K1 = rng.rational_vector(spec.d(), LatticeTag::image, out_opts);
    const auto K2 = rng.rational_vector(spec.d(), LatticeTag::original, in_opts);
    std::vector<Site> reach;
    for (const auto& [Y, v] : K1) {
      const SiteSet r = region(Y, spec.geom());
      reach.insert(reach.end(), r.begin(), r.end());
    }
    const SiteSet window(std::move(reach));
    const Rational lhs = pairing(K1, apply_L(K2, spec));
    const Rational rhs = pairing(K2, apply_Lstar(K1, spec, window, OriginPolicy::keep));
    if (lhs != rhs) ++mismatches;
    if (!spec.is_majority()) {
      const Rational dropped = pairing(K2, apply_Lstar(K1, spec, window, OriginPolicy::drop));
      if (lhs - dropped != K1.get(origin) * K2.get(origin)) ++drop_mismatches;
    }
  }
  report.at_most(tag + "/adjoint-pairing", "L* is the adjoint of L under the pairing", mismatches, 0,
                 opt.seed + 2);
  if (!spec.is_majority()) {
    report.at_most(tag + "/adjoint-origin",
                   "dropping the origin singleton changes the pairing by K1({0}) K2({0}) only",
                   drop_mismatches, 0, opt.seed + 2);
  }
}

void divergence_checks(Report& report, const KernelSpec& spec) {
  const std::string tag = label(spec);
  const Geometry& geom = spec.geom();
  if (!spec.is_majority()) {
    DivergenceParams p;
    p.geom = geom;
    p.lambda = Complex(std::cos(0.7), std::sin(0.7));
    std::vector<int> depths;
    for (int n = 1; n <= 10; ++n) depths.push_back(n);
    const auto ti = divergence_probe(DivergenceFamily::ti_unimodular, p, depths);
    double worst = 0.0;
    for (std::size_t i = 0; i < depths.size(); ++i) {
      worst = std::max(worst, std::abs(ti[i] - 2.0 * spec.d() * (depths[i] + 1)));
    }
    report.at_most(tag + "/ti-unimodular", "pair family with |lambda| = 1 grows like 2d(N+1)", worst, 1e-9);

    p.lambda = Complex(0.5, 0.0);
    p.r = 0.1;
    p.base = SiteSet{Site::origin(spec.d()), Site::axis(spec.d(), 1)};
    // Leading term e^{0.1 b^N} 2^{-N}; depth 7 is enough for b >= 3.
    int depth = 7;
    while (0.1 * std::pow(spec.b(), depth) - depth * std::log(2.0) <= std::log(1e6)) ++depth;
    const auto scaled = divergence_probe(DivergenceFamily::r_positive_scaled_set, p, {depth});
    report.at_least(tag + "/scaled-set", "scaled-set family at r = 0.1 exceeds 1e6 by depth " + std::to_string(depth),
                    scaled[0], 1e6);

    CoefficientVector<Rational> K(spec.d(), LatticeTag::original);
    VectorSampler rng(11);
    SamplerOptions o;
    o.radius = spec.d() == 1 ? 4 : spec.d() == 2 ? 2 : 1;
    const auto raw = rng.rational_vector(spec.d(), LatticeTag::original, o);
    for (const auto& [X, v] : raw) K.set(X, v);
    const SiteSet window = box(spec.d(), o.radius);
    const auto survivors = decimation_adjoint_survivors(K, geom, window, 3);
    report.at_most(tag + "/adjoint-iteration", "iterated L* clears every window set once b^n exceeds its radius",
                   static_cast<double>(survivors), 0);
    return;
  }
  DivergenceParams p;
  p.geom = geom;
  p.r = 0.0;
  p.lambda = Complex(nu(spec).get_d(), 0.0);
  std::vector<int> depths;
  for (int n = 1; n <= 10; ++n) depths.push_back(n);
  const auto vals = divergence_probe(DivergenceFamily::majority_adjoint_nu, p, depths);
  double worst = 0.0;
  for (std::size_t i = 0; i < depths.size(); ++i) worst = std::max(worst, std::abs(vals[i] - (depths[i] + 1)));
  report.at_most(tag + "/adjoint-nu", "constant adjoint family at lambda = nu has norm N+1", worst, 0);
}

void stirling_checks(Report& report) {
  const auto rows = stirling_report(std::vector<std::int64_t>{3, 5, 7, 9, 25});
  const std::map<std::int64_t, double> expected{{3, 1.08540}, {9, 1.02811}, {25, 1.01007}};
  double worst = 0.0;
  std::size_t increases = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (auto it = expected.find(rows[i].s); it != expected.end()) {
      worst = std::max(worst, std::abs(rows[i].ratio - it->second));
    }
    if (i > 0 && !(rows[i].ratio < rows[i - 1].ratio)) ++increases;
  }
  report.at_most("stirling/values", "s nu / sqrt(2s/pi) matches reference values", worst, 5e-5);
  report.at_most("stirling/decreasing", "the ratio decreases strictly in s", increases, 0);
}

void witness_checks(Report& report, const KernelSpec& spec, const VerifyOptions& opt) {
  if (spec.is_majority() && spec.s() > ChiTable::kFullTableLimit) return;
  const std::string tag = label(spec);
  const auto candidates = witness_candidates(spec, opt.samples, opt.seed);
  const auto grid = disk_grid(witness_disk_radius(spec), 4, 16);
  double worst = 1e300;
  for (const auto& S : candidates) {
    const auto image = apply_Lstar(S, spec, adjoint_window(S, spec.geom()));
    for (const Complex& lambda : grid) {
      worst = std::min(worst, residual_witness_distance(spec, lambda, S, image, 0.0));
    }
  }
  report.at_least(tag + "/witness", "target stays away from the range of lambda - L*", worst,
                  witness_bound(spec) - 1e-12, opt.seed);
  const CoefficientVector<Complex> zero(spec.d(), LatticeTag::image);
  double worst_zero = 0.0;
  for (const Complex& lambda : grid) {
    worst_zero = std::max(worst_zero, std::abs(residual_witness_distance(spec, lambda, zero, 0.0) - 1.0));
  }
  report.at_most(tag + "/witness-zero", "S = 0 gives distance exactly 1", worst_zero, 0);
}

using SuiteFn = std::function<void(Report&, const KernelSpec&, const VerifyOptions&)>;

Report per_spec(const std::string& name, const VerifyOptions& opt, const SuiteFn& fn) {
  Report report(name);
  for (const auto& spec : selected_specs(opt)) fn(report, spec, opt);
  return report;
}

Report suite_kernels(const VerifyOptions& opt) {
  return per_spec("kernels", opt, [](Report& r, const KernelSpec& s, const VerifyOptions&) { kernel_laws(r, s); });
}
Report suite_rgmap(const VerifyOptions& opt) { return per_spec("rgmap", opt, rgmap_checks); }
Report suite_jacobian(const VerifyOptions& opt) { return per_spec("jacobian", opt, jacobian_checks); }
Report suite_spectral(const VerifyOptions& opt) {
  Report report = per_spec("spectral", opt, [](Report& r, const KernelSpec& s, const VerifyOptions& o) {
    eigen_checks(r, s);
    norm_checks(r, s, o);
    adjoint_checks(r, s, o);
    divergence_checks(r, s);
  });
  stirling_checks(report);
  return report;
}
Report suite_witness(const VerifyOptions& opt) {
  VerifyOptions o = opt;
  if (o.samples > 100) o.samples = 100;
  return per_spec("witness", o, witness_checks);
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"kernels", "rgmap", "jacobian", "spectral", "witness", "all"};
  return names;
}

SiteSet line_window(int dimension, int k) {
  if (k < 1) throw Error(Errc::invalid_parameter, "image window needs at least one site");
  std::vector<Site> sites;
  for (int i = 0; i < k; ++i) sites.push_back(Site::axis(dimension, i));
  return SiteSet(std::move(sites));
}

std::vector<KernelSpec> selected_specs(const VerifyOptions& options) {
  const Geometry geom(options.d, options.b);
  if (options.transform) return {KernelSpec(*options.transform, geom)};
  std::vector<KernelSpec> out{KernelSpec(KernelKind::decimation, geom)};
  if (geom.odd()) out.emplace_back(KernelKind::majority, geom);
  return out;
}

Report run_suite(const std::string& suite, const VerifyOptions& options) {
  if (suite == "kernels") return suite_kernels(options);
  if (suite == "rgmap") return suite_rgmap(options);
  if (suite == "jacobian") return suite_jacobian(options);
  if (suite == "spectral") return suite_spectral(options);
  if (suite == "witness") return suite_witness(options);
  if (suite == "all") {
    Report all("all");
    for (const auto& name : suite_names()) {
      if (name != "all") all.append(run_suite(name, options));
    }
    return all;
  }
  throw Error(Errc::invalid_parameter, "unknown suite '" + suite + "'");
}

}  // namespace rgspectra
