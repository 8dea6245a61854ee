// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "rgspectra/coeff_space.hpp"
#include "rgspectra/kernel.hpp"
#include "rgspectra/random_vectors.hpp"
#include "rgspectra/rg_exact.hpp"
#include "rgspectra/rg_linear.hpp"
#include "rgspectra/spectral_lab.hpp"
#include "rgspectra/verify.hpp"

using namespace rgspectra;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

SiteSet line(int k) { return line_window(1, k); }

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// 1 -------------------------------------------------------------------------
Outcome kernel_laws() {
  struct Case {
    KernelKind kind;
    int b, d;
  };
  const std::vector<Case> cases{{KernelKind::decimation, 2, 1}, {KernelKind::decimation, 2, 2},
                                {KernelKind::decimation, 3, 1}, {KernelKind::decimation, 3, 2},
                                {KernelKind::majority, 3, 1},   {KernelKind::majority, 3, 2},
                                {KernelKind::majority, 5, 1}};
  int failures = 0, checks = 0;
  for (const auto& c : cases) {
    VerifyOptions opt;
    opt.transform = c.kind;
    opt.b = c.b;
    opt.d = c.d;
    const Report r = run_suite("kernels", opt);
    for (const auto& check : r.checks()) {
      ++checks;
      if (check.status == CheckStatus::fail) ++failures;
    }
  }
  return {failures == 0, std::to_string(checks) + " exact checks over 7 kernels, " + std::to_string(failures) + " violations"};
}

// 2 -------------------------------------------------------------------------
Outcome fixed_point() {
  double worst = 0.0;
  for (auto kind : {KernelKind::decimation, KernelKind::majority}) {
    const KernelSpec spec(kind, 3, 1);
    const auto out = rg_map(CoefficientVector<Real>(1), spec, make_volume(line(2), spec.geom()));
    for (const auto& [Z, v] : out) worst = std::max(worst, std::abs(v));
  }
  return {worst <= 1e-12, "max |J'(Z)| = " + num(worst)};
}

// 3 -------------------------------------------------------------------------
Outcome field_transparency() {
  const KernelSpec spec(KernelKind::decimation, 3, 1);
  const FiniteVolume vol = make_volume(line(1), spec.geom());
  const SiteSet origin = line(1);
  double worst = 0.0;
  for (double h : {0.1, 0.7, -1.3}) {
    CoefficientVector<Real> J(1);
    J.set(origin, h);
    worst = std::max(worst, std::abs(rg_map(J, spec, vol).get(origin) - h));
  }
  return {worst <= 1e-12, "max |J'({0}) - h| = " + num(worst)};
}

// 4 -------------------------------------------------------------------------
Outcome jacobian_agreement() {
  std::size_t pairs = 0, mismatches = 0;
  double worst_fd = 0.0;
  for (auto [d, k] : {std::pair{1, 2}, std::pair{2, 1}}) {
    for (auto kind : {KernelKind::decimation, KernelKind::majority}) {
      const KernelSpec spec(kind, 3, d);
      const FiniteVolume vol = make_volume(line_window(d, k), spec.geom());
      for (const auto& Z : subsets(vol.image_sites)) {
        for (const auto& W : subsets(vol.original_sites)) {
          const Rational brute = jacobian_bruteforce(spec, vol, Z, W);
          if (jacobian_closed_form(spec, Z, W) != brute) ++mismatches;
          worst_fd = std::max(worst_fd, std::abs(jacobian_fd(spec, vol, Z, W, 1e-5) - brute.get_d()));
          ++pairs;
        }
      }
    }
  }
  return {mismatches == 0 && worst_fd <= 1e-6,
          std::to_string(pairs) + " pairs, " + std::to_string(mismatches) + " exact mismatches, max |FD - exact| = " +
              num(worst_fd)};
}

// 5 -------------------------------------------------------------------------
Outcome chi_table_checks() {
  bool ok = nu(KernelSpec(KernelKind::majority, 3, 1)) == Rational(1, 2) &&
            nu(KernelSpec(KernelKind::majority, 5, 1)) == Rational(3, 8) &&
            nu(KernelSpec(KernelKind::majority, 3, 2)) == Rational(35, 128);
  std::size_t patterns = 0;
  for (auto [b, d] : {std::pair{3, 1}, std::pair{5, 1}, std::pair{3, 2}}) {
    const KernelSpec spec(KernelKind::majority, b, d);
    const ChiTable& table = chi_table(spec);
    const Rational bound = nu(spec);
    for (std::uint64_t p = 1; p < (std::uint64_t{1} << spec.s()); ++p, ++patterns) {
      const Rational v = table.value(p);
      if (__builtin_popcountll(p) % 2 == 0 && sgn(v) != 0) ok = false;
      if (abs(v) > bound) ok = false;
    }
  }
  for (int s : {3, 5, 7, 9, 11, 13}) {
    const KernelSpec spec(KernelKind::majority, s, 1);
    const Rational formula = nu(spec);
    for (const auto& x : block(Site::origin(1), spec.geom())) {
      if (chi(spec, SiteSet{x}, Site::origin(1)) != formula) ok = false;
    }
  }
  return {ok, std::to_string(patterns) + " patterns checked, singletons for s = 3..13"};
}

// 6 -------------------------------------------------------------------------
Outcome eigen_certificates() {
  const KernelSpec dec(KernelKind::decimation, 3, 1);
  const KernelSpec maj(KernelKind::majority, 3, 1);
  double exact = 0.0, grid = 0.0;
  for (const Rational& lambda : {Rational(0), Rational(1, 2), Rational(-1, 2), Rational(1)}) {
    const auto c = decimation_eigenvector(lambda, 8, dec.geom());
    exact = std::max(exact, eigen_residual(c, lambda, default_check_sets(c.truncation)));
  }
  const auto unit = disk_grid(1.0, 4, 32);
  for (const Complex& lambda : unit) {
    const auto c = decimation_eigenvector(lambda, 8, dec.geom());
    grid = std::max(grid, eigen_residual(c, lambda, default_check_sets(c.truncation)));
  }
  const Rational n = nu(maj), sn = s_nu(maj);
  for (const Rational& lambda : {Rational(0), n, sn}) {
    const auto c = majority_eigenvector(lambda, 6, maj);
    exact = std::max(exact, eigen_residual(c, lambda, default_check_sets(c.truncation)));
  }
  const auto big = disk_grid(sn.get_d(), 4, 32);
  for (const Complex& lambda : big) {
    const auto c = majority_eigenvector(lambda, 6, maj);
    grid = std::max(grid, eigen_residual(c, lambda, default_check_sets(c.truncation)));
  }
  return {exact == 0.0 && grid <= 1e-12,
          "exact residual " + num(exact) + ", grid residual " + num(grid) + " over " +
              std::to_string(unit.size()) + " + " + std::to_string(big.size()) + " points"};
}

// 7 -------------------------------------------------------------------------
CoefficientVector<Complex> unit_at(const Site& x, LatticeTag tag) {
  CoefficientVector<Complex> K(x.coords.size() == 0 ? 1 : static_cast<int>(x.coords.size()), tag);
  K.set(SiteSet{x}, Complex(1.0));
  return K;
}

Outcome norm_bounds() {
  const KernelSpec dec(KernelKind::decimation, 3, 1);
  const KernelSpec maj(KernelKind::majority, 3, 1);
  const double sn = s_nu(maj).get_d();
  bool ok = true;
  double worst_dec = 0.0, worst_maj = 0.0, weakest_eq = 2.0;
  for (double r : {0.0, 0.5}) {
    worst_dec = std::max(worst_dec, operator_norm_probe(dec, Direction::forward, r, 200, 42).max_ratio);
    worst_dec = std::max(worst_dec, operator_norm_probe(dec, Direction::adjoint, r, 200, 43).max_ratio);
    worst_maj = std::max(worst_maj, operator_norm_probe(maj, Direction::forward, r, 200, 44).max_ratio);
    weakest_eq = std::min(weakest_eq, operator_norm_ratio(dec, Direction::forward, r, unit_at(Site::axis(1, 3), LatticeTag::original)));
    weakest_eq = std::min(weakest_eq, operator_norm_ratio(dec, Direction::adjoint, r, unit_at(Site::axis(1, 1), LatticeTag::image)));
    CoefficientVector<Complex> field(1, LatticeTag::original);
    for (const auto& x : block(Site::origin(1), maj.geom())) field.set(SiteSet{x}, Complex(1.0));
    weakest_eq = std::min(weakest_eq, operator_norm_ratio(maj, Direction::forward, r, field) / sn);
  }
  ok = worst_dec <= 1 + 1e-12 && worst_maj <= sn + 1e-12 && weakest_eq >= 1 - 1e-12;
  return {ok, "decimation max " + num(worst_dec) + ", majority max " + num(worst_maj) + " (s nu = " + num(sn) +
                  "), equality witnesses reach " + num(weakest_eq)};
}

// 8 -------------------------------------------------------------------------
Outcome witnesses() {
  bool ok = true;
  std::string detail;
  for (auto kind : {KernelKind::decimation, KernelKind::majority}) {
    const KernelSpec spec(kind, 3, 1);
    const auto grid = disk_grid(witness_disk_radius(spec), 4, 16);
    double worst = 1e300;
    for (const auto& S : witness_candidates(spec, 100, 2718)) {
      const auto image = apply_Lstar(S, spec, adjoint_window(S, spec.geom()));
      for (const Complex& lambda : grid) worst = std::min(worst, residual_witness_distance(spec, lambda, S, image, 0.0));
    }
    bool zero_ok = true;
    const CoefficientVector<Complex> zero(1, LatticeTag::image);
    for (const Complex& lambda : grid) zero_ok = zero_ok && residual_witness_distance(spec, lambda, zero, 0.0) == 1.0;
    ok = ok && zero_ok && worst >= witness_bound(spec) - 1e-12;
    detail += to_string(kind) + " min " + num(worst) + " (bound " + num(witness_bound(spec)) + ")" +
              (zero_ok ? "" : " S=0 not 1") + "; ";
  }
  return {ok, detail + "64-point grid, 100 candidates"};
}

// 9 -------------------------------------------------------------------------
Outcome adjoint_pairing() {
  std::size_t mismatches = 0, pairs = 0;
  for (auto kind : {KernelKind::decimation, KernelKind::majority}) {
    const KernelSpec spec(kind, 3, 1);
    VectorSampler rng(31337);
    const auto in_opts = probe_sampler_options(spec, LatticeTag::original);
    const auto out_opts = probe_sampler_options(spec, LatticeTag::image);
    for (int i = 0; i < 200; ++i, ++pairs) {
      const auto K1 = rng.rational_vector(1, LatticeTag::image, out_opts);
      const auto K2 = rng.rational_vector(1, LatticeTag::original, in_opts);
      const SiteSet window = adjoint_window(convert<Complex>(K1), spec.geom());
      if (pairing(K1, apply_L(K2, spec)) != pairing(K2, apply_Lstar(K1, spec, window, OriginPolicy::keep))) ++mismatches;
    }
  }
  return {mismatches == 0, std::to_string(pairs) + " rational pairs, " + std::to_string(mismatches) + " mismatches"};
}

// 10 ------------------------------------------------------------------------
Outcome stirling() {
  const auto rows = stirling_report(std::vector<std::int64_t>{3, 5, 7, 9, 25});
  const double e3 = std::abs(rows[0].ratio - 1.08540);
  const double e9 = std::abs(rows[3].ratio - 1.02811);
  const double e25 = std::abs(rows[4].ratio - 1.01007);
  bool decreasing = true;
  for (std::size_t i = 1; i < rows.size(); ++i) decreasing = decreasing && rows[i].ratio < rows[i - 1].ratio;
  const double worst = std::max({e3, e9, e25});
  return {worst <= 5e-5 && decreasing, "max deviation " + num(worst) + (decreasing ? ", strictly decreasing" : ", NOT decreasing")};
}

// 11 ------------------------------------------------------------------------
Outcome negative_probes() {
  const Geometry g(1, 3);
  std::vector<int> depths;
  for (int n = 1; n <= 10; ++n) depths.push_back(n);

  DivergenceParams p;
  p.geom = g;
  p.lambda = Complex(std::cos(2.0), std::sin(2.0));
  const auto ti = divergence_probe(DivergenceFamily::ti_unimodular, p, depths);
  bool a = true;
  for (std::size_t i = 0; i < depths.size(); ++i) a = a && ti[i] == 2.0 * (depths[i] + 1);

  p.lambda = Complex(0.5, 0.0);
  p.r = 0.1;
  p.base = SiteSet{Site::origin(1), Site::axis(1, 1)};
  const double scaled = divergence_probe(DivergenceFamily::r_positive_scaled_set, p, {7})[0];
  const bool b = scaled > 1e6;

  p.r = 0.0;
  p.lambda = Complex(nu(KernelSpec(KernelKind::majority, g)).get_d(), 0.0);
  const auto adj = divergence_probe(DivergenceFamily::majority_adjoint_nu, p, depths);
  bool c = true;
  for (std::size_t i = 0; i < depths.size(); ++i) c = c && adj[i] == depths[i] + 1.0;

  CoefficientVector<Rational> K(1, LatticeTag::original);
  VectorSampler rng(5);
  SamplerOptions o;
  o.radius = 4;
  for (int i = 0; i < 5; ++i) {
    for (const auto& [X, v] : rng.rational_vector(1, LatticeTag::original, o)) K.set(X, v);
  }
  const bool d = decimation_adjoint_survivors(K, g, box(1, 4), 4) == 0;

  return {a && b && c && d, std::string("(a) ") + (a ? "ok" : "FAIL") + " (b) " + num(scaled) + " (c) " +
                                (c ? "ok" : "FAIL") + " (d) " + (d ? "ok" : "FAIL")};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "kernel laws, exhaustive", 5, kernel_laws},
      {2, "infinite-temperature fixed point", 5, fixed_point},
      {3, "decimation field transparency", 1, field_transparency},
      {4, "Jacobian triple agreement", 60, jacobian_agreement},
      {5, "chi table and nu", 60, chi_table_checks},
      {6, "eigenvector certificates", 30, eigen_certificates},
      {7, "operator-norm bounds", 60, norm_bounds},
      {8, "residual-spectrum witnesses", 60, witnesses},
      {9, "adjoint pairing", 10, adjoint_pairing},
      {10, "Stirling ratio", 5, stirling},
      {11, "negative-result probes", 10, negative_probes},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = out.pass && secs <= c.budget_s;
    if (!pass) ++failed;
    std::printf("%s criterion %2d: %s -- %s [%.2fs of %.0fs]\n", pass ? "PASS" : "FAIL", c.id, c.title,
                out.detail.c_str(), secs, c.budget_s);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
