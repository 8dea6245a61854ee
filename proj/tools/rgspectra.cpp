// rgspectra: command-line front end for the block-spin RG spectral toolkit.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rgspectra/coeff_space.hpp"
#include "rgspectra/io.hpp"
#include "rgspectra/kernel.hpp"
#include "rgspectra/parallel.hpp"
#include "rgspectra/report.hpp"
#include "rgspectra/rg_exact.hpp"
#include "rgspectra/rg_linear.hpp"
#include "rgspectra/spectral_lab.hpp"
#include "rgspectra/verify.hpp"

using namespace rgspectra;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;

int exit_code(Errc code) {
  switch (code) {
    case Errc::invalid_spec:
    case Errc::invalid_parameter:
    case Errc::out_of_disk:
    case Errc::enumeration_too_large:
    case Errc::window_too_small:
    case Errc::truncation_violation:
      return kExitUsage;
    default:
      return kExitData;
  }
}

struct Common {
  std::string out;
  std::string transform = "decimation";
  int b = 3;
  int d = 1;
};

void add_geometry(CLI::App* cmd, Common& c, bool with_transform = true) {
  if (with_transform) {
    cmd->add_option("--transform", c.transform, "decimation or majority")
        ->check(CLI::IsMember({"decimation", "majority"}));
  }
  cmd->add_option("--b", c.b, "blocking factor")->check(CLI::PositiveNumber);
  cmd->add_option("--d", c.d, "dimension")->check(CLI::PositiveNumber);
  cmd->add_option("--out", c.out, "write here instead of stdout");
}

KernelSpec spec_of(const Common& c) { return KernelSpec(parse_kernel_kind(c.transform), c.b, c.d); }

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(Errc::parse_error, "cannot write " + path);
  file << text;
}

std::string json_text(const Json& j) { return j.dump(2) + "\n"; }

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

/// A rational literal, "nu" or "snu" (for the given spec), optionally with an
/// imaginary part.
struct Lambda {
  std::optional<Rational> exact;
  Complex value;
};

Lambda parse_lambda(const std::string& text, double imag, const KernelSpec& spec) {
  Lambda out;
  Rational q;
  if (text == "nu" || text == "snu") {
    if (!spec.is_majority()) throw Error(Errc::invalid_parameter, "nu is defined for majority only");
    q = text == "nu" ? nu(spec) : s_nu(spec);
  } else {
    q = parse_rational(text);
  }
  out.value = Complex(q.get_d(), imag);
  if (imag == 0.0) out.exact = q;
  return out;
}

Json certificate_json(const Certificate& c) {
  return Json{{"kind", to_string(c.kind)},
              {"transform", to_json(c.transform)},
              {"lambda", to_json(c.lambda)},
              {"measured", c.measured},
              {"bound", c.bound},
              {"verdict", c.pass ? "pass" : "fail"}};
}

// ---------------------------------------------------------------------------

int cmd_verify(const std::string& suite, const Common& c, const std::optional<std::string>& transform,
               int image_sites, std::uint64_t seed, std::size_t samples) {
  VerifyOptions opt;
  if (transform) opt.transform = parse_kernel_kind(*transform);
  opt.b = c.b;
  opt.d = c.d;
  opt.image_sites = image_sites;
  opt.seed = seed;
  opt.samples = samples;
  const Report report = run_suite(suite, opt);
  emit(json_text(to_json(report)), c.out);
  return report.pass() ? kExitPass : kExitFail;
}

int cmd_chi(const Common& c, const std::string& pattern) {
  const KernelSpec spec(KernelKind::majority, c.b, c.d);
  const Site origin = Site::origin(c.d);
  std::ostringstream os;
  os << "pattern,size,chi,chi_float\n";
  auto row = [&](const SiteSet& A) {
    const Rational v = chi(spec, A, origin);
    os << csv_cell(to_string(A)) << ',' << A.size() << ',' << to_string(v) << ',' << fmt(v.get_d()) << '\n';
  };
  if (!pattern.empty()) {
    row(parse_site_set(pattern));
  } else {
    const ChiTable& table = chi_table(spec);
    if (!table.tabulated()) {
      throw Error(Errc::invalid_parameter, "full table needs s <= 13; pass --pattern");
    }
    for (std::uint64_t p = 1; p < (std::uint64_t{1} << spec.s()); ++p) {
      if (__builtin_popcountll(p) % 2 == 1) row(table.pattern_sites(p, origin));
    }
  }
  emit(os.str(), c.out);
  return kExitPass;
}

int cmd_jacobian(const Common& c, int image_sites, bool with_fd, bool all_pairs) {
  const KernelSpec spec = spec_of(c);
  const FiniteVolume vol = make_volume(line_window(c.d, image_sites), spec.geom());
  std::ostringstream os;
  os << "Z,W,closed_form,bruteforce" << (with_fd ? ",fd" : "") << '\n';
  for (const auto& Z : subsets(vol.image_sites)) {
    for (const auto& W : subsets(vol.original_sites)) {
      const Rational closed = jacobian_closed_form(spec, Z, W);
      if (!all_pairs && sgn(closed) == 0) continue;
      const Rational brute = jacobian_bruteforce(spec, vol, Z, W);
      os << csv_cell(to_string(Z)) << ',' << csv_cell(to_string(W)) << ',' << to_string(closed) << ','
         << to_string(brute);
      if (with_fd) os << ',' << fmt(jacobian_fd(spec, vol, Z, W));
      os << '\n';
    }
  }
  emit(os.str(), c.out);
  return kExitPass;
}

CoefficientVector<Real> load_real(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse_error, "cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(Errc::parse_error, path + ": " + e.what());
  }
  return real_interaction_from_json(j);
}

CoefficientVector<Real> pruned(const CoefficientVector<Real>& K) {
  CoefficientVector<Real> out(K.dimension(), K.tag());
  for (const auto& [Z, v] : K)
    if (std::abs(v) >= 1e-14) out.set(Z, v);
  return out;
}

int cmd_rgmap(const Common& c, const std::string& input, const std::string& window, bool free_energy) {
  const KernelSpec spec = spec_of(c);
  const auto J = load_real(input);
  if (J.dimension() != c.d) throw Error(Errc::dimension_mismatch, "input dimension differs from --d");
  if (J.tag() != LatticeTag::original) throw Error(Errc::tag_mismatch, "input must be an original-lattice interaction");
  const FiniteVolume vol = make_volume(window.empty() ? line_window(c.d, 1) : parse_site_set(window), spec.geom());
  check_support(J, vol.original_sites);
  const RgMapResult result = rg_map_full(J, spec, vol);
  Json out = interaction_to_json(pruned(result.couplings));
  if (free_energy) out["free_energy"] = result.free_energy;
  emit(json_text(out), c.out);
  return kExitPass;
}

int cmd_eigvec(const Common& c, const std::string& lambda_text, double imag, int depth) {
  const KernelSpec spec = spec_of(c);
  const Lambda lambda = parse_lambda(lambda_text, imag, spec);
  double residual = 0.0;
  CoefficientVector<Complex> vector;
  if (lambda.exact) {
    const auto cand = spec.is_majority() ? majority_eigenvector(*lambda.exact, depth, spec)
                                         : decimation_eigenvector(*lambda.exact, depth, spec.geom());
    residual = eigen_residual(cand, *lambda.exact, default_check_sets(cand.truncation));
    vector = convert<Complex>(cand.vector);
  } else {
    const auto cand = spec.is_majority() ? majority_eigenvector(lambda.value, depth, spec)
                                         : decimation_eigenvector(lambda.value, depth, spec.geom());
    residual = eigen_residual(cand, lambda.value, default_check_sets(cand.truncation));
    vector = cand.vector;
  }
  const Certificate cert = make_certificate(CertificateKind::eigenvector, spec, lambda.value, residual,
                                            lambda.exact ? 0.0 : 1e-12);
  Json out{{"depth", depth},
           {"exact", lambda.exact.has_value()},
           {"vector", interaction_to_json(vector)},
           {"certificate", certificate_json(cert)}};
  emit(json_text(out), c.out);
  return cert.pass ? kExitPass : kExitFail;
}

int cmd_witness(const Common& c, const std::string& lambda_text, double imag, std::size_t samples,
                std::uint64_t seed, double r) {
  const KernelSpec spec = spec_of(c);
  const Lambda lambda = parse_lambda(lambda_text, imag, spec);
  const auto candidates = witness_candidates(spec, samples, seed);
  double worst = residual_witness_distance(spec, lambda.value,
                                           CoefficientVector<Complex>(spec.d(), LatticeTag::image), r);
  std::size_t argmin = samples;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const double dist = residual_witness_distance(spec, lambda.value, candidates[i], r);
    if (dist < worst) {
      worst = dist;
      argmin = i;
    }
  }
  const Certificate cert =
      make_certificate(CertificateKind::residual_witness, spec, lambda.value, worst, witness_bound(spec) - 1e-12);
  Json out{{"target", interaction_to_json(witness_target(spec))},
           {"samples", samples},
           {"seed", seed},
           {"r", r},
           {"min_distance", worst},
           {"argmin", argmin == samples ? Json(nullptr) : Json(argmin)},
           {"certificate", certificate_json(cert)}};
  emit(json_text(out), c.out);
  return cert.pass ? kExitPass : kExitFail;
}

template <class T>
std::vector<T> parse_list(const std::string& text) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(static_cast<T>(v));
    } catch (const std::exception&) {
      throw Error(Errc::invalid_parameter, "bad list entry '" + item + "'");
    }
  }
  if (out.empty()) throw Error(Errc::invalid_parameter, "empty list");
  return out;
}

int cmd_stirling(const Common& c, const std::string& s_list, const std::string& b_list) {
  std::vector<StirlingRow> rows;
  if (!b_list.empty()) {
    rows = stirling_report(parse_list<int>(b_list), c.d);
  } else {
    rows = stirling_report(parse_list<std::int64_t>(s_list));
  }
  std::ostringstream os;
  os << "s,nu,s_nu,asymptote,ratio\n";
  for (const auto& row : rows) {
    os << row.s << ',' << to_string(row.nu) << ',' << fmt(row.s_nu) << ',' << fmt(row.asymptote) << ','
       << fmt(row.ratio) << '\n';
  }
  emit(os.str(), c.out);
  return kExitPass;
}

int cmd_norms(const Common& c, const std::string& direction, double r, std::size_t samples,
              std::uint64_t seed) {
  const KernelSpec spec = spec_of(c);
  const Direction dir = direction == "adjoint" ? Direction::adjoint : Direction::forward;
  const NormProbe probe = operator_norm_probe(spec, dir, r, samples, seed);
  Json out{{"transform", to_json(spec)},
           {"direction", to_string(dir)},
           {"r", r},
           {"samples", samples},
           {"seed", seed},
           {"max_ratio", probe.max_ratio},
           {"argmax", probe.argmax}};
  if (!spec.is_majority()) {
    const Certificate cert = make_certificate(CertificateKind::norm_bound, spec, Complex(0.0), probe.max_ratio,
                                              1.0 + 1e-12);
    out["certificate"] = certificate_json(cert);
    emit(json_text(out), c.out);
    return cert.pass ? kExitPass : kExitFail;
  }
  if (dir == Direction::forward) {
    const Certificate cert = make_certificate(CertificateKind::norm_bound, spec, Complex(0.0), probe.max_ratio,
                                              s_nu(spec).get_d() + 1e-12);
    out["certificate"] = certificate_json(cert);
    emit(json_text(out), c.out);
    return cert.pass ? kExitPass : kExitFail;
  }
  out["certificate"] = nullptr;  // no bound is claimed for the majority adjoint
  emit(json_text(out), c.out);
  return kExitPass;
}

/// Lays an image-lattice coupling back onto the original window as a
/// translation-averaged interaction: each orbit gets the mean of its values
/// and is placed at every translate that fits inside the window.
CoefficientVector<Real> respread(const CoefficientVector<Real>& Jp, const SiteSet& window) {
  std::map<SiteSet, std::pair<double, int>> orbits;
  for (const auto& [Z, v] : Jp) {
    auto& [sum, count] = orbits[orbit_rep(Z)];
    sum += v;
    ++count;
  }
  CoefficientVector<Real> out(window.dimension(), LatticeTag::original);
  for (const auto& [O, acc] : orbits) {
    const double mean = acc.first / acc.second;
    for (const auto& x : window) {
      std::vector<Site> moved;
      for (const auto& y : O) {
        Site z = y;
        for (std::size_t i = 0; i < z.coords.size(); ++i) z.coords[i] += x.coords[i];
        moved.push_back(std::move(z));
      }
      SiteSet X(std::move(moved));
      if (X.is_subset_of(window)) out.set(X, mean);
    }
  }
  return out;
}

int cmd_flow(const Common& c, const std::string& input, const std::string& window, int steps) {
  const KernelSpec spec = spec_of(c);
  const FiniteVolume vol = make_volume(window.empty() ? line_window(c.d, 2) : parse_site_set(window), spec.geom());
  auto J = load_real(input);
  check_support(J, vol.original_sites);
  Report report("flow");
  for (int k = 1; k <= steps; ++k) {
    const auto Jp = pruned(rg_map(J, spec, vol));
    double sup = 0.0, total = 0.0;
    for (const auto& [Z, v] : Jp) {
      sup = std::max(sup, std::abs(v));
      total += std::abs(v);
    }
    const std::string step = "step-" + std::to_string(k);
    report.finding(step + "/max-abs", "largest renormalized coupling", sup);
    report.finding(step + "/l1", "sum of absolute renormalized couplings", total);
    J = respread(Jp, vol.original_sites);
  }
  emit(json_text(to_json(report)), c.out);
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and linearized block-spin RG maps for Ising-type systems"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "worker threads (default: RG_SPECTRA_THREADS or all cores)")
      ->check(CLI::NonNegativeNumber);

  Common c;
  std::uint64_t seed = 1;
  std::size_t samples = 200;
  int image_sites = 2;
  std::string lambda_text = "0.5";
  double imag = 0.0;
  int depth = 8;
  double r = 0.0;

  auto* verify = app.add_subcommand("verify", "run an invariant suite and print a JSON report");
  std::string suite;
  std::optional<std::string> verify_transform;
  verify->add_option("suite", suite, "kernels, rgmap, jacobian, spectral, witness or all")->required();
  verify->add_option("--transform", verify_transform, "restrict to one kernel")
      ->check(CLI::IsMember({"decimation", "majority"}));
  add_geometry(verify, c, false);
  verify->add_option("--image-sites", image_sites, "image window length")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "seed for randomized checks");
  verify->add_option("--samples", samples, "random vectors per randomized check")->check(CLI::PositiveNumber);

  auto* chi_cmd = app.add_subcommand("chi", "tabulate chi over the patterns of one block (CSV)");
  std::string pattern;
  add_geometry(chi_cmd, c, false);
  chi_cmd->add_option("--pattern", pattern, "a single pattern inside the origin block, e.g. [[0]]");

  auto* jac = app.add_subcommand("jacobian", "dump the Jacobian at zero coupling (CSV)");
  bool with_fd = false, all_pairs = false;
  add_geometry(jac, c);
  jac->add_option("--image-sites", image_sites, "image window length")->check(CLI::PositiveNumber);
  jac->add_flag("--fd", with_fd, "add a finite-difference column");
  jac->add_flag("--all", all_pairs, "include zero entries");

  auto* rgmap = app.add_subcommand("rgmap", "apply the exact RG map to an interaction file");
  std::string input, window;
  bool free_energy = false;
  add_geometry(rgmap, c);
  rgmap->add_option("--input", input, "interaction JSON")->required();
  rgmap->add_option("--window", window, "image window as a set literal (default [[0,...]])");
  rgmap->add_flag("--free-energy", free_energy, "also report the constant term");

  auto* eig = app.add_subcommand("eigvec", "build a truncated eigenvector and certify its residual");
  add_geometry(eig, c);
  eig->add_option("--lambda", lambda_text, "real part: rational, decimal, nu or snu");
  eig->add_option("--lambda-im", imag, "imaginary part");
  eig->add_option("--depth", depth, "truncation depth")->check(CLI::NonNegativeNumber);

  auto* wit = app.add_subcommand("witness", "search for vectors approximating the adjoint witness target");
  add_geometry(wit, c);
  wit->add_option("--lambda", lambda_text, "real part: rational, decimal, nu or snu");
  wit->add_option("--lambda-im", imag, "imaginary part");
  wit->add_option("--samples", samples, "random candidates")->check(CLI::PositiveNumber);
  wit->add_option("--seed", seed, "candidate seed");
  wit->add_option("--r", r, "norm weight")->check(CLI::NonNegativeNumber);

  auto* stir = app.add_subcommand("stirling", "compare s nu with its large-s asymptote (CSV)");
  std::string s_list = "3,5,7,9,25", b_list;
  add_geometry(stir, c, false);
  stir->add_option("--s", s_list, "comma-separated odd block sizes");
  stir->add_option("--b-values", b_list, "comma-separated odd blocking factors (uses --d)");

  auto* norms = app.add_subcommand("norms", "probe operator norms with seeded random vectors");
  std::string direction = "forward";
  add_geometry(norms, c);
  norms->add_option("--direction", direction, "forward or adjoint")
      ->check(CLI::IsMember({"forward", "adjoint"}));
  norms->add_option("--r", r, "norm weight")->check(CLI::NonNegativeNumber);
  norms->add_option("--samples", samples, "random vectors")->check(CLI::PositiveNumber);
  norms->add_option("--seed", seed, "seed");

  auto* flow = app.add_subcommand("flow", "iterate the RG map on a translation-averaged window (findings only)");
  int steps = 4;
  add_geometry(flow, c);
  flow->add_option("--input", input, "interaction JSON")->required();
  flow->add_option("--window", window, "image window as a set literal");
  flow->add_option("--steps", steps, "iterations")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (threads > 0) set_thread_count(static_cast<unsigned>(threads));
    if (*verify) return cmd_verify(suite, c, verify_transform, image_sites, seed, samples);
    if (*chi_cmd) return cmd_chi(c, pattern);
    if (*jac) return cmd_jacobian(c, image_sites, with_fd, all_pairs);
    if (*rgmap) return cmd_rgmap(c, input, window, free_energy);
    if (*eig) return cmd_eigvec(c, lambda_text, imag, depth);
    if (*wit) return cmd_witness(c, lambda_text, imag, samples, seed, r);
    if (*stir) return cmd_stirling(c, s_list, b_list);
    if (*norms) return cmd_norms(c, direction, r, samples, seed);
    if (*flow) return cmd_flow(c, input, window, steps);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}
