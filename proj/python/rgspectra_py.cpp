#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "rgspectra/coeff_space.hpp"
#include "rgspectra/io.hpp"
#include "rgspectra/kernel.hpp"
#include "rgspectra/lattice.hpp"
#include "rgspectra/rg_exact.hpp"
#include "rgspectra/rg_linear.hpp"
#include "rgspectra/spectral_lab.hpp"
#include "rgspectra/verify.hpp"

namespace py = pybind11;
using namespace py::literals;
using namespace rgspectra;

namespace {

using Coords = std::vector<Coord>;
using CoordSet = std::vector<Coords>;

SiteSet to_set(const CoordSet& sites) {
  std::vector<Site> out;
  for (const auto& c : sites) out.emplace_back(c);
  return canonical_set(std::move(out));
}

CoordSet from_set(const SiteSet& X) {
  CoordSet out;
  for (const auto& x : X) out.push_back(x.coords);
  return out;
}

py::object fraction(const Rational& q) { return py::module_::import("fractions").attr("Fraction")(to_string(q)); }

Json to_cpp_json(const py::object& obj) {
  const std::string text = py::str(py::module_::import("json").attr("dumps")(obj));
  return Json::parse(text);
}

py::object to_py_json(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

KernelSpec make_spec(const std::string& transform, int b, int d) { return KernelSpec(parse_kernel_kind(transform), b, d); }

Complex to_lambda(const py::object& value, const KernelSpec& spec) {
  if (py::isinstance<py::str>(value)) {
    const auto text = value.cast<std::string>();
    if (text == "nu") return Complex(nu(spec).get_d(), 0.0);
    if (text == "snu") return Complex(s_nu(spec).get_d(), 0.0);
    return Complex(parse_rational(text).get_d(), 0.0);
  }
  return value.cast<Complex>();
}

SiteSet window_or_default(const std::optional<CoordSet>& window, int d) {
  return window ? to_set(*window) : line_window(d, 1);
}

}  // namespace

PYBIND11_MODULE(rgspectra, m) {
  m.doc() = "Exact and linearized block-spin RG maps for Ising-type systems";

  static py::exception<Error> error(m, "RgError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  // Lattice
  m.def("block", [](const Coords& y, int b) { return from_set(block(Site(y), Geometry(static_cast<int>(y.size()), b))); },
        "y"_a, "b"_a, "Sites of the block indexed by y.");
  m.def("region", [](const CoordSet& Y, int b) {
    const SiteSet set = to_set(Y);
    return from_set(region(set, Geometry(set.dimension(), b)));
  }, "Y"_a, "b"_a);
  m.def("block_index", [](const Coords& x, int b) { return block_index(Site(x), Geometry(static_cast<int>(x.size()), b)).coords; },
        "x"_a, "b"_a);

  // Kernels
  m.def("nu", [](int b, int d) { return fraction(nu(KernelSpec(KernelKind::majority, b, d))); }, "b"_a, "d"_a = 1);
  m.def("chi", [](const CoordSet& A, int b, std::optional<Coords> z) {
    const SiteSet set = to_set(A);
    const int d = set.dimension();
    return fraction(chi(KernelSpec(KernelKind::majority, b, d), set, z ? Site(*z) : Site::origin(d)));
  }, "A"_a, "b"_a, "z"_a = py::none(), "chi(A) for A inside the block of z (default: the origin block).");

  // Norms
  m.def("norm_r", [](const py::object& K, double r) { return norm_r(interaction_from_json(to_cpp_json(K)), r); },
        "interaction"_a, "r"_a = 0.0);
  m.def("norm_r_star", [](const py::object& K, double r) { return norm_r_star(interaction_from_json(to_cpp_json(K)), r); },
        "interaction"_a, "r"_a = 0.0);

  // Nonlinear map
  m.def("rg_map", [](const py::object& J, const std::string& transform, int b, int d,
                     std::optional<CoordSet> window) {
    const KernelSpec spec = make_spec(transform, b, d);
    const auto couplings = real_interaction_from_json(to_cpp_json(J));
    RgMapResult result;
    {
      py::gil_scoped_release release;
      result = rg_map_full(couplings, spec, make_volume(window_or_default(window, d), spec.geom()));
    }
    py::dict out = to_py_json(interaction_to_json(result.couplings));
    out["free_energy"] = result.free_energy;
    return out;
  }, "interaction"_a, "transform"_a = "decimation", "b"_a = 3, "d"_a = 1, "window"_a = py::none(),
     "Renormalized couplings on the image window, plus the free-energy constant.");

  m.def("jacobian", [](const CoordSet& Z, const CoordSet& W, const std::string& transform, int b, int d,
                       std::optional<CoordSet> window, const std::string& method) -> py::object {
    const KernelSpec spec = make_spec(transform, b, d);
    const SiteSet z = to_set(Z), w = to_set(W);
    if (method == "closed") return fraction(jacobian_closed_form(spec, z, w));
    const FiniteVolume vol = make_volume(window ? to_set(*window) : z, spec.geom());
    if (method == "brute") return fraction(jacobian_bruteforce(spec, vol, z, w));
    if (method == "fd") return py::float_(jacobian_fd(spec, vol, z, w));
    throw Error(Errc::invalid_parameter, "method must be closed, brute or fd");
  }, "Z"_a, "W"_a, "transform"_a = "decimation", "b"_a = 3, "d"_a = 1, "window"_a = py::none(),
     "method"_a = "closed");

  // Linearizations
  m.def("apply_L", [](const py::object& K, const std::string& transform, int b, int d) {
    return to_py_json(interaction_to_json(apply_L(interaction_from_json(to_cpp_json(K)), make_spec(transform, b, d))));
  }, "interaction"_a, "transform"_a = "decimation", "b"_a = 3, "d"_a = 1);
  m.def("apply_Lstar", [](const py::object& K, const std::string& transform, int b, int d, bool keep_origin) {
    const KernelSpec spec = make_spec(transform, b, d);
    const auto vec = interaction_from_json(to_cpp_json(K));
    const auto out = apply_Lstar(vec, spec, adjoint_window(vec, spec.geom()),
                                 keep_origin ? OriginPolicy::keep : OriginPolicy::drop);
    return to_py_json(interaction_to_json(out));
  }, "interaction"_a, "transform"_a = "decimation", "b"_a = 3, "d"_a = 1, "keep_origin"_a = false);

  // Spectral certificates
  m.def("eigen_residual", [](const py::object& lambda, const std::string& transform, int b, int d, int depth) {
    const KernelSpec spec = make_spec(transform, b, d);
    const Complex l = to_lambda(lambda, spec);
    const auto cand = spec.is_majority() ? majority_eigenvector(l, depth, spec) : decimation_eigenvector(l, depth, spec.geom());
    return eigen_residual(cand, l, default_check_sets(cand.truncation));
  }, "lambda_"_a, "transform"_a = "decimation", "b"_a = 3, "d"_a = 1, "depth"_a = 6);
  m.def("eigenvector", [](const py::object& lambda, const std::string& transform, int b, int d, int depth) {
    const KernelSpec spec = make_spec(transform, b, d);
    const Complex l = to_lambda(lambda, spec);
    const auto cand = spec.is_majority() ? majority_eigenvector(l, depth, spec) : decimation_eigenvector(l, depth, spec.geom());
    return to_py_json(interaction_to_json(cand.vector));
  }, "lambda_"_a, "transform"_a = "decimation", "b"_a = 3, "d"_a = 1, "depth"_a = 6);
  m.def("witness_distance", [](const py::object& lambda, const py::object& S, const std::string& transform, int b, int d,
                               double r) {
    const KernelSpec spec = make_spec(transform, b, d);
    return residual_witness_distance(spec, to_lambda(lambda, spec), interaction_from_json(to_cpp_json(S)), r);
  }, "lambda_"_a, "S"_a, "transform"_a = "decimation", "b"_a = 3, "d"_a = 1, "r"_a = 0.0);
  m.def("operator_norm_probe", [](const std::string& transform, const std::string& direction, double r,
                                  std::size_t samples, std::uint64_t seed, int b, int d) {
    const KernelSpec spec = make_spec(transform, b, d);
    const Direction dir = direction == "adjoint" ? Direction::adjoint : Direction::forward;
    py::gil_scoped_release release;
    return operator_norm_probe(spec, dir, r, samples, seed).max_ratio;
  }, "transform"_a, "direction"_a = "forward", "r"_a = 0.0, "samples"_a = 200, "seed"_a = 1, "b"_a = 3, "d"_a = 1);
  m.def("stirling", [](const std::vector<std::int64_t>& sizes) {
    py::list rows;
    for (const auto& row : stirling_report(sizes)) {
      rows.append(py::dict("s"_a = row.s, "nu"_a = fraction(row.nu), "s_nu"_a = row.s_nu,
                           "asymptote"_a = row.asymptote, "ratio"_a = row.ratio));
    }
    return rows;
  }, "block_sizes"_a);

  // Suites
  m.def("verify", [](const std::string& suite, std::optional<std::string> transform, int b, int d, int image_sites,
                     std::uint64_t seed, std::size_t samples) {
    VerifyOptions opt;
    if (transform) opt.transform = parse_kernel_kind(*transform);
    opt.b = b;
    opt.d = d;
    opt.image_sites = image_sites;
    opt.seed = seed;
    opt.samples = samples;
    Json report;
    {
      py::gil_scoped_release release;
      report = to_json(run_suite(suite, opt));
    }
    return to_py_json(report);
  }, "suite"_a, "transform"_a = py::none(), "b"_a = 3, "d"_a = 1, "image_sites"_a = 2, "seed"_a = 1,
     "samples"_a = 200);
}
