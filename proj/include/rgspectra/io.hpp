#pragma once

// JSON and CSV encodings shared by the CLI and the Python module.
//
//   site set     [[-1],[0],[1]]
//   kernel spec  {"kind": "decimation" | "majority", "b": 3, "d": 1}
//   interaction  {"dimension": d, "lattice": "original" | "image",
//                 "terms": [{"sites": [[...], ...], "value": v | [re, im]}]}

#include <istream>
#include <string>

#include <json.hpp>

#include "rgspectra/coeff_space.hpp"
#include "rgspectra/kernel.hpp"
#include "rgspectra/lattice.hpp"
#include "rgspectra/scalar.hpp"

namespace rgspectra {

using Json = nlohmann::ordered_json;

Json to_json(const Site& x);
Json to_json(const SiteSet& X);
Json to_json(const KernelSpec& spec);
Json to_json(const Complex& v);

Site site_from_json(const Json& j);
SiteSet site_set_from_json(const Json& j);
KernelSpec spec_from_json(const Json& j);
/// Parses a JSON site-set literal from text, e.g. "[[0],[1]]".
SiteSet parse_site_set(const std::string& text);

/// Values are written as numbers, or [re, im] when the imaginary part is nonzero.
/// Rationals are written as decimal numbers.
template <class S>
Json interaction_to_json(const CoefficientVector<S>& K) {
  Json terms = Json::array();
  for (const auto& [X, v] : K) {
    Json value;
    if constexpr (std::is_same_v<S, Complex>) {
      value = to_json(v);
    } else if constexpr (std::is_same_v<S, Rational>) {
      value = v.get_d();
    } else {
      value = v;
    }
    terms.push_back(Json{{"sites", to_json(X)}, {"value", value}});
  }
  return Json{{"dimension", K.dimension()}, {"lattice", to_string(K.tag())}, {"terms", terms}};
}

/// Accepts sets in any order; rejects duplicate sets, empty sets and mixed
/// dimensions. Zero values are dropped.
CoefficientVector<Complex> interaction_from_json(const Json& j);
/// As above; throws parse_error for values with a nonzero imaginary part.
CoefficientVector<Real> real_interaction_from_json(const Json& j);
CoefficientVector<Complex> read_interaction_file(const std::string& path);

/// Quotes a CSV cell when it contains a comma, quote or newline.
std::string csv_cell(const std::string& text);

}  // namespace rgspectra
