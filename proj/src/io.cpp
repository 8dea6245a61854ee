#include "rgspectra/io.hpp"

#include <fstream>
#include <set>

#include "rgspectra/error.hpp"

namespace rgspectra {

Json to_json(const Site& x) { return Json(x.coords); }

Json to_json(const SiteSet& X) {
  Json out = Json::array();
  for (const auto& x : X) out.push_back(to_json(x));
  return out;
}

Json to_json(const KernelSpec& spec) {
  return Json{{"kind", to_string(spec.kind())}, {"b", spec.b()}, {"d", spec.d()}};
}

Json to_json(const Complex& v) {
  if (v.imag() == 0.0) return Json(v.real());
  return Json::array({v.real(), v.imag()});
}

Site site_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw Error(Errc::parse_error, "a site is a nonempty array of integers");
  Site x;
  for (const auto& c : j) {
    if (!c.is_number_integer()) throw Error(Errc::parse_error, "site coordinates must be integers");
    x.coords.push_back(c.get<Coord>());
  }
  return x;
}

SiteSet site_set_from_json(const Json& j) {
  if (!j.is_array()) throw Error(Errc::parse_error, "a site set is an array of sites");
  std::vector<Site> sites;
  for (const auto& s : j) sites.push_back(site_from_json(s));
  return SiteSet(std::move(sites));
}

SiteSet parse_site_set(const std::string& text) {
  try {
    return site_set_from_json(Json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, std::string("bad site-set literal: ") + e.what());
  }
}

KernelSpec spec_from_json(const Json& j) {
  try {
    return KernelSpec(parse_kernel_kind(j.at("kind").get<std::string>()), j.at("b").get<int>(),
                      j.at("d").get<int>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, std::string("bad kernel spec: ") + e.what());
  }
}

CoefficientVector<Complex> interaction_from_json(const Json& j) {
  try {
    const int dimension = j.at("dimension").get<int>();
    if (dimension < 1) throw Error(Errc::parse_error, "dimension must be >= 1");
    const LatticeTag tag = j.contains("lattice") ? parse_lattice_tag(j.at("lattice").get<std::string>())
                                                 : LatticeTag::original;
    CoefficientVector<Complex> K(dimension, tag);
    std::set<SiteSet> seen;
    for (const auto& term : j.at("terms")) {
      const SiteSet X = site_set_from_json(term.at("sites"));
      if (X.empty()) throw Error(Errc::parse_error, "interaction term with an empty set");
      if (X.dimension() != dimension) {
        throw Error(Errc::dimension_mismatch, "set " + to_string(X) + " in a " +
                                                  std::to_string(dimension) + "-dimensional file");
      }
      if (!seen.insert(X).second) throw Error(Errc::parse_error, "duplicate set " + to_string(X));
      const Json& value = term.at("value");
      Complex v;
      if (value.is_number()) {
        v = Complex(value.get<double>(), 0.0);
      } else if (value.is_array() && value.size() == 2 && value[0].is_number() && value[1].is_number()) {
        v = Complex(value[0].get<double>(), value[1].get<double>());
      } else {
        throw Error(Errc::parse_error, "value must be a number or [re, im]");
      }
      K.set(X, v);
    }
    return K;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, std::string("bad interaction file: ") + e.what());
  }
}

CoefficientVector<Real> real_interaction_from_json(const Json& j) {
  const auto K = interaction_from_json(j);
  CoefficientVector<Real> out(K.dimension(), K.tag());
  for (const auto& [X, v] : K) {
    if (v.imag() != 0.0) throw Error(Errc::parse_error, "complex value at " + to_string(X));
    out.set(X, v.real());
  }
  return out;
}

CoefficientVector<Complex> read_interaction_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse_error, "cannot open " + path);
  try {
    return interaction_from_json(Json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, path + ": " + e.what());
  }
}

std::string csv_cell(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace rgspectra
