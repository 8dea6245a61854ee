#include "rgspectra/coeff_space.hpp"

namespace rgspectra {

std::string to_string(LatticeTag tag) { return tag == LatticeTag::original ? "original" : "image"; }

LatticeTag parse_lattice_tag(const std::string& name) {
  if (name == "original") return LatticeTag::original;
  if (name == "image") return LatticeTag::image;
  throw Error(Errc::parse_error, "unknown lattice tag '" + name + "'");
}

SiteSet orbit_rep(const SiteSet& X) {
  if (X.empty()) throw Error(Errc::empty_set, "orbit of an empty set");
  const Site& low = X[0];
  std::vector<Site> shifted;
  shifted.reserve(X.size());
  for (const auto& x : X) {
    Site y = x;
    for (std::size_t i = 0; i < y.coords.size(); ++i) y.coords[i] -= low[i];
    shifted.push_back(std::move(y));
  }
  return SiteSet(std::move(shifted));
}

}  // namespace rgspectra
