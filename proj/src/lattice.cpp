#include "rgspectra/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <iterator>

#include "rgspectra/error.hpp"

namespace rgspectra {

namespace {

Coord floor_div(Coord a, Coord b) {
  Coord q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Lower corner offset of the block relative to b*y.
Coord block_low(int b) { return b % 2 != 0 ? (b - 1) / 2 : (b - 2) / 2; }

void check_dimension(const Site& x, int dimension) {
  if (x.dimension() != dimension) {
    throw Error(Errc::dimension_mismatch, "site " + to_string(x) + " is not " +
                                              std::to_string(dimension) + "-dimensional");
  }
}

}  // namespace

Geometry::Geometry(int dimension_, int blocking_factor_)
    : dimension(dimension_), blocking_factor(blocking_factor_) {
  if (dimension < 1) throw Error(Errc::invalid_spec, "dimension must be >= 1");
  if (blocking_factor < 2) throw Error(Errc::invalid_spec, "blocking factor must be >= 2");
}

std::int64_t Geometry::block_size() const {
  std::int64_t s = 1;
  for (int i = 0; i < dimension; ++i) s *= blocking_factor;
  return s;
}

Site Site::axis(int dimension, Coord v, int axis_) {
  Site x = origin(dimension);
  x.coords[axis_] = v;
  return x;
}

SiteSet::SiteSet(std::initializer_list<Site> sites) : SiteSet(std::vector<Site>(sites)) {}

SiteSet::SiteSet(std::vector<Site> sites) : sites_(std::move(sites)) {
  if (!sites_.empty()) {
    const int d = sites_.front().dimension();
    for (const auto& x : sites_) check_dimension(x, d);
  }
  std::sort(sites_.begin(), sites_.end());
  sites_.erase(std::unique(sites_.begin(), sites_.end()), sites_.end());
}

bool SiteSet::contains(const Site& x) const {
  return std::binary_search(sites_.begin(), sites_.end(), x);
}

bool SiteSet::is_subset_of(const SiteSet& other) const {
  return std::includes(other.sites_.begin(), other.sites_.end(), sites_.begin(), sites_.end());
}

SiteSet canonical_set(std::vector<Site> sites) { return SiteSet(std::move(sites)); }

SiteSet set_union(const SiteSet& a, const SiteSet& b) {
  std::vector<Site> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return SiteSet(std::move(out));
}

SiteSet set_intersection(const SiteSet& a, const SiteSet& b) {
  std::vector<Site> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return SiteSet(std::move(out));
}

SiteSet block(const Site& y, const Geometry& geom) {
  check_dimension(y, geom.dimension);
  const int b = geom.blocking_factor;
  const int d = geom.dimension;
  const Coord low = block_low(b);
  std::vector<Site> out;
  out.reserve(static_cast<std::size_t>(geom.block_size()));
  // Odometer over the b^d offsets, first coordinate most significant, which is
  // already lexicographic order.
  std::vector<Coord> offset(d, 0);
  for (std::int64_t k = 0; k < geom.block_size(); ++k) {
    Site x = Site(std::vector<Coord>(d));
    for (int i = 0; i < d; ++i) x.coords[i] = b * y[i] - low + offset[i];
    out.push_back(std::move(x));
    for (int i = d - 1; i >= 0; --i) {
      if (++offset[i] < b) break;
      offset[i] = 0;
    }
  }
  return SiteSet(std::move(out));
}

SiteSet region(const SiteSet& Y, const Geometry& geom) {
  if (Y.empty()) throw Error(Errc::empty_set, "region of an empty image set");
  std::vector<Site> out;
  out.reserve(Y.size() * static_cast<std::size_t>(geom.block_size()));
  for (const auto& y : Y) {
    const SiteSet blk = block(y, geom);
    out.insert(out.end(), blk.begin(), blk.end());
  }
  return SiteSet(std::move(out));
}

Site block_index(const Site& x, const Geometry& geom) {
  check_dimension(x, geom.dimension);
  const int b = geom.blocking_factor;
  const Coord low = block_low(b);
  Site y(std::vector<Coord>(x.coords.size()));
  for (std::size_t i = 0; i < x.coords.size(); ++i) y.coords[i] = floor_div(x[i] + low, b);
  return y;
}

Site scale_site(const Site& x, Coord factor) {
  Site out = x;
  for (auto& c : out.coords) c *= factor;
  return out;
}

SiteSet scale_set(const SiteSet& Z, const Geometry& geom) {
  if (Z.empty()) throw Error(Errc::empty_set, "scaling an empty set");
  std::vector<Site> out;
  out.reserve(Z.size());
  for (const auto& z : Z) out.push_back(scale_site(z, geom.blocking_factor));
  return SiteSet(std::move(out));
}

std::map<Site, SiteSet> decompose_by_blocks(const SiteSet& Z, const Geometry& geom) {
  if (Z.empty()) throw Error(Errc::empty_set, "decomposing an empty set");
  std::map<Site, std::vector<Site>> parts;
  for (const auto& x : Z) parts[block_index(x, geom)].push_back(x);
  std::map<Site, SiteSet> out;
  for (auto& [n, w] : parts) out.emplace(n, SiteSet(std::move(w)));
  return out;
}

Coord dist(const Site& x, const Site& y) {
  if (x.dimension() != y.dimension()) {
    throw Error(Errc::dimension_mismatch, to_string(x) + " vs " + to_string(y));
  }
  Coord m = 0;
  for (std::size_t i = 0; i < x.coords.size(); ++i) m = std::max(m, std::abs(x[i] - y[i]));
  return m;
}

Coord extent(const Site& x, const SiteSet& X) {
  Coord m = 0;
  for (const auto& y : X) m = std::max(m, dist(x, y));
  return m;
}

Coord radius(const SiteSet& X) {
  Coord m = 0;
  for (const auto& x : X)
    for (Coord c : x.coords) m = std::max(m, std::abs(c));
  return m;
}

SiteSet box(int dimension, Coord r) {
  std::vector<Site> out;
  std::vector<Coord> c(dimension, -r);
  while (true) {
    out.emplace_back(c);
    int i = dimension - 1;
    for (; i >= 0; --i) {
      if (++c[i] <= r) break;
      c[i] = -r;
    }
    if (i < 0) break;
  }
  return SiteSet(std::move(out));
}

std::vector<SiteSet> subsets(const SiteSet& sites, std::size_t max_size) {
  const std::size_t n = sites.size();
  if (n > 30) throw Error(Errc::enumeration_too_large, "subset enumeration over >30 sites");
  std::vector<SiteSet> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) > max_size) continue;
    std::vector<Site> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1U) s.push_back(sites[i]);
    out.emplace_back(std::move(s));
  }
  return out;
}

std::string to_string(const Site& x) {
  std::string s = "[";
  for (std::size_t i = 0; i < x.coords.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(x[i]);
  }
  return s + "]";
}

std::string to_string(const SiteSet& X) {
  std::string s = "[";
  for (std::size_t i = 0; i < X.size(); ++i) {
    if (i) s += ',';
    s += to_string(X[i]);
  }
  return s + "]";
}

}  // namespace rgspectra
