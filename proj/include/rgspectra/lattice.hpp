#pragma once

// Geometry of the original lattice and the image lattice, both realized as Z^d.
//
// An image site y owns the block y^o of b^d original sites:
//   odd b:   b*y_i - (b-1)/2 <= x_i <= b*y_i + (b-1)/2
//   even b:  b*y_i - (b-2)/2 <= x_i <= b*y_i + b/2
// Distances are Chebyshev (max-coordinate), so extents stay integer valued
// and scale exactly under x -> b*x.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

namespace rgspectra {

using Coord = std::int64_t;

struct Geometry {
  int dimension = 1;
  int blocking_factor = 3;

  Geometry() = default;
  Geometry(int dimension, int blocking_factor);

  bool odd() const { return blocking_factor % 2 != 0; }
  /// s = b^d, the number of sites per block.
  std::int64_t block_size() const;

  friend bool operator==(const Geometry&, const Geometry&) = default;
};

struct Site {
  std::vector<Coord> coords;

  Site() = default;
  explicit Site(std::vector<Coord> c) : coords(std::move(c)) {}
  Site(std::initializer_list<Coord> c) : coords(c) {}

  int dimension() const { return static_cast<int>(coords.size()); }
  Coord operator[](std::size_t i) const { return coords[i]; }

  static Site origin(int dimension) { return Site(std::vector<Coord>(dimension, 0)); }
  /// (v, 0, ..., 0)
  static Site axis(int dimension, Coord v, int axis = 0);

  friend auto operator<=>(const Site&, const Site&) = default;
  friend bool operator==(const Site&, const Site&) = default;
};

/// Canonical finite set of sites: sorted lexicographically, no duplicates,
/// all of one dimension.
class SiteSet {
 public:
  SiteSet() = default;
  SiteSet(std::initializer_list<Site> sites);
  explicit SiteSet(std::vector<Site> sites);

  const std::vector<Site>& sites() const { return sites_; }
  std::size_t size() const { return sites_.size(); }
  bool empty() const { return sites_.empty(); }
  /// Dimension of the member sites; 0 for the empty set.
  int dimension() const { return sites_.empty() ? 0 : sites_.front().dimension(); }
  bool contains(const Site& x) const;
  bool is_subset_of(const SiteSet& other) const;

  auto begin() const { return sites_.begin(); }
  auto end() const { return sites_.end(); }
  const Site& operator[](std::size_t i) const { return sites_[i]; }

  friend auto operator<=>(const SiteSet&, const SiteSet&) = default;
  friend bool operator==(const SiteSet&, const SiteSet&) = default;

 private:
  std::vector<Site> sites_;
};

SiteSet canonical_set(std::vector<Site> sites);
SiteSet set_union(const SiteSet& a, const SiteSet& b);
SiteSet set_intersection(const SiteSet& a, const SiteSet& b);

SiteSet block(const Site& y, const Geometry& geom);
/// Union of the blocks of every site in Y.
SiteSet region(const SiteSet& Y, const Geometry& geom);
/// The unique y with x in block(y).
Site block_index(const Site& x, const Geometry& geom);
SiteSet scale_set(const SiteSet& Z, const Geometry& geom);
Site scale_site(const Site& x, Coord factor);
/// Z = union of W_n with W_n = Z intersect n^o nonempty, keyed by n.
std::map<Site, SiteSet> decompose_by_blocks(const SiteSet& Z, const Geometry& geom);

Coord dist(const Site& x, const Site& y);
/// l(x, X) = max dist(x, y) over y in X; 0 for empty X.
Coord extent(const Site& x, const SiteSet& X);
/// max |coordinate| over the set; 0 for the empty set.
Coord radius(const SiteSet& X);

/// Every site in the box [-r, r]^d, lexicographic.
SiteSet box(int dimension, Coord r);
/// All nonempty subsets of `sites` with at most max_size elements.
std::vector<SiteSet> subsets(const SiteSet& sites, std::size_t max_size = SIZE_MAX);

std::string to_string(const Site& x);
/// JSON-style set literal, e.g. [[-1],[0],[1]].
std::string to_string(const SiteSet& X);

}  // namespace rgspectra
