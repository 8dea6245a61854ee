#pragma once

#include <initializer_list>
#include <vector>

#include "rgspectra/lattice.hpp"
#include "rgspectra/scalar.hpp"

namespace testing {

inline rgspectra::Site S(std::initializer_list<rgspectra::Coord> c) { return rgspectra::Site(std::vector<rgspectra::Coord>(c)); }

inline rgspectra::SiteSet set1(std::initializer_list<rgspectra::Coord> xs) {
  std::vector<rgspectra::Site> v;
  for (auto x : xs) v.push_back(S({x}));
  return rgspectra::SiteSet(std::move(v));
}

/// Reduced fraction; mpq_class's two-argument constructor does not reduce.
inline rgspectra::Rational frac(long num, long den) {
  rgspectra::Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace testing
