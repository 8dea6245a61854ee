#pragma once

// Finitely supported interaction vectors K : {nonempty finite X} -> scalar and
// the paired norms
//
//   ||K||_r  = sup_x  sum_{X ∋ x} |K(X)| e^{ r l(x,X)}
//   ||K||*_r = sum_x  sup_{X ∋ x} |K(X)| / |X| e^{-r l(x,X)}
//
// with |sum K1 K2| <= ||K1||_r ||K2||*_r. Sites outside every support set
// contribute nothing to either norm, so both are evaluated exactly over the
// support.

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <type_traits>

#include "rgspectra/error.hpp"
#include "rgspectra/lattice.hpp"
#include "rgspectra/scalar.hpp"

namespace rgspectra {

enum class LatticeTag { original, image };

std::string to_string(LatticeTag tag);
LatticeTag parse_lattice_tag(const std::string& name);

template <class S>
class CoefficientVector {
  static_assert(is_scalar_v<S>);

 public:
  using scalar_type = S;
  using Map = std::map<SiteSet, S>;

  explicit CoefficientVector(int dimension = 1, LatticeTag tag = LatticeTag::original)
      : dimension_(dimension), tag_(tag) {}

  int dimension() const { return dimension_; }
  LatticeTag tag() const { return tag_; }
  const Map& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  S get(const SiteSet& X) const {
    const auto it = entries_.find(X);
    return it == entries_.end() ? S{} : it->second;
  }

  /// Stores v at X; a zero value erases the entry.
  void set(const SiteSet& X, S v) {
    check_key(X);
    if (is_zero(v)) {
      entries_.erase(X);
    } else {
      entries_.insert_or_assign(X, std::move(v));
    }
  }

  void add(const SiteSet& X, const S& v) {
    check_key(X);
    auto it = entries_.find(X);
    if (it == entries_.end()) {
      if (!is_zero(v)) entries_.emplace(X, v);
      return;
    }
    it->second += v;
    if (is_zero(it->second)) entries_.erase(it);
  }

  CoefficientVector retagged(LatticeTag tag) const {
    CoefficientVector out = *this;
    out.tag_ = tag;
    return out;
  }

  /// Union of all support sets.
  SiteSet support_sites() const {
    std::vector<Site> all;
    for (const auto& [X, v] : entries_) all.insert(all.end(), X.begin(), X.end());
    return SiteSet(std::move(all));
  }

  CoefficientVector& operator+=(const CoefficientVector& other) {
    check_tag(other);
    for (const auto& [X, v] : other.entries_) add(X, v);
    return *this;
  }
  CoefficientVector& operator-=(const CoefficientVector& other) {
    check_tag(other);
    for (const auto& [X, v] : other.entries_) add(X, S(-v));
    return *this;
  }
  CoefficientVector& operator*=(const S& c) {
    if (is_zero(c)) {
      entries_.clear();
      return *this;
    }
    for (auto it = entries_.begin(); it != entries_.end();) {
      it->second *= c;
      it = is_zero(it->second) ? entries_.erase(it) : std::next(it);
    }
    return *this;
  }
  friend CoefficientVector operator+(CoefficientVector a, const CoefficientVector& b) { return a += b; }
  friend CoefficientVector operator-(CoefficientVector a, const CoefficientVector& b) { return a -= b; }
  friend CoefficientVector operator*(const S& c, CoefficientVector a) { return a *= c; }

  friend bool operator==(const CoefficientVector& a, const CoefficientVector& b) {
    return a.dimension_ == b.dimension_ && a.tag_ == b.tag_ && a.entries_ == b.entries_;
  }

  void check_tag(const CoefficientVector& other) const {
    if (other.tag_ != tag_) {
      throw Error(Errc::tag_mismatch, "vectors index different lattices (" + to_string(tag_) +
                                          " vs " + to_string(other.tag_) + ")");
    }
  }

 private:
  void check_key(const SiteSet& X) const {
    if (X.empty()) throw Error(Errc::empty_set, "interactions are indexed by nonempty sets");
    if (X.dimension() != dimension_) {
      throw Error(Errc::dimension_mismatch, "set " + to_string(X) + " in a " +
                                                std::to_string(dimension_) + "-dimensional vector");
    }
  }

  int dimension_;
  LatticeTag tag_;
  Map entries_;
};

/// Element-wise scalar conversion (Rational -> Real -> Complex).
template <class T, class S>
CoefficientVector<T> convert(const CoefficientVector<S>& K) {
  CoefficientVector<T> out(K.dimension(), K.tag());
  for (const auto& [X, v] : K) {
    if constexpr (std::is_same_v<S, Rational>) {
      out.set(X, from_rational<T>(v));
    } else {
      out.set(X, T(v));
    }
  }
  return out;
}

inline void check_r(double r) {
  if (!(r >= 0.0)) throw Error(Errc::invalid_parameter, "norm weight r must be >= 0");
}

template <class S>
double norm_r(const CoefficientVector<S>& K, double r) {
  check_r(r);
  std::map<Site, double> per_site;
  for (const auto& [X, v] : K) {
    const double m = magnitude(v);
    for (const auto& x : X) per_site[x] += m * std::exp(r * static_cast<double>(extent(x, X)));
  }
  double sup = 0.0;
  for (const auto& [x, total] : per_site) sup = std::max(sup, total);
  return sup;
}

template <class S>
double norm_r_star(const CoefficientVector<S>& K, double r) {
  check_r(r);
  std::map<Site, double> per_site;
  for (const auto& [X, v] : K) {
    const double m = magnitude(v) / static_cast<double>(X.size());
    for (const auto& x : X) {
      double& slot = per_site[x];
      slot = std::max(slot, m * std::exp(-r * static_cast<double>(extent(x, X))));
    }
  }
  double sum = 0.0;
  for (const auto& [x, sup] : per_site) sum += sup;
  return sum;
}

/// sum_X K1(X) K2(X); bilinear (no conjugation).
template <class S>
S pairing(const CoefficientVector<S>& K1, const CoefficientVector<S>& K2) {
  K1.check_tag(K2);
  S total{};
  const auto& a = K1.entries();
  const auto& b = K2.entries();
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (i->first < j->first) {
      ++i;
    } else if (j->first < i->first) {
      ++j;
    } else {
      total += i->second * j->second;
      ++i;
      ++j;
    }
  }
  return total;
}

template <class S>
bool is_even(const CoefficientVector<S>& K) {
  return std::all_of(K.begin(), K.end(), [](const auto& e) { return e.first.size() % 2 == 0; });
}

/// X translated so that its lexicographically smallest site is the origin.
SiteSet orbit_rep(const SiteSet& X);

/// Translation-invariant vector, one value per translation orbit.
template <class S>
class TIVector {
 public:
  using Map = std::map<SiteSet, S>;

  explicit TIVector(int dimension = 1, bool even_only = false)
      : dimension_(dimension), even_only_(even_only) {}

  int dimension() const { return dimension_; }
  bool even_only() const { return even_only_; }
  const Map& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  std::size_t size() const { return entries_.size(); }

  S get(const SiteSet& X) const {
    const auto it = entries_.find(orbit_rep(X));
    return it == entries_.end() ? S{} : it->second;
  }

  void set(const SiteSet& X, S v) {
    if (X.dimension() != dimension_) throw Error(Errc::dimension_mismatch, to_string(X));
    if (even_only_ && X.size() % 2 != 0) {
      throw Error(Errc::invalid_parameter, "odd set " + to_string(X) + " in an even-only vector");
    }
    SiteSet rep = orbit_rep(X);
    if (is_zero(v)) {
      entries_.erase(rep);
    } else {
      entries_.insert_or_assign(std::move(rep), std::move(v));
    }
  }

 private:
  int dimension_;
  bool even_only_;
  Map entries_;
};

/// Exact B_0 norm: a shape with n sites has exactly n translates through any
/// fixed site.
template <class S>
double ti_norm0(const TIVector<S>& K) {
  double total = 0.0;
  for (const auto& [X, v] : K) total += static_cast<double>(X.size()) * magnitude(v);
  return total;
}

}  // namespace rgspectra
