#pragma once

// Exhaustive enumeration of Ising configurations on a finite site list.
//
// Configuration k assigns spin -1 to site i iff bit i of k is set, so the
// stream is deterministic and indexable; products sigma_X reduce to a parity
// of (k & mask(X)).

#include <cstdint>
#include <iterator>
#include <memory>
#include <vector>

#include "rgspectra/error.hpp"
#include "rgspectra/lattice.hpp"
#include "rgspectra/parallel.hpp"
#include "rgspectra/scalar.hpp"

namespace rgspectra {

std::size_t enumeration_cap();
void set_enumeration_cap(std::size_t cap);
void check_enumeration_size(std::size_t n_sites, std::size_t cap);

/// Fixed site order plus a Site -> bit lookup.
class SiteIndex {
 public:
  explicit SiteIndex(SiteSet sites);

  const SiteSet& sites() const { return sites_; }
  std::size_t size() const { return sites_.size(); }
  /// Throws missing_site for sites outside the order.
  std::size_t index(const Site& x) const;
  std::uint64_t mask(const SiteSet& X) const;
  bool covers(const SiteSet& X) const { return X.is_subset_of(sites_); }

 private:
  SiteSet sites_;
};

inline int parity_sign(std::uint64_t bits) { return (__builtin_popcountll(bits) & 1) ? -1 : 1; }

class SpinConfig {
 public:
  SpinConfig(std::shared_ptr<const SiteIndex> order, std::uint64_t negatives)
      : order_(std::move(order)), negatives_(negatives) {}

  const SiteSet& site_order() const { return order_->sites(); }
  const SiteIndex& index() const { return *order_; }
  std::uint64_t negatives() const { return negatives_; }

  int value(const Site& x) const { return (negatives_ >> order_->index(x) & 1U) ? -1 : 1; }
  int product(const SiteSet& X) const { return parity_sign(negatives_ & order_->mask(X)); }
  int product_mask(std::uint64_t mask) const { return parity_sign(negatives_ & mask); }
  /// The globally flipped configuration -sigma.
  SpinConfig flipped() const;

 private:
  std::shared_ptr<const SiteIndex> order_;
  std::uint64_t negatives_;
};

int spin_product(const SpinConfig& config, const SiteSet& X);

/// Forward range over all 2^n configurations.
class ConfigRange {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = SpinConfig;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(const std::shared_ptr<const SiteIndex>* order, std::uint64_t k) : order_(order), k_(k) {}
    SpinConfig operator*() const { return SpinConfig(*order_, k_); }
    iterator& operator++() {
      ++k_;
      return *this;
    }
    iterator operator++(int) {
      auto t = *this;
      ++k_;
      return t;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.k_ == b.k_; }

   private:
    const std::shared_ptr<const SiteIndex>* order_ = nullptr;
    std::uint64_t k_ = 0;
  };

  explicit ConfigRange(std::shared_ptr<const SiteIndex> order) : order_(std::move(order)) {}

  std::uint64_t count() const { return std::uint64_t{1} << order_->size(); }
  iterator begin() const { return iterator(&order_, 0); }
  iterator end() const { return iterator(&order_, count()); }
  const std::shared_ptr<const SiteIndex>& order() const { return order_; }

 private:
  std::shared_ptr<const SiteIndex> order_;
};

ConfigRange enumerate_configs(const SiteSet& sites);
ConfigRange enumerate_configs(const SiteSet& sites, std::size_t cap);

/// Configurations per reduction chunk in floating-point mode.
inline constexpr std::uint64_t kReductionChunk = 4096;

/// 2^-n * sum over all configurations of f(config). Rational results are exact;
/// floating results are summed per fixed chunk and combined by tree_sum, so
/// they are identical for any thread count.
template <class S, class F>
S average_over(const SiteSet& sites, F&& f, std::size_t cap) {
  static_assert(is_scalar_v<S>);
  check_enumeration_size(sites.size(), cap);
  auto order = std::make_shared<const SiteIndex>(sites);
  const std::uint64_t total = std::uint64_t{1} << sites.size();
  const std::uint64_t chunks = (total + kReductionChunk - 1) / kReductionChunk;
  std::vector<S> partial(chunks, S{});
  parallel_for(chunks, [&](std::size_t c) {
    S acc{};
    const std::uint64_t lo = c * kReductionChunk;
    const std::uint64_t hi = std::min(total, lo + kReductionChunk);
    for (std::uint64_t k = lo; k < hi; ++k) acc += S(f(SpinConfig(order, k)));
    partial[c] = std::move(acc);
  });
  S sum = tree_sum(std::move(partial));
  if constexpr (std::is_same_v<S, Rational>) {
    return sum * pow2_inv(static_cast<unsigned>(sites.size()));
  } else {
    return sum * std::ldexp(1.0, -static_cast<int>(sites.size()));
  }
}

template <class S, class F>
S average_over(const SiteSet& sites, F&& f) {
  return average_over<S>(sites, std::forward<F>(f), enumeration_cap());
}

}  // namespace rgspectra
