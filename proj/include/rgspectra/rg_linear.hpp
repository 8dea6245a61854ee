#pragma once

// Closed-form linearizations of the RG map at J = 0 and their pairing
// adjoints, applied to finitely supported vectors.
//
//   decimation  (L K)(Z)  = K(bZ)
//               (L*K)(bY) = K(Y), zero elsewhere
//   majority    (L K)(Z)  = sum_{W ⊆ Z^o} prod_{z in Z} chi(W ∩ z^o) K(W)
//               (L*K)(Z)  = prod_n chi(W_n) K({n : W_n nonempty}),  W_n = Z ∩ n^o
//
// chi(A) = avg_sigma sigma_A phi(sigma) over a single block; it vanishes for
// even |A| and is bounded by nu for odd |A|.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "rgspectra/coeff_space.hpp"
#include "rgspectra/kernel.hpp"
#include "rgspectra/lattice.hpp"
#include "rgspectra/scalar.hpp"

namespace rgspectra {

/// Memoized chi values for one majority kernel, keyed by the pattern's bit
/// mask in the origin block (site order of block(0)). Blocks with s <= 13 are
/// tabulated in full on construction; larger blocks fill in on demand.
class ChiTable {
 public:
  static constexpr std::int64_t kFullTableLimit = 13;

  explicit ChiTable(const KernelSpec& spec);

  const KernelSpec& spec() const { return spec_; }
  const SiteSet& origin_block() const { return origin_block_; }
  bool tabulated() const { return !table_.empty(); }

  /// Mask of A - b z inside the origin block; throws not_in_block.
  std::uint64_t pattern(const SiteSet& A, const Site& z) const;
  SiteSet pattern_sites(std::uint64_t pattern, const Site& z) const;
  Rational value(std::uint64_t pattern) const;
  /// Nonempty patterns with nonzero chi, ascending by mask. Needs a full table.
  const std::vector<std::uint64_t>& nonzero_patterns() const;

 private:
  std::int64_t numerator(std::uint64_t pattern) const;  // chi * 2^s

  KernelSpec spec_;
  SiteSet origin_block_;
  std::vector<std::int64_t> table_;
  std::vector<std::uint64_t> nonzero_;
  mutable std::shared_mutex lazy_mutex_;
  mutable std::map<std::uint64_t, std::int64_t> lazy_;
};

/// Process-wide table for a majority spec (created once, then read-only).
const ChiTable& chi_table(const KernelSpec& spec);

/// chi(A) for A ⊆ z^o, A nonempty.
Rational chi(const KernelSpec& spec, const SiteSet& A, const Site& z);

/// What the decimation adjoint does at the origin singleton, the one set with
/// {0} = b{0}. `drop` sets (L*K)({0}) = 0, which removes the trivial fixed
/// point; `keep` is the literal pairing adjoint (L*K)({0}) = K({0}).
enum class OriginPolicy { drop, keep };

template <class S>
CoefficientVector<S> apply_L_decimation(const CoefficientVector<S>& K, const Geometry& geom) {
  if (K.tag() != LatticeTag::original) throw Error(Errc::tag_mismatch, "L acts on original-lattice vectors");
  const Coord b = geom.blocking_factor;
  CoefficientVector<S> out(K.dimension(), LatticeTag::image);
  for (const auto& [X, v] : K) {
    std::vector<Site> shrunk;
    shrunk.reserve(X.size());
    bool divisible = true;
    for (const auto& x : X) {
      Site y = x;
      for (auto& c : y.coords) {
        if (c % b != 0) {
          divisible = false;
          break;
        }
        c /= b;
      }
      if (!divisible) break;
      shrunk.push_back(std::move(y));
    }
    if (divisible) out.set(SiteSet(std::move(shrunk)), v);
  }
  return out;
}

template <class S>
CoefficientVector<S> apply_Lstar_decimation(const CoefficientVector<S>& K, const Geometry& geom,
                                            OriginPolicy policy = OriginPolicy::drop) {
  if (K.tag() != LatticeTag::image) throw Error(Errc::tag_mismatch, "L* acts on image-lattice vectors");
  const SiteSet origin{Site::origin(K.dimension())};
  CoefficientVector<S> out(K.dimension(), LatticeTag::original);
  for (const auto& [Y, v] : K) {
    if (policy == OriginPolicy::drop && Y == origin) continue;
    out.set(scale_set(Y, geom), v);
  }
  return out;
}

template <class S>
CoefficientVector<S> apply_L_majority(const CoefficientVector<S>& K, const KernelSpec& spec) {
  if (!spec.is_majority()) throw Error(Errc::invalid_spec, "majority operator with a decimation spec");
  if (K.tag() != LatticeTag::original) throw Error(Errc::tag_mismatch, "L acts on original-lattice vectors");
  const ChiTable& table = chi_table(spec);
  CoefficientVector<S> out(K.dimension(), LatticeTag::image);
  for (const auto& [W, v] : K) {
    Rational coef(1);
    std::vector<Site> image;
    for (const auto& [n, part] : decompose_by_blocks(W, spec.geom())) {
      coef *= table.value(table.pattern(part, n));
      if (sgn(coef) == 0) break;
      image.push_back(n);
    }
    if (sgn(coef) == 0) continue;
    out.add(SiteSet(std::move(image)), from_rational<S>(coef) * v);
  }
  return out;
}

/// Majority adjoint. Each image entry K(Y) fans out to every Z = ∪_{n in Y} W_n
/// with chi(W_n) != 0, so the caller names an original-lattice window that
/// must contain region(Y) for every Y in the support (else window_too_small).
/// Output sets are all inside the window and the result is exact there.
template <class S>
CoefficientVector<S> apply_Lstar_majority(const CoefficientVector<S>& K, const KernelSpec& spec,
                                          const SiteSet& window) {
  if (!spec.is_majority()) throw Error(Errc::invalid_spec, "majority operator with a decimation spec");
  if (K.tag() != LatticeTag::image) throw Error(Errc::tag_mismatch, "L* acts on image-lattice vectors");
  const ChiTable& table = chi_table(spec);
  if (!table.tabulated()) {
    throw Error(Errc::invalid_parameter, "majority adjoint needs s <= " +
                                             std::to_string(ChiTable::kFullTableLimit));
  }
  const auto& patterns = table.nonzero_patterns();
  CoefficientVector<S> out(K.dimension(), LatticeTag::original);
  for (const auto& [Y, v] : K) {
    const SiteSet reach = region(Y, spec.geom());
    if (!reach.is_subset_of(window)) {
      throw Error(Errc::window_too_small, "window does not contain the blocks of " + to_string(Y));
    }
    // Odometer over one chi-nonzero pattern per block of Y.
    std::vector<std::size_t> pick(Y.size(), 0);
    while (true) {
      Rational coef(1);
      std::vector<Site> sites;
      for (std::size_t i = 0; i < Y.size(); ++i) {
        const std::uint64_t p = patterns[pick[i]];
        coef *= table.value(p);
        const SiteSet part = table.pattern_sites(p, Y[i]);
        sites.insert(sites.end(), part.begin(), part.end());
      }
      out.add(SiteSet(std::move(sites)), from_rational<S>(coef) * v);
      std::size_t i = 0;
      for (; i < Y.size(); ++i) {
        if (++pick[i] < patterns.size()) break;
        pick[i] = 0;
      }
      if (i == Y.size()) break;
    }
  }
  return out;
}

/// dJ'(Z)/dJ(W) at J = 0 from the closed forms.
Rational jacobian_closed_form(const KernelSpec& spec, const SiteSet& Z, const SiteSet& W);

/// Applies the forward linearization of `spec` (dispatch on kind).
template <class S>
CoefficientVector<S> apply_L(const CoefficientVector<S>& K, const KernelSpec& spec) {
  return spec.is_majority() ? apply_L_majority(K, spec) : apply_L_decimation(K, spec.geom());
}

/// Applies the adjoint; the window is used by majority only.
template <class S>
CoefficientVector<S> apply_Lstar(const CoefficientVector<S>& K, const KernelSpec& spec,
                                 const SiteSet& window,
                                 OriginPolicy policy = OriginPolicy::drop) {
  return spec.is_majority() ? apply_Lstar_majority(K, spec, window)
                            : apply_Lstar_decimation(K, spec.geom(), policy);
}

}  // namespace rgspectra
