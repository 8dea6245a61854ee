#include "rgspectra/rg_linear.hpp"

#include <algorithm>

#include "rgspectra/parallel.hpp"
#include "rgspectra/spin_enum.hpp"

namespace rgspectra {

namespace {

// chi(pattern) * 2^s by direct enumeration of the block.
std::int64_t chi_numerator(std::uint64_t pattern, int s) {
  std::int64_t sum = 0;
  for (std::uint64_t sigma = 0; sigma < (std::uint64_t{1} << s); ++sigma) {
    const int block_spin = 2 * __builtin_popcountll(sigma) < s ? 1 : -1;
    sum += parity_sign(sigma & pattern) * block_spin;
  }
  return sum;
}

}  // namespace

ChiTable::ChiTable(const KernelSpec& spec)
    : spec_(spec), origin_block_(block(Site::origin(spec.d()), spec.geom())) {
  if (!spec_.is_majority()) throw Error(Errc::invalid_spec, "chi is defined for majority rule only");
  const std::int64_t s = spec_.s();
  if (s <= kFullTableLimit) {
    table_.assign(std::size_t{1} << s, 0);
    parallel_for(table_.size(), [&](std::size_t p) { table_[p] = chi_numerator(p, static_cast<int>(s)); });
    for (std::uint64_t p = 1; p < table_.size(); ++p)
      if (table_[p] != 0) nonzero_.push_back(p);
  }
}

std::uint64_t ChiTable::pattern(const SiteSet& A, const Site& z) const {
  const int b = spec_.b();
  const int d = spec_.d();
  const Coord low = (b - 1) / 2;
  std::uint64_t mask = 0;
  for (const auto& x : A) {
    if (x.dimension() != d) throw Error(Errc::dimension_mismatch, to_string(x));
    std::uint64_t index = 0;
    for (int i = 0; i < d; ++i) {
      const Coord offset = x[i] - static_cast<Coord>(b) * z[i] + low;
      if (offset < 0 || offset >= b) {
        throw Error(Errc::not_in_block, to_string(A) + " is not inside the block of " + to_string(z));
      }
      index = index * static_cast<std::uint64_t>(b) + static_cast<std::uint64_t>(offset);
    }
    mask |= std::uint64_t{1} << index;
  }
  return mask;
}

SiteSet ChiTable::pattern_sites(std::uint64_t pattern, const Site& z) const {
  std::vector<Site> out;
  const Site shift = scale_site(z, spec_.b());
  for (std::size_t i = 0; i < origin_block_.size(); ++i) {
    if (!(pattern >> i & 1U)) continue;
    Site x = origin_block_[i];
    for (std::size_t k = 0; k < x.coords.size(); ++k) x.coords[k] += shift[k];
    out.push_back(std::move(x));
  }
  return SiteSet(std::move(out));
}

std::int64_t ChiTable::numerator(std::uint64_t pattern) const {
  if (!table_.empty()) return table_.at(pattern);
  {
    std::shared_lock lock(lazy_mutex_);
    const auto it = lazy_.find(pattern);
    if (it != lazy_.end()) return it->second;
  }
  check_enumeration_size(static_cast<std::size_t>(spec_.s()), enumeration_cap());
  const std::int64_t v = chi_numerator(pattern, static_cast<int>(spec_.s()));
  std::unique_lock lock(lazy_mutex_);
  lazy_.emplace(pattern, v);
  return v;
}

Rational ChiTable::value(std::uint64_t pattern) const {
  if (pattern == 0) return Rational(0);  // chi(empty) = avg phi = 0
  Rational q = Rational(mpz_class(static_cast<long>(numerator(pattern)))) *
               pow2_inv(static_cast<unsigned>(spec_.s()));
  q.canonicalize();
  return q;
}

const std::vector<std::uint64_t>& ChiTable::nonzero_patterns() const {
  if (table_.empty()) throw Error(Errc::invalid_parameter, "no full chi table for this block size");
  return nonzero_;
}

const ChiTable& chi_table(const KernelSpec& spec) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<ChiTable>> tables;
  if (!spec.is_majority()) throw Error(Errc::invalid_spec, "chi is defined for majority rule only");
  std::lock_guard lock(mutex);
  auto& slot = tables[{spec.b(), spec.d()}];
  if (!slot) slot = std::make_unique<ChiTable>(spec);
  return *slot;
}

Rational chi(const KernelSpec& spec, const SiteSet& A, const Site& z) {
  if (A.empty()) throw Error(Errc::empty_set, "chi of an empty pattern");
  const ChiTable& table = chi_table(spec);
  return table.value(table.pattern(A, z));
}

Rational jacobian_closed_form(const KernelSpec& spec, const SiteSet& Z, const SiteSet& W) {
  if (Z.empty() || W.empty()) throw Error(Errc::empty_set, "Jacobian indices must be nonempty");
  if (!spec.is_majority()) {
    return scale_set(Z, spec.geom()) == W ? Rational(1) : Rational(0);
  }
  const auto parts = decompose_by_blocks(W, spec.geom());
  // W must live inside Z^o and meet every block of Z.
  if (parts.size() != Z.size()) return Rational(0);
  Rational coef(1);
  for (const auto& [n, part] : parts) {
    if (!Z.contains(n)) return Rational(0);
    coef *= chi(spec, part, n);
  }
  return coef;
}

}  // namespace rgspectra
