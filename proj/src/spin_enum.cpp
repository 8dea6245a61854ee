#include "rgspectra/spin_enum.hpp"

#include <algorithm>
#include <atomic>

namespace rgspectra {

namespace {
std::atomic<std::size_t> g_cap{25};
}

std::size_t enumeration_cap() { return g_cap.load(); }
void set_enumeration_cap(std::size_t cap) { g_cap.store(std::min<std::size_t>(cap, 62)); }

void check_enumeration_size(std::size_t n_sites, std::size_t cap) {
  if (n_sites > cap || n_sites > 62) {
    throw Error(Errc::enumeration_too_large, std::to_string(n_sites) + " sites exceed the cap of " +
                                                 std::to_string(cap));
  }
}

SiteIndex::SiteIndex(SiteSet sites) : sites_(std::move(sites)) {
  if (sites_.size() > 62) throw Error(Errc::enumeration_too_large, "site index over 62 sites");
}

std::size_t SiteIndex::index(const Site& x) const {
  const auto& v = sites_.sites();
  const auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it == v.end() || *it != x) {
    throw Error(Errc::missing_site, "site " + to_string(x) + " is not in the configuration");
  }
  return static_cast<std::size_t>(it - v.begin());
}

std::uint64_t SiteIndex::mask(const SiteSet& X) const {
  std::uint64_t m = 0;
  for (const auto& x : X) m |= std::uint64_t{1} << index(x);
  return m;
}

SpinConfig SpinConfig::flipped() const {
  const std::size_t n = order_->size();
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return SpinConfig(order_, ~negatives_ & all);
}

int spin_product(const SpinConfig& config, const SiteSet& X) { return config.product(X); }

ConfigRange enumerate_configs(const SiteSet& sites) { return enumerate_configs(sites, enumeration_cap()); }

ConfigRange enumerate_configs(const SiteSet& sites, std::size_t cap) {
  check_enumeration_size(sites.size(), cap);
  return ConfigRange(std::make_shared<const SiteIndex>(sites));
}

}  // namespace rgspectra
