#include "rgspectra/kernel.hpp"

#include "rgspectra/error.hpp"

namespace rgspectra {

std::string to_string(KernelKind kind) {
  return kind == KernelKind::decimation ? "decimation" : "majority";
}

KernelKind parse_kernel_kind(const std::string& name) {
  if (name == "decimation") return KernelKind::decimation;
  if (name == "majority") return KernelKind::majority;
  throw Error(Errc::invalid_spec, "unknown transform '" + name + "'");
}

KernelSpec::KernelSpec(KernelKind kind, Geometry geom) : kind_(kind), geom_(geom) {
  if (geom_.dimension < 1 || geom_.blocking_factor < 2) {
    throw Error(Errc::invalid_spec, "need d >= 1 and b >= 2");
  }
  if (kind_ == KernelKind::majority && !geom_.odd()) {
    throw Error(Errc::invalid_spec, "majority rule requires an odd blocking factor (b = " +
                                        std::to_string(geom_.blocking_factor) + ")");
  }
}

int phi(const KernelSpec& spec, const Site& y, const SpinConfig& config) {
  if (spec.kind() == KernelKind::decimation) {
    return config.value(scale_site(y, spec.b()));
  }
  int sum = 0;
  for (const auto& x : block(y, spec.geom())) sum += config.value(x);
  return sum > 0 ? 1 : -1;
}

int t_value(const KernelSpec& spec, const Site& y, const SpinConfig& config, int sprime) {
  if (sprime != 1 && sprime != -1) throw Error(Errc::invalid_parameter, "block spin must be +-1");
  return phi(spec, y, config) == sprime ? 2 : 0;
}

Rational nu_for_block_size(std::int64_t s) {
  if (s < 1 || s % 2 == 0) throw Error(Errc::invalid_spec, "nu needs an odd block size");
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(s - 1), static_cast<unsigned long>((s - 1) / 2));
  Rational q = Rational(c) * pow2_inv(static_cast<unsigned>(s - 1));
  q.canonicalize();
  return q;
}

Rational nu(const KernelSpec& spec) {
  if (!spec.is_majority()) throw Error(Errc::invalid_spec, "nu is defined for majority rule only");
  return nu_for_block_size(spec.s());
}

Rational s_nu(const KernelSpec& spec) { return Rational(spec.s()) * nu(spec); }

Rational nu_bruteforce(const KernelSpec& spec) {
  if (!spec.is_majority()) throw Error(Errc::invalid_spec, "nu is defined for majority rule only");
  const Site y0 = Site::origin(spec.d());
  const SiteSet blk = block(y0, spec.geom());
  const SiteSet single{blk[0]};
  return average_over<Rational>(blk, [&](const SpinConfig& c) {
    return c.product(single) * phi(spec, y0, c);
  });
}

BlockKernel::BlockKernel(const KernelSpec& spec, const SiteIndex& order, const SiteSet& image_sites)
    : majority_(spec.is_majority()), block_size_(static_cast<int>(spec.s())) {
  masks_.reserve(image_sites.size());
  for (const auto& y : image_sites) {
    if (majority_) {
      masks_.push_back(order.mask(block(y, spec.geom())));
    } else {
      masks_.push_back(order.mask(SiteSet{scale_site(y, spec.b())}));
    }
  }
}

}  // namespace rgspectra
