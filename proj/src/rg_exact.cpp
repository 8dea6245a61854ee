#include "rgspectra/rg_exact.hpp"

#include <cmath>
#include <memory>
#include <utility>

#include "rgspectra/parallel.hpp"

namespace rgspectra {

namespace {

struct CompiledInteraction {
  std::vector<std::pair<std::uint64_t, double>> terms;

  CompiledInteraction(const CoefficientVector<Real>& J, const SiteIndex& index) {
    terms.reserve(J.size());
    for (const auto& [X, v] : J) terms.emplace_back(index.mask(X), v);
  }

  double exponent(std::uint64_t negatives) const {
    double e = 0.0;
    for (const auto& [mask, v] : terms) e += parity_sign(negatives & mask) * v;
    return e;
  }
};

void check_subset(const SiteSet& X, const SiteSet& sites, const char* what) {
  if (X.empty()) throw Error(Errc::empty_set, std::string(what) + " must be nonempty");
  if (!X.is_subset_of(sites)) {
    throw Error(Errc::support_out_of_volume,
                std::string(what) + " " + to_string(X) + " is not inside the volume");
  }
}

}  // namespace

FiniteVolume make_volume(const SiteSet& image_sites, const Geometry& geom) {
  if (image_sites.empty()) throw Error(Errc::empty_set, "empty image window");
  FiniteVolume vol{image_sites, region(image_sites, geom)};
  check_enumeration_size(vol.original_sites.size(), enumeration_cap());
  return vol;
}

void check_support(const CoefficientVector<Real>& J, const SiteSet& sites) {
  for (const auto& [X, v] : J) {
    if (!X.is_subset_of(sites)) {
      throw Error(Errc::support_out_of_volume,
                  "interaction set " + to_string(X) + " escapes the volume");
    }
  }
}

double boltzmann_exponent(const CoefficientVector<Real>& J, const SpinConfig& config) {
  if (!std::all_of(J.begin(), J.end(), [&](const auto& e) { return config.index().covers(e.first); })) {
    check_support(J, config.site_order());
  }
  double e = 0.0;
  for (const auto& [X, v] : J) e += config.product(X) * v;
  return e;
}

double frozen_partition(const CoefficientVector<Real>& J, const KernelSpec& spec,
                        const FiniteVolume& vol, const SpinConfig& sprime) {
  check_support(J, vol.original_sites);
  if (sprime.site_order() != vol.image_sites) {
    throw Error(Errc::missing_site, "block configuration must cover exactly the image window");
  }
  const SiteIndex index(vol.original_sites);
  const BlockKernel kernel(spec, index, vol.image_sites);
  const CompiledInteraction interaction(J, index);
  std::vector<int> target(kernel.blocks());
  for (std::size_t i = 0; i < kernel.blocks(); ++i) target[i] = sprime.value(vol.image_sites[i]);

  return average_over<double>(vol.original_sites, [&](const SpinConfig& c) {
    double weight = 1.0;
    for (std::size_t i = 0; i < kernel.blocks(); ++i) {
      weight *= kernel.phi(i, c.negatives()) == target[i] ? 2.0 : 0.0;
    }
    return weight == 0.0 ? 0.0 : weight * std::exp(interaction.exponent(c.negatives()));
  });
}

std::vector<double> frozen_partition_table(const CoefficientVector<Real>& J, const KernelSpec& spec,
                                           const FiniteVolume& vol) {
  check_support(J, vol.original_sites);
  const std::size_t n = vol.original_sites.size();
  const std::size_t m = vol.image_sites.size();
  check_enumeration_size(n, enumeration_cap());
  const SiteIndex index(vol.original_sites);
  const BlockKernel kernel(spec, index, vol.image_sites);
  const CompiledInteraction interaction(J, index);

  const std::uint64_t total = std::uint64_t{1} << n;
  const std::size_t images = std::size_t{1} << m;
  const std::uint64_t chunks = (total + kReductionChunk - 1) / kReductionChunk;
  std::vector<std::vector<double>> partial(chunks);
  parallel_for(chunks, [&](std::size_t c) {
    std::vector<double> acc(images, 0.0);
    const std::uint64_t lo = c * kReductionChunk;
    const std::uint64_t hi = std::min(total, lo + kReductionChunk);
    for (std::uint64_t k = lo; k < hi; ++k) {
      acc[kernel.image_negatives(k)] += std::exp(interaction.exponent(k));
    }
    partial[c] = std::move(acc);
  });

  // Kernel product is 2^m on matching configurations, normalization is 2^-n.
  const double scale = std::ldexp(1.0, static_cast<int>(m) - static_cast<int>(n));
  std::vector<double> table(images);
  for (std::size_t k = 0; k < images; ++k) {
    std::vector<double> column(chunks);
    for (std::uint64_t c = 0; c < chunks; ++c) column[c] = partial[c][k];
    table[k] = tree_sum(std::move(column)) * scale;
  }
  return table;
}

RgMapResult rg_map_full(const CoefficientVector<Real>& J, const KernelSpec& spec,
                        const FiniteVolume& vol) {
  const std::vector<double> table = frozen_partition_table(J, spec, vol);
  const std::size_t m = vol.image_sites.size();
  std::vector<double> logs(table.size());
  for (std::size_t k = 0; k < table.size(); ++k) {
    if (!(table[k] > 0.0)) {
      throw Error(Errc::degenerate_kernel, "frozen partition function is not positive");
    }
    logs[k] = std::log(table[k]);
  }
  const double norm = std::ldexp(1.0, -static_cast<int>(m));
  RgMapResult out{CoefficientVector<Real>(vol.image_sites.dimension(), LatticeTag::image), 0.0};
  // Fourier extraction over {+-1}^m; subset mask z selects the sites of Z.
  for (std::uint64_t z = 0; z < table.size(); ++z) {
    double acc = 0.0;
    for (std::uint64_t k = 0; k < table.size(); ++k) acc += parity_sign(k & z) * logs[k];
    acc *= norm;
    if (z == 0) {
      out.free_energy = acc;
      continue;
    }
    std::vector<Site> sites;
    for (std::size_t i = 0; i < m; ++i)
      if (z >> i & 1U) sites.push_back(vol.image_sites[i]);
    out.couplings.set(SiteSet(std::move(sites)), acc);
  }
  return out;
}

CoefficientVector<Real> rg_map(const CoefficientVector<Real>& J, const KernelSpec& spec,
                               const FiniteVolume& vol) {
  return rg_map_full(J, spec, vol).couplings;
}

Rational jacobian_bruteforce(const KernelSpec& spec, const FiniteVolume& vol, const SiteSet& Z,
                             const SiteSet& W) {
  check_subset(Z, vol.image_sites, "image set");
  check_subset(W, vol.original_sites, "original set");
  const std::size_t n = vol.original_sites.size();
  const std::size_t m = vol.image_sites.size();
  check_enumeration_size(n, enumeration_cap());
  const SiteIndex original(vol.original_sites);
  const SiteIndex image(vol.image_sites);
  const BlockKernel kernel(spec, original, vol.image_sites);
  const std::uint64_t w_mask = original.mask(W);
  const std::uint64_t z_mask = image.mask(Z);

  std::int64_t sum = 0;
  for (std::uint64_t sigma = 0; sigma < (std::uint64_t{1} << n); ++sigma) {
    const int sw = parity_sign(sigma & w_mask);
    for (std::uint64_t sprime = 0; sprime < (std::uint64_t{1} << m); ++sprime) {
      std::int64_t t = 1;
      for (std::size_t i = 0; i < m && t != 0; ++i) {
        const int target = (sprime >> i & 1U) ? -1 : 1;
        t *= kernel.phi(i, sigma) == target ? 2 : 0;
      }
      sum += t * sw * parity_sign(sprime & z_mask);
    }
  }
  Rational q = Rational(mpz_class(static_cast<long>(sum))) * pow2_inv(static_cast<unsigned>(n + m));
  q.canonicalize();
  return q;
}

double jacobian_fd(const KernelSpec& spec, const FiniteVolume& vol, const SiteSet& Z,
                   const SiteSet& W, double h) {
  if (!(h > 0.0)) throw Error(Errc::invalid_parameter, "finite-difference step must be > 0");
  check_subset(Z, vol.image_sites, "image set");
  check_subset(W, vol.original_sites, "original set");
  const int d = vol.original_sites.dimension();
  CoefficientVector<Real> plus(d), minus(d);
  plus.set(W, h);
  minus.set(W, -h);
  const double up = rg_map(plus, spec, vol).get(Z);
  const double down = rg_map(minus, spec, vol).get(Z);
  return (up - down) / (2.0 * h);
}

}  // namespace rgspectra
