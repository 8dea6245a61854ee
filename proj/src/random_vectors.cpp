#include "rgspectra/random_vectors.hpp"

namespace rgspectra {

double VectorSampler::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double VectorSampler::symmetric() {
  // 2^53 + 1 equally spaced points covering both endpoints.
  const std::uint64_t k = engine_() % ((std::uint64_t{1} << 53) + 1);
  return static_cast<double>(k) * 0x1.0p-52 - 1.0;
}

std::int64_t VectorSampler::integer(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(engine_() % span);
}

SiteSet VectorSampler::random_set(int dimension, const SamplerOptions& opts) {
  int size = 1;
  while (size < opts.max_set_size && uniform() < 0.5) ++size;
  const bool strided = opts.lattice_stride > 1 && uniform() < 0.5;
  const Coord reach = strided ? opts.radius / opts.lattice_stride : opts.radius;
  std::vector<Site> sites;
  for (int k = 0; k < size; ++k) {
    Site x{std::vector<Coord>(dimension)};
    for (auto& c : x.coords) {
      c = integer(-reach, reach);
      if (strided) c *= opts.lattice_stride;
    }
    sites.push_back(std::move(x));
  }
  return SiteSet(std::move(sites));
}

template <class F>
void VectorSampler::fill(int dimension, const SamplerOptions& opts, F&& put) {
  const auto terms = integer(1, opts.max_terms);
  for (std::int64_t t = 0; t < terms; ++t) put(random_set(dimension, opts));
}

CoefficientVector<Real> VectorSampler::real_vector(int dimension, LatticeTag tag,
                                                   const SamplerOptions& opts) {
  CoefficientVector<Real> K(dimension, tag);
  fill(dimension, opts, [&](const SiteSet& X) { K.set(X, symmetric()); });
  return K;
}

CoefficientVector<Complex> VectorSampler::complex_vector(int dimension, LatticeTag tag,
                                                         const SamplerOptions& opts) {
  CoefficientVector<Complex> K(dimension, tag);
  fill(dimension, opts, [&](const SiteSet& X) {
    const double re = symmetric();
    K.set(X, Complex(re, symmetric()));
  });
  return K;
}

CoefficientVector<Rational> VectorSampler::rational_vector(int dimension, LatticeTag tag,
                                                           const SamplerOptions& opts) {
  CoefficientVector<Rational> K(dimension, tag);
  fill(dimension, opts, [&](const SiteSet& X) {
    const long den = opts.rational_denominator;
    Rational q(mpz_class(static_cast<long>(integer(-den, den))), mpz_class(den));
    q.canonicalize();
    K.set(X, q);
  });
  return K;
}

}  // namespace rgspectra
