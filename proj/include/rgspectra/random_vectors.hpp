#pragma once

// Seeded random finite-support vectors. Values are drawn from raw mt19937_64
// output with explicit mappings, so a seed reproduces the same vectors on any
// standard library.

#include <cstdint>
#include <random>

#include "rgspectra/coeff_space.hpp"
#include "rgspectra/lattice.hpp"
#include "rgspectra/scalar.hpp"

namespace rgspectra {

struct SamplerOptions {
  Coord radius = 9;           // sites drawn from the box [-radius, radius]^d
  int max_terms = 6;          // number of support sets is uniform in [1, max_terms]
  int max_set_size = 4;       // |X| is geometric(1/2), truncated here
  int lattice_stride = 1;     // with probability 1/2 every site of a set is a multiple of this
  int rational_denominator = 16;
};

class VectorSampler {
 public:
  explicit VectorSampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform();
  /// Uniform in [-1, 1].
  double symmetric();
  /// Uniform integer in [lo, hi].
  std::int64_t integer(std::int64_t lo, std::int64_t hi);

  SiteSet random_set(int dimension, const SamplerOptions& opts);

  CoefficientVector<Real> real_vector(int dimension, LatticeTag tag, const SamplerOptions& opts);
  CoefficientVector<Complex> complex_vector(int dimension, LatticeTag tag, const SamplerOptions& opts);
  /// Values k / denominator with k uniform in [-denominator, denominator].
  CoefficientVector<Rational> rational_vector(int dimension, LatticeTag tag, const SamplerOptions& opts);

 private:
  template <class F>
  void fill(int dimension, const SamplerOptions& opts, F&& put);

  std::mt19937_64 engine_;
};

}  // namespace rgspectra
