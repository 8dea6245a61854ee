#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "rgspectra/coeff_space.hpp"
#include "rgspectra/error.hpp"
#include "rgspectra/random_vectors.hpp"

using namespace rgspectra;
using testing::S;
using testing::set1;

TEST_CASE("norm examples") {
  CoefficientVector<Real> single(1);
  single.set(set1({4}), -2.5);
  CHECK(norm_r(single, 0.0) == doctest::Approx(2.5));
  CHECK(norm_r(single, 3.0) == doctest::Approx(2.5));

  CoefficientVector<Real> pair(1);
  pair.set(set1({0, 1}), 2.0);
  CHECK(norm_r(pair, 0.0) == doctest::Approx(2.0));

  CoefficientVector<Real> wide(1);
  wide.set(set1({0, 2}), 1.0);
  CHECK(norm_r(wide, 1.0) == doctest::Approx(7.389056).epsilon(1e-6));
  CHECK(norm_r_star(wide, 1.0) == doctest::Approx(0.135335).epsilon(1e-5));

  CoefficientVector<Real> unit(2);
  unit.set(SiteSet{S({3, 3})}, 1.0);
  CHECK(norm_r_star(unit, 0.7) == 1.0);

  CoefficientVector<Real> chain(1);
  for (int n = 0, pos = 1; n <= 5; ++n, pos *= 3) chain.set(set1({pos}), 1.0);
  CHECK(norm_r_star(chain, 0.2) == 6.0);

  CHECK_THROWS_AS(norm_r(wide, -0.1), Error);
  CHECK_THROWS_AS(norm_r_star(wide, -0.1), Error);
}

TEST_CASE("pairing and evenness") {
  CoefficientVector<Rational> a(1), b(1);
  a.set(set1({0}), Rational(3));
  b.set(set1({1}), Rational(3));
  CHECK(pairing(a, b) == 0);
  CHECK(pairing(a, a) == 9);
  CHECK_THROWS_AS(pairing(a, b.retagged(LatticeTag::image)), Error);

  CoefficientVector<Real> even(1);
  CHECK(is_even(even));
  even.set(set1({0, 1}), 1.0);
  CHECK(is_even(even));
  even.set(set1({2}), 1.0);
  CHECK_FALSE(is_even(even));
}

TEST_CASE("vectors reject empty sets and mixed dimensions") {
  CoefficientVector<Real> K(1);
  CHECK_THROWS_AS(K.set(SiteSet{}, 1.0), Error);
  CHECK_THROWS_AS(K.set(SiteSet{S({0, 0})}, 1.0), Error);
  K.set(set1({0}), 0.0);
  CHECK(K.empty());
}

TEST_CASE("orbit representatives and the TI norm") {
  CHECK(orbit_rep(set1({5, 6})) == set1({0, 1}));
  CHECK(orbit_rep(SiteSet{S({0, 0})}) == SiteSet{S({0, 0})});
  CHECK_THROWS_AS(orbit_rep(SiteSet{}), Error);

  TIVector<Real> one(1, true);
  one.set(set1({7, 8}), 1.0);
  CHECK(ti_norm0(one) == 2.0);
  CHECK_THROWS_AS(one.set(set1({0}), 1.0), Error);

  for (int d = 1; d <= 3; ++d) {
    TIVector<Real> nn(d, true);
    for (int axis = 0; axis < d; ++axis) nn.set(SiteSet{Site::origin(d), Site::axis(d, 1, axis)}, 1.0);
    CHECK(ti_norm0(nn) == 2.0 * d);
  }
}

TEST_CASE("norm properties on random vectors") {
  VectorSampler rng(2024);
  SamplerOptions opts;
  opts.radius = 5;
  for (int trial = 0; trial < 200; ++trial) {
    const int d = 1 + trial % 2;
    const auto K1 = rng.real_vector(d, LatticeTag::original, opts);
    const auto K2 = rng.real_vector(d, LatticeTag::original, opts);
    for (double r : {0.0, 0.3, 1.0}) {
      // Hoelder: |<K1, K2>| <= ||K1||_r ||K2||*_r
      CHECK(std::abs(pairing(K1, K2)) <= norm_r(K1, r) * norm_r_star(K2, r) * (1 + 1e-12) + 1e-15);
      CHECK(norm_r(K1 + K2, r) <= (norm_r(K1, r) + norm_r(K2, r)) * (1 + 1e-12));
      CHECK(norm_r_star(K1 + K2, r) <= (norm_r_star(K1, r) + norm_r_star(K2, r)) * (1 + 1e-12));
      CHECK(norm_r(-2.0 * K1, r) == doctest::Approx(2.0 * norm_r(K1, r)));
    }
    CHECK(norm_r(K1, 0.0) <= norm_r(K1, 0.5));
    CHECK(norm_r_star(K1, 0.5) <= norm_r_star(K1, 0.0));
  }
}

TEST_CASE("samplers are reproducible") {
  VectorSampler a(7), b(7);
  SamplerOptions opts;
  for (int i = 0; i < 20; ++i) {
    CHECK(a.rational_vector(2, LatticeTag::image, opts) == b.rational_vector(2, LatticeTag::image, opts));
  }
}
