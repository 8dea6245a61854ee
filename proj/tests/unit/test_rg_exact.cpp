#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "rgspectra/error.hpp"
#include "rgspectra/rg_exact.hpp"
#include "rgspectra/rg_linear.hpp"

using namespace rgspectra;
using testing::S;
using testing::set1;

namespace {

// Jacobian at zero coupling for b = 3, d = 1 and the image window {0, 1},
// summed by hand: sites -1..4 are bits 0..5, block y covers bits 3y..3y+2.
Rational jacobian_oracle(bool majority, const SiteSet& Z, const SiteSet& W) {
  auto bit = [](const Site& x) { return static_cast<int>(x.coords[0] + 1); };
  std::int64_t total = 0;
  for (int sigma = 0; sigma < 64; ++sigma) {
    auto spin = [&](int i) { return (sigma >> i & 1) ? -1 : 1; };
    for (int sp = 0; sp < 4; ++sp) {
      auto block_spin = [&](int y) { return (sp >> y & 1) ? -1 : 1; };
      int weight = 1;
      for (int y = 0; y < 2; ++y) {
        const int phi = majority ? ((spin(3 * y) + spin(3 * y + 1) + spin(3 * y + 2)) > 0 ? 1 : -1)
                                 : spin(3 * y + 1);
        weight *= phi == block_spin(y) ? 2 : 0;
      }
      if (weight == 0) continue;
      int sw = 1, sz = 1;
      for (const auto& x : W) sw *= spin(bit(x));
      for (const auto& z : Z) sz *= block_spin(static_cast<int>(z.coords[0]));
      total += weight * sw * sz;
    }
  }
  return testing::frac(total, 64 * 4);
}

}  // namespace

TEST_CASE("boltzmann exponent") {
  const auto sites = set1({0, 1});
  auto order = std::make_shared<const SiteIndex>(sites);
  CoefficientVector<Real> J(1);
  CHECK(boltzmann_exponent(J, SpinConfig(order, 0)) == 0.0);
  J.set(set1({0}), 0.4);
  CHECK(boltzmann_exponent(J, SpinConfig(order, 0b01)) == doctest::Approx(-0.4));
  CoefficientVector<Real> pair(1);
  pair.set(set1({0, 1}), 1.0);
  CHECK(boltzmann_exponent(pair, SpinConfig(order, 0b11)) == 1.0);
}

TEST_CASE("frozen partition closed forms") {
  const KernelSpec dec(KernelKind::decimation, 3, 1);
  const KernelSpec maj(KernelKind::majority, 3, 1);
  const FiniteVolume vol = make_volume(set1({0}), dec.geom());
  auto order = std::make_shared<const SiteIndex>(vol.image_sites);
  const double h = 0.37;
  CoefficientVector<Real> J(1);
  for (int k = 0; k < 2; ++k) CHECK(frozen_partition(J, maj, vol, SpinConfig(order, k)) == doctest::Approx(1.0));
  J.set(set1({0}), h);
  CHECK(frozen_partition(J, dec, vol, SpinConfig(order, 0)) == doctest::Approx(std::exp(h)));
  CHECK(frozen_partition(J, dec, vol, SpinConfig(order, 1)) == doctest::Approx(std::exp(-h)));
  CoefficientVector<Real> field(1);
  for (Coord x : {-1, 0, 1}) field.set(set1({x}), h);
  CHECK(frozen_partition(field, maj, vol, SpinConfig(order, 0)) ==
        doctest::Approx((std::exp(3 * h) + 3 * std::exp(h)) / 4));
}

TEST_CASE("rg map fixed point and closed forms") {
  const KernelSpec dec(KernelKind::decimation, 3, 1);
  const KernelSpec maj(KernelKind::majority, 3, 1);
  const FiniteVolume two = make_volume(set1({0, 1}), dec.geom());
  for (const auto& spec : {dec, maj}) {
    for (const auto& [Z, v] : rg_map(CoefficientVector<Real>(1), spec, two)) CHECK(std::abs(v) <= 1e-12);
  }
  const FiniteVolume one = make_volume(set1({0}), dec.geom());
  for (double h : {0.1, 0.7, -1.3}) {
    CoefficientVector<Real> J(1);
    J.set(set1({0}), h);
    CHECK(std::abs(rg_map(J, dec, one).get(set1({0})) - h) <= 1e-12);
  }
  CoefficientVector<Real> field(1);
  for (Coord x : {-1, 0, 1}) field.set(set1({x}), 0.1);
  const double expected = 0.5 * std::log((std::exp(0.3) + 3 * std::exp(0.1)) / (std::exp(-0.3) + 3 * std::exp(-0.1)));
  const double got = rg_map(field, maj, one).get(set1({0}));
  CHECK(std::abs(got - expected) <= 1e-12);
  CHECK(std::abs(got - 0.1501247) <= 1e-7);
}

TEST_CASE("support must stay inside the volume") {
  const KernelSpec dec(KernelKind::decimation, 3, 1);
  const FiniteVolume one = make_volume(set1({0}), dec.geom());
  CoefficientVector<Real> J(1);
  J.set(set1({0, 5}), 0.2);
  CHECK_THROWS_AS(rg_map(J, dec, one), Error);
  try {
    rg_map(J, dec, one);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::support_out_of_volume);
  }
}

TEST_CASE("spin flip: even couplings give even images") {
  const KernelSpec maj(KernelKind::majority, 3, 1);
  const FiniteVolume two = make_volume(set1({0, 1}), maj.geom());
  CoefficientVector<Real> J(1);
  J.set(set1({-1, 0}), 0.3);
  J.set(set1({1, 2}), -0.45);
  J.set(set1({0, 1, 3, 4}), 0.2);
  for (const auto& [Z, v] : rg_map(J, maj, two)) {
    if (Z.size() % 2 == 1) CHECK(std::abs(v) <= 1e-12);
  }
}

TEST_CASE("Jacobian: brute force and closed form against a hand-rolled sum") {
  const FiniteVolume vol = make_volume(set1({0, 1}), Geometry(1, 3));
  for (bool majority : {false, true}) {
    const KernelSpec spec(majority ? KernelKind::majority : KernelKind::decimation, 3, 1);
    for (const auto& Z : subsets(vol.image_sites)) {
      for (const auto& W : subsets(vol.original_sites)) {
        const Rational oracle = jacobian_oracle(majority, Z, W);
        CHECK(jacobian_bruteforce(spec, vol, Z, W) == oracle);
        CHECK(jacobian_closed_form(spec, Z, W) == oracle);
      }
    }
  }
}

TEST_CASE("Jacobian examples") {
  const KernelSpec dec(KernelKind::decimation, 3, 1);
  const KernelSpec maj(KernelKind::majority, 3, 1);
  const FiniteVolume vol = make_volume(set1({0, 1}), dec.geom());
  CHECK(jacobian_bruteforce(dec, vol, set1({1}), set1({3})) == 1);
  CHECK(jacobian_bruteforce(dec, vol, set1({1}), set1({2})) == 0);
  CHECK(jacobian_bruteforce(maj, vol, set1({0}), set1({0})) == Rational(1, 2));
  CHECK(jacobian_closed_form(dec, set1({1, 2}), set1({3, 6})) == 1);
  CHECK(jacobian_closed_form(maj, set1({0}), set1({-1, 0, 1})) == Rational(-1, 2));
  CHECK(jacobian_closed_form(maj, set1({0, 1}), set1({0})) == 0);
  CHECK(std::abs(jacobian_fd(dec, vol, set1({1}), set1({3})) - 1.0) <= 1e-9);
  CHECK(std::abs(jacobian_fd(maj, vol, set1({0}), set1({-1, 0, 1})) + 0.5) <= 1e-6);
}
