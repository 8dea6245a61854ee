#include <doctest.h>

#include <cstdint>

#include "helpers.hpp"
#include "rgspectra/error.hpp"
#include "rgspectra/kernel.hpp"
#include "rgspectra/rg_linear.hpp"

using namespace rgspectra;
using testing::S;
using testing::set1;

namespace {

// chi(A) * 2^s counted directly: sum over block configurations of sigma_A * sign(sum sigma).
std::int64_t chi_numerator_oracle(int s, std::uint64_t pattern) {
  std::int64_t total = 0;
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << s); ++k) {
    int sum = 0;
    int prod = 1;
    for (int i = 0; i < s; ++i) {
      const int spin = (k >> i & 1U) ? -1 : 1;
      sum += spin;
      if (pattern >> i & 1U) prod *= spin;
    }
    total += prod * (sum > 0 ? 1 : -1);
  }
  return total;
}

SpinConfig config_on(const SiteSet& sites, std::initializer_list<int> spins) {
  auto order = std::make_shared<const SiteIndex>(sites);
  std::uint64_t neg = 0;
  int i = 0;
  for (int v : spins) {
    if (v < 0) neg |= std::uint64_t{1} << i;
    ++i;
  }
  return SpinConfig(order, neg);
}

}  // namespace

TEST_CASE("phi reads the centre site or the block majority") {
  const KernelSpec dec(KernelKind::decimation, 3, 1);
  const KernelSpec maj(KernelKind::majority, 3, 1);
  const auto B = set1({-1, 0, 1});
  CHECK(phi(dec, S({0}), config_on(B, {1, -1, 1})) == -1);
  CHECK(phi(maj, S({0}), config_on(B, {1, 1, -1})) == 1);
  CHECK(phi(maj, S({0}), config_on(B, {-1, 1, -1})) == -1);
  CHECK(t_value(maj, S({0}), config_on(B, {1, 1, -1}), 1) == 2);
  CHECK(t_value(maj, S({0}), config_on(B, {1, 1, -1}), -1) == 0);
  CHECK_THROWS_AS(phi(dec, S({0}), config_on(set1({5}), {1})), Error);
}

TEST_CASE("majority needs odd b") {
  CHECK_THROWS_AS(KernelSpec(KernelKind::majority, 2, 1), Error);
  CHECK_THROWS_AS(nu(KernelSpec(KernelKind::decimation, 3, 1)), Error);
  CHECK(parse_kernel_kind("majority") == KernelKind::majority);
  CHECK_THROWS_AS(parse_kernel_kind("median"), Error);
}

TEST_CASE("nu reference values") {
  CHECK(nu(KernelSpec(KernelKind::majority, 3, 1)) == Rational(1, 2));
  CHECK(nu(KernelSpec(KernelKind::majority, 5, 1)) == Rational(3, 8));
  CHECK(nu(KernelSpec(KernelKind::majority, 3, 2)) == Rational(35, 128));
  CHECK(nu_for_block_size(25) == testing::frac(2704156, 16777216));
  for (int b : {3, 5, 7, 9, 11, 13}) {
    const KernelSpec spec(KernelKind::majority, b, 1);
    CHECK(nu(spec) == nu_bruteforce(spec));
    CHECK(nu(spec) == testing::frac(chi_numerator_oracle(b, 1), 1L << b));
  }
}

TEST_CASE("chi matches a direct count for s = 3, 5, 9") {
  for (auto [b, d] : {std::pair{3, 1}, std::pair{5, 1}, std::pair{3, 2}}) {
    const KernelSpec spec(KernelKind::majority, b, d);
    const ChiTable& table = chi_table(spec);
    const int s = static_cast<int>(spec.s());
    const Rational bound = nu(spec);
    for (std::uint64_t p = 1; p < (std::uint64_t{1} << s); ++p) {
      const Rational expected = testing::frac(chi_numerator_oracle(s, p), 1L << s);
      CHECK(table.value(p) == expected);
      if (__builtin_popcountll(p) % 2 == 0) CHECK(sgn(table.value(p)) == 0);
      CHECK(abs(table.value(p)) <= bound);
    }
  }
}

TEST_CASE("chi for s = 3") {
  const KernelSpec spec(KernelKind::majority, 3, 1);
  CHECK(chi(spec, set1({1}), S({0})) == Rational(1, 2));
  CHECK(chi(spec, set1({-1, 1}), S({0})) == 0);
  CHECK(chi(spec, set1({-1, 0, 1}), S({0})) == Rational(-1, 2));
  CHECK(chi(spec, set1({3}), S({1})) == Rational(1, 2));
  CHECK_THROWS_AS(chi(spec, set1({2}), S({0})), Error);
}
