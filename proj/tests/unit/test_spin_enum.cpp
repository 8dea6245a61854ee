#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "rgspectra/error.hpp"
#include "rgspectra/parallel.hpp"
#include "rgspectra/spin_enum.hpp"

using namespace rgspectra;
using testing::S;
using testing::set1;

TEST_CASE("configuration counts") {
  CHECK(enumerate_configs(set1({0})).count() == 2);
  CHECK(enumerate_configs(SiteSet{}).count() == 1);
  std::set<std::vector<int>> seen;
  const auto sites = set1({0, 1, 2});
  for (const SpinConfig c : enumerate_configs(sites)) {
    seen.insert({c.value(S({0})), c.value(S({1})), c.value(S({2}))});
  }
  CHECK(seen.size() == 8);
  CHECK_THROWS_AS(enumerate_configs(set1({0, 1, 2}), 2), Error);
}

TEST_CASE("spin products") {
  const auto sites = set1({0, 1, 2});
  auto order = std::make_shared<const SiteIndex>(sites);
  const SpinConfig all_up(order, 0);
  CHECK(all_up.product(SiteSet{}) == 1);
  CHECK(all_up.product(set1({0, 2})) == 1);
  const SpinConfig one_down(order, 0b010);  // site (1) is -1
  CHECK(one_down.product(set1({1, 2})) == -1);
  CHECK(one_down.product(set1({0, 2})) == 1);
  CHECK_THROWS_AS(one_down.value(S({7})), Error);
}

TEST_CASE("averages") {
  const auto sites = set1({0, 1, 2, 3});
  CHECK(average_over<Rational>(sites, [](const SpinConfig&) { return 1; }) == 1);
  CHECK(average_over<Rational>(sites, [](const SpinConfig& c) { return c.product(set1({1, 3})); }) == 0);
  CHECK(average_over<Rational>(sites, [](const SpinConfig& c) {
          return c.product(set1({1, 3})) * c.product(set1({1, 3}));
        }) == 1);
}

TEST_CASE("Fourier characters are orthogonal") {
  const auto sites = set1({0, 1, 2});
  const auto all = subsets(sites);
  for (const auto& X : all) {
    for (const auto& Y : all) {
      const Rational v = average_over<Rational>(sites, [&](const SpinConfig& c) { return c.product(X) * c.product(Y); });
      CHECK(v == (X == Y ? 1 : 0));
    }
  }
}

TEST_CASE("floating averages do not depend on the thread count") {
  const auto sites = set1({0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13});
  auto f = [](const SpinConfig& c) { return 0.1 * static_cast<double>(c.negatives() % 97) + 1e-3 * c.product_mask(5); };
  set_thread_count(1);
  const double one = average_over<double>(sites, f);
  set_thread_count(4);
  const double four = average_over<double>(sites, f);
  set_thread_count(0);
  CHECK(one == four);
}
