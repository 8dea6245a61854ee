#include "rgspectra/report.hpp"

#include <algorithm>
#include <cmath>

namespace rgspectra {

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::finding: return "finding";
  }
  return "fail";
}

bool Report::pass() const {
  return std::none_of(checks_.begin(), checks_.end(),
                      [](const Check& c) { return c.status == CheckStatus::fail; });
}

void Report::at_most(std::string name, std::string claim, double measured, double bound,
                     std::optional<std::uint64_t> seed) {
  const bool ok = measured <= bound;  // NaN fails
  checks_.push_back(Check{std::move(name), std::move(claim), ok ? CheckStatus::pass : CheckStatus::fail,
                          measured, bound, seed});
}

void Report::at_least(std::string name, std::string claim, double measured, double bound,
                      std::optional<std::uint64_t> seed) {
  const bool ok = measured >= bound;
  checks_.push_back(Check{std::move(name), std::move(claim), ok ? CheckStatus::pass : CheckStatus::fail,
                          measured, bound, seed});
}

void Report::finding(std::string name, std::string claim, double measured,
                     std::optional<std::uint64_t> seed) {
  checks_.push_back(Check{std::move(name), std::move(claim), CheckStatus::finding, measured,
                          std::nan(""), seed});
}

void Report::append(const Report& other) {
  for (const auto& c : other.checks_) {
    Check copy = c;
    copy.name = other.suite_ + "/" + c.name;
    checks_.push_back(std::move(copy));
  }
}

namespace {
Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }
}  // namespace

Json to_json(const Report& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks()) {
    Json entry{{"name", c.name},
               {"claim", c.claim},
               {"status", to_string(c.status)},
               {"measured", number(c.measured)},
               {"bound", number(c.bound)}};
    if (c.seed) entry["seed"] = *c.seed;
    checks.push_back(std::move(entry));
  }
  return Json{{"suite", report.suite()}, {"checks", checks}, {"pass", report.pass()}};
}

}  // namespace rgspectra
