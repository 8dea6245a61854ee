#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rgspectra/io.hpp"

namespace rgspectra {

enum class CheckStatus { pass, fail, finding };

std::string to_string(CheckStatus status);

struct Check {
  std::string name;
  std::string claim;  // the statement this check certifies
  CheckStatus status = CheckStatus::pass;
  double measured = 0.0;
  double bound = 0.0;
  std::optional<std::uint64_t> seed;
};

/// A suite's checks in declaration order. Findings are recorded measurements
/// that never affect pass().
class Report {
 public:
  explicit Report(std::string suite) : suite_(std::move(suite)) {}

  const std::string& suite() const { return suite_; }
  const std::vector<Check>& checks() const { return checks_; }
  bool pass() const;

  void at_most(std::string name, std::string claim, double measured, double bound,
               std::optional<std::uint64_t> seed = std::nullopt);
  void at_least(std::string name, std::string claim, double measured, double bound,
                std::optional<std::uint64_t> seed = std::nullopt);
  void finding(std::string name, std::string claim, double measured,
               std::optional<std::uint64_t> seed = std::nullopt);
  void append(const Report& other);

 private:
  std::string suite_;
  std::vector<Check> checks_;
};

Json to_json(const Report& report);

}  // namespace rgspectra
