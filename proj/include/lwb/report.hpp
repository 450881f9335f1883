#pragma once

// Structured evidence for one verified claim: every checked instance with
// its input and both sides of the comparison, so a failing run shows exactly
// which sentence broke which identity.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace lwb::report {

struct ClaimInstance {
  std::string input;
  std::string expected;
  std::string got;
  bool pass;
};

struct ClaimReport {
  std::string claim;
  std::vector<ClaimInstance> instances;
  bool pass = true;
  std::uint64_t seed = 0;
  std::uint64_t corpus_size = 0;

  void add(std::string input, std::string expected, std::string got);
  nlohmann::json to_json() const;
};

struct RunReport {
  std::string version = "report-v1";
  std::uint64_t seed = 0;
  std::uint64_t corpus_size = 0;
  std::vector<ClaimReport> claims;

  bool pass() const;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

}  // namespace lwb::report
