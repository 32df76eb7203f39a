#pragma once

#include <cstdint>
#include <string>

namespace parabolic::testing {

struct SuiteResult {
  bool pass = true;
  std::size_t checks = 0;
  std::string detail;  // first failure, or a summary on success

  void check(bool ok, const std::string& what);
};

SuiteResult rank3_fixture();
SuiteResult rank2_fixture();
SuiteResult concentrated_chamber(std::uint64_t seed, std::size_t instances = 100);
SuiteResult dimension_identity();
SuiteResult group_suite(std::uint64_t seed, std::size_t triples = 1000, std::size_t words = 200);
SuiteResult chamber_suite(std::uint64_t seed, std::size_t pairs = 1000, std::size_t subs = 1000);
SuiteResult matrix_suite(std::uint64_t seed, std::size_t factorizations = 500, std::size_t conjugations = 100);

}  // namespace parabolic::testing
