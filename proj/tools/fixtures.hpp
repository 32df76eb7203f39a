#pragma once

#include <string>
#include <vector>

namespace parabolic {

struct FixtureClaim {
  std::string family;
  std::string claim;
  bool pass = false;
  std::string detail;
};

// The worked examples: the rank-2 swapped-points family, the rank-3
// involution and its rank-r generalization.
std::vector<FixtureClaim> run_fixtures();

}  // namespace parabolic
