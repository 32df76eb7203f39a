#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "parabolic/weights.hpp"

namespace parabolic {

std::vector<ParabolicType> admissible_types(int r, std::size_t n);
void for_each_admissible_type(int r, std::size_t n,
                              const std::function<void(const ParabolicType&)>& fn);
Integer admissible_type_count(int r, std::size_t n);

long long M(int r, const WeightSystem& w, long long d, const ParabolicType& t);

// Values ordered as admissible_types(r, n).
struct ChamberInvariant {
  int r = 0;
  std::size_t n = 0;
  long long d = 0;
  std::vector<std::pair<ParabolicType, long long>> values;

  std::optional<long long> at(const ParabolicType& t) const;
  friend bool operator==(const ChamberInvariant&, const ChamberInvariant&) = default;
};

// Strict lower and inclusive upper bound for every M value.
Rational M_min(int r, std::size_t n, long long d);
Rational M_max(int r, std::size_t n, long long d);

ChamberInvariant M_vec(int r, const WeightSystem& w, long long d);

bool same_numerical_chamber(int r, const WeightSystem& w1, const WeightSystem& w2,
                            long long d);

bool is_relevant_level(int r, int subrank, long long d, const Integer& level);

std::vector<Wall> walls_crossed(int r, const WeightSystem& w1, const WeightSystem& w2,
                                long long d, bool relevant_only);

}  // namespace parabolic
