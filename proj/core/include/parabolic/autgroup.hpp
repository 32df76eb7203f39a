#pragma once

#include <cstddef>
#include <vector>

#include "parabolic/permutation.hpp"
#include "parabolic/transform.hpp"
#include "parabolic/weights.hpp"

namespace parabolic {

struct AutOptions {
  // When false, non-generic weights are accepted and the result records
  // generic = false instead of raising.
  bool require_generic = true;
};

struct AutResult {
  std::vector<NumTransform> classes;
  Integer torsion_factor;
  Integer order;
  bool generic = true;
  // Genus from which numerical chambers are geometric chambers.
  Integer chamber_genus_threshold;
  // Genus from which distinct torsion lifts act distinctly.
  long long torsion_lift_min_genus = 4;
};

struct ConcentratedOrders {
  Integer aut;
  Integer threebir;
  Integer ratio;
};

std::vector<NumTransform> candidate_transforms(int r, std::size_t n, long long d,
                                               const CurveData& curve);

AutResult automorphism_group(int r, std::size_t n, long long d, long long g,
                             const WeightSystem& w, const CurveData& curve,
                             const AutOptions& options = {});

std::vector<NumTransform> iso_transforms(int r, std::size_t n, long long d1,
                                         const WeightSystem& w1, long long d2,
                                         const WeightSystem& w2,
                                         const std::vector<Permutation>& curve_iso);

ConcentratedOrders concentrated_orders(long long g, int r, long long nD,
                                       const Integer& aut_order);

}  // namespace parabolic
