#include "parabolic/autgroup.hpp"

#include <algorithm>
#include <set>

#include "parabolic/chamber.hpp"
#include "parabolic/errors.hpp"

namespace parabolic {

namespace {

long long positive_mod(long long a, long long m) { return ((a % m) + m) % m; }

// Calls fn on every H in [0, r)^n, point 0 most significant.
template <class Fn>
void for_each_hecke(int r, std::size_t n, Fn&& fn) {
  std::vector<long long> h(n, 0);
  while (true) {
    fn(h);
    std::size_t x = n;
    while (x > 0) {
      --x;
      if (++h[x] < r) break;
      h[x] = 0;
      if (x == 0) return;
    }
  }
}

// Enumerates (perm, s, H) in a fixed order, solving r l = rhs(s, |H|) for l.
// Rank 2 classes with s = -1 are folded into ST+ at degree `fold_degree`.
template <class Rhs>
std::vector<NumTransform> solve_classes(int r, std::size_t n, std::vector<Permutation> perms,
                                        long long fold_degree, Rhs&& rhs) {
  std::sort(perms.begin(), perms.end());
  std::vector<NumTransform> out;
  std::set<NumTransform> seen;
  for (const auto& p : perms) {
    for (int s : {1, -1}) {
      for_each_hecke(r, n, [&](const std::vector<long long>& h) {
        long long total = 0;
        for (long long v : h) total += v;
        long long numer = rhs(s, total);
        if (positive_mod(numer, r) != 0) return;
        NumTransform t{p, s, numer / r, h};
        if (r == 2 && s == -1) t = reduce_dual_rank2(t, fold_degree, r);
        if (seen.insert(t).second) out.push_back(t);
      });
    }
  }
  return out;
}

std::vector<Permutation> symmetry_perms(const CurveData& curve, std::size_t n) {
  if (curve.labels().size() != n) throw DomainError("shape", "curve data has a different point count");
  std::vector<Permutation> out;
  for (const auto& s : curve.symmetries()) out.emplace_back(s.images);
  return out;
}

void require_shape(int r, std::size_t n, const WeightSystem& w) {
  if (w.rank() != r || w.num_points() != n)
    throw DomainError("shape", "(r, n) does not match the weight system");
}

void require_generic(const WeightSystem& w, const char* which) {
  auto report = is_generic(w);
  if (!report.generic)
    throw DomainError("generic", std::string(which) + " weights lie on the wall at level " +
                                     report.witness->level.get_str());
}

}  // namespace

std::vector<NumTransform> candidate_transforms(int r, std::size_t n, long long d,
                                               const CurveData& curve) {
  if (r < 2) throw DomainError("rank", "rank must be at least 2");
  return solve_classes(r, n, symmetry_perms(curve, n), d,
                       [&](int s, long long h) { return (s - 1) * d + h; });
}

AutResult automorphism_group(int r, std::size_t n, long long d, long long g,
                             const WeightSystem& w, const CurveData& curve,
                             const AutOptions& options) {
  require_shape(r, n, w);
  if (g != curve.genus()) throw DomainError("genus", "genus differs from the curve data");
  AutResult out;
  out.generic = is_generic(w).generic;
  if (options.require_generic && !out.generic) require_generic(w, "input");
  for (const auto& t : candidate_transforms(r, n, d, curve)) {
    if (apply_to_degree(t, d, r) != d) throw std::logic_error("candidate does not fix the degree");
    if (same_numerical_chamber(r, apply_to_weights(t, w), w, d)) out.classes.push_back(t);
  }
  out.torsion_factor = power(r, static_cast<unsigned long>(2 * g));
  out.order = 0;
  for (const auto& t : out.classes)
    out.order += to_integer(curve.multiplicity(t.perm.images())) * out.torsion_factor;
  out.chamber_genus_threshold = genus_bounds(w, {}).chamber;
  return out;
}

std::vector<NumTransform> iso_transforms(int r, std::size_t n, long long d1,
                                         const WeightSystem& w1, long long d2,
                                         const WeightSystem& w2,
                                         const std::vector<Permutation>& curve_iso) {
  require_shape(r, n, w1);
  require_shape(r, n, w2);
  for (const auto& p : curve_iso)
    if (p.size() != n) throw DomainError("shape", "curve isomorphism acts on a different point count");
  require_generic(w1, "first");
  require_generic(w2, "second");
  std::vector<NumTransform> out;
  for (const auto& t : solve_classes(r, n, curve_iso, d1,
                                     [&](int s, long long h) { return s * d2 - d1 + h; })) {
    if (apply_to_degree(t, d1, r) != d2) throw std::logic_error("candidate misses the target degree");
    if (same_numerical_chamber(r, apply_to_weights(t, w1), w2, d2)) out.push_back(t);
  }
  return out;
}

ConcentratedOrders concentrated_orders(long long g, int r, long long nD, const Integer& aut_order) {
  if (g < 0 || r < 2 || nD < 1 || aut_order < 1)
    throw DomainError("parameter_range", "need g >= 0, r >= 2, |D| >= 1, |Aut(X,D)| >= 1");
  ConcentratedOrders out;
  Integer torsion = power(r, static_cast<unsigned long>(2 * g));
  out.aut = torsion * aut_order;
  if (r == 2)
    out.threebir = torsion * power(2, static_cast<unsigned long>(nD - 1)) * aut_order;
  else
    out.threebir = torsion * power(r, static_cast<unsigned long>(nD - 1)) * 2 * aut_order;
  out.ratio = out.threebir / out.aut;
  return out;
}

}  // namespace parabolic
