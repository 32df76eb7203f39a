#include "doctest.h"
#include "oracles.hpp"
#include "parabolic/errors.hpp"
#include "parabolic/weights.hpp"
#include "random.hpp"

using namespace parabolic;

namespace {

Rational q(const char* s) { return parse_rational(s); }

WeightSystem one_point(std::vector<Rational> a) { return WeightSystem(static_cast<int>(a.size()), {"x"}, {a}); }

WeightSystem two_points(std::vector<Rational> a, std::vector<Rational> b) {
  return WeightSystem(static_cast<int>(a.size()), {"x", "y"}, {a, b});
}

ParabolicType type(std::vector<std::vector<int>> rows) { return ParabolicType(std::move(rows)); }

}  // namespace

TEST_CASE("weight systems validate their invariants") {
  CHECK_THROWS_AS(one_point({q("1/2"), q("1/2")}), DomainError);
  CHECK_THROWS_AS(one_point({q("1/2"), q("1")}), DomainError);
  CHECK_THROWS_AS(one_point({q("-1/2"), q("1/2")}), DomainError);
  CHECK_THROWS_AS(one_point({q("1/2")}), DomainError);
  CHECK_THROWS_AS(WeightSystem(2, {"x", "y"}, {{0, q("1/2")}}), DomainError);
  CHECK_THROWS_AS(WeightSystem(3, {"x"}, {{0, q("1/2")}}), DomainError);
  try {
    one_point({q("2/3"), q("1/3")});
  } catch (const DomainError& e) {
    CHECK(e.invariant() == "strictly_increasing");
  }
}

TEST_CASE("parabolic types") {
  CHECK_THROWS_AS(type({{1, 0}, {1, 1}}), DomainError);
  CHECK_THROWS_AS(type({{2, 0}}), DomainError);
  ParabolicType t = type({{1, 0, 1}, {0, 1, 1}});
  CHECK(t.subrank() == 2);
  CHECK(t.is_admissible());
  CHECK(t.complement() == type({{0, 1, 0}, {1, 0, 0}}));
  CHECK_FALSE(ParabolicType::all_ones(2, 3).is_admissible());
}

TEST_CASE("normalize") {
  CHECK(normalize(one_point({q("1/8"), q("3/8"), q("7/8")})) == one_point({0, q("1/4"), q("3/4")}));
  CHECK(normalize(one_point({0, q("1/2")})) == one_point({0, q("1/2")}));
  CHECK(normalize(two_points({q("1/10"), q("3/5")}, {q("1/10"), q("3/5")})) ==
        two_points({0, q("1/2")}, {0, q("1/2")}));
  testing::Rng rng(1);
  for (int k = 0; k < 50; ++k) {
    WeightSystem w = testing::random_weights(rng, 2 + k % 4, 1 + k % 3);
    CHECK(normalize(normalize(w)) == normalize(w));
    CHECK(normalize(w.translated(testing::random_shift(rng, w))) == normalize(w));
  }
}

TEST_CASE("owt, pdeg and s_min") {
  WeightSystem a = one_point({q("1/8"), q("3/8"), q("7/8")});
  CHECK(owt(a, type({{1, 0, 1}})) == 1);
  CHECK(owt(a, ParabolicType::all_zeros(1, 3)) == 0);
  CHECK(owt(two_points({0, q("1/2")}, {0, q("1/2")}), ParabolicType::all_ones(2, 2)) == 1);
  CHECK_THROWS_AS(owt(a, type({{1, 0}})), DomainError);

  CHECK(pdeg(-1, a) == q("3/8"));
  CHECK(pdeg(5, one_point({0, q("1/2")})) == q("11/2"));
  CHECK(pdeg(0, one_point({0, q("1/4"), q("3/4")})) == 1);

  CHECK(s_min(one_point({0, q("1/2")}), type({{1, 0}})) == q("-1/2"));
  CHECK(s_min(one_point({0, q("1/4"), q("3/4")}), type({{0, 1, 0}})) == q("-1/4"));
  testing::Rng rng(2);
  for (int k = 0; k < 100; ++k) {
    const int r = 2 + k % 4;
    const std::size_t n = 1 + k % 3;
    WeightSystem w = testing::random_weights(rng, r, n);
    ParabolicType t = testing::random_type(rng, r, n);
    CHECK(s_min(w, t) == -s_min(w, t.complement()));
    CHECK(s_min(w, t) == -wall_function(w, t));
  }
}

TEST_CASE("t-numbers") {
  CHECK(t_number(ParabolicType::all_ones(1, 2), ParabolicType::all_ones(1, 2)) == q("1/4"));
  for (std::size_t n = 1; n <= 3; ++n)
    for (int r = 2; r <= 5; ++r)
      CHECK(t_number(ParabolicType::all_ones(n, r), ParabolicType::all_ones(n, r)) ==
            make_rational(static_cast<long long>(n) * r * (r - 1), 2LL * r * r));
  CHECK(t_number(type({{1, 0}}), type({{0, 1}})) == 0);
  CHECK(t_number(type({{0, 1}}), type({{1, 0}})) == 1);
  CHECK_THROWS_AS(t_number(ParabolicType::all_zeros(1, 2), type({{1, 0}})), DomainError);
}

TEST_CASE("dimensions") {
  HitchinDimensions a = dims(2, 1, 2);
  CHECK(a.dim_fixed_det == 4);
  CHECK(a.dim_W == std::vector<long long>{2, 4});
  CHECK(a.dim_W_total == 4);
  HitchinDimensions b = dims(6, 2, 3);
  CHECK(b.dim_fixed_det == 46);
  CHECK(b.dim_W == std::vector<long long>{6, 17, 29});
  CHECK(b.dim_W_total == 46);
  CHECK(b.dim_nonfixed == 9 * 5 + 1 + 6);
  CHECK_THROWS_AS(dims(1, 1, 2), DomainError);
  CHECK_THROWS_AS(dims(2, 0, 2), DomainError);

  CHECK(dim_nonreduced_stratum(2, 1, 5, 1) == 13);
  CHECK(dim_nonreduced_stratum(2, 1, 5, 2) == 6);
  CHECK(dim_nonreduced_stratum(2, 1, 4, 2) == 4);
  CHECK_THROWS_AS(dim_nonreduced_stratum(2, 1, 4, 3), DomainError);
  for (long long g = 2; g <= 6; ++g)
    for (long long n = 1; n <= 4; ++n)
      for (long long r = 2; r <= 7; ++r) {
        long long total = 0;
        for (long long k = 2; k <= r; ++k) total += oracle::h0(g, n, k);
        CHECK(dims(g, n, r).dim_W_total == total);
      }
}

TEST_CASE("genericity") {
  testing::Rng rng(3);
  for (int k = 0; k < 20; ++k) CHECK(is_generic(testing::random_weights(rng, 2, 1)).generic);
  GenericityReport bad = is_generic(two_points({0, q("1/2")}, {0, q("1/2")}));
  REQUIRE_FALSE(bad.generic);
  REQUIRE(bad.witness);
  CHECK(bad.witness->pattern == type({{1, 0}, {1, 0}}));
  CHECK(bad.witness->level == 1);
  CHECK(is_generic(two_points({0, q("2/5")}, {0, q("1/4")})).generic);

  for (int k = 0; k < 300; ++k) {
    WeightSystem w = testing::random_weights(rng, 2 + k % 3, 1 + k % 3);
    const bool g = is_generic(w).generic;
    CHECK(g == oracle::generic(w));
    CHECK(g == is_generic(normalize(w)).generic);
    CHECK(g == is_generic(w.translated(testing::random_shift(rng, w))).generic);
  }
}

TEST_CASE("concentration") {
  CHECK(is_concentrated(one_point({0, q("1/2")})));
  CHECK_FALSE(is_concentrated(one_point({q("1/8"), q("3/8"), q("7/8")})));
  CHECK(is_concentrated(one_point({0, q("999/1000")})));
  CHECK_FALSE(is_concentrated(two_points({0, q("1/2")}, {0, q("1/4")})));
  CHECK(is_concentrated(two_points({0, q("49/100")}, {0, q("1/4")})));
}

TEST_CASE("genus bounds") {
  WeightSystem a = two_points({0, q("1/2")}, {0, q("1/3")});
  GenusBounds b = genus_bounds(a, GenusBoundsQuery{a});
  CHECK(b.chamber == 3);
  CHECK_FALSE(b.refined);

  GenusBoundsQuery lm;
  lm.l = 1;
  lm.m = 0;
  lm.k = 1;
  CHECK(genus_bounds(one_point({0, q("1/3"), q("2/3")}), lm).lm_stability == 3);
  lm.l = 2;
  CHECK(genus_bounds(one_point({0, q("1/3"), q("2/3")}), lm).codimension == q("3/2"));

  GenusBoundsQuery refined;
  refined.refined = true;
  CHECK_THROWS_AS(genus_bounds(a, refined), DomainError);
  refined.type = type({{1, 0}, {1, 0}});
  // 1 + floor((1 - 0)(1 - 1) + (1 - 1/2)(1 - 0) + ...)/1 over both points.
  CHECK(genus_bounds(a, refined).refined == Rational(1 + 1));
}

TEST_CASE("stability check against slopes") {
  WeightSystem a = two_points({0, q("1/2")}, {0, q("1/2")});
  CHECK(stability_check(2, 0, a, {1, 0, type({{1, 0}, {1, 0}})}) == SlopeComparison::strict);
  CHECK(stability_check(2, 0, a, {1, 1, type({{1, 0}, {1, 0}})}) == SlopeComparison::violated);
  // (0 + 1)/1 against (0 + 1)/2.
  CHECK(stability_check(2, 0, a, {1, 0, type({{0, 1}, {0, 1}})}) == SlopeComparison::violated);
  CHECK(stability_check(2, 1, a, {1, 0, type({{0, 1}, {0, 1}})}) == SlopeComparison::equality);
  CHECK_THROWS_AS(stability_check(2, 0, a, {2, 0, type({{1, 0}, {1, 0}})}), DomainError);

  testing::Rng rng(4);
  for (int k = 0; k < 300; ++k) {
    const int r = 2 + k % 3;
    const std::size_t n = 1 + k % 3;
    WeightSystem w = testing::random_generic_weights(rng, r, n);
    ParabolicType t = testing::random_type(rng, r, n);
    for (long long df = -4; df <= 4; ++df)
      CHECK(stability_check(r, testing::uniform(rng, -4, 4), w, {t.subrank(), df, t}) != SlopeComparison::equality);
  }
}

TEST_CASE("curve data") {
  CHECK_THROWS_AS(CurveData(2, {"x", "y"}, {{{1, 0}, 1}}), DomainError);
  CHECK_THROWS_AS(CurveData(2, {"x", "y"}, {{{0, 1}, 0}}), DomainError);
  CHECK_THROWS_AS(CurveData(2, {"x", "y"}, {{{0, 1}, 1}, {{0, 1}, 1}}), DomainError);
  CurveData c(2, {"x", "y"}, {{{0, 1}, 2}, {{1, 0}, 2}});
  CHECK(c.multiplicity({1, 0}) == 2);
  CHECK(CurveData::trivial(3, {"x"}).symmetries().size() == 1);
}
