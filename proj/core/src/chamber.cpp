#include "parabolic/chamber.hpp"

#include "parabolic/errors.hpp"

namespace parabolic {

namespace {

void require_context(int r, const WeightSystem& w) {
  if (r != w.rank()) throw DomainError("shape", "rank does not match the weight system");
}

void require_same_shape(const WeightSystem& a, const WeightSystem& b) {
  if (a.rank() != b.rank() || a.num_points() != b.num_points())
    throw DomainError("shape", "weight systems have different shapes");
}

Integer binomial(long n, long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace

void for_each_admissible_type(int r, std::size_t n,
                              const std::function<void(const ParabolicType&)>& fn) {
  if (r < 2 || n < 1) throw DomainError("parameter_range", "need r >= 2 and n >= 1");
  for (int sub = 1; sub < r; ++sub) for_each_pattern(r, n, sub, fn);
}

std::vector<ParabolicType> admissible_types(int r, std::size_t n) {
  std::vector<ParabolicType> out;
  for_each_admissible_type(r, n, [&](const ParabolicType& t) { out.push_back(t); });
  return out;
}

Integer admissible_type_count(int r, std::size_t n) {
  Integer total = 0;
  for (int sub = 1; sub < r; ++sub) {
    Integer c;
    mpz_pow_ui(c.get_mpz_t(), binomial(r, sub).get_mpz_t(), n);
    total += c;
  }
  return total;
}

long long M(int r, const WeightSystem& w, long long d, const ParabolicType& t) {
  require_context(r, w);
  if (!t.is_admissible()) throw DomainError("admissible", "type must satisfy 0 < r' < r");
  Rational x = (to_rational(t.subrank() * d) + wall_function(w, t)) / r;
  return to_int64(floor_of(x));
}

std::optional<long long> ChamberInvariant::at(const ParabolicType& t) const {
  for (const auto& [key, value] : values)
    if (key == t) return value;
  return std::nullopt;
}

Rational M_min(int r, std::size_t n, long long d) {
  return make_rational(d, r) - to_rational(static_cast<long long>(r) * static_cast<long long>(n) + 1);
}

Rational M_max(int r, std::size_t n, long long d) {
  return make_rational((r - 1) * d, r) + to_rational(static_cast<long long>(r - 1) * static_cast<long long>(n));
}

ChamberInvariant M_vec(int r, const WeightSystem& w, long long d) {
  require_context(r, w);
  ChamberInvariant out{r, w.num_points(), d, {}};
  for_each_admissible_type(r, w.num_points(), [&](const ParabolicType& t) {
    out.values.emplace_back(t, M(r, w, d, t));
  });
  return out;
}

bool same_numerical_chamber(int r, const WeightSystem& w1, const WeightSystem& w2, long long d) {
  require_context(r, w1);
  require_same_shape(w1, w2);
  bool same = true;
  for_each_admissible_type(r, w1.num_points(), [&](const ParabolicType& t) {
    if (same && M(r, w1, d, t) != M(r, w2, d, t)) same = false;
  });
  return same;
}

bool is_relevant_level(int r, int subrank, long long d, const Integer& level) {
  Integer v = level + to_integer(static_cast<long long>(subrank) * d);
  return mpz_divisible_ui_p(v.get_mpz_t(), static_cast<unsigned long>(r)) != 0;
}

std::vector<Wall> walls_crossed(int r, const WeightSystem& w1, const WeightSystem& w2,
                                long long d, bool relevant_only) {
  require_context(r, w1);
  require_same_shape(w1, w2);
  std::vector<Wall> out;
  for_each_admissible_type(r, w1.num_points(), [&](const ParabolicType& t) {
    Rational f1 = wall_function(w1, t);
    Rational f2 = wall_function(w2, t);
    for (const Rational* f : {&f1, &f2}) {
      if (is_integer(*f) && (!relevant_only || is_relevant_level(r, t.subrank(), d, f->get_num())))
        throw DomainError("endpoint_on_wall",
                          "an endpoint lies on the wall at level " + f->get_num().get_str());
    }
    const Rational& lo = f1 < f2 ? f1 : f2;
    const Rational& hi = f1 < f2 ? f2 : f1;
    for (Integer m = floor_of(lo) + 1; m < hi; ++m) {
      bool relevant = is_relevant_level(r, t.subrank(), d, m);
      if (!relevant_only || relevant) out.push_back(Wall{t, m, relevant});
    }
  });
  return out;
}

}  // namespace parabolic
