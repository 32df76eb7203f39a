#include "fixtures.hpp"

#include <set>
#include <sstream>

#include "parabolic/autgroup.hpp"
#include "parabolic/chamber.hpp"
#include "parabolic/transform.hpp"
#include "parabolic/weights.hpp"

namespace parabolic {

namespace {

Rational q(const char* s) { return parse_rational(s); }

std::string show(const WeightSystem& w) {
  std::ostringstream os;
  for (std::size_t x = 0; x < w.num_points(); ++x) {
    os << (x ? " " : "") << w.labels()[x] << "=(";
    for (int i = 0; i < w.rank(); ++i) os << (i ? "," : "") << w.weight(x, i).get_str();
    os << ")";
  }
  return os.str();
}

bool same_class(const WeightSystem& a, const WeightSystem& b) { return normalize(a) == normalize(b); }

bool concentrated_at(const WeightSystem& w, std::size_t x) {
  const long long r = w.rank();
  const auto& a = w.at(x);
  return a.back() - a.front() < make_rational(4, static_cast<long long>(w.num_points()) * r * r);
}

// No wall relevant at degree d passes through w.
bool generic_at_degree(const WeightSystem& w, long long d) {
  bool ok = true;
  for_each_admissible_type(w.rank(), w.num_points(), [&](const ParabolicType& t) {
    Rational f = wall_function(w, t);
    if (is_integer(f) && is_relevant_level(w.rank(), t.subrank(), d, f.get_num())) ok = false;
  });
  return ok;
}

class Recorder {
 public:
  void add(std::string family, std::string claim, bool pass, std::string detail = {}) {
    claims_.push_back({std::move(family), std::move(claim), pass, std::move(detail)});
  }
  std::vector<FixtureClaim> take() { return std::move(claims_); }

 private:
  std::vector<FixtureClaim> claims_;
};

std::string classes_text(const std::vector<NumTransform>& classes) {
  std::ostringstream os;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const auto& t = classes[c];
    os << (c ? " " : "") << "(" << (t.perm.is_identity() ? "id" : "swap") << "," << t.sign << "," << t.tdeg << ",[";
    for (std::size_t x = 0; x < t.hecke.size(); ++x) os << (x ? "," : "") << t.hecke[x];
    os << "])";
  }
  return os.str();
}

void swapped_points_family(Recorder& rec) {
  const std::string family = "rank2-swapped";
  const std::vector<std::pair<const char*, const char*>> members = {
      {"1/10", "3/5"}, {"9/20", "11/20"}, {"1/3", "3/4"}, {"2/5", "7/10"}};
  const Permutation swap({1, 0});
  const std::vector<std::string> labels = {"x", "y"};

  for (const auto& [s1, s2] : members) {
    Rational a1 = q(s1), a2 = q(s2);
    WeightSystem alpha(2, labels, {{a1, a2}, {a2 - Rational(1, 2), a1 + Rational(1, 2)}});
    std::string tag = std::string("a1=") + s1 + " a2=" + s2;

    WeightSystem shifted = hecke_weights(alpha, {1, 1});
    rec.add(family, "SH_{x+y}(alpha) ~ Sigma_sigma(alpha) [" + tag + "]",
            same_class(shifted, permute_weights(alpha, swap)), show(normalize(shifted)));

    NumTransform t{swap, 1, 1, {1, 1}};
    bool fixes = true;
    for (long long d = -3; d <= 3; ++d)
      fixes = fixes && apply_to_degree(t, d, 2) == d && same_class(apply_to_weights(t, alpha), alpha);
    rec.add(family, "(sigma-, 1, L, x+y) with deg L = 1 fixes xi and the weight class [" + tag + "]", fixes,
            "checked for d in [-3, 3]");
  }

  // Small spread at x: alpha is concentrated at x but not at y.
  WeightSystem alpha(2, labels, {{q("9/20"), q("11/20")}, {q("1/20"), q("19/20")}});
  const std::string tag = " [a1=9/20 a2=11/20]";
  WeightSystem sh_x = hecke_weights(alpha, {1, 0});
  WeightSystem sh_y = hecke_weights(alpha, {0, 1});
  WeightSystem sh_xy = hecke_weights(alpha, {1, 1});
  rec.add(family, "alpha concentrated at x, not at y" + tag,
          concentrated_at(alpha, 0) && !concentrated_at(alpha, 1));
  rec.add(family, "SH_y(alpha) is concentrated" + tag, is_concentrated(sh_y), show(sh_y));
  rec.add(family, "SH_{x+y}(alpha) is concentrated at y" + tag, concentrated_at(sh_xy, 1), show(sh_xy));
  rec.add(family, "SH_x(alpha) is not concentrated" + tag, !is_concentrated(sh_x), show(sh_x));

  CurveData curve(3, labels, {{{0, 1}, 1}, {{1, 0}, 1}});
  for (long long d : {0LL, 2LL, -2LL}) {
    const std::string at = tag + " d=" + std::to_string(d);
    bool distinct = !same_numerical_chamber(2, alpha, sh_xy, d) && !same_numerical_chamber(2, alpha, sh_x, d) &&
                    !same_numerical_chamber(2, alpha, sh_y, d);
    rec.add(family, "SH_{x+y}(alpha), SH_x(alpha), SH_y(alpha) leave the chamber of alpha" + at, distinct);
    bool exchanged = same_numerical_chamber(2, permute_weights(alpha, swap), sh_xy, d) &&
                     same_numerical_chamber(2, permute_weights(sh_xy, swap), alpha, d);
    rec.add(family, "Sigma_sigma- exchanges the chambers of alpha and SH_{x+y}(alpha)" + at, exchanged);

    AutResult aut = automorphism_group(2, 2, d, 3, alpha, curve, AutOptions{false});
    std::vector<NumTransform> expected = {NumTransform{Permutation({0, 1}), 1, 0, {0, 0}},
                                          NumTransform{swap, 1, 1, {1, 1}}};
    bool ok = generic_at_degree(alpha, d) && aut.classes == expected && aut.order == 2 * power(2, 6);
    rec.add(family, "automorphisms are exactly (sigma+, 1, L, 0) and (sigma-, 1, L, x+y)" + at, ok,
            classes_text(aut.classes) + " order=" + aut.order.get_str());
  }
}

void rank_three_family(Recorder& rec) {
  const std::string family = "rank3-involution";
  const long long d = -1;
  const NumTransform t{Permutation::identity(1), -1, 1, {1}};
  for (const char* eps_text : {"1/8", "1/100"}) {
    Rational eps = q(eps_text);
    WeightSystem alpha(3, {"x"}, {{eps, 3 * eps, 1 - eps}});
    const std::string tag = std::string(" [eps=") + eps_text + "]";
    WeightSystem sh_x = hecke_weights(alpha, {1});
    WeightSystem sh_2x = hecke_weights(alpha, {2});

    rec.add(family, "SH_x(alpha) ~ (eps, 1-3eps, 1-eps)" + tag,
            same_class(sh_x, WeightSystem(3, {"x"}, {{eps, 1 - 3 * eps, 1 - eps}})), show(sh_x));
    rec.add(family, "SH_x(alpha)^dual ~ alpha" + tag, same_class(dual_weights(sh_x), alpha));
    rec.add(family, "deg D-(SH_x(xi)) = deg(xi) + 3 = 2" + tag,
            apply_to_degree(NumTransform{Permutation::identity(1), -1, 0, {1}}, d, 3) == 2);
    rec.add(family, "T = (id, -1, L, x) with deg L = 1 fixes xi" + tag, apply_to_degree(t, d, 3) == d);
    rec.add(family, "T(alpha) ~ alpha" + tag, same_class(apply_to_weights(t, alpha), alpha));
    rec.add(family, "T^2 = id and T^-1 = T" + tag,
            compose(t, t, 3) == NumTransform::identity(1) && inverse(t, 3) == t);
    rec.add(family, "D-(alpha) ~ SH_x(alpha)" + tag, same_class(dual_weights(alpha), sh_x));

    for (long long mult : {1LL, 2LL}) {
      CurveData curve(4, {"x"}, {{{0}, mult}});
      AutResult aut = automorphism_group(3, 1, d, 4, alpha, curve, AutOptions{false});
      std::vector<NumTransform> expected = {NumTransform::identity(1), t};
      bool ok = aut.classes == expected && aut.order == to_integer(2 * mult) * power(3, 8);
      rec.add(family,
              "Aut = J(X)[3] x| (Z/2 x Aut(X,D)) with |Aut(X,D)| = " + std::to_string(mult) + tag, ok,
              "classes=" + std::to_string(aut.classes.size()) + " order=" + aut.order.get_str());
    }

    if (eps == q("1/100")) {
      rec.add(family, "SH_2x(alpha) ~ (1-5eps, 1-3eps, 1-eps) and is concentrated" + tag,
              same_class(sh_2x, WeightSystem(3, {"x"}, {{1 - 5 * eps, 1 - 3 * eps, 1 - eps}})) &&
                  is_concentrated(sh_2x),
              show(sh_2x));
      rec.add(family, "D-(SH_2x(alpha)) is concentrated" + tag, is_concentrated(dual_weights(sh_2x)));
      rec.add(family, "alpha and SH_x(alpha) are not concentrated" + tag,
              !is_concentrated(alpha) && !is_concentrated(sh_x));
      std::set<std::vector<long long>> chambers;
      for (const auto* w : {&alpha, &sh_x, &sh_2x}) {
        std::vector<long long> v;
        for (const auto& [type, m] : M_vec(3, *w, d).values) v.push_back(m);
        chambers.insert(v);
      }
      rec.add(family, "alpha, SH_x(alpha), SH_2x(alpha) lie in three numerical chambers" + tag,
              chambers.size() == 3);
    }
  }
}

void rank_r_family(Recorder& rec) {
  const std::string family = "rank-r-involution";
  const long long d = -1;
  for (int r = 3; r <= 6; ++r) {
    Rational eps = make_rational(1, 10 * r);
    std::vector<Rational> a;
    for (int k = 1; k < r; ++k) a.push_back((2 * k - 1) * eps);
    a.push_back(1 - eps);
    WeightSystem alpha(r, {"x"}, {a});
    const std::string tag = " [r=" + std::to_string(r) + " eps=" + eps.get_str() + "]";
    rec.add(family, "D-(SH_{(r-2)x}(alpha)) ~ alpha" + tag,
            same_class(dual_weights(hecke_weights(alpha, {r - 2})), alpha));
    NumTransform t{Permutation::identity(1), -1, 1, {r - 2}};
    rec.add(family, "T = (id, -1, L, (r-2)x) with deg L = 1 fixes xi" + tag, apply_to_degree(t, d, r) == d);
    rec.add(family, "T(alpha) ~ alpha and T^2 = id" + tag,
            same_class(apply_to_weights(t, alpha), alpha) && compose(t, t, r) == NumTransform::identity(1));
  }
}

}  // namespace

std::vector<FixtureClaim> run_fixtures() {
  Recorder rec;
  swapped_points_family(rec);
  rank_three_family(rec);
  rank_r_family(rec);
  return rec.take();
}

}  // namespace parabolic
