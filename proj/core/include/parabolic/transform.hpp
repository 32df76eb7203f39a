#pragma once

#include <cstddef>
#include <random>
#include <variant>
#include <vector>

#include "parabolic/permutation.hpp"
#include "parabolic/weights.hpp"

namespace parabolic {

// Numerical shadow (perm, sign, tdeg, hecke) of a basic transformation, read
// as the word Sigma_perm o D^sign o T_tdeg o SH_hecke.
struct NumTransform {
  Permutation perm;
  int sign = 1;
  long long tdeg = 0;
  std::vector<long long> hecke;

  static NumTransform identity(std::size_t n);
  static NumTransform hecke_at(std::size_t n, std::size_t x, long long h = 1);

  friend bool operator==(const NumTransform&, const NumTransform&) = default;
  friend auto operator<=>(const NumTransform&, const NumTransform&) = default;
};

namespace word {

struct Pullback {
  Permutation perm;
};
struct Dual {};
struct Tensor {
  long long deg;
};
struct Hecke {
  std::vector<long long> h;
};

using Letter = std::variant<Pullback, Dual, Tensor, Hecke>;

// Letters compose right to left: w[0] o w[1] o ... o w[k-1].
using Word = std::vector<Letter>;

Word to_word(const NumTransform& t);

// Rewrites to the canonical order Pullback, Dual, Tensor, Hecke. With rng set,
// the redex is chosen uniformly at random at each step; otherwise the
// leftmost redex is used.
NumTransform normal_form(const Word& w, std::size_t n, int r,
                         std::mt19937_64* rng = nullptr);

}  // namespace word

// Brings hecke into [0, r) letting tdeg absorb the quotients.
NumTransform normalize_transform(NumTransform t, int r);

WeightSystem hecke_weights(const WeightSystem& w, const std::vector<long long>& hecke);
WeightSystem dual_weights(const WeightSystem& w);
WeightSystem permute_weights(const WeightSystem& w, const Permutation& p);

WeightSystem apply_to_weights(const NumTransform& t, const WeightSystem& w);
long long apply_to_degree(const NumTransform& t, long long d, int r);

NumTransform compose(const NumTransform& t1, const NumTransform& t2, int r);
NumTransform inverse(const NumTransform& t, int r);

// Rank 2 only: trades the dual for a tensor, preserving the action on weights
// in the translation class and on degree d.
NumTransform reduce_dual_rank2(const NumTransform& t, long long d, int r = 2);
bool is_in_ST_plus(const NumTransform& t);

}  // namespace parabolic
