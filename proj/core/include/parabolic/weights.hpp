#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "parabolic/rational.hpp"

namespace parabolic {

// Full-flag weights: for every marked point a strictly increasing tuple
// 0 <= a_1 < ... < a_r < 1.
class WeightSystem {
 public:
  WeightSystem(int rank, std::vector<std::string> labels,
               std::vector<std::vector<Rational>> weights);

  int rank() const { return rank_; }
  std::size_t num_points() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::vector<Rational>>& weights() const { return weights_; }
  const std::vector<Rational>& at(std::size_t x) const { return weights_[x]; }
  // i is 0-based.
  const Rational& weight(std::size_t x, int i) const { return weights_[x][i]; }

  // Shift every weight at point x by shift[x]; the result must stay valid.
  WeightSystem translated(const std::vector<Rational>& shift) const;
  WeightSystem with_weights(std::vector<std::vector<Rational>> weights) const;

  friend bool operator==(const WeightSystem&, const WeightSystem&) = default;

 private:
  int rank_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Rational>> weights_;
};

// n x r incidence pattern with constant row sum (the subrank). Rows are
// points, columns are flag steps.
class ParabolicType {
 public:
  explicit ParabolicType(std::vector<std::vector<int>> rows);

  static ParabolicType all_ones(std::size_t n, int r);
  static ParabolicType all_zeros(std::size_t n, int r);

  std::size_t num_points() const { return rows_.size(); }
  int rank() const { return static_cast<int>(rows_.front().size()); }
  int subrank() const { return subrank_; }
  int entry(std::size_t x, int i) const { return rows_[x][i]; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }

  bool is_admissible() const { return subrank_ > 0 && subrank_ < rank(); }
  ParabolicType complement() const;
  // n_i -> n_{r-i+1} at every point.
  ParabolicType reversed() const;

  friend bool operator==(const ParabolicType&, const ParabolicType&) = default;
  friend auto operator<=>(const ParabolicType&, const ParabolicType&) = default;

 private:
  std::vector<std::vector<int>> rows_;
  int subrank_ = 0;
};

// Calls fn on every pattern of the given subrank, r' ascending combinations in
// lexicographic order per point, point 0 most significant.
void for_each_pattern(int r, std::size_t n, int subrank,
                      const std::function<void(const ParabolicType&)>& fn);

// Integer wall r' sum(all) - r sum(I) = m. `relevant` is filled in by chamber
// queries that know the degree.
struct Wall {
  ParabolicType pattern;
  Integer level;
  bool relevant = false;

  friend bool operator==(const Wall&, const Wall&) = default;
};

struct CurveSymmetry {
  std::vector<std::size_t> images;  // point i goes to images[i]
  long long multiplicity = 1;
};

class CurveData {
 public:
  CurveData(long long genus, std::vector<std::string> labels,
            std::vector<CurveSymmetry> symmetries);

  static CurveData trivial(long long genus, std::vector<std::string> labels);

  long long genus() const { return genus_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<CurveSymmetry>& symmetries() const { return symmetries_; }
  long long multiplicity(const std::vector<std::size_t>& images) const;

 private:
  long long genus_;
  std::vector<std::string> labels_;
  std::vector<CurveSymmetry> symmetries_;
};

struct HitchinDimensions {
  long long dim_fixed_det = 0;
  long long dim_nonfixed = 0;
  std::vector<long long> dim_W;  // dim_W[k-1] = h0(K^k D^(k-1)), k = 1..r
  long long dim_W_total = 0;
};

struct GenusBoundsQuery {
  std::optional<WeightSystem> other;
  std::optional<ParabolicType> type;
  bool refined = false;
  long long l = 1;
  long long m = 0;
  long long k = 1;
};

struct GenusBounds {
  Integer chamber;
  std::optional<Rational> refined;
  Rational lm_stability;
  Rational codimension;
};

enum class SlopeComparison { strict, equality, violated };

struct SubbundleData {
  int subrank;
  long long degree;
  ParabolicType type;
};

struct GenericityReport {
  bool generic = true;
  std::optional<Wall> witness;
};

WeightSystem normalize(const WeightSystem& w);

Rational owt(const WeightSystem& w, const ParabolicType& t);
Rational pdeg(long long d, const WeightSystem& w);
Rational s_min(const WeightSystem& w, const ParabolicType& t);
Rational t_number(const ParabolicType& t1, const ParabolicType& t2);

// r' sum_all - r sum_I, the left-hand side of the wall equation.
Rational wall_function(const WeightSystem& w, const ParabolicType& t);

long long hitchin_h0(long long g, long long n, long long k);
HitchinDimensions dims(long long g, long long n, long long r);
long long dim_nonreduced_stratum(long long g, long long n, long long r, long long d);

GenericityReport is_generic(const WeightSystem& w);
bool is_concentrated(const WeightSystem& w);

GenusBounds genus_bounds(const WeightSystem& w, const GenusBoundsQuery& query);

SlopeComparison stability_check(int r, long long d, const WeightSystem& w,
                                const SubbundleData& sub);

const char* to_string(SlopeComparison c);

}  // namespace parabolic
