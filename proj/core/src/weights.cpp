#include "parabolic/weights.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "parabolic/errors.hpp"
#include "parabolic/permutation.hpp"

namespace parabolic {

namespace {

void require_shape(const WeightSystem& w, const ParabolicType& t) {
  if (t.num_points() != w.num_points() || t.rank() != w.rank())
    throw DomainError("shape", "parabolic type shape does not match the weight system");
}

void require_range(bool ok, const char* what) {
  if (!ok) throw DomainError("parameter_range", what);
}

Rational total_weight(const WeightSystem& w) {
  Rational sum = 0;
  for (const auto& tuple : w.weights())
    for (const auto& a : tuple) sum += a;
  return sum;
}

}  // namespace

WeightSystem::WeightSystem(int rank, std::vector<std::string> labels,
                           std::vector<std::vector<Rational>> weights)
    : rank_(rank), labels_(std::move(labels)), weights_(std::move(weights)) {
  if (rank_ < 2) throw DomainError("rank", "rank must be at least 2");
  if (labels_.empty()) throw DomainError("points", "at least one marked point is required");
  std::set<std::string> unique(labels_.begin(), labels_.end());
  if (unique.size() != labels_.size()) throw DomainError("points", "point labels must be distinct");
  if (weights_.size() != labels_.size())
    throw DomainError("shape", "one weight tuple per marked point is required");
  for (std::size_t x = 0; x < weights_.size(); ++x) {
    const auto& tuple = weights_[x];
    if (tuple.size() != static_cast<std::size_t>(rank_))
      throw DomainError("tuple_length", "point " + labels_[x] + " needs exactly r weights");
    if (tuple.front() < 0 || tuple.back() >= 1)
      throw DomainError("weight_range", "weights at " + labels_[x] + " must lie in [0, 1)");
    for (int i = 1; i < rank_; ++i)
      if (!(tuple[i - 1] < tuple[i]))
        throw DomainError("strictly_increasing",
                          "weights at " + labels_[x] + " must be strictly increasing");
  }
}

WeightSystem WeightSystem::translated(const std::vector<Rational>& shift) const {
  if (shift.size() != num_points()) throw DomainError("shape", "one shift per point is required");
  auto w = weights_;
  for (std::size_t x = 0; x < w.size(); ++x)
    for (auto& a : w[x]) a += shift[x];
  return with_weights(std::move(w));
}

WeightSystem WeightSystem::with_weights(std::vector<std::vector<Rational>> weights) const {
  return WeightSystem(rank_, labels_, std::move(weights));
}

ParabolicType::ParabolicType(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  if (rows_.empty() || rows_.front().empty())
    throw DomainError("shape", "parabolic type needs at least one point and one step");
  const std::size_t r = rows_.front().size();
  for (std::size_t x = 0; x < rows_.size(); ++x) {
    if (rows_[x].size() != r) throw DomainError("shape", "parabolic type rows differ in length");
    int sum = 0;
    for (int v : rows_[x]) {
      if (v != 0 && v != 1) throw DomainError("incidence", "type entries must be 0 or 1");
      sum += v;
    }
    if (x == 0) subrank_ = sum;
    if (sum != subrank_)
      throw DomainError("constant_subrank", "every row of a parabolic type must have the same sum");
  }
}

ParabolicType ParabolicType::all_ones(std::size_t n, int r) {
  return ParabolicType(std::vector<std::vector<int>>(n, std::vector<int>(r, 1)));
}

ParabolicType ParabolicType::all_zeros(std::size_t n, int r) {
  return ParabolicType(std::vector<std::vector<int>>(n, std::vector<int>(r, 0)));
}

ParabolicType ParabolicType::complement() const {
  auto rows = rows_;
  for (auto& row : rows)
    for (int& v : row) v = 1 - v;
  return ParabolicType(std::move(rows));
}

ParabolicType ParabolicType::reversed() const {
  auto rows = rows_;
  for (auto& row : rows) std::reverse(row.begin(), row.end());
  return ParabolicType(std::move(rows));
}

void for_each_pattern(int r, std::size_t n, int subrank,
                      const std::function<void(const ParabolicType&)>& fn) {
  if (subrank < 0 || subrank > r) return;
  std::vector<std::vector<int>> combos;
  std::vector<int> row(r, 0);
  // Lexicographic order of index sets equals reverse-lexicographic order of
  // the 0/1 rows, which is what prev_permutation walks from the sorted start.
  std::fill(row.begin(), row.begin() + subrank, 1);
  do {
    combos.push_back(row);
  } while (std::prev_permutation(row.begin(), row.end()));

  std::vector<std::size_t> digit(n, 0);
  std::vector<std::vector<int>> rows(n);
  while (true) {
    for (std::size_t x = 0; x < n; ++x) rows[x] = combos[digit[x]];
    fn(ParabolicType(rows));
    std::size_t x = n;
    while (x > 0) {
      --x;
      if (++digit[x] < combos.size()) break;
      digit[x] = 0;
      if (x == 0) return;
    }
  }
}

CurveData::CurveData(long long genus, std::vector<std::string> labels,
                     std::vector<CurveSymmetry> symmetries)
    : genus_(genus), labels_(std::move(labels)), symmetries_(std::move(symmetries)) {
  if (genus_ < 0) throw DomainError("genus", "genus must be nonnegative");
  bool has_identity = false;
  std::set<std::vector<std::size_t>> seen;
  for (const auto& s : symmetries_) {
    if (s.images.size() != labels_.size())
      throw DomainError("shape", "symmetry must permute every marked point");
    Permutation p(s.images);
    if (s.multiplicity < 1) throw DomainError("multiplicity", "multiplicities must be positive");
    if (!seen.insert(s.images).second)
      throw DomainError("symmetries", "each permutation may be listed once");
    if (p.is_identity()) has_identity = true;
  }
  if (!has_identity)
    throw DomainError("identity_symmetry", "the identity permutation must be listed");
}

CurveData CurveData::trivial(long long genus, std::vector<std::string> labels) {
  std::size_t n = labels.size();
  return CurveData(genus, std::move(labels), {CurveSymmetry{Permutation::identity(n).images(), 1}});
}

long long CurveData::multiplicity(const std::vector<std::size_t>& images) const {
  for (const auto& s : symmetries_)
    if (s.images == images) return s.multiplicity;
  return 0;
}

WeightSystem normalize(const WeightSystem& w) {
  auto weights = w.weights();
  for (auto& tuple : weights) {
    Rational first = tuple.front();
    for (auto& a : tuple) a -= first;
  }
  return w.with_weights(std::move(weights));
}

Rational owt(const WeightSystem& w, const ParabolicType& t) {
  require_shape(w, t);
  Rational sum = 0;
  for (std::size_t x = 0; x < w.num_points(); ++x)
    for (int i = 0; i < w.rank(); ++i)
      if (t.entry(x, i)) sum += w.weight(x, i);
  return sum;
}

Rational pdeg(long long d, const WeightSystem& w) {
  return to_rational(d) + owt(w, ParabolicType::all_ones(w.num_points(), w.rank()));
}

Rational s_min(const WeightSystem& w, const ParabolicType& t) {
  require_shape(w, t);
  const int r1 = t.subrank();
  const int r2 = w.rank() - r1;
  return r2 * owt(w, t) - r1 * owt(w, t.complement());
}

Rational t_number(const ParabolicType& t1, const ParabolicType& t2) {
  if (t1.num_points() != t2.num_points() || t1.rank() != t2.rank())
    throw DomainError("shape", "t-number needs types of the same shape");
  if (t1.subrank() == 0 || t2.subrank() == 0)
    throw DomainError("subrank", "t-number is undefined for zero subrank");
  long long sum = 0;
  for (std::size_t x = 0; x < t1.num_points(); ++x)
    for (int i = 0; i < t1.rank(); ++i)
      for (int j = 0; j < i; ++j) sum += t1.entry(x, i) * t2.entry(x, j);
  return make_rational(sum, static_cast<long long>(t1.subrank()) * t2.subrank());
}

Rational wall_function(const WeightSystem& w, const ParabolicType& t) {
  require_shape(w, t);
  return t.subrank() * total_weight(w) - w.rank() * owt(w, t);
}

long long hitchin_h0(long long g, long long n, long long k) {
  require_range(g >= 2 && n >= 1 && k >= 1, "need g >= 2, n >= 1, k >= 1");
  if (k == 1) return g;
  return k * (2 * g - 2) + (k - 1) * n - g + 1;
}

HitchinDimensions dims(long long g, long long n, long long r) {
  require_range(g >= 2 && n >= 1 && r >= 2, "need g >= 2, n >= 1, r >= 2");
  HitchinDimensions out;
  out.dim_fixed_det = (r * r - 1) * (g - 1) + n * (r * r - r) / 2;
  out.dim_nonfixed = r * r * (g - 1) + 1 + n * r * (r - 1) / 2;
  for (long long k = 1; k <= r; ++k) {
    out.dim_W.push_back(hitchin_h0(g, n, k));
    if (k >= 2) out.dim_W_total += out.dim_W.back();
  }
  return out;
}

long long dim_nonreduced_stratum(long long g, long long n, long long r, long long d) {
  require_range(g >= 2 && n >= 1 && r >= 2, "need g >= 2, n >= 1, r >= 2");
  require_range(d >= 1 && 2 * d <= r, "need 1 <= d <= r/2");
  long long sum = 0;
  if (2 * d == r) {
    for (long long j = 2; j <= r / 2; ++j) sum += hitchin_h0(g, n, j);
    return sum;
  }
  for (long long j = 1; j <= d; ++j) sum += hitchin_h0(g, n, j);
  for (long long j = 2; j <= r - 2 * d; ++j) sum += hitchin_h0(g, n, j);
  return sum;
}

GenericityReport is_generic(const WeightSystem& w) {
  GenericityReport report;
  const int r = w.rank();
  const Rational bound(static_cast<long>(w.num_points()) * r * r);
  for (int sub = 1; sub < r && report.generic; ++sub) {
    for_each_pattern(r, w.num_points(), sub, [&](const ParabolicType& t) {
      if (!report.generic) return;
      Rational f = wall_function(w, t);
      if (abs(f) >= bound) throw std::logic_error("wall function exceeds n r^2");
      if (is_integer(f)) {
        report.generic = false;
        report.witness = Wall{t, f.get_num(), false};
      }
    });
  }
  return report;
}

bool is_concentrated(const WeightSystem& w) {
  const int r = w.rank();
  const Rational threshold = make_rational(4, static_cast<long long>(w.num_points()) * r * r);
  for (const auto& tuple : w.weights())
    if (!(tuple.back() - tuple.front() < threshold)) return false;
  return true;
}

GenusBounds genus_bounds(const WeightSystem& w, const GenusBoundsQuery& query) {
  require_range(query.l >= 0 && query.m >= 0 && query.k >= 0, "l, m, k must be nonnegative");
  const int r = w.rank();
  const long long n = static_cast<long long>(w.num_points());
  auto first_sum = [](const WeightSystem& v) {
    Rational s = 0;
    for (const auto& tuple : v.weights()) s += tuple.front();
    return floor_of(s);
  };
  Integer low = first_sum(w);
  if (query.other) {
    if (query.other->rank() != r || query.other->num_points() != w.num_points())
      throw DomainError("shape", "second weight system has a different shape");
    low = std::min(low, first_sum(*query.other));
  }
  GenusBounds out;
  out.chamber = to_integer(1 + (r - 1) * n) - low;
  if (query.refined) {
    if (!query.type) throw DomainError("missing_type", "the refined bound needs a parabolic type");
    const auto& t = *query.type;
    require_shape(w, t);
    if (!t.is_admissible()) throw DomainError("admissible", "refined bound needs 0 < r' < r");
    Rational s = 0;
    for (std::size_t x = 0; x < w.num_points(); ++x)
      for (int i = 0; i < r; ++i) s += (1 - w.weight(x, i)) * (1 - t.entry(x, i));
    out.refined = 1 + Rational(floor_of(s)) / t.subrank();
  }
  out.lm_stability = to_rational(query.m + query.l + 1) + make_rational(query.l + query.k, r - 1);
  out.codimension = 1 + make_rational(query.l - 1, r - 1);
  return out;
}

SlopeComparison stability_check(int r, long long d, const WeightSystem& w,
                                const SubbundleData& sub) {
  if (r != w.rank()) throw DomainError("shape", "rank does not match the weight system");
  require_shape(w, sub.type);
  if (sub.type.subrank() != sub.subrank)
    throw DomainError("subrank", "declared subrank differs from the type's row sum");
  if (!sub.type.is_admissible()) throw DomainError("admissible", "subrank must satisfy 0 < r' < r");
  Rational lhs = (to_rational(sub.degree) + owt(w, sub.type)) / sub.subrank;
  Rational rhs = pdeg(d, w) / r;
  if (lhs < rhs) return SlopeComparison::strict;
  if (lhs == rhs) return SlopeComparison::equality;
  return SlopeComparison::violated;
}

const char* to_string(SlopeComparison c) {
  switch (c) {
    case SlopeComparison::strict: return "strict";
    case SlopeComparison::equality: return "equality";
    case SlopeComparison::violated: return "violated";
  }
  return "";
}

}  // namespace parabolic
