#include "parabolic/transform.hpp"

#include <numeric>

#include "parabolic/errors.hpp"

namespace parabolic {

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long long support_size(const std::vector<long long>& h) {
  long long s = 0;
  for (long long v : h) s += v != 0;
  return s;
}

long long total(const std::vector<long long>& h) {
  return std::accumulate(h.begin(), h.end(), 0LL);
}

bool reduced(const std::vector<long long>& h, int r) {
  for (long long v : h)
    if (v < 0 || v >= r) return false;
  return true;
}

void require_transform_shape(const NumTransform& t, std::size_t n) {
  if (t.perm.size() != n || t.hecke.size() != n)
    throw DomainError("shape", "transformation acts on a different number of points");
  if (t.sign != 1 && t.sign != -1) throw DomainError("sign", "sign must be +1 or -1");
}

void require_rank(int r) {
  if (r < 2) throw DomainError("rank", "rank must be at least 2");
}

}  // namespace

NumTransform NumTransform::identity(std::size_t n) {
  return NumTransform{Permutation::identity(n), 1, 0, std::vector<long long>(n, 0)};
}

NumTransform NumTransform::hecke_at(std::size_t n, std::size_t x, long long h) {
  NumTransform t = identity(n);
  t.hecke.at(x) = h;
  return t;
}

NumTransform normalize_transform(NumTransform t, int r) {
  require_rank(r);
  for (auto& h : t.hecke) {
    long long q = floor_div(h, r);
    t.tdeg -= q;
    h -= q * r;
  }
  return t;
}

namespace word {

Word to_word(const NumTransform& t) {
  Word w;
  w.emplace_back(Pullback{t.perm});
  if (t.sign == -1) w.emplace_back(Dual{});
  w.emplace_back(Tensor{t.tdeg});
  w.emplace_back(Hecke{t.hecke});
  return w;
}

namespace {

enum class RedexKind { remove, reduce, pair };

struct Redex {
  RedexKind kind;
  std::size_t pos;
};

bool is_identity_letter(const Letter& l) {
  if (auto p = std::get_if<Pullback>(&l)) return p->perm.is_identity();
  if (auto t = std::get_if<Tensor>(&l)) return t->deg == 0;
  if (auto h = std::get_if<Hecke>(&l)) {
    for (long long v : h->h)
      if (v != 0) return false;
    return true;
  }
  return false;
}

// A pair is a redex when the left letter does not strictly precede the right
// one in the canonical order, except a dual against an unreduced Hecke letter,
// which waits for the reduction first.
bool is_pair_redex(const Letter& a, const Letter& b, int r) {
  if (a.index() < b.index()) return false;
  if (std::holds_alternative<Hecke>(a) && std::holds_alternative<Dual>(b))
    return reduced(std::get<Hecke>(a).h, r);
  return true;
}

std::vector<Redex> find_redexes(const Word& w, int r, bool first_only) {
  std::vector<Redex> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (is_identity_letter(w[i])) {
      out.push_back({RedexKind::remove, i});
    } else if (auto h = std::get_if<Hecke>(&w[i]); h && !reduced(h->h, r)) {
      out.push_back({RedexKind::reduce, i});
    }
    if (first_only && !out.empty()) return out;
    if (i + 1 < w.size() && is_pair_redex(w[i], w[i + 1], r)) {
      out.push_back({RedexKind::pair, i});
      if (first_only) return out;
    }
  }
  return out;
}

Word rewrite_pair(const Letter& a, const Letter& b, int r) {
  if (a.index() == b.index()) {
    if (auto p = std::get_if<Pullback>(&a)) return {Pullback{p->perm * std::get<Pullback>(b).perm}};
    if (std::holds_alternative<Dual>(a)) return {};
    if (auto t = std::get_if<Tensor>(&a)) return {Tensor{t->deg + std::get<Tensor>(b).deg}};
    auto h = std::get<Hecke>(a).h;
    const auto& k = std::get<Hecke>(b).h;
    for (std::size_t x = 0; x < h.size(); ++x) h[x] += k[x];
    return {Hecke{h}};
  }
  if (auto p = std::get_if<Pullback>(&b)) {
    if (auto h = std::get_if<Hecke>(&a)) return {b, Hecke{p->perm.inverse().push(h->h)}};
    return {b, a};
  }
  if (std::holds_alternative<Dual>(b)) {
    if (auto t = std::get_if<Tensor>(&a)) return {b, Tensor{-t->deg}};
    const auto& h = std::get<Hecke>(a).h;
    std::vector<long long> k(h.size());
    for (std::size_t x = 0; x < h.size(); ++x) k[x] = h[x] == 0 ? 0 : r - h[x];
    return {b, Tensor{support_size(h)}, Hecke{k}};
  }
  // Hecke past a tensor.
  return {b, a};
}

void check_letters(const Word& w, std::size_t n) {
  for (const auto& l : w) {
    if (auto p = std::get_if<Pullback>(&l); p && p->perm.size() != n)
      throw DomainError("shape", "pullback letter acts on a different number of points");
    if (auto h = std::get_if<Hecke>(&l); h && h->h.size() != n)
      throw DomainError("shape", "Hecke letter has the wrong length");
  }
}

}  // namespace

NumTransform normal_form(const Word& input, std::size_t n, int r, std::mt19937_64* rng) {
  require_rank(r);
  check_letters(input, n);
  Word w = input;
  while (true) {
    auto redexes = find_redexes(w, r, rng == nullptr);
    if (redexes.empty()) break;
    Redex pick = redexes.front();
    if (rng) pick = redexes[std::uniform_int_distribution<std::size_t>(0, redexes.size() - 1)(*rng)];
    Word replacement;
    std::size_t span = 1;
    switch (pick.kind) {
      case RedexKind::remove:
        break;
      case RedexKind::reduce: {
        NumTransform t = normalize_transform(
            NumTransform{Permutation::identity(n), 1, 0, std::get<Hecke>(w[pick.pos]).h}, r);
        replacement = {Tensor{t.tdeg}, Hecke{t.hecke}};
        break;
      }
      case RedexKind::pair:
        replacement = rewrite_pair(w[pick.pos], w[pick.pos + 1], r);
        span = 2;
        break;
    }
    w.erase(w.begin() + pick.pos, w.begin() + pick.pos + span);
    w.insert(w.begin() + pick.pos, replacement.begin(), replacement.end());
  }
  NumTransform out = NumTransform::identity(n);
  for (const auto& l : w) {
    if (auto p = std::get_if<Pullback>(&l)) out.perm = p->perm;
    if (std::holds_alternative<Dual>(l)) out.sign = -1;
    if (auto t = std::get_if<Tensor>(&l)) out.tdeg = t->deg;
    if (auto h = std::get_if<Hecke>(&l)) out.hecke = h->h;
  }
  return out;
}

}  // namespace word

WeightSystem hecke_weights(const WeightSystem& w, const std::vector<long long>& hecke) {
  if (hecke.size() != w.num_points()) throw DomainError("shape", "one Hecke coefficient per point");
  const int r = w.rank();
  auto weights = w.weights();
  for (std::size_t x = 0; x < weights.size(); ++x) {
    long long h = hecke[x];
    if (h < 0 || h >= r) throw DomainError("hecke_range", "Hecke coefficients must lie in [0, r)");
    const auto& a = w.at(x);
    for (int i = 0; i < r; ++i) {
      if (i + h < r)
        weights[x][i] = a[i + h] - a[h];
      else
        weights[x][i] = a[i + h - r] - a[h] + 1;
    }
  }
  return w.with_weights(std::move(weights));
}

WeightSystem dual_weights(const WeightSystem& w) {
  const int r = w.rank();
  auto weights = w.weights();
  for (std::size_t x = 0; x < weights.size(); ++x) {
    const auto& a = w.at(x);
    // 1 - a_{r-i+1}, shifted so the first entry is 0.
    for (int i = 0; i < r; ++i) weights[x][i] = a[r - 1] - a[r - 1 - i];
  }
  return w.with_weights(std::move(weights));
}

WeightSystem permute_weights(const WeightSystem& w, const Permutation& p) {
  if (p.size() != w.num_points()) throw DomainError("shape", "permutation size differs from point count");
  return w.with_weights(p.push(w.weights()));
}

WeightSystem apply_to_weights(const NumTransform& t, const WeightSystem& w) {
  require_transform_shape(t, w.num_points());
  WeightSystem out = permute_weights(hecke_weights(w, t.hecke), t.perm);
  return t.sign == -1 ? dual_weights(out) : out;
}

long long apply_to_degree(const NumTransform& t, long long d, int r) {
  require_rank(r);
  return t.sign * (r * t.tdeg + d - total(t.hecke));
}

NumTransform compose(const NumTransform& t1, const NumTransform& t2, int r) {
  const std::size_t n = t1.perm.size();
  require_transform_shape(t1, n);
  require_transform_shape(t2, n);
  if (!reduced(t1.hecke, r) || !reduced(t2.hecke, r))
    throw DomainError("normal_form", "transformation is not in normal form");
  word::Word w = word::to_word(t1);
  word::Word tail = word::to_word(t2);
  w.insert(w.end(), tail.begin(), tail.end());
  return word::normal_form(w, n, r);
}

NumTransform inverse(const NumTransform& t, int r) {
  require_rank(r);
  require_transform_shape(t, t.perm.size());
  if (!reduced(t.hecke, r)) throw DomainError("normal_form", "transformation is not in normal form");
  NumTransform out;
  out.perm = t.perm.inverse();
  out.sign = t.sign;
  if (t.sign == 1) {
    std::vector<long long> k(t.hecke.size());
    for (std::size_t x = 0; x < k.size(); ++x) k[x] = t.hecke[x] == 0 ? 0 : r - t.hecke[x];
    out.tdeg = support_size(t.hecke) - t.tdeg;
    out.hecke = t.perm.push(k);
  } else {
    out.tdeg = t.tdeg;
    out.hecke = t.perm.push(t.hecke);
  }
  return out;
}

NumTransform reduce_dual_rank2(const NumTransform& t, long long d, int r) {
  if (r != 2) throw DomainError("rank_two", "dual elimination exists only in rank 2");
  if (t.sign != -1) throw DomainError("sign", "dual elimination needs a transformation with sign -1");
  NumTransform out = t;
  out.sign = 1;
  out.tdeg = -t.tdeg + total(t.hecke) - d;
  return out;
}

bool is_in_ST_plus(const NumTransform& t) { return t.sign == 1; }

}  // namespace parabolic
