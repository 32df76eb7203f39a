#include "parabolic/local_matrix.hpp"

#include <algorithm>
#include <cmath>

#include "parabolic/errors.hpp"

namespace parabolic {

namespace {

void require_square(const LaurentMatrix& a) {
  if (!a.is_square() || a.rows() == 0) throw DomainError("square", "matrix must be square and nonempty");
}

std::size_t square_root_size(const LaurentMatrix& m) {
  require_square(m);
  auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(m.rows()))));
  if (n * n != m.rows()) throw DomainError("perfect_square", "size must be a perfect square");
  return n;
}

long long positive_mod(long long a, long long m) { return ((a % m) + m) % m; }

LaurentMatrix truncated(const LaurentMatrix& a, long long bound) {
  LaurentMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j).truncated(bound);
  return out;
}

Laurent row_gcd(const LaurentMatrix& m, std::size_t row, FactorRing ring) {
  if (ring == FactorRing::rational) return Laurent(1);
  Laurent g;
  for (std::size_t j = 0; j < m.cols(); ++j)
    g = ring == FactorRing::polynomial ? polynomial_gcd(g, m(row, j)) : laurent_gcd(g, m(row, j));
  return g;
}

void require_ring(const LaurentMatrix& m, FactorRing ring) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Laurent& e = m(i, j);
      if (ring == FactorRing::rational && !e.is_constant())
        throw DomainError("ring", "entry " + e.to_string() + " is not a rational number");
      if (ring == FactorRing::polynomial && !e.is_zero() && *e.valuation() < 0)
        throw DomainError("ring", "entry " + e.to_string() + " is not a polynomial");
    }
}

}  // namespace

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.cols() != b.rows()) throw DomainError("size", "matrix product with incompatible sizes");
  LaurentMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

LaurentMatrix operator+(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DomainError("size", "matrix sum with different sizes");
  LaurentMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  return out;
}

LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b) {
  return a + scaled(b, Laurent(-1));
}

LaurentMatrix scaled(const LaurentMatrix& a, const Laurent& c) {
  LaurentMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) * c;
  return out;
}

LaurentMatrix power(const LaurentMatrix& a, unsigned exponent) {
  require_square(a);
  LaurentMatrix out = LaurentMatrix::identity(a.rows());
  for (unsigned i = 0; i < exponent; ++i) out = out * a;
  return out;
}

LaurentMatrix kron(const LaurentMatrix& a, const LaurentMatrix& b) {
  LaurentMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

Laurent determinant(const LaurentMatrix& a) {
  require_square(a);
  // Fraction-free Bareiss elimination; every division is exact.
  LaurentMatrix m = a;
  const std::size_t n = m.rows();
  Laurent prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m(p, k).is_zero()) ++p;
      if (p == n) return Laurent();
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Laurent num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = *exact_divide(num, prev);
      }
    prev = m(k, k);
  }
  return sign == 1 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

LaurentMatrix adjugate(const LaurentMatrix& a) {
  require_square(a);
  const std::size_t n = a.rows();
  LaurentMatrix out(n, n);
  if (n == 1) {
    out(0, 0) = Laurent(1);
    return out;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      LaurentMatrix minor(n - 1, n - 1);
      for (std::size_t r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(mr, mc++) = a(r, c);
        }
        ++mr;
      }
      Laurent cof = determinant(minor);
      out(j, i) = (i + j) % 2 == 0 ? cof : -cof;
    }
  return out;
}

std::optional<long long> min_valuation(const LaurentMatrix& a) {
  std::optional<long long> out;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (auto v = a(i, j).valuation(); v && (!out || *v < *out)) out = v;
  return out;
}

bool is_integral(const LaurentMatrix& a) {
  auto v = min_valuation(a);
  return !v || *v >= 0;
}

bool is_parabolic(const LaurentMatrix& a) {
  if (!is_integral(a)) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < i && j < a.cols(); ++j)
      if (!a(i, j).is_zero() && *a(i, j).valuation() < 1) return false;
  return true;
}

bool is_parabolic_invertible(const LaurentMatrix& a) {
  if (!a.is_square() || !is_parabolic(a)) return false;
  Laurent det = determinant(a);
  return !det.is_zero() && *det.valuation() == 0;
}

bool all_minors_vanish(const LaurentMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = i + 1; k < m.rows(); ++k)
      for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t l = j + 1; l < m.cols(); ++l)
          if (m(i, j) * m(k, l) != m(i, l) * m(k, j)) return false;
  return true;
}

std::optional<OuterFactors> rank1_factor(const LaurentMatrix& m, FactorRing ring) {
  require_ring(m, ring);
  OuterFactors out{std::vector<Laurent>(m.rows()), std::vector<Laurent>(m.cols())};
  std::size_t p = 0, q = 0;
  bool found = false;
  for (std::size_t i = 0; i < m.rows() && !found; ++i)
    for (std::size_t j = 0; j < m.cols() && !found; ++j)
      if (!m(i, j).is_zero()) {
        p = i;
        q = j;
        found = true;
      }
  if (!found) return out;

  out.column[p] = row_gcd(m, p, ring);
  for (std::size_t j = 0; j < m.cols(); ++j) {
    auto b = exact_divide(m(p, j), out.column[p]);
    if (!b) return std::nullopt;
    out.row[j] = *b;
  }
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i == p) continue;
    auto a = exact_divide(m(i, q), out.row[q]);
    if (!a) return std::nullopt;
    out.column[i] = *a;
  }
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (out.column[i] * out.row[j] != m(i, j)) return std::nullopt;
  if (ring == FactorRing::polynomial) {
    for (const auto* v : {&out.column, &out.row})
      for (const auto& e : *v)
        if (!e.is_zero() && *e.valuation() < 0) return std::nullopt;
  }
  return out;
}

std::pair<std::size_t, std::size_t> IndexMaps::sigma(std::size_t row, std::size_t col) const {
  auto [i, j] = tau_inverse(row);
  auto [k, l] = tau_inverse(col);
  return {tau(i, k), tau(l, j)};
}

std::pair<std::size_t, std::size_t> IndexMaps::sigma_inverse(std::size_t row, std::size_t col) const {
  auto [i, k] = tau_inverse(row);
  auto [l, j] = tau_inverse(col);
  return {tau(i, j), tau(k, l)};
}

LaurentMatrix sigma_apply(const LaurentMatrix& m) {
  IndexMaps maps{square_root_size(m)};
  LaurentMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      auto [sr, sc] = maps.sigma(r, c);
      out(sr, sc) = m(r, c);
    }
  return out;
}

std::vector<Laurent> tau_vector(const LaurentMatrix& a) {
  require_square(a);
  std::vector<Laurent> out;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.push_back(a(i, j));
  return out;
}

LaurentMatrix tau_unflatten(const std::vector<Laurent>& v, std::size_t n) {
  if (v.size() != n * n) throw DomainError("size", "vector length is not n^2");
  LaurentMatrix out(n, n);
  for (std::size_t a = 0; a < v.size(); ++a) out(a / n, a % n) = v[a];
  return out;
}

IntMatrix xi_matrix(std::size_t n) {
  if (n < 2) throw DomainError("parameter_range", "need n >= 2");
  IndexMaps maps{n};
  IntMatrix out(n * n, n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          out(maps.tau(i, j), maps.tau(k, l)) = -static_cast<int>(j < i) + static_cast<int>(l < k);
  return out;
}

LaurentMatrix mp_matrix(const LaurentMatrix& a, const LaurentMatrix& b) {
  require_square(a);
  if (b.rows() != a.rows() || !b.is_square()) throw DomainError("size", "A and B must have the same size");
  const std::size_t n = a.rows();
  IndexMaps maps{n};
  LaurentMatrix out(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l) {
          long long xi = -static_cast<long long>(j < i) + static_cast<long long>(l < k);
          out(maps.tau(i, j), maps.tau(k, l)) = (a(i, k) * b(l, j)).shifted(xi);
        }
    }
  return out;
}

bool is_pure_tensor(const LaurentMatrix& m) { return all_minors_vanish(sigma_apply(m)); }

std::optional<LaurentMatrix> is_inner(const LaurentMatrix& m) {
  const std::size_t n = square_root_size(m);
  IndexMaps maps{n};
  auto factors = rank1_factor(sigma_apply(m), FactorRing::laurent);
  if (!factors) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Laurent ab, ba;
      for (std::size_t k = 0; k < n; ++k) {
        ab += m(maps.tau(i, j), maps.tau(k, k));
        ba += m(maps.tau(k, k), maps.tau(j, i));
      }
      Laurent delta(i == j ? 1 : 0);
      if (ab != delta || ba != delta) return std::nullopt;
    }
  std::vector<Laurent> column = factors->column;
  return tau_unflatten(column, n);
}

LaurentMatrix hecke_matrix(std::size_t n) {
  if (n < 1) throw DomainError("parameter_range", "need n >= 1");
  LaurentMatrix h(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) h(i, i + 1) = Laurent(1);
  h(n - 1, 0) += Laurent::z();
  return h;
}

LaurentMatrix hecke_matrix_inverse(std::size_t n) {
  if (n < 1) throw DomainError("parameter_range", "need n >= 1");
  LaurentMatrix h(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) h(i + 1, i) = Laurent(1);
  h(0, n - 1) += Laurent::z(-1);
  return h;
}

HeckeConjugationReport hecke_conjugation_check(const LaurentMatrix& a, long long precision) {
  require_square(a);
  if (precision < 0) throw DomainError("precision", "precision must be nonnegative");
  const std::size_t n = a.rows();
  Laurent det = determinant(a);
  if (det.is_zero()) throw DomainError("invertible", "A is not invertible over Laurent polynomials");
  const long long nu = *det.valuation();

  LaurentMatrix adj = adjugate(a);
  LaurentMatrix inv = scaled(adj, series_inverse(det, precision));
  HeckeConjugationReport report;
  if (!det.is_monomial()) {
    // 1/det is known below -nu + precision; propagate through adj, A and Xi.
    long long inv_bound = min_valuation(adj).value_or(0) - nu + precision;
    inv = truncated(inv, inv_bound);
    report.exact_below = inv_bound + min_valuation(a).value_or(0) - 1;
    if (report.exact_below < 0)
      throw DomainError("precision", "precision exhausted before the valuation-0 terms are exact");
  }

  report.mp = mp_matrix(a, inv);
  if (report.exact_below != std::numeric_limits<long long>::max())
    report.mp = truncated(report.mp, report.exact_below);
  report.integral = is_integral(report.mp);

  // Independent route: conjugate each basis element of ParEnd directly.
  report.preserves_parabolic = true;
  for (std::size_t k = 0; k < n && report.preserves_parabolic; ++k)
    for (std::size_t l = 0; l < n && report.preserves_parabolic; ++l) {
      LaurentMatrix x(n, n);
      x(k, l) = Laurent::z(l < k ? 1 : 0);
      LaurentMatrix y = a * x * inv;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) y(i, j) = y(i, j).shifted(j < i ? -1 : 0);
      if (report.exact_below != std::numeric_limits<long long>::max()) y = truncated(y, report.exact_below);
      if (!is_integral(y)) report.preserves_parabolic = false;
    }

  report.a_parabolic = is_parabolic_invertible(a);
  report.det_valuation = nu;
  report.hecke_power = positive_mod(nu, static_cast<long long>(n));
  long long q = (nu - report.hecke_power) / static_cast<long long>(n);
  LaurentMatrix reduced = scaled(a * power(hecke_matrix_inverse(n), static_cast<unsigned>(report.hecke_power)),
                                 Laurent::z(-q));
  report.decomposition_verified = is_parabolic_invertible(reduced);
  return report;
}

}  // namespace parabolic
