#include "parabolic/laurent.hpp"

#include <sstream>
#include <vector>

#include "parabolic/errors.hpp"

namespace parabolic {

namespace {

// Dense coefficients of a polynomial with nonzero constant term, low first.
using Dense = std::vector<Rational>;

Dense to_dense(const Laurent& p, long long shift) {
  Dense out(static_cast<std::size_t>(*p.degree() - shift + 1));
  for (const auto& [k, c] : p.terms()) out[static_cast<std::size_t>(k - shift)] = c;
  return out;
}

Laurent from_dense(const Dense& d, long long shift) {
  Laurent out;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] != 0) out += Laurent::monomial(d[i], static_cast<long long>(i) + shift);
  return out;
}

void trim(Dense& d) {
  while (!d.empty() && d.back() == 0) d.pop_back();
}

// Long division over Q; returns the quotient and leaves the remainder in a.
Dense divide(Dense& a, const Dense& b) {
  trim(a);
  if (a.size() < b.size()) return {};
  Dense q(a.size() - b.size() + 1);
  for (std::size_t i = q.size(); i-- > 0;) {
    Rational c = a[i + b.size() - 1] / b.back();
    q[i] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= c * b[j];
  }
  trim(a);
  return q;
}

Dense monic(Dense d) {
  trim(d);
  if (d.empty()) return d;
  Rational lead = d.back();
  for (auto& c : d) c /= lead;
  return d;
}

}  // namespace

Laurent::Laurent(long long c) : Laurent(to_rational(c)) {}

Laurent::Laurent(const Rational& c) {
  if (c != 0) terms_.emplace(0, c);
}

Laurent Laurent::monomial(const Rational& c, long long k) {
  Laurent out;
  out.set(k, c);
  return out;
}

void Laurent::set(long long k, const Rational& c) {
  if (c == 0)
    terms_.erase(k);
  else
    terms_[k] = c;
}

bool Laurent::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }

std::optional<long long> Laurent::valuation() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

std::optional<long long> Laurent::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

Rational Laurent::coefficient(long long k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

Laurent Laurent::shifted(long long k) const {
  Laurent out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
  return out;
}

Laurent Laurent::truncated(long long bound) const {
  Laurent out;
  for (const auto& [e, c] : terms_)
    if (e < bound) out.terms_.emplace(e, c);
  return out;
}

Laurent Laurent::operator-() const {
  Laurent out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) set(e, coefficient(e) + c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) set(e, coefficient(e) - c);
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.set(ea + eb, out.coefficient(ea + eb) + ca * cb);
  return out;
}

Laurent& Laurent::operator*=(const Laurent& o) { return *this = *this * o; }

std::string Laurent::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    Rational mag = abs(c);
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "z";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

std::optional<Laurent> exact_divide(const Laurent& a, const Laurent& b) {
  if (b.is_zero()) throw DomainError("nonzero_divisor", "division by the zero Laurent polynomial");
  if (a.is_zero()) return Laurent();
  const long long va = *a.valuation();
  const long long vb = *b.valuation();
  Dense num = to_dense(a, va);
  Dense den = to_dense(b, vb);
  Dense q = divide(num, den);
  if (!num.empty()) return std::nullopt;
  return from_dense(q, va - vb);
}

Laurent polynomial_gcd(const Laurent& a, const Laurent& b) {
  for (const Laurent* p : {&a, &b})
    if (!p->is_zero() && *p->valuation() < 0)
      throw DomainError("ring", "polynomial gcd needs nonnegative exponents");
  Dense x = a.is_zero() ? Dense{} : to_dense(a, 0);
  Dense y = b.is_zero() ? Dense{} : to_dense(b, 0);
  trim(x);
  trim(y);
  while (!y.empty()) {
    divide(x, y);
    std::swap(x, y);
  }
  return from_dense(monic(x), 0);
}

Laurent laurent_gcd(const Laurent& a, const Laurent& b) {
  auto strip = [](const Laurent& p) { return p.is_zero() ? p : p.shifted(-*p.valuation()); };
  return polynomial_gcd(strip(a), strip(b));
}

Laurent series_inverse(const Laurent& f, long long terms) {
  if (f.is_zero()) throw DomainError("invertible", "zero has no inverse");
  const long long v = *f.valuation();
  if (f.is_monomial()) return Laurent::monomial(1 / f.coefficient(v), -v);
  Dense g = to_dense(f, v);
  // g has nonzero constant term; solve g * s = 1 modulo z^terms.
  Dense s(static_cast<std::size_t>(std::max(terms, 0LL)));
  for (std::size_t k = 0; k < s.size(); ++k) {
    Rational acc = k == 0 ? Rational(1) : Rational(0);
    for (std::size_t j = 1; j <= k && j < g.size(); ++j) acc -= g[j] * s[k - j];
    s[k] = acc / g[0];
  }
  return from_dense(s, -v);
}

}  // namespace parabolic
