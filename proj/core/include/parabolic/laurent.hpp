#pragma once

#include <map>
#include <optional>
#include <string>

#include "parabolic/rational.hpp"

namespace parabolic {

// Finite sum c_k z^k over the rationals, k of either sign.
class Laurent {
 public:
  Laurent() = default;
  Laurent(long long c);  // NOLINT(google-explicit-constructor)
  Laurent(const Rational& c);  // NOLINT(google-explicit-constructor)

  static Laurent monomial(const Rational& c, long long k);
  static Laurent z(long long k = 1) { return monomial(Rational(1), k); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  // Lowest exponent; empty for zero.
  std::optional<long long> valuation() const;
  std::optional<long long> degree() const;
  Rational coefficient(long long k) const;
  const std::map<long long, Rational>& terms() const { return terms_; }

  Laurent shifted(long long k) const;
  // Drops every exponent >= bound.
  Laurent truncated(long long bound) const;

  Laurent operator-() const;
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  friend bool operator==(const Laurent&, const Laurent&) = default;

  std::string to_string() const;

 private:
  void set(long long k, const Rational& c);
  std::map<long long, Rational> terms_;
};

// q with a = q * b, if it exists among Laurent polynomials.
std::optional<Laurent> exact_divide(const Laurent& a, const Laurent& b);

// Monic gcd in Q[z]; both arguments must have nonnegative valuation.
Laurent polynomial_gcd(const Laurent& a, const Laurent& b);
// Gcd up to the units c z^k: monic with valuation 0.
Laurent laurent_gcd(const Laurent& a, const Laurent& b);

// Expansion of 1/f in increasing powers of z, keeping `terms` coefficients
// starting at exponent -valuation(f). Exact when f is a monomial.
Laurent series_inverse(const Laurent& f, long long terms);

}  // namespace parabolic
