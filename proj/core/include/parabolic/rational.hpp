#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace parabolic {

using Rational = mpq_class;
using Integer = mpz_class;

static_assert(sizeof(long) == sizeof(long long), "64-bit long required by gmpxx conversions");

inline Integer to_integer(long long v) { return Integer(static_cast<long>(v)); }
inline Rational to_rational(long long v) { return Rational(to_integer(v)); }
// Canonicalized p/q; throws DomainError("nonzero_denominator") when q = 0.
Rational make_rational(long long p, long long q);

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);
bool is_integer(const Rational& q);

// Accepts "p/q" or "p" with optional sign; decimals are rejected.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Throws DomainError("int64_range") when z does not fit.
long long to_int64(const Integer& z);

Integer power(long long base, unsigned long exponent);

}  // namespace parabolic
