#include "parabolic/rational.hpp"

#include <cctype>

#include "parabolic/errors.hpp"

namespace parabolic {

Integer floor_of(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Integer ceil_of(const Rational& q) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Rational make_rational(long long p, long long q) {
  if (q == 0) throw DomainError("nonzero_denominator", "rational with zero denominator");
  Rational out(to_integer(p), to_integer(q));
  out.canonicalize();
  return out;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

namespace {

bool valid_integer_text(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!valid_integer_text(num, true) || !valid_integer_text(den, false))
    throw InputError("malformed rational literal '" + std::string(text) + "'");
  std::string n(num.front() == '+' ? num.substr(1) : num);
  Integer p(n, 10), q(std::string(den), 10);
  if (q == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  Rational out(p, q);
  out.canonicalize();
  return out;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

long long to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw DomainError("int64_range", "value " + z.get_str() + " exceeds 64 bits");
  return z.get_si();
}

Integer power(long long base, unsigned long exponent) {
  Integer out;
  Integer b = to_integer(base);
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), exponent);
  return out;
}

}  // namespace parabolic
