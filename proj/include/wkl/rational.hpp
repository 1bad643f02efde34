#pragma once

// Exact scalar types shared by every module. All arithmetic in the library is
// exact; there are no floating point values anywhere.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "wkl/errors.hpp"

namespace wkl {

using Integer = mpz_class;
using Rational = mpq_class;
using RatVec = std::vector<Rational>;
using IntVec = std::vector<long>;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Canonical text form: "-3/2", "5", "0".
inline std::string to_string(const Rational& r) {
  Rational c(r);
  c.canonicalize();
  return c.get_str();
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline Integer floor_of(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

inline Integer ceil_of(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

inline bool is_positive_integer(const Rational& r) {
  return is_integer(r) && sgn(r) > 0;
}
inline bool is_negative_integer(const Rational& r) {
  return is_integer(r) && sgn(r) < 0;
}
inline bool is_nonnegative_integer(const Rational& r) {
  return is_integer(r) && sgn(r) >= 0;
}

/// Parses "a", "a/b" or a finite decimal such as "-0.25" into an exact value.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return ConfigError("not an exact rational: '" + s + "'"); };
  if (s.empty()) throw bad();
  auto all_digits = [](std::string_view t, bool allow_sign) {
    if (t.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    bool neg = !whole.empty() && whole[0] == '-';
    if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) whole.erase(0, 1);
    if (whole.empty()) whole = "0";
    if (!all_digits(whole, false) || !all_digits(frac, false)) throw bad();
    Integer num(whole + frac, 10);
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    Rational r(num, den);
    r.canonicalize();
    return neg ? Rational(-r) : r;
  }
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string a = s.substr(0, slash), b = s.substr(slash + 1);
    if (!all_digits(a, true) || !all_digits(b, false)) throw bad();
    if (a[0] == '+') a.erase(0, 1);
    Integer den(b, 10);
    if (den == 0) throw ConfigError("zero denominator in '" + s + "'");
    Rational r(Integer(a, 10), den);
    r.canonicalize();
    return r;
  }
  if (!all_digits(s, true)) throw bad();
  if (s[0] == '+') s.erase(0, 1);
  return Rational(Integer(s, 10));
}

inline Rational dot(const RatVec& a, const RatVec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace wkl
