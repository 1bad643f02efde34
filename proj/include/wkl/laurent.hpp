#pragma once

// Laurent polynomials with arbitrary-precision integer coefficients. The
// same type serves Z[v, v^-1] for Hecke algebras and Z[q] for ordinary
// Kazhdan-Lusztig polynomials.

#include <map>
#include <string>
#include <vector>

#include "wkl/rational.hpp"

namespace wkl {

class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c) {  // NOLINT: constants convert implicitly
    if (c != 0) terms_[0] = c;
  }
  static LaurentPoly monomial(long power, const Integer& c = 1) {
    LaurentPoly p;
    if (c != 0) p.terms_[power] = c;
    return p;
  }
  /// From coefficients c[0] + c[1] x + ...
  static LaurentPoly from_coefficients(const std::vector<Integer>& c, long lowest = 0) {
    LaurentPoly p;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] != 0) p.terms_[lowest + static_cast<long>(i)] = c[i];
    return p;
  }

  Integer coefficient(long power) const {
    auto it = terms_.find(power);
    return it == terms_.end() ? Integer(0) : it->second;
  }
  const std::map<long, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long min_degree() const { return terms_.empty() ? 0 : terms_.begin()->first; }
  long max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

  /// v -> v^-1.
  LaurentPoly bar() const {
    LaurentPoly p;
    for (const auto& [e, c] : terms_) p.terms_[-e] = c;
    return p;
  }
  /// Multiplies by v^k.
  LaurentPoly shift(long k) const {
    LaurentPoly p;
    for (const auto& [e, c] : terms_) p.terms_[e + k] = c;
    return p;
  }
  /// Substitutes v -> v^k (k may be negative).
  LaurentPoly substitute_power(long k) const {
    LaurentPoly p;
    for (const auto& [e, c] : terms_) p.add_term(e * k, c);
    return p;
  }
  /// Terms with strictly positive exponent.
  LaurentPoly positive_part() const {
    LaurentPoly p;
    for (const auto& [e, c] : terms_)
      if (e > 0) p.terms_[e] = c;
    return p;
  }
  Integer value_at_one() const {
    Integer s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
  }
  Integer value_at_minus_one() const {
    Integer s = 0;
    for (const auto& [e, c] : terms_) s += (e % 2 == 0) ? c : Integer(-c);
    return s;
  }

  void add_term(long power, const Integer& c) {
    if (c == 0) return;
    Integer& slot = terms_[power];
    slot += c;
    if (slot == 0) terms_.erase(power);
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(const LaurentPoly& a) { return LaurentPoly() - a; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly p;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) p.add_term(ea + eb, Integer(ca * cb));
    return p;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  /// Human-readable form such as "v^-1+2v^3" or "1+q".
  std::string str(const std::string& var = "v") const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
      std::string coef = c.get_str();
      if (!s.empty() && c > 0) s += "+";
      if (e == 0) {
        s += coef;
        continue;
      }
      if (c == -1) s += "-";
      else if (c != 1) s += coef;
      s += var;
      if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
  }

  /// Coefficient list c_lo..c_hi separated by commas, prefixed by the lowest
  /// exponent: "lo:c_lo,...,c_hi". Zero is "0:0".
  std::string coefficient_list() const {
    if (terms_.empty()) return "0:0";
    std::string s = std::to_string(min_degree()) + ":";
    for (long e = min_degree(); e <= max_degree(); ++e) {
      if (e != min_degree()) s += ",";
      s += coefficient(e).get_str();
    }
    return s;
  }

  static LaurentPoly parse_coefficient_list(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw ConfigError("bad coefficient list '" + text + "'");
    long lo = 0;
    try {
      lo = std::stol(text.substr(0, colon));
    } catch (const std::exception&) {
      throw ConfigError("bad coefficient list '" + text + "'");
    }
    LaurentPoly p;
    std::string rest = text.substr(colon + 1);
    std::size_t pos = 0;
    long e = lo;
    while (true) {
      auto comma = rest.find(',', pos);
      std::string tok = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      Rational r = parse_rational(tok);
      if (!is_integer(r)) throw ConfigError("non-integer coefficient '" + tok + "'");
      p.add_term(e++, r.get_num());
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return p;
  }

 private:
  std::map<long, Integer> terms_;
};

}  // namespace wkl
