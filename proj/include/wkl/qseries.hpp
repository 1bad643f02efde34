#pragma once

// Truncated formal q-series q^{e0} (a_0 + a_1 q + ... + a_N q^N + O(q^{N+1}))
// with an exact rational offset e0 and integer coefficients.
//
// A nonzero series is kept normalized (a_0 != 0); leading zeros are moved
// into the offset, which lowers N by the same amount so that the absolute
// precision e0 + N never grows. The zero series keeps its zero coefficients.

#include <algorithm>
#include <string>
#include <vector>

#include "json.hpp"
#include "wkl/rational.hpp"

namespace wkl {

class QSeries {
 public:
  QSeries() : coeffs_{Integer(0)} {}

  QSeries(Rational offset, std::vector<Integer> coeffs, long truncation)
      : offset_(std::move(offset)), coeffs_(std::move(coeffs)), n_(truncation) {
    if (n_ < 0) throw DomainError("truncation must be >= 0");
    coeffs_.resize(n_ + 1, Integer(0));
    normalize();
  }

  static QSeries one(long truncation) { return QSeries(Rational(0), {Integer(1)}, truncation); }
  static QSeries zero(long truncation, Rational offset = 0) {
    return QSeries(std::move(offset), {}, truncation);
  }
  static QSeries monomial(const Rational& exponent, long truncation) {
    return QSeries(exponent, {Integer(1)}, truncation);
  }

  const Rational& offset() const { return offset_; }
  long truncation() const { return n_; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  /// Coefficient of q^{offset + k}, 0 <= k <= N.
  const Integer& coefficient(long k) const {
    if (k < 0 || k > n_) throw DomainError("coefficient index beyond truncation");
    return coeffs_[k];
  }
  /// Coefficient of q^{e} for an absolute exponent e; zero below the offset.
  Integer coefficient_at(const Rational& e) const {
    Rational d = e - offset_;
    if (!is_integer(d)) return 0;
    if (sgn(d) < 0) return 0;
    if (d > n_) throw DomainError("exponent beyond truncation");
    return coeffs_[d.get_num().get_si()];
  }
  Rational absolute_precision() const { return offset_ + n_; }
  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c == 0; });
  }
  bool is_nonnegative() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c >= 0; });
  }

  friend QSeries operator+(const QSeries& a, const QSeries& b) { return combine(a, b, 1); }
  friend QSeries operator-(const QSeries& a, const QSeries& b) { return combine(a, b, -1); }

  friend QSeries operator*(const QSeries& a, const QSeries& b) {
    long n = std::min(a.n_, b.n_);
    std::vector<Integer> c(n + 1, Integer(0));
    for (long i = 0; i <= n; ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (long j = 0; i + j <= n; ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return QSeries(a.offset_ + b.offset_, std::move(c), n);
  }

  friend QSeries operator*(const Integer& s, const QSeries& a) {
    std::vector<Integer> c = a.coeffs_;
    for (auto& x : c) x *= s;
    return QSeries(a.offset_, std::move(c), a.n_);
  }

  /// Exact comparison of offsets and the first N+1 coefficients.
  friend bool equal_to_order(const QSeries& a, const QSeries& b, long N) {
    if (N > a.n_ || N > b.n_) throw DomainError("equal_to_order: order beyond truncation");
    if (a.is_zero() || b.is_zero()) {
      return a.is_zero() && b.is_zero();
    }
    if (a.offset_ != b.offset_) return false;
    for (long i = 0; i <= N; ++i)
      if (a.coeffs_[i] != b.coeffs_[i]) return false;
    return true;
  }

  /// Same offset, coefficients and truncation.
  friend bool operator==(const QSeries& a, const QSeries& b) {
    return a.offset_ == b.offset_ && a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
  }

  /// Truncates to relative order n <= N.
  QSeries truncated(long n) const {
    if (n > n_) throw DomainError("cannot extend a truncated series");
    return QSeries(offset_, std::vector<Integer>(coeffs_.begin(), coeffs_.begin() + n + 1), n);
  }

  std::string str() const {
    std::string body;
    for (long i = 0; i <= n_; ++i) {
      const Integer& c = coeffs_[i];
      if (c == 0) continue;
      std::string mono = i == 0 ? "" : (i == 1 ? "q" : "q^" + std::to_string(i));
      if (!body.empty()) body += c > 0 ? " + " : " - ";
      else if (c < 0) body += "-";
      Integer absc = abs(c);
      if (mono.empty()) body += absc.get_str();
      else if (absc == 1) body += mono;
      else body += absc.get_str() + mono;
    }
    if (body.empty()) body = "0";
    body += " + O(q^" + std::to_string(n_ + 1) + ")";
    return "q^{" + to_string(offset_) + "} * (" + body + ")";
  }

  nlohmann::json to_json() const {
    nlohmann::json c = nlohmann::json::array();
    for (const auto& x : coeffs_) c.push_back(x.get_str());
    return nlohmann::json{{"offset", to_string(offset_)}, {"coeffs", c}, {"truncation", n_}};
  }

 private:
  void normalize() {
    long z = 0;
    while (z <= n_ && coeffs_[z] == 0) ++z;
    if (z == 0 || z > n_) return;  // normalized, or the zero series
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + z);
    offset_ += z;
    n_ -= z;
  }

  static QSeries combine(const QSeries& a, const QSeries& b, int sign) {
    // A zero summand contributes only its precision; its offset may lie in
    // any coset of Z.
    if (a.is_zero() || b.is_zero()) {
      const QSeries& other = a.is_zero() ? b : a;
      Rational prec = std::min(a.absolute_precision(), b.absolute_precision());
      Integer n = floor_of(prec - other.offset_);
      if (n < 0) return zero(0, prec);
      QSeries r = other.truncated(std::min<long>(n.get_si(), other.n_));
      return (a.is_zero() && sign < 0) ? Integer(-1) * r : r;
    }
    Rational d = b.offset_ - a.offset_;
    if (!is_integer(d)) throw DomainError("q-series offsets lie in different cosets of Z");
    Rational off = std::min(a.offset_, b.offset_);
    Rational prec = std::min(a.absolute_precision(), b.absolute_precision());
    Rational nr = prec - off;
    if (sgn(nr) < 0) return zero(0, prec);
    long n = nr.get_num().get_si();
    std::vector<Integer> c(n + 1, Integer(0));
    long sa = Rational(a.offset_ - off).get_num().get_si();
    long sb = Rational(b.offset_ - off).get_num().get_si();
    for (long i = 0; i + sa <= n; ++i) c[i + sa] += a.coeffs_[i];
    for (long i = 0; i + sb <= n; ++i) c[i + sb] += sign * b.coeffs_[i];
    return QSeries(off, std::move(c), n);
  }

  Rational offset_ = 0;
  std::vector<Integer> coeffs_;
  long n_ = 0;
};

/// prod_{i >= m_start} (1 - q^i)^exponent, to order N.
inline QSeries eta_factor(long m_start, long exponent, long N) {
  if (m_start < 1) throw DomainError("eta_factor needs m_start >= 1");
  if (N < 0) throw DomainError("truncation must be >= 0");
  std::vector<Integer> c(N + 1, Integer(0));
  c[0] = 1;
  for (long i = m_start; i <= N; ++i) {
    for (long t = 0; t < std::labs(exponent); ++t) {
      if (exponent > 0) {
        for (long j = N; j >= i; --j) c[j] -= c[j - i];
      } else {
        for (long j = i; j <= N; ++j) c[j] += c[j - i];
      }
    }
  }
  return QSeries(Rational(0), std::move(c), N);
}

}  // namespace wkl
