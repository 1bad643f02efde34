#pragma once

// Hecke algebra computations on a Bruhat ball.
//
// Normalization: standard basis H_x with (H_s - v^-1)(H_s + v) = 0, so the
// Kazhdan-Lusztig element of a simple reflection is H_s + v and canonical
// basis coefficients lie in v Z[v] below the diagonal. Ordinary KL
// polynomials are reported in q = v^-2:
//   h_{x,y}(v) = v^{l(y) - l(x)} P_{x,y}(v^-2).
//
// Parabolic modules are right modules with basis N_x, x minimal in W_J x:
//   N_x H_s = N_{xs}                         if xs > x and xs is minimal,
//   N_x H_s = N_{xs} + (v^-1 - v) N_x        if xs < x,
//   N_x H_s = u N_x                          if xs is not minimal,
// with u = -v for the antispherical (sign-induced) module and u = v^-1 for
// the spherical (trivially induced) module.

#include <fstream>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "wkl/coxeter.hpp"
#include "wkl/laurent.hpp"

namespace wkl {

/// Deodhar parameter of a parabolic module.
enum class ParabolicKind { Antispherical, Spherical };

inline const char* to_string(ParabolicKind k) {
  return k == ParabolicKind::Antispherical ? "antispherical(u=-1)" : "spherical(u=q)";
}

inline ParabolicKind parse_parabolic_kind(const std::string& s) {
  if (s == "antispherical" || s == "u=-1" || s == "-1" || s == to_string(ParabolicKind::Antispherical))
    return ParabolicKind::Antispherical;
  if (s == "spherical" || s == "u=q" || s == "q" || s == to_string(ParabolicKind::Spherical))
    return ParabolicKind::Spherical;
  throw ConfigError("unknown parabolic kind '" + s + "' (antispherical | spherical)");
}

/// Ordinary Kazhdan-Lusztig polynomials by the classical recursion with
/// mu-coefficients. The cache may be shared between threads; concurrent
/// computation of the same entry is harmless because results coincide.
class KLTable {
 public:
  explicit KLTable(const BruhatBall& ball) : ball_(ball) {}

  /// P_{x,y}(q); zero unless x <= y.
  LaurentPoly polynomial(int x, int y) const {
    check(x);
    check(y);
    if (!ball_.leq(x, y)) return LaurentPoly();
    if (x == y) return LaurentPoly(1);
    {
      std::shared_lock lock(mutex_);
      auto it = cache_.find({x, y});
      if (it != cache_.end()) return it->second;
    }
    LaurentPoly p = compute(x, y);
    std::unique_lock lock(mutex_);
    cache_.emplace(std::make_pair(x, y), p);
    return p;
  }

  /// mu(x, y): coefficient of q^{(l(y)-l(x)-1)/2} in P_{x,y}.
  Integer mu(int x, int y) const {
    int d = ball_.length(y) - ball_.length(x);
    if (d <= 0 || d % 2 == 0) return 0;
    return polynomial(x, y).coefficient((d - 1) / 2);
  }

  /// Canonical basis coefficient h_{x,y}(v).
  LaurentPoly canonical_coefficient(int x, int y) const {
    return polynomial(x, y).substitute_power(-2).shift(ball_.length(y) - ball_.length(x));
  }

  const BruhatBall& ball() const { return ball_; }

 private:
  void check(int x) const {
    if (x < 0 || x >= ball_.size()) throw ResourceError("insufficient ball: element outside the Bruhat ball");
  }

  LaurentPoly compute(int x, int y) const {
    int s = -1;
    for (int i = 0; i < ball_.rank(); ++i)
      if (ball_.is_left_descent(i, y)) {
        s = i;
        break;
      }
    const int v = ball_.left_mult(s, y);  // sy < y
    const int sx = ball_.left_mult(s, x);
    if (sx < 0) throw ResourceError("insufficient ball: s x leaves the Bruhat ball");
    const bool c = ball_.is_left_descent(s, x);
    LaurentPoly out = polynomial(sx, v).shift(c ? 0 : 1) + polynomial(x, v).shift(c ? 1 : 0);
    for (int z = 0; z < ball_.size(); ++z) {
      if (!ball_.is_left_descent(s, z) || z == v || !ball_.leq(z, v) || !ball_.leq(x, z)) continue;
      Integer m = mu(z, v);
      if (m == 0) continue;
      int d = ball_.length(y) - ball_.length(z);  // even
      out -= polynomial(x, z).shift(d / 2) * LaurentPoly::monomial(0, m);
    }
    return out;
  }

  const BruhatBall& ball_;
  mutable std::shared_mutex mutex_;
  mutable std::map<std::pair<int, int>, LaurentPoly> cache_;
};

/// An element of a parabolic module: coefficients on N_x.
using ModuleElement = std::map<int, LaurentPoly>;

class ParabolicModule {
 public:
  ParabolicModule(const BruhatBall& ball, std::vector<int> parabolic, ParabolicKind kind)
      : ball_(ball), J_(std::move(parabolic)), kind_(kind) {
    for (int j : J_)
      if (j < 0 || j >= ball_.rank()) throw DomainError("parabolic generator out of range");
    for (int x = 0; x < ball_.size(); ++x)
      if (ball_.is_minimal_left(J_, x)) minimal_.push_back(x);
  }

  const BruhatBall& ball() const { return ball_; }
  const std::vector<int>& parabolic() const { return J_; }
  ParabolicKind kind() const { return kind_; }
  const std::vector<int>& minimal_elements() const { return minimal_; }
  bool is_minimal(int x) const { return ball_.is_minimal_left(J_, x); }

  LaurentPoly u() const {
    return kind_ == ParabolicKind::Antispherical ? -LaurentPoly::monomial(1) : LaurentPoly::monomial(-1);
  }

  /// m * H_s.
  ModuleElement times_standard(const ModuleElement& m, int s) const {
    ModuleElement out;
    for (const auto& [x, c] : m) {
      int xs = ball_.right_mult(x, s);
      if (xs < 0) throw ResourceError("insufficient ball: x s leaves the Bruhat ball");
      if (ball_.length(xs) < ball_.length(x)) {
        out[xs] += c;
        out[x] += c * (LaurentPoly::monomial(-1) - LaurentPoly::monomial(1));
      } else if (is_minimal(xs)) {
        out[xs] += c;
      } else {
        out[x] += c * u();
      }
    }
    prune(out);
    return out;
  }

  /// m * (H_s + v).
  ModuleElement times_kl_generator(const ModuleElement& m, int s) const {
    ModuleElement out = times_standard(m, s);
    for (const auto& [x, c] : m) out[x] += c.shift(1);
    prune(out);
    return out;
  }

  /// Canonical basis element underline{N}_w by the standard inductive
  /// construction: multiply by H_s + v and subtract constant terms top down.
  const ModuleElement& canonical(int w) const {
    if (w < 0 || w >= ball_.size()) throw ResourceError("insufficient ball: w outside the Bruhat ball");
    if (!is_minimal(w)) throw DomainError("w is not minimal in its W_J coset: " + ball_.word_string(w));
    {
      std::shared_lock lock(mutex_);
      auto it = canonical_.find(w);
      if (it != canonical_.end()) return it->second;
    }
    ModuleElement result;
    if (w == ball_.identity()) {
      result[w] = LaurentPoly(1);
    } else {
      int s = ball_.word(w).back();
      int prev = ball_.right_mult(w, s);  // w = prev * s with prev < w
      ModuleElement c = times_kl_generator(canonical(prev), s);
      // Remove constant terms below the diagonal, longest elements first.
      while (true) {
        int top = -1;
        for (const auto& [y, p] : c)
          if (y != w && p.coefficient(0) != 0 && (top < 0 || ball_.length(y) > ball_.length(top))) top = y;
        if (top < 0) break;
        Integer k = c[top].coefficient(0);
        for (const auto& [z, p] : canonical(top)) c[z] -= p * LaurentPoly::monomial(0, k);
        prune(c);
      }
      result = std::move(c);
    }
    std::unique_lock lock(mutex_);
    return canonical_.emplace(w, std::move(result)).first->second;
  }

  /// n_{y,w}: coefficient of N_y in underline{N}_w.
  LaurentPoly coefficient(int y, int w) const {
    const auto& c = canonical(w);
    auto it = c.find(y);
    return it == c.end() ? LaurentPoly() : it->second;
  }

  /// Bar involution on the module, from bar(N_e) = N_e and
  /// bar(N_{xs}) = bar(N_x) (H_s + v - v^-1) for xs > x minimal.
  ModuleElement bar(const ModuleElement& m) const {
    ModuleElement out;
    for (const auto& [x, c] : m) {
      const ModuleElement& bx = bar_standard(x);
      for (const auto& [z, p] : bx) out[z] += c.bar() * p;
    }
    prune(out);
    return out;
  }

  const ModuleElement& bar_standard(int x) const {
    {
      std::shared_lock lock(mutex_);
      auto it = bar_.find(x);
      if (it != bar_.end()) return it->second;
    }
    ModuleElement r;
    if (x == ball_.identity()) {
      r[x] = LaurentPoly(1);
    } else {
      int s = ball_.word(x).back();
      int prev = ball_.right_mult(x, s);
      const ModuleElement& b = bar_standard(prev);
      r = times_standard(b, s);
      LaurentPoly shift = LaurentPoly::monomial(1) - LaurentPoly::monomial(-1);
      for (const auto& [z, p] : b) r[z] += p * shift;
      prune(r);
    }
    std::unique_lock lock(mutex_);
    return bar_.emplace(x, std::move(r)).first->second;
  }

 private:
  static void prune(ModuleElement& m) {
    for (auto it = m.begin(); it != m.end();) it = it->second.is_zero() ? m.erase(it) : std::next(it);
  }

  const BruhatBall& ball_;
  std::vector<int> J_;
  ParabolicKind kind_;
  std::vector<int> minimal_;
  mutable std::shared_mutex mutex_;
  mutable std::map<int, ModuleElement> canonical_;
  mutable std::map<int, ModuleElement> bar_;
};

/// Canonical-basis coefficients y -> n_{y,w} for w minimal in W_J w.
inline std::map<int, LaurentPoly> antispherical_basis(const ParabolicModule& module, int w) {
  std::map<int, LaurentPoly> out;
  for (const auto& [y, p] : module.canonical(w)) out[y] = p;
  return out;
}

/// Integer matrix indexed by a finite poset in a linear extension order.
using IntMatrix = std::vector<std::vector<Integer>>;

/// Exact inverse of a unitriangular matrix M (M[i][j] = 0 unless
/// leq(i, j), diagonal 1). Rows and columns are indexed by the same list of
/// poset elements; leq must be a partial order compatible with that list.
template <class Leq>
IntMatrix inverse_multiplicity_matrix(const IntMatrix& m, Leq leq) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw DomainError("multiplicity matrix is not square");
    if (m[i][i] != 1) throw DomainError("multiplicity matrix is not unitriangular (diagonal)");
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && m[i][j] != 0 && !leq(i, j))
        throw DomainError("multiplicity matrix has an entry outside the poset order");
  }
  // Solve M X = I column by column; X is supported on the same order.
  // Process rows in an order where i comes after all j > i in the poset.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::vector<std::size_t> rank(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && leq(i, j)) ++rank[i];  // number of elements above i
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rank[a] < rank[b]; });
  IntMatrix x(n, std::vector<Integer>(n, 0));
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t i : order) {
      Integer v = (i == col) ? 1 : 0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i && m[i][j] != 0) v -= m[i][j] * x[j][col];
      x[i][col] = v;
    }
  }
  return x;
}

// ---------------------------------------------------------------------------
// KL table dump: TSV with columns y-word, w-word, polynomial, convention.

struct KLRow {
  std::string y_word;
  std::string w_word;
  LaurentPoly poly;
  std::string convention;
};

inline std::string kl_tsv_header() { return "y\tw\tpolynomial\tconvention"; }

inline std::string kl_tsv_row(const KLRow& r) {
  return r.y_word + "\t" + r.w_word + "\t" + r.poly.coefficient_list() + "\t" + r.convention;
}

inline std::vector<KLRow> parse_kl_tsv(std::istream& in) {
  std::vector<KLRow> rows;
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (header) {
      header = false;
      if (line != kl_tsv_header()) throw ConfigError("unexpected KL TSV header: " + line);
      continue;
    }
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string tok;
    while (std::getline(ss, tok, '\t')) f.push_back(tok);
    if (f.size() != 4) throw ConfigError("KL TSV row needs 4 fields: " + line);
    rows.push_back({f[0], f[1], LaurentPoly::parse_coefficient_list(f[2]), f[3]});
  }
  return rows;
}

}  // namespace wkl
