#pragma once

// Affine Weyl group combinatorics at a fixed level.
//
// Index set: 0 is the affine simple coroot alpha_0^v = (-theta^v, 1); i >= 1
// is the finite simple coroot alpha_{i-1}^v. A real affine coroot is stored as
// (gamma^v, m) meaning gamma^v + m (kappa/kappa_b) c; for a root gamma of
// squared length l the central multiplicity m runs over (2/l) Z.
//
// Shifted pairings use <lam + rho_hat, (gamma^v, m)> = <lam + rho, gamma^v> +
// m (k + h^v); rho_hat itself is never formed.

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "wkl/liecore.hpp"

namespace wkl {

struct LevelWeight {
  RatVec lam;
  Level level;

  friend bool operator==(const LevelWeight& a, const LevelWeight& b) {
    return a.lam == b.lam && a.level.k == b.level.k;
  }
};

struct AffineCoroot {
  IntVec gamma;
  long m = 0;

  friend bool operator==(const AffineCoroot&, const AffineCoroot&) = default;
  friend auto operator<=>(const AffineCoroot& a, const AffineCoroot& b) {
    if (a.m != b.m) return a.m <=> b.m;
    return a.gamma <=> b.gamma;
  }
  bool is_positive() const {
    if (m != 0) return m > 0;
    for (long c : gamma)
      if (c != 0) return c > 0;
    return false;
  }
  AffineCoroot negated() const {
    AffineCoroot r{gamma, -m};
    for (auto& c : r.gamma) c = -c;
    return r;
  }
};

inline AffineCoroot simple_affine_coroot(const RootSystem& rs, int i) {
  if (i < 0 || i > rs.rank()) throw DomainError("affine simple index out of range");
  if (i == 0) {
    AffineCoroot c{rs.theta_check(), 1};
    for (auto& x : c.gamma) x = -x;
    return c;
  }
  IntVec g(rs.rank(), 0);
  g[i - 1] = 1;
  return {g, 0};
}

/// Finite root (simple-root coordinates, signed) whose coroot is gamma^v,
/// together with the step of admissible central multiplicities.
struct CorootData {
  IntVec root;
  long step = 1;
};

inline CorootData coroot_data(const RootSystem& rs, const IntVec& gamma) {
  auto found = rs.find_coroot(gamma);
  if (!found) throw DomainError("not a finite coroot");
  auto [idx, sign] = *found;
  CorootData d;
  d.root = rs.positive_roots()[idx];
  for (auto& x : d.root) x *= sign;
  Rational step = Rational(2) / rs.positive_root_lengths()[idx];
  d.step = step.get_num().get_si();
  return d;
}

inline bool is_real_coroot(const RootSystem& rs, const AffineCoroot& cr) {
  if (static_cast<int>(cr.gamma.size()) != rs.rank() || !rs.find_coroot(cr.gamma)) return false;
  return cr.m % coroot_data(rs, cr.gamma).step == 0;
}

/// <lam + rho_hat, cr> (shifted) or <lam, cr> (unshifted).
inline Rational dot_pair(const RootSystem& rs, const LevelWeight& lw, const AffineCoroot& cr,
                         bool shifted = true) {
  if (shifted) {
    Rational a = rs.pair(lw.lam, cr.gamma);
    for (long c : cr.gamma) a += c;  // <rho, gamma^v>
    return a + Rational(cr.m) * lw.level.shifted(rs);
  }
  return rs.pair(lw.lam, cr.gamma) + Rational(cr.m) * lw.level.k;
}

/// <root, coroot> for a finite root and finite coroot.
inline long root_coroot_pairing(const RootSystem& rs, const IntVec& root, const IntVec& coroot) {
  long s = 0;
  for (int i = 0; i < rs.rank(); ++i)
    for (int j = 0; j < rs.rank(); ++j) s += root[i] * coroot[j] * rs.cartan()[j][i];
  return s;
}

/// Linear reflection of coroots: s_a(b) = b - <a, b> a^v.
inline AffineCoroot reflect_coroot(const RootSystem& rs, const AffineCoroot& a,
                                   const AffineCoroot& b) {
  long p = root_coroot_pairing(rs, coroot_data(rs, a.gamma).root, b.gamma);
  AffineCoroot r = b;
  for (int i = 0; i < rs.rank(); ++i) r.gamma[i] -= p * a.gamma[i];
  r.m -= p * a.m;
  return r;
}

/// Real coroots with |m| <= bound generated as the orbit of the simple
/// coroots under the linear simple reflections. Closure is computed inside a
/// larger ball so that chains leaving and re-entering the window are seen.
inline std::vector<AffineCoroot> real_coroots_by_orbit(const RootSystem& rs, long bound) {
  const long outer = 3 * bound + 6;
  std::set<AffineCoroot> seen;
  std::deque<AffineCoroot> todo;
  for (int i = 0; i <= rs.rank(); ++i) {
    auto c = simple_affine_coroot(rs, i);
    for (const auto& x : {c, c.negated()})
      if (seen.insert(x).second) todo.push_back(x);
  }
  while (!todo.empty()) {
    AffineCoroot cur = todo.front();
    todo.pop_front();
    for (int i = 0; i <= rs.rank(); ++i) {
      AffineCoroot nx = reflect_coroot(rs, simple_affine_coroot(rs, i), cur);
      if (std::labs(nx.m) > outer) continue;
      if (seen.insert(nx).second) todo.push_back(nx);
    }
  }
  std::vector<AffineCoroot> out;
  for (const auto& c : seen)
    if (std::labs(c.m) <= bound) out.push_back(c);
  return out;
}

/// Closed form: (gamma^v, m) for every finite coroot and m in (2/l) Z.
inline std::vector<AffineCoroot> real_coroots_closed_form(const RootSystem& rs, long bound) {
  std::vector<AffineCoroot> out;
  for (const auto& g : rs.positive_coroots()) {
    long s = coroot_data(rs, g).step;
    for (long m = -bound; m <= bound; ++m) {
      if (m % s != 0) continue;
      AffineCoroot c{g, m};
      out.push_back(c);
      out.push_back(AffineCoroot{c.negated().gamma, m});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline LevelWeight dot_reflect(const RootSystem& rs, const LevelWeight& lw, const AffineCoroot& cr) {
  if (!is_real_coroot(rs, cr)) throw DomainError("not a real affine coroot");
  Rational p = dot_pair(rs, lw, cr);
  RatVec root = rs.root_to_weight(coroot_data(rs, cr.gamma).root);
  LevelWeight out = lw;
  for (int i = 0; i < rs.rank(); ++i) out.lam[i] -= p * root[i];
  return out;
}

/// Element of the affine Weyl group, stored as x -> lin x + c trans acting on
/// x = lam + rho at shifted level c = k + h^v. Two elements are equal iff
/// these affine maps agree.
class AffineWeylElt {
 public:
  AffineWeylElt() = default;

  static AffineWeylElt identity(const RootSystem& rs) {
    AffineWeylElt e;
    e.lin_.assign(rs.rank(), IntVec(rs.rank(), 0));
    for (int i = 0; i < rs.rank(); ++i) e.lin_[i][i] = 1;
    e.trans_.assign(rs.rank(), 0);
    return e;
  }

  static AffineWeylElt reflection(const RootSystem& rs, const AffineCoroot& cr) {
    if (!is_real_coroot(rs, cr)) throw DomainError("not a real affine coroot");
    AffineWeylElt e;
    IntVec root_w(rs.rank());
    RatVec rw = rs.root_to_weight(coroot_data(rs, cr.gamma).root);
    for (int i = 0; i < rs.rank(); ++i) root_w[i] = rw[i].get_num().get_si();
    e.lin_.assign(rs.rank(), IntVec(rs.rank(), 0));
    for (int i = 0; i < rs.rank(); ++i) {
      e.lin_[i][i] = 1;
      for (int j = 0; j < rs.rank(); ++j) e.lin_[i][j] -= root_w[i] * cr.gamma[j];
    }
    e.trans_.assign(rs.rank(), 0);
    for (int i = 0; i < rs.rank(); ++i) e.trans_[i] = -cr.m * root_w[i];
    e.finish(rs);
    return e;
  }

  static AffineWeylElt generator(const RootSystem& rs, int i) {
    return reflection(rs, simple_affine_coroot(rs, i));
  }

  /// w = s_{word[0]} s_{word[1]} ... ; the word need not be reduced.
  static AffineWeylElt from_word(const RootSystem& rs, const std::vector<int>& word) {
    AffineWeylElt w = identity(rs);
    w.finish(rs);
    for (int i : word) w = w.times(rs, generator(rs, i));
    return w;
  }

  AffineWeylElt times(const RootSystem& rs, const AffineWeylElt& o) const {
    AffineWeylElt r;
    const int n = rs.rank();
    r.lin_.assign(n, IntVec(n, 0));
    r.trans_ = trans_;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        for (int l = 0; l < n; ++l) r.lin_[i][j] += lin_[i][l] * o.lin_[l][j];
        r.trans_[i] += lin_[i][j] * o.trans_[j];
      }
    r.finish(rs);
    return r;
  }

  AffineWeylElt inverse(const RootSystem& rs) const {
    // Weyl group matrices are integral with integral inverses.
    RatMatrix m(rs.rank(), RatVec(rs.rank()));
    for (int i = 0; i < rs.rank(); ++i)
      for (int j = 0; j < rs.rank(); ++j) m[i][j] = lin_[i][j];
    RatMatrix inv = wkl::inverse(m);
    AffineWeylElt r;
    r.lin_.assign(rs.rank(), IntVec(rs.rank(), 0));
    r.trans_.assign(rs.rank(), 0);
    for (int i = 0; i < rs.rank(); ++i)
      for (int j = 0; j < rs.rank(); ++j) {
        r.lin_[i][j] = inv[i][j].get_num().get_si();
        r.trans_[i] -= r.lin_[i][j] * trans_[j];
      }
    r.finish(rs);
    return r;
  }

  LevelWeight act(const RootSystem& rs, const LevelWeight& lw) const {
    Rational c = lw.level.shifted(rs);
    LevelWeight out = lw;
    for (int i = 0; i < rs.rank(); ++i) {
      Rational v = c * trans_[i] - 1;
      for (int j = 0; j < rs.rank(); ++j) v += lin_[i][j] * (lw.lam[j] + 1);
      out.lam[i] = v;
    }
    return out;
  }

  const std::vector<int>& word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }
  const std::vector<IntVec>& finite_part() const { return lin_; }
  const IntVec& translation_part() const { return trans_; }

  /// Simple indices i with l(s_i w) < l(w).
  std::vector<int> left_descents(const RootSystem& rs) const {
    IntVec y = regular_image(rs);
    std::vector<int> out;
    long th = 0;
    for (int j = 0; j < rs.rank(); ++j) th += y[j] * rs.theta_check()[j];
    if (rs.dual_coxeter_number() - th < 0) out.push_back(0);
    for (int i = 0; i < rs.rank(); ++i)
      if (y[i] < 0) out.push_back(i + 1);
    return out;
  }

  std::string word_string() const {
    std::string s;
    for (int i : word_) s += (s.empty() ? "" : ".") + std::to_string(i);
    return s.empty() ? "e" : s;
  }

  friend bool operator==(const AffineWeylElt& a, const AffineWeylElt& b) {
    return a.lin_ == b.lin_ && a.trans_ == b.trans_;
  }
  friend bool operator<(const AffineWeylElt& a, const AffineWeylElt& b) {
    if (a.lin_ != b.lin_) return a.lin_ < b.lin_;
    return a.trans_ < b.trans_;
  }

 private:
  // Image of rho under the linear action at shifted level h^v (k = 0); it
  // lies in the open fundamental alcove, so its image determines w.
  IntVec regular_image(const RootSystem& rs) const {
    IntVec y(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) {
      long v = rs.dual_coxeter_number() * trans_[i];
      for (int j = 0; j < rs.rank(); ++j) v += lin_[i][j];
      y[i] = v;
    }
    return y;
  }

  // Recomputes the canonical reduced word by stripping the smallest left
  // descent repeatedly.
  void finish(const RootSystem& rs) {
    word_.clear();
    AffineWeylElt cur = *this;
    cur.word_.clear();
    while (true) {
      auto d = cur.left_descents(rs);
      if (d.empty()) break;
      int i = d.front();
      word_.push_back(i);
      cur = raw_left_multiply(rs, i, cur);
    }
  }

  static AffineWeylElt raw_left_multiply(const RootSystem& rs, int i, const AffineWeylElt& w) {
    // s_i w without recomputing words.
    const int n = rs.rank();
    AffineCoroot cr = simple_affine_coroot(rs, i);
    RatVec rw = rs.root_to_weight(coroot_data(rs, cr.gamma).root);
    IntVec root_w(n);
    for (int a = 0; a < n; ++a) root_w[a] = rw[a].get_num().get_si();
    AffineWeylElt r;
    r.lin_.assign(n, IntVec(n, 0));
    r.trans_.assign(n, 0);
    // s: x -> x - (<x, gamma> + m c) root
    for (int col = 0; col < n; ++col) {
      long p = 0;
      for (int a = 0; a < n; ++a) p += w.lin_[a][col] * cr.gamma[a];
      for (int a = 0; a < n; ++a) r.lin_[a][col] = w.lin_[a][col] - p * root_w[a];
    }
    long pt = cr.m;
    for (int a = 0; a < n; ++a) pt += w.trans_[a] * cr.gamma[a];
    for (int a = 0; a < n; ++a) r.trans_[a] = w.trans_[a] - pt * root_w[a];
    return r;
  }

  std::vector<IntVec> lin_;
  IntVec trans_;
  std::vector<int> word_;
};

inline LevelWeight dot_act(const RootSystem& rs, const AffineWeylElt& w, const LevelWeight& lw) {
  return w.act(rs, lw);
}

/// Letter-by-letter dot action of a word (rightmost letter first).
inline LevelWeight dot_act_word(const RootSystem& rs, const std::vector<int>& word, LevelWeight lw) {
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    lw = dot_reflect(rs, lw, simple_affine_coroot(rs, *it));
  return lw;
}

/// Equality test by dot action on 2 rk + 1 fixed rational test weights at a
/// fixed non-critical level.
inline bool acts_identically(const RootSystem& rs, const AffineWeylElt& a, const AffineWeylElt& b) {
  const int n = rs.rank();
  Level lev{make_rational(7, 13)};
  for (int t = 0; t < 2 * n + 1; ++t) {
    LevelWeight lw{RatVec(n), lev};
    for (int i = 0; i < n; ++i) lw.lam[i] = make_rational((t + 3) * (i + 2) * (i + 2) + t * t - 5, 11 + t + i);
    if (!(a.act(rs, lw) == b.act(rs, lw))) return false;
  }
  return true;
}

/// Length of w by counting affine walls between rho_hat and w(rho_hat).
/// Independent of the descent-stripping word and used as its cross-check.
inline long length_by_walls(const RootSystem& rs, const AffineWeylElt& w) {
  LevelWeight base{RatVec(rs.rank(), Rational(0)), Level{Rational(0)}};
  LevelWeight img = w.act(rs, base);
  long count = 0;
  const long hv = rs.dual_coxeter_number();
  for (std::size_t k = 0; k < rs.positive_coroots().size(); ++k) {
    const auto& g = rs.positive_coroots()[k];
    long step = coroot_data(rs, g).step;
    Rational a = rs.pair(img.lam, g);
    for (long c : g) a += c;
    long ai = a.get_num().get_si();  // integral: lattice point in an open alcove
    if (ai < 0) {
      for (long m = 0; ai + m * hv < 0; m += step) ++count;
    } else {
      for (long m = step; -ai + m * hv < 0; m += step) ++count;
    }
  }
  return count;
}

// ---------------------------------------------------------------------------
// Classification

struct Classification {
  bool antidominant = false;
  bool dominant = false;
  bool regular = false;
  RatVec simple_pairings;  // indexed by the affine simple index 0..rk
  int ball_radius = 0;
  std::vector<AffineCoroot> walls_in_ball;  // positive coroots with pairing 0
};

inline Classification classify_weight(const RootSystem& rs, const LevelWeight& lw, int ball_radius) {
  if (ball_radius < 1) throw DomainError("ball_radius must be >= 1");
  rs.check_dim(lw.lam.size());
  Classification c;
  c.ball_radius = ball_radius;
  c.antidominant = c.dominant = true;
  for (int i = 0; i <= rs.rank(); ++i) {
    Rational p = dot_pair(rs, lw, simple_affine_coroot(rs, i));
    c.simple_pairings.push_back(p);
    if (is_positive_integer(p)) c.antidominant = false;
    if (is_negative_integer(p)) c.dominant = false;
  }
  // Exact regularity: some real coroot (gamma^v, m) with a + m c = 0.
  const Rational shift = lw.level.shifted(rs);
  c.regular = true;
  for (const auto& g : rs.positive_coroots()) {
    long step = coroot_data(rs, g).step;
    Rational a = dot_pair(rs, lw, AffineCoroot{g, 0});
    if (sgn(shift) == 0) {
      if (sgn(a) == 0) c.regular = false;
    } else {
      Rational m = -a / shift;
      if (is_integer(m) && mpz_divisible_ui_p(m.get_num_mpz_t(), step)) c.regular = false;
    }
    for (long m = -ball_radius; m <= ball_radius; ++m) {
      if (m % step != 0) continue;
      AffineCoroot cr{g, m};
      if (sgn(dot_pair(rs, lw, cr)) == 0) c.walls_in_ball.push_back(cr.is_positive() ? cr : cr.negated());
    }
  }
  std::sort(c.walls_in_ball.begin(), c.walls_in_ball.end());
  c.walls_in_ball.erase(std::unique(c.walls_in_ball.begin(), c.walls_in_ball.end()), c.walls_in_ball.end());
  return c;
}

// ---------------------------------------------------------------------------
// Integral root systems

/// m in offset + step Z (step > 0), or empty.
struct MLattice {
  bool empty = true;
  long offset = 0;
  long step = 1;

  bool contains(long m) const {
    if (empty) return false;
    long r = (m - offset) % step;
    return r == 0;
  }
};

/// Closed form for {m : (gamma^v, m) real and <lam, gamma^v> + m k in Z}.
inline MLattice integral_m_lattice(const RootSystem& rs, const LevelWeight& lw, const IntVec& gamma) {
  long s = coroot_data(rs, gamma).step;
  Rational a = rs.pair(lw.lam, gamma);
  Rational t = lw.level.k * s;  // m = s j; need a + j t in Z
  MLattice out;
  if (sgn(t) == 0) {
    if (is_integer(a)) out = {false, 0, s};
    return out;
  }
  Integer P = t.get_num(), Q = t.get_den();
  Rational aq = a * Q;
  if (!is_integer(aq)) return out;
  if (Q == 1) {
    out = {false, 0, s};
    return out;
  }
  // j P = -a Q (mod Q)
  Integer rhs = -aq.get_num();
  Integer pinv;
  Integer pm = P % Q;
  if (pm < 0) pm += Q;
  mpz_invert(pinv.get_mpz_t(), pm.get_mpz_t(), Q.get_mpz_t());
  Integer j0 = (rhs * pinv) % Q;
  if (j0 < 0) j0 += Q;
  out.empty = false;
  out.offset = s * j0.get_si();
  out.step = s * Q.get_si();
  return out;
}

struct IntegralSystem {
  std::vector<AffineCoroot> positive;  // positive integral real coroots, |m| <= bound
  std::vector<AffineCoroot> simple;    // simple coroots of W_lambda
  std::vector<std::pair<IntVec, MLattice>> lattices;  // per positive finite coroot
  int height_bound = 0;
};

inline IntegralSystem integral_system(const RootSystem& rs, const LevelWeight& lw, int height_bound) {
  if (height_bound < 1) throw DomainError("height_bound must be >= 1");
  IntegralSystem out;
  out.height_bound = height_bound;
  for (const auto& g : rs.positive_coroots()) {
    MLattice lat = integral_m_lattice(rs, lw, g);
    out.lattices.emplace_back(g, lat);
    if (lat.empty) continue;
    for (long m = -height_bound; m <= height_bound; ++m) {
      if (!lat.contains(m)) continue;
      AffineCoroot cr{g, m};
      out.positive.push_back(cr.is_positive() ? cr : cr.negated());
    }
  }
  std::sort(out.positive.begin(), out.positive.end());
  out.positive.erase(std::unique(out.positive.begin(), out.positive.end()), out.positive.end());
  // Simple: s_a permutes the other positive integral coroots. Only candidates
  // well inside the ball are tested, so that violating coroots are visible.
  long cand_bound = std::max(1, height_bound / 4);
  for (const auto& a : out.positive) {
    if (std::labs(a.m) > cand_bound) continue;
    bool ok = true;
    for (const auto& b : out.positive) {
      if (b == a) continue;
      if (!reflect_coroot(rs, a, b).is_positive()) {
        ok = false;
        break;
      }
    }
    if (ok) out.simple.push_back(a);
  }
  return out;
}

/// Ball enumeration of integral coroots; the oracle for integral_m_lattice.
inline std::vector<AffineCoroot> integral_coroots_by_enumeration(const RootSystem& rs,
                                                                 const LevelWeight& lw, int bound) {
  std::vector<AffineCoroot> out;
  for (const auto& g : rs.positive_coroots()) {
    long s = coroot_data(rs, g).step;
    for (long m = -bound; m <= bound; ++m) {
      if (m % s != 0) continue;
      AffineCoroot cr{g, m};
      if (is_integer(dot_pair(rs, lw, cr, false))) out.push_back(cr.is_positive() ? cr : cr.negated());
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Orbits

struct OrbitEntry {
  RatVec lam;
  std::vector<int> word;  // lam = word . lambda
};

struct OrbitResult {
  std::vector<OrbitEntry> orbit;
  std::vector<std::size_t> antidominant;  // indices into orbit
  std::vector<std::size_t> dominant;
  std::optional<std::size_t> representative;
  bool truncated = false;       // BFS frontier was nonempty at the bound
  bool provably_none = false;   // no antidominant element exists at all
  bool regular = false;
  int length_bound = 0;
};

inline OrbitResult orbit_and_representative(const RootSystem& rs, const LevelWeight& lw, int length_bound) {
  if (length_bound < 1) throw DomainError("length_bound must be >= 1");
  OrbitResult res;
  res.length_bound = length_bound;
  res.regular = classify_weight(rs, lw, 1).regular;
  std::map<RatVec, std::size_t> seen;
  std::vector<std::size_t> frontier{0};
  res.orbit.push_back({lw.lam, {}});
  seen[lw.lam] = 0;
  for (int dist = 0; dist < length_bound && !frontier.empty(); ++dist) {
    std::vector<std::size_t> next;
    for (std::size_t idx : frontier) {
      for (int i = 0; i <= rs.rank(); ++i) {
        LevelWeight cur{res.orbit[idx].lam, lw.level};
        LevelWeight nw = dot_reflect(rs, cur, simple_affine_coroot(rs, i));
        if (seen.count(nw.lam)) continue;
        std::vector<int> word{i};
        word.insert(word.end(), res.orbit[idx].word.begin(), res.orbit[idx].word.end());
        seen[nw.lam] = res.orbit.size();
        next.push_back(res.orbit.size());
        res.orbit.push_back({nw.lam, word});
      }
    }
    frontier = std::move(next);
  }
  // Frontier nodes at the bound may have unexplored neighbours.
  for (std::size_t idx : frontier)
    for (int i = 0; i <= rs.rank() && !res.truncated; ++i) {
      LevelWeight nw = dot_reflect(rs, LevelWeight{res.orbit[idx].lam, lw.level}, simple_affine_coroot(rs, i));
      if (!seen.count(nw.lam)) res.truncated = true;
    }
  for (std::size_t idx = 0; idx < res.orbit.size(); ++idx) {
    auto c = classify_weight(rs, LevelWeight{res.orbit[idx].lam, lw.level}, 1);
    if (c.antidominant) res.antidominant.push_back(idx);
    if (c.dominant) res.dominant.push_back(idx);
  }
  if (!res.antidominant.empty()) {
    res.representative = res.antidominant.front();
  } else if (lw.level.is_positive(rs)) {
    // At positive level an orbit whose simple pairings are all integral
    // cannot contain an antidominant weight: the pairings sum (with the
    // comarks) to k + h^v >= 0 and are integral on the whole orbit.
    bool all_integral = true;
    for (int i = 0; i <= rs.rank(); ++i)
      if (!is_integer(dot_pair(rs, lw, simple_affine_coroot(rs, i)))) all_integral = false;
    if (all_integral && sgn(lw.level.shifted(rs)) > 0) res.provably_none = true;
  }
  return res;
}

// ---------------------------------------------------------------------------
// Blocks

/// Affine weight with its delta coefficient, used to decide integral
/// linkage: w lies in W_lambda iff w.Lambda - Lambda is in the affine root
/// lattice.
struct FullWeight {
  RatVec lam;
  Rational delta;
};

inline FullWeight dot_reflect_full(const RootSystem& rs, const FullWeight& fw, const Level& level,
                                   const AffineCoroot& cr) {
  LevelWeight lw{fw.lam, level};
  Rational p = dot_pair(rs, lw, cr);
  auto data = coroot_data(rs, cr.gamma);
  RatVec root = rs.root_to_weight(data.root);
  FullWeight out = fw;
  for (int i = 0; i < rs.rank(); ++i) out.lam[i] -= p * root[i];
  // delta multiple of the affine root with coroot (gamma^v, m): m l / 2.
  Rational len = 2 / Rational(data.step);
  out.delta -= p * Rational(cr.m) * len / 2;
  return out;
}

inline FullWeight dot_act_full(const RootSystem& rs, const std::vector<int>& word, FullWeight fw,
                               const Level& level) {
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    fw = dot_reflect_full(rs, fw, level, simple_affine_coroot(rs, *it));
  return fw;
}

/// Class of a full weight modulo the affine root lattice.
inline RatVec lattice_class(const RootSystem& rs, const FullWeight& fw) {
  RatVec x = rs.weight_to_root_coords(fw.lam);
  x.push_back(fw.delta);
  for (auto& v : x) v -= Rational(floor_of(v));
  return x;
}

/// Canonical key of the double coset W_f w W_lambda, from w . Lambda.
inline RatVec double_coset_key(const RootSystem& rs, const FullWeight& image, const Level& level) {
  std::set<RatVec> seen;
  std::deque<FullWeight> todo{image};
  seen.insert(image.lam);
  RatVec best = lattice_class(rs, image);
  while (!todo.empty()) {
    FullWeight cur = todo.front();
    todo.pop_front();
    best = std::min(best, lattice_class(rs, cur));
    for (int i = 1; i <= rs.rank(); ++i) {
      FullWeight nx = dot_reflect_full(rs, cur, level, simple_affine_coroot(rs, i));
      if (seen.insert(nx.lam).second) todo.push_back(nx);
    }
  }
  return best;
}

/// Elements of W up to length L, in BFS order (by length, then word).
inline std::vector<AffineWeylElt> weyl_ball(const RootSystem& rs, int length_bound) {
  std::vector<AffineWeylElt> out{AffineWeylElt::from_word(rs, {})};
  std::set<AffineWeylElt> seen{out.front()};
  std::size_t begin = 0;
  for (int len = 0; len < length_bound; ++len) {
    std::size_t end = out.size();
    std::vector<AffineWeylElt> next;
    for (std::size_t k = begin; k < end; ++k)
      for (int i = 0; i <= rs.rank(); ++i) {
        AffineWeylElt w = AffineWeylElt::generator(rs, i).times(rs, out[k]);
        if (w.length() != len + 1) continue;
        if (seen.insert(w).second) next.push_back(w);
      }
    std::sort(next.begin(), next.end(),
              [](const AffineWeylElt& a, const AffineWeylElt& b) { return a.word() < b.word(); });
    for (auto& w : next) out.push_back(std::move(w));
    begin = end;
  }
  return out;
}

inline bool is_minimal_in_finite_coset(const RootSystem& rs, const AffineWeylElt& w) {
  for (int d : w.left_descents(rs))
    if (d != 0) return false;
  return true;
}

struct Block {
  AffineWeylElt representative;          // minimal length element of W_f w W_lambda in the ball
  std::vector<AffineWeylElt> labels;     // minimal W_f-coset representatives in the block
  RatVec key;
};

struct BlockDecomposition {
  std::vector<Block> blocks;
  std::vector<AffineWeylElt> minimal_reps;  // all of W_f\W in the ball
  int length_bound = 0;
  bool truncated = true;  // W is infinite; every ball is a truncation
  Classification classification;
};

inline BlockDecomposition block_decomposition(const RootSystem& rs, const LevelWeight& lw, int length_bound) {
  BlockDecomposition out;
  out.length_bound = length_bound;
  out.classification = classify_weight(rs, lw, std::max(4, length_bound));
  if (!lw.level.is_negative(rs) || !out.classification.regular || !out.classification.antidominant) {
    std::string why = std::string("block decomposition needs a regular antidominant weight of negative level;") +
                      " antidominant=" + (out.classification.antidominant ? "yes" : "no") +
                      " regular=" + (out.classification.regular ? "yes" : "no") +
                      " negative=" + (lw.level.is_negative(rs) ? "yes" : "no");
    throw DomainError(why);
  }
  FullWeight base{lw.lam, Rational(0)};
  std::map<RatVec, std::size_t> index;
  for (const auto& w : weyl_ball(rs, length_bound)) {
    if (!is_minimal_in_finite_coset(rs, w)) continue;
    out.minimal_reps.push_back(w);
    RatVec key = double_coset_key(rs, dot_act_full(rs, w.word(), base, lw.level), lw.level);
    auto [it, fresh] = index.emplace(key, out.blocks.size());
    if (fresh) out.blocks.push_back(Block{w, {}, key});
    out.blocks[it->second].labels.push_back(w);
  }
  return out;
}

inline nlohmann::json weight_json(const RatVec& v) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

inline nlohmann::json coroot_json(const AffineCoroot& c) {
  return nlohmann::json{{"gamma", c.gamma}, {"m", c.m}};
}

}  // namespace wkl
