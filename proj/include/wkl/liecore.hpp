#pragma once

// Finite root-system data and level bookkeeping.
//
// Conventions:
//   * weights are stored in the fundamental-weight basis, so <lam, alpha_i^v>
//     is simply lam[i];
//   * coweights are stored in the fundamental-coweight basis, so
//     <alpha_i, x> is x[i];
//   * roots are integer vectors in the simple-root basis, coroots integer
//     vectors in the simple-coroot basis;
//   * cartan()[i][j] = <alpha_j, alpha_i^v> (Bourbaki numbering, 0-based);
//   * the basic form kappa_b gives short coroots (equivalently long roots)
//     squared length two. A level is the rational k with kappa = k * kappa_b,
//     and the critical level is k = -h^v.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "wkl/errors.hpp"
#include "wkl/matrix.hpp"
#include "wkl/rational.hpp"

namespace wkl {

struct CartanType {
  char family = 'A';
  int rank = 1;

  std::string label() const { return std::string(1, family) + std::to_string(rank); }
  friend bool operator==(const CartanType&, const CartanType&) = default;
};

class RootSystem {
 public:
  const CartanType& type() const { return type_; }
  int rank() const { return type_.rank; }
  const std::vector<IntVec>& cartan() const { return cartan_; }

  /// (alpha_i, alpha_i) with long roots of squared length 2.
  const RatVec& simple_root_lengths() const { return root_len_; }

  const std::vector<IntVec>& positive_roots() const { return pos_roots_; }
  const std::vector<IntVec>& positive_coroots() const { return pos_coroots_; }
  /// (beta, beta) for each positive root, same indexing as positive_roots().
  const RatVec& positive_root_lengths() const { return pos_root_len_; }
  int height(std::size_t root_index) const {
    return static_cast<int>(std::accumulate(pos_roots_[root_index].begin(),
                                            pos_roots_[root_index].end(), 0L));
  }

  const std::vector<int>& exponents() const { return exponents_; }
  int coxeter_number() const { return h_; }
  int dual_coxeter_number() const { return hdual_; }
  int dim() const { return dim_; }
  long weyl_group_order() const {
    long n = 1;
    for (int d : exponents_) n *= d + 1;
    return n;
  }

  std::size_t highest_root_index() const { return theta_; }
  const IntVec& theta() const { return pos_roots_[theta_]; }
  const IntVec& theta_check() const { return pos_coroots_[theta_]; }

  RatVec rho() const { return RatVec(rank(), Rational(1)); }
  RatVec rho_check() const { return RatVec(rank(), Rational(1)); }

  /// Simple root alpha_j expressed in the fundamental-weight basis.
  RatVec simple_root_weight(int j) const {
    RatVec v(rank());
    for (int i = 0; i < rank(); ++i) v[i] = cartan_[i][j];
    return v;
  }
  /// Any root-lattice vector (simple-root coordinates) in the weight basis.
  RatVec root_to_weight(const IntVec& root) const {
    RatVec v(rank(), Rational(0));
    for (int i = 0; i < rank(); ++i)
      for (int j = 0; j < rank(); ++j) v[i] += cartan_[i][j] * root[j];
    return v;
  }
  /// Coordinates of a weight in the simple-root basis (rational in general).
  RatVec weight_to_root_coords(const RatVec& lam) const { return mat_vec(cartan_inv_, lam); }

  /// <lam, coroot> for a coroot in simple-coroot coordinates.
  Rational pair(const RatVec& lam, const IntVec& coroot) const {
    check_dim(lam.size());
    Rational s = 0;
    for (int i = 0; i < rank(); ++i) s += lam[i] * coroot[i];
    return s;
  }
  /// <lam, x> for a weight and a coweight in their fundamental bases.
  Rational pair_weight_coweight(const RatVec& lam, const RatVec& x) const {
    check_dim(lam.size());
    check_dim(x.size());
    return dot(lam, mat_vec(cartan_inv_t_, x));
  }
  /// <root, x> for a root in simple-root coordinates and a coweight.
  Rational pair_root_coweight(const IntVec& root, const RatVec& x) const {
    check_dim(x.size());
    Rational s = 0;
    for (int i = 0; i < rank(); ++i) s += x[i] * root[i];
    return s;
  }

  /// kappa_b on coweights (fundamental-coweight basis).
  Rational basic_form_coweights(const RatVec& x, const RatVec& y) const {
    check_dim(x.size());
    check_dim(y.size());
    return dot(x, mat_vec(coweight_gram_, y));
  }
  /// The form induced by kappa_b on weights (fundamental-weight basis).
  Rational basic_form_weights(const RatVec& a, const RatVec& b) const {
    check_dim(a.size());
    check_dim(b.size());
    return dot(a, mat_vec(weight_gram_, b));
  }

  /// Linear action of a finite simple reflection on a weight.
  RatVec reflect_weight(int i, RatVec lam) const {
    Rational c = lam[i];
    for (int r = 0; r < rank(); ++r) lam[r] -= c * cartan_[r][i];
    return lam;
  }
  /// Finite dot action of s_i.
  RatVec dot_reflect_finite(int i, RatVec lam) const {
    Rational c = lam[i] + 1;
    for (int r = 0; r < rank(); ++r) lam[r] -= c * cartan_[r][i];
    return lam;
  }

  /// Reduced word (0-based simple indices) of the longest element, acting
  /// leftmost-first: w0 = s_{word[0]} ... s_{word[n-1]}.
  const std::vector<int>& longest_word() const { return w0_word_; }
  RatVec apply_longest(RatVec lam) const {
    for (auto it = w0_word_.rbegin(); it != w0_word_.rend(); ++it) lam = reflect_weight(*it, lam);
    return lam;
  }

  /// Index of a coroot (simple-coroot coordinates) among the positive
  /// coroots together with its sign, or nullopt if it is not a coroot.
  std::optional<std::pair<std::size_t, int>> find_coroot(const IntVec& c) const {
    if (auto it = coroot_index_.find(c); it != coroot_index_.end()) return std::pair{it->second, 1};
    IntVec neg(c);
    for (auto& x : neg) x = -x;
    if (auto it = coroot_index_.find(neg); it != coroot_index_.end()) return std::pair{it->second, -1};
    return std::nullopt;
  }

  /// <rho, rho^v> and kappa_b(rho^v, rho^v).
  Rational rho_rhocheck() const { return pair_weight_coweight(rho(), rho_check()); }
  Rational rhocheck_norm() const { return basic_form_coweights(rho_check(), rho_check()); }

  void check_dim(std::size_t n) const {
    if (n != static_cast<std::size_t>(rank()))
      throw DomainError("vector of length " + std::to_string(n) + " for rank " +
                        std::to_string(rank()));
  }

  friend RootSystem build_root_system(char family, int rank);

 private:
  CartanType type_;
  std::vector<IntVec> cartan_;
  RatVec root_len_;
  RatMatrix cartan_inv_, cartan_inv_t_;
  RatMatrix weight_gram_, coweight_gram_;
  std::vector<IntVec> pos_roots_, pos_coroots_;
  RatVec pos_root_len_;
  std::map<IntVec, std::size_t> coroot_index_;
  std::vector<int> exponents_;
  std::vector<int> w0_word_;
  int h_ = 0, hdual_ = 0, dim_ = 0;
  std::size_t theta_ = 0;
};

namespace detail {

inline std::vector<IntVec> cartan_matrix(char family, int n) {
  auto chain = [](int n) {
    std::vector<IntVec> a(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i) {
      a[i][i] = 2;
      if (i + 1 < n) a[i][i + 1] = a[i + 1][i] = -1;
    }
    return a;
  };
  auto bad = [&] {
    return DomainError("invalid Cartan type " + std::string(1, family) + std::to_string(n));
  };
  switch (family) {
    case 'A':
      if (n < 1) throw bad();
      return chain(n);
    case 'B': {
      if (n < 2) throw bad();
      auto a = chain(n);
      a[n - 1][n - 2] = -2;
      return a;
    }
    case 'C': {
      if (n < 2) throw bad();
      auto a = chain(n);
      a[n - 2][n - 1] = -2;
      return a;
    }
    case 'D': {
      if (n < 4) throw bad();
      auto a = chain(n);
      a[n - 2][n - 1] = a[n - 1][n - 2] = 0;
      a[n - 3][n - 1] = a[n - 1][n - 3] = -1;
      return a;
    }
    case 'E': {
      if (n < 6 || n > 8) throw bad();
      std::vector<IntVec> a(n, IntVec(n, 0));
      for (int i = 0; i < n; ++i) a[i][i] = 2;
      auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      return a;
    }
    case 'F': {
      if (n != 4) throw bad();
      auto a = chain(4);
      a[2][1] = -2;
      return a;
    }
    case 'G': {
      if (n != 2) throw bad();
      auto a = chain(2);
      a[0][1] = -3;
      return a;
    }
    default:
      throw bad();
  }
}

}  // namespace detail

inline RootSystem build_root_system(char family, int rank) {
  RootSystem rs;
  rs.type_ = {family, rank};
  rs.cartan_ = detail::cartan_matrix(family, rank);
  const auto& a = rs.cartan_;
  const int n = rank;

  // Symmetrizer: a[i][j] * len_i = a[j][i] * len_j, normalised to max 2.
  RatVec len(n, Rational(0));
  len[0] = 1;
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (sgn(len[i]) != 0 && sgn(len[j]) == 0 && a[i][j] != 0) {
          len[j] = Rational(a[i][j]) * len[i] / a[j][i];
          changed = true;
        }
  }
  Rational mx = *std::max_element(len.begin(), len.end());
  for (auto& l : len) l = l * 2 / mx;
  rs.root_len_ = len;

  RatMatrix am(n, RatVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) am[i][j] = a[i][j];
  rs.cartan_inv_ = inverse(am);
  rs.cartan_inv_t_ = transpose(rs.cartan_inv_);

  RatMatrix root_gram(n, RatVec(n));  // (alpha_i, alpha_j)
  RatMatrix coroot_gram(n, RatVec(n));  // kappa_b(alpha_i^v, alpha_j^v)
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      root_gram[i][j] = Rational(a[i][j]) * len[i] / 2;
      coroot_gram[i][j] = Rational(2 * a[i][j]) / len[j];
    }
  // omega_i = sum_k (A^{-1})_{k i} alpha_k ; omega^v_i = sum_k (A^{-T})_{k i} alpha^v_k
  rs.weight_gram_ = mat_mul(transpose(rs.cartan_inv_), mat_mul(root_gram, rs.cartan_inv_));
  rs.coweight_gram_ = mat_mul(rs.cartan_inv_, mat_mul(coroot_gram, rs.cartan_inv_t_));

  // Positive roots by height via root strings.
  std::set<IntVec> known;
  std::vector<std::vector<IntVec>> by_height(1);
  for (int i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    by_height[0].push_back(e);
    known.insert(e);
  }
  for (std::size_t ht = 0; ht < by_height.size(); ++ht) {
    std::vector<IntVec> next;
    for (const auto& beta : by_height[ht]) {
      for (int i = 0; i < n; ++i) {
        long pairing = 0;
        for (int j = 0; j < n; ++j) pairing += beta[j] * a[i][j];
        long p = 0;
        IntVec down = beta;
        while (true) {
          down[i] -= 1;
          if (!known.count(down)) break;
          ++p;
        }
        long q = p - pairing;
        if (q > 0) {
          IntVec up = beta;
          up[i] += 1;
          if (known.insert(up).second) next.push_back(up);
        }
      }
    }
    if (!next.empty()) {
      std::sort(next.begin(), next.end());
      by_height.push_back(std::move(next));
    }
  }
  for (auto& level : by_height)
    for (auto& r : level) rs.pos_roots_.push_back(r);

  for (std::size_t k = 0; k < rs.pos_roots_.size(); ++k) {
    const auto& r = rs.pos_roots_[k];
    Rational l = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) l += root_gram[i][j] * r[i] * r[j];
    rs.pos_root_len_.push_back(l);
    IntVec c(n);
    for (int i = 0; i < n; ++i) {
      Rational ci = Rational(r[i]) * len[i] / l;
      c[i] = ci.get_num().get_si();
    }
    rs.coroot_index_[c] = k;
    rs.pos_coroots_.push_back(c);
  }

  rs.theta_ = rs.pos_roots_.size() - 1;
  rs.h_ = static_cast<int>(by_height.size()) + 1;
  rs.dim_ = n + 2 * static_cast<int>(rs.pos_roots_.size());
  long th = 0;
  for (long c : rs.theta_check()) th += c;
  rs.hdual_ = static_cast<int>(th) + 1;

  // Exponents: m occurs (#roots of height m) - (#roots of height m+1) times.
  for (std::size_t m = 0; m < by_height.size(); ++m) {
    std::size_t here = by_height[m].size();
    std::size_t above = m + 1 < by_height.size() ? by_height[m + 1].size() : 0;
    for (std::size_t t = above; t < here; ++t) rs.exponents_.push_back(static_cast<int>(m + 1));
  }
  std::sort(rs.exponents_.begin(), rs.exponents_.end());

  // Longest element: walk rho to the antidominant chamber.
  RatVec mu = rs.rho();
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 0; i < n; ++i)
      if (sgn(mu[i]) > 0) {
        mu = rs.reflect_weight(i, mu);
        rs.w0_word_.push_back(i);
        moved = true;
        break;
      }
  }
  std::reverse(rs.w0_word_.begin(), rs.w0_word_.end());
  return rs;
}

inline RootSystem build_root_system(const CartanType& t) { return build_root_system(t.family, t.rank); }

/// A level for a simple factor: kappa = k * kappa_b.
struct Level {
  Rational k;

  Rational shifted(const RootSystem& rs) const { return k + rs.dual_coxeter_number(); }
  bool is_critical(const RootSystem& rs) const { return sgn(shifted(rs)) == 0; }
  /// Positive levels are kappa_c + Q>=0 kappa_b; everything else is negative.
  bool is_positive(const RootSystem& rs) const { return sgn(shifted(rs)) >= 0; }
  bool is_negative(const RootSystem& rs) const { return !is_positive(rs); }
};

/// kappa(x, y) = k * kappa_b(x, y) on coweights.
inline Rational form_value(const RootSystem& rs, const Level& level, const RatVec& x,
                           const RatVec& y) {
  return level.k * rs.basic_form_coweights(x, y);
}

/// c1(lam) = (lam, lam + 2 rho) for the form induced by kappa_b. The Casimir
/// eigenvalue for kappa = k kappa_b is c1 / k.
inline Rational casimir_eigenvalue(const RootSystem& rs, const RatVec& lam) {
  RatVec shifted = lam;
  for (auto& x : shifted) x += 2;
  return rs.basic_form_weights(lam, shifted);
}

/// Semisimple data as a list of simple factors, each with its own level.
/// Vectors are concatenations of the per-factor coordinates.
struct SemisimpleSystem {
  std::vector<RootSystem> factors;
  std::vector<Level> levels;

  bool noncritical() const {
    for (std::size_t j = 0; j < factors.size(); ++j)
      if (levels[j].is_critical(factors[j])) return false;
    return true;
  }
  bool positive() const {
    for (std::size_t j = 0; j < factors.size(); ++j)
      if (!levels[j].is_positive(factors[j])) return false;
    return true;
  }
  bool negative() const {
    for (std::size_t j = 0; j < factors.size(); ++j)
      if (!levels[j].is_negative(factors[j])) return false;
    return true;
  }
  int rank() const {
    int r = 0;
    for (const auto& f : factors) r += f.rank();
    return r;
  }
  Rational form_value(const RatVec& x, const RatVec& y) const {
    if (x.size() != static_cast<std::size_t>(rank()) || y.size() != x.size())
      throw DomainError("dimension mismatch in semisimple form");
    Rational s = 0;
    std::size_t off = 0;
    for (std::size_t j = 0; j < factors.size(); ++j) {
      std::size_t r = factors[j].rank();
      RatVec xs(x.begin() + off, x.begin() + off + r), ys(y.begin() + off, y.begin() + off + r);
      s += wkl::form_value(factors[j], levels[j], xs, ys);
      off += r;
    }
    return s;
  }
};

inline nlohmann::json to_json(const RootSystem& rs) {
  nlohmann::json j;
  j["type"] = std::string(1, rs.type().family);
  j["rank"] = rs.rank();
  j["exponents"] = rs.exponents();
  j["h"] = rs.coxeter_number();
  j["h_dual"] = rs.dual_coxeter_number();
  j["dim"] = rs.dim();
  return j;
}

}  // namespace wkl
