#pragma once

// Abstract Coxeter groups, realized through an integral generalized Cartan
// matrix, and finite Bruhat balls {w : l(w) <= L}.
//
// An element w is keyed by the fundamental-weight coordinates of w(rho),
// rho = (1, ..., 1). The representation is faithful and l(s_i w) < l(w)
// exactly when the i-th key coordinate is negative.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "wkl/errors.hpp"
#include "wkl/rational.hpp"

namespace wkl {

/// Symmetric matrix with 1 on the diagonal and entries in {2, 3, 4, 6, 0}
/// off it; 0 stands for infinity.
using CoxeterMatrix = std::vector<std::vector<int>>;

inline void validate_coxeter_matrix(const CoxeterMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) throw DomainError("empty Coxeter matrix");
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw DomainError("Coxeter matrix is not square");
    if (m[i][i] != 1) throw DomainError("Coxeter matrix diagonal must be 1");
    for (std::size_t j = 0; j < n; ++j) {
      if (m[i][j] != m[j][i]) throw DomainError("Coxeter matrix is not symmetric");
      if (i != j && m[i][j] != 2 && m[i][j] != 3 && m[i][j] != 4 && m[i][j] != 6 && m[i][j] != 0)
        throw DomainError("Coxeter matrix entry " + std::to_string(m[i][j]) +
                          " is not one of 2, 3, 4, 6, infinity");
    }
  }
}

/// Coxeter matrix of a Cartan-type finite Weyl group (A_n, B_n, ...).
inline CoxeterMatrix coxeter_matrix_from_cartan(const std::vector<IntVec>& a) {
  const std::size_t n = a.size();
  CoxeterMatrix m(n, std::vector<int>(n, 1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      long p = a[i][j] * a[j][i];
      m[i][j] = p == 0 ? 2 : p == 1 ? 3 : p == 2 ? 4 : p == 3 ? 6 : 0;
    }
  return m;
}

/// Crystallographic realization: entry [i][j] = <alpha_j, alpha_i^v>.
inline std::vector<IntVec> realizing_cartan_matrix(const CoxeterMatrix& m) {
  validate_coxeter_matrix(m);
  const std::size_t n = m.size();
  std::vector<IntVec> a(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    a[i][i] = 2;
    for (std::size_t j = i + 1; j < n; ++j) {
      long x = 0, y = 0;
      switch (m[i][j]) {
        case 2: break;
        case 3: x = -1; y = -1; break;
        case 4: x = -1; y = -2; break;
        case 6: x = -1; y = -3; break;
        default: x = -2; y = -2; break;
      }
      a[i][j] = x;
      a[j][i] = y;
    }
  }
  return a;
}

class BruhatBall {
 public:
  // The Bruhat order is stored densely, so memory grows with the square of this.
  static constexpr int kMaxElements = 20000;

  BruhatBall(CoxeterMatrix m, int max_length) : coxeter_(std::move(m)), max_length_(max_length) {
    if (max_length < 0) throw DomainError("ball length must be >= 0");
    cartan_ = realizing_cartan_matrix(coxeter_);
    enumerate();
    build_tables();
    build_bruhat();
  }

  const CoxeterMatrix& coxeter_matrix() const { return coxeter_; }
  int rank() const { return static_cast<int>(coxeter_.size()); }
  int max_length() const { return max_length_; }
  int size() const { return static_cast<int>(words_.size()); }
  int identity() const { return 0; }

  const std::vector<int>& word(int x) const { return words_.at(x); }
  int length(int x) const { return static_cast<int>(words_.at(x).size()); }
  const IntVec& key(int x) const { return keys_.at(x); }

  /// Index of the element, or -1 if it lies outside the ball. Words are
  /// read as products s_{w[0]} s_{w[1]} ... and need not be reduced.
  int find(const std::vector<int>& w) const {
    IntVec k(rank(), 1);
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      if (*it < 0 || *it >= rank()) throw DomainError("generator index out of range");
      k = reflect(*it, k);
    }
    auto f = index_.find(k);
    return f == index_.end() ? -1 : f->second;
  }
  int element(const std::vector<int>& w) const {
    int x = find(w);
    if (x < 0) throw ResourceError("element outside the Bruhat ball of length " + std::to_string(max_length_));
    return x;
  }

  /// s_i x and x s_i; -1 when outside the ball.
  int left_mult(int i, int x) const { return left_[x][i]; }
  int right_mult(int x, int i) const { return right_[x][i]; }
  bool is_left_descent(int i, int x) const { return keys_[x][i] < 0; }
  bool is_right_descent(int x, int i) const {
    int y = right_[x][i];
    return y >= 0 && length(y) < length(x);
  }

  bool leq(int x, int y) const { return bruhat_[y][x] != 0; }
  const std::vector<int>& covers_below(int y) const { return covers_[y]; }

  std::vector<int> elements_of_length(int l) const {
    std::vector<int> out;
    for (int x = 0; x < size(); ++x)
      if (length(x) == l) out.push_back(x);
    return out;
  }

  /// Number of elements of each length 0..L.
  std::vector<long> length_profile() const {
    std::vector<long> out(max_length_ + 1, 0);
    for (const auto& w : words_) ++out[w.size()];
    return out;
  }

  /// Minimal in its coset W_J x (no left descent in J).
  bool is_minimal_left(const std::vector<int>& J, int x) const {
    for (int j : J)
      if (is_left_descent(j, x)) return false;
    return true;
  }

  std::string word_string(int x) const {
    if (words_[x].empty()) return "e";
    std::string s;
    for (std::size_t i = 0; i < words_[x].size(); ++i) {
      if (i) s += ".";
      s += std::to_string(words_[x][i]);
    }
    return s;
  }

  /// Parses "e" or a dot-separated generator list into an element index.
  int parse_word(const std::string& text) const {
    if (text == "e" || text.empty()) return identity();
    std::vector<int> w;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      auto dot = text.find('.', pos);
      std::string tok = text.substr(pos, dot == std::string::npos ? std::string::npos : dot - pos);
      try {
        std::size_t used = 0;
        int g = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("trailing");
        w.push_back(g);
      } catch (const std::exception&) {
        throw ConfigError("bad word '" + text + "'");
      }
      if (dot == std::string::npos) break;
      pos = dot + 1;
    }
    return element(w);
  }

 private:
  IntVec reflect(int i, const IntVec& x) const {
    IntVec y = x;
    for (int j = 0; j < rank(); ++j) y[j] -= x[i] * cartan_[j][i];
    return y;
  }

  void enumerate() {
    IntVec rho(rank(), 1);
    words_.push_back({});
    keys_.push_back(rho);
    index_[rho] = 0;
    std::size_t begin = 0;
    for (int l = 0; l < max_length_; ++l) {
      std::size_t end = words_.size();
      for (std::size_t x = begin; x < end; ++x)
        for (int i = 0; i < rank(); ++i) {
          if (keys_[x][i] < 0) continue;  // s_i x would be shorter
          IntVec k = reflect(i, keys_[x]);
          if (index_.count(k)) continue;
          std::vector<int> w{i};
          w.insert(w.end(), words_[x].begin(), words_[x].end());
          index_[k] = static_cast<int>(words_.size());
          words_.push_back(std::move(w));
          keys_.push_back(std::move(k));
          if (static_cast<int>(words_.size()) > kMaxElements)
            throw ResourceError("Bruhat ball exceeds " + std::to_string(kMaxElements) + " elements");
        }
      begin = end;
    }
  }

  void build_tables() {
    left_.assign(size(), std::vector<int>(rank(), -1));
    right_.assign(size(), std::vector<int>(rank(), -1));
    for (int x = 0; x < size(); ++x)
      for (int i = 0; i < rank(); ++i) {
        auto l = index_.find(reflect(i, keys_[x]));
        if (l != index_.end()) left_[x][i] = l->second;
        std::vector<int> w = words_[x];
        w.push_back(i);
        right_[x][i] = find(w);
      }
  }

  // Bruhat order via the lifting property: for s with sy < y,
  //   sx < x  =>  (x <= y iff sx <= sy),
  //   sx > x  =>  (x <= y iff x <= sy).
  void build_bruhat() {
    bruhat_.assign(size(), std::vector<char>(size(), 0));
    covers_.assign(size(), {});
    std::vector<int> order(size());
    for (int x = 0; x < size(); ++x) order[x] = x;  // already sorted by length
    for (int y : order) {
      if (y == 0) {
        bruhat_[0][0] = 1;
        continue;
      }
      int s = -1;
      for (int i = 0; i < rank(); ++i)
        if (keys_[y][i] < 0) {
          s = i;
          break;
        }
      int sy = left_[y][s];
      for (int x = 0; x < size(); ++x) {
        if (length(x) > length(y)) continue;
        int sx = left_[x][s];
        bool down = is_left_descent(s, x);
        bruhat_[y][x] = down ? bruhat_[sy][sx] : bruhat_[sy][x];
      }
      for (int x = 0; x < size(); ++x)
        if (bruhat_[y][x] && length(x) + 1 == length(y)) covers_[y].push_back(x);
    }
  }

  CoxeterMatrix coxeter_;
  int max_length_;
  std::vector<IntVec> cartan_;
  std::vector<std::vector<int>> words_;
  std::vector<IntVec> keys_;
  std::map<IntVec, int> index_;
  std::vector<std::vector<int>> left_, right_;
  std::vector<std::vector<char>> bruhat_;
  std::vector<std::vector<int>> covers_;
};

/// Affine Coxeter matrix of the untwisted affine Weyl group of a finite
/// Cartan matrix, with the affine node placed first (index 0).
inline CoxeterMatrix affine_coxeter_matrix(const std::vector<IntVec>& finite_cartan, const IntVec& theta,
                                           const IntVec& theta_check) {
  const std::size_t n = finite_cartan.size();
  // Extended Cartan matrix: a_{0j} = <alpha_j, -theta^v>, a_{i0} = <-theta, alpha_i^v>.
  std::vector<IntVec> a(n + 1, IntVec(n + 1, 0));
  a[0][0] = 2;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i + 1][j + 1] = finite_cartan[i][j];
  for (std::size_t j = 0; j < n; ++j) {
    long x = 0, y = 0;
    for (std::size_t l = 0; l < n; ++l) {
      x -= theta_check[l] * finite_cartan[l][j];
      y -= theta[l] * finite_cartan[j][l];
    }
    a[0][j + 1] = x;
    a[j + 1][0] = y;
  }
  if (n == 1) {
    CoxeterMatrix m{{1, 0}, {0, 1}};
    return m;
  }
  return coxeter_matrix_from_cartan(a);
}

}  // namespace wkl
