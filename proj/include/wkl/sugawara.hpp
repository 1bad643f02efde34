#pragma once

// Mode-level model of an affine Verma module and its Segal-Sugawara
// operators, used as a brute-force oracle for the spectral-flow identity
// Ad_{t^x} S_n = S_n + x_n + delta_{n,0} kappa(x, x) / 2 and for the energy
// constants consumed by the character layer.
//
// Vectors are finite combinations of PBW monomials
//   Y_1 Y_2 ... Y_r |Lambda>,   Y = X_m with m < 0, or a negative root vector at m = 0,
// listed in nondecreasing (mode, basis index) order. Mode actions are computed
// exactly by commuting through the monomial, so nothing is ever truncated:
// the "window" only selects which basis vectors a check is run on.

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "json.hpp"
#include "wkl/errors.hpp"
#include "wkl/liecore.hpp"
#include "wkl/matrix.hpp"
#include "wkl/rational.hpp"

namespace wkl {

/// Structure constants of a finite-dimensional simple Lie algebra in a basis
/// of root vectors and simple coroots.
struct LieAlgebraData {
  struct Term {
    int index;
    Rational coeff;
  };
  enum class Kind { PositiveRoot, Cartan, NegativeRoot };

  std::vector<std::string> names;
  std::vector<Kind> kind;
  std::vector<IntVec> root;                        // simple-root coordinates; zero for Cartan
  std::vector<int> coroot_index;                   // simple coroot index for Cartan elements, else -1
  std::vector<std::vector<std::vector<Term>>> bracket;
  std::vector<std::vector<Rational>> form;         // basic invariant form
  std::vector<std::vector<Term>> dual;             // dual basis for the basic form

  int dim() const { return static_cast<int>(names.size()); }
};

/// sl2 with basis (e, h, f), [h,e] = 2e, [h,f] = -2f, [e,f] = h and the basic
/// form (e,f) = 1, (h,h) = 2. The index order e < h < f is also the PBW order.
inline LieAlgebraData sl2_algebra() {
  using K = LieAlgebraData::Kind;
  LieAlgebraData g;
  g.names = {"e", "h", "f"};
  g.kind = {K::PositiveRoot, K::Cartan, K::NegativeRoot};
  g.root = {IntVec{1}, IntVec{0}, IntVec{-1}};
  g.coroot_index = {-1, 0, -1};
  g.bracket.assign(3, std::vector<std::vector<LieAlgebraData::Term>>(3));
  g.bracket[1][0] = {{0, Rational(2)}};
  g.bracket[0][1] = {{0, Rational(-2)}};
  g.bracket[1][2] = {{2, Rational(-2)}};
  g.bracket[2][1] = {{2, Rational(2)}};
  g.bracket[0][2] = {{1, Rational(1)}};
  g.bracket[2][0] = {{1, Rational(-1)}};
  g.form = {{0, 0, 1}, {0, 2, 0}, {1, 0, 0}};
  g.dual = {{{2, Rational(1)}}, {{1, make_rational(1, 2)}}, {{0, Rational(1)}}};
  return g;
}

/// One PBW factor X_m.
struct ModeGen {
  int mode;
  int index;
  friend auto operator<=>(const ModeGen&, const ModeGen&) = default;
};
using Monomial = std::vector<ModeGen>;
using ModeVector = std::map<Monomial, Rational>;

inline void add_to(ModeVector& acc, const ModeVector& v, const Rational& scale = Rational(1)) {
  if (scale == 0) return;
  for (const auto& [m, c] : v) {
    Rational& slot = acc[m];
    slot += scale * c;
    if (slot == 0) acc.erase(m);
  }
}

inline long monomial_depth(const Monomial& m) {
  long d = 0;
  for (const auto& g : m) d -= g.mode;
  return d;
}

inline long vector_depth(const ModeVector& v) {
  long d = 0;
  for (const auto& [m, c] : v) d = std::max(d, monomial_depth(m));
  return d;
}

/// Truncation window of a Verma module: all PBW monomials of depth <= D with
/// at most f0_bound zero-mode factors, together with an exact mode action.
class GradedModule {
 public:
  static constexpr long kMaxBasis = 200000;

  GradedModule(const RootSystem& rs, LieAlgebraData g, RatVec lambda, Rational k, int max_depth, int f0_bound)
      : rs_(&rs), g_(std::move(g)), lambda_(std::move(lambda)), k_(std::move(k)), D_(max_depth), f0_(f0_bound) {
    rs.check_dim(lambda_.size());
    if (D_ < 0 || f0_ < 0) throw DomainError("depth and f0 bound must be >= 0");
    long estimate = estimated_size();
    if (D_ > 8 || estimate > kMaxBasis)
      throw ResourceError("truncated Verma window too large (depth " + std::to_string(D_) + ", about " +
                          std::to_string(estimate) + " basis vectors)");
    enumerate();
  }

  const LieAlgebraData& algebra() const { return g_; }
  const RootSystem& root_system() const { return *rs_; }
  const RatVec& highest_weight() const { return lambda_; }
  const Rational& level() const { return k_; }
  int max_depth() const { return D_; }
  int f0_bound() const { return f0_; }
  const std::vector<Monomial>& basis() const { return basis_; }

  /// Number of window basis vectors of depth d.
  long graded_dimension(long d) const {
    return std::count_if(basis_.begin(), basis_.end(), [&](const Monomial& m) { return monomial_depth(m) == d; });
  }

  static ModeVector highest_weight_vector() { return ModeVector{{Monomial{}, Rational(1)}}; }
  static ModeVector basis_vector(const Monomial& m) { return ModeVector{{m, Rational(1)}}; }

  /// X_mode applied to v, computed exactly.
  ModeVector act(int index, int mode, const ModeVector& v) const {
    ModeVector out;
    for (const auto& [m, c] : v) add_to(out, act_monomial(ModeGen{mode, index}, m), c);
    return out;
  }

  bool is_creation(const ModeGen& x) const {
    return x.mode < 0 || (x.mode == 0 && g_.kind[x.index] == LieAlgebraData::Kind::NegativeRoot);
  }

  /// Lambda(h) for a Cartan basis element h.
  Rational cartan_eigenvalue(int index) const { return lambda_[g_.coroot_index[index]]; }

  std::string monomial_string(const Monomial& m) const {
    std::string s;
    for (std::size_t i = 0; i < m.size();) {
      std::size_t j = i;
      while (j < m.size() && m[j] == m[i]) ++j;
      s += g_.names[m[i].index] + "[" + std::to_string(m[i].mode) + "]";
      if (j - i > 1) s += "^" + std::to_string(j - i);
      s += " ";
      i = j;
    }
    return s + "v";
  }

  std::string vector_string(const ModeVector& v) const {
    if (v.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : v) {
      if (!s.empty()) s += " + ";
      s += "(" + to_string(c) + ") " + monomial_string(m);
    }
    return s;
  }

 private:
  long estimated_size() const {
    // Coefficients of prod_{i>=1} (1 - q^i)^{-dim} up to depth D, times the f0 tail.
    std::vector<long> c(std::max(D_, 0) + 1, 0);
    c[0] = 1;
    long colors = g_.dim();
    for (int i = 1; i <= D_; ++i)
      for (long t = 0; t < colors; ++t)
        for (int j = i; j <= D_; ++j) c[j] += c[j - i];
    long total = 0;
    for (long x : c) total += x;
    long neg = std::count(g_.kind.begin(), g_.kind.end(), LieAlgebraData::Kind::NegativeRoot);
    long tail = 1;
    for (long i = 0; i < neg; ++i) tail *= (f0_ + 1);  // a crude upper bound for several f0 factors
    return total * tail;
  }

  void enumerate() {
    std::vector<ModeGen> gens;
    for (int m = -D_; m <= 0; ++m)
      for (int a = 0; a < g_.dim(); ++a)
        if (is_creation(ModeGen{m, a})) gens.push_back({m, a});
    Monomial cur;
    std::function<void(std::size_t, long, int)> rec = [&](std::size_t start, long depth, int zero_modes) {
      basis_.push_back(cur);
      for (std::size_t i = start; i < gens.size(); ++i) {
        long d = depth - gens[i].mode;
        int z = zero_modes + (gens[i].mode == 0);
        if (d > D_ || z > f0_) continue;
        cur.push_back(gens[i]);
        rec(i, d, z);
        cur.pop_back();
      }
    };
    rec(0, 0, 0);
    std::sort(basis_.begin(), basis_.end(), [](const Monomial& a, const Monomial& b) {
      long da = monomial_depth(a), db = monomial_depth(b);
      return da != db ? da < db : a < b;
    });
  }

  // X acting on a single PBW monomial; memoized.
  const ModeVector& act_monomial(const ModeGen& x, const Monomial& m) const {
    auto key = std::make_pair(x, m);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    ModeVector out;
    if (m.empty()) {
      if (is_creation(x)) {
        out[Monomial{x}] = 1;
      } else if (x.mode == 0 && g_.kind[x.index] == LieAlgebraData::Kind::Cartan) {
        Rational ev = cartan_eigenvalue(x.index);
        if (ev != 0) out[Monomial{}] = ev;
      }
    } else if (is_creation(x) && !(m.front() < x)) {
      Monomial y{x};
      y.insert(y.end(), m.begin(), m.end());
      out[std::move(y)] = 1;
    } else {
      // X Y rest = Y (X rest) + [X, Y] rest.
      const ModeGen y = m.front();
      Monomial rest(m.begin() + 1, m.end());
      ModeVector xr = act_monomial(x, rest);
      for (const auto& [mono, c] : xr) add_to(out, act_monomial(y, mono), c);
      const int total = x.mode + y.mode;
      for (const auto& t : g_.bracket[x.index][y.index]) add_to(out, act_monomial(ModeGen{total, t.index}, rest), t.coeff);
      if (total == 0 && g_.form[x.index][y.index] != 0) {
        Rational central = Rational(x.mode) * k_ * g_.form[x.index][y.index];
        if (central != 0) add_to(out, ModeVector{{rest, Rational(1)}}, central);
      }
    }
    return cache_.emplace(std::move(key), std::move(out)).first->second;
  }

  const RootSystem* rs_;
  LieAlgebraData g_;
  RatVec lambda_;
  Rational k_;
  int D_, f0_;
  std::vector<Monomial> basis_;
  mutable std::map<std::pair<ModeGen, Monomial>, ModeVector> cache_;
};

/// Window for a truncated Verma module. Only sl2 has a structure-constant
/// table at present.
inline GradedModule build_truncated_verma(const RootSystem& rs, const RatVec& lambda, const Rational& k, int D,
                                          int f0_bound) {
  if (!(rs.type().family == 'A' && rs.rank() == 1))
    throw DomainError("mode-level Verma modules are implemented for sl2 only");
  return GradedModule(rs, sl2_algebra(), lambda, k, D, f0_bound);
}

/// Sign of the spectral flow. Standard: Ad_{t^x} sends X_alpha(z) to
/// z^{<alpha,x>} X_alpha(z). Opposite: the inverse, as in Arakawa and
/// Frenkel-Kac-Wakimoto.
enum class FlowConvention { Standard, Opposite };

inline std::string to_string(FlowConvention c) { return c == FlowConvention::Standard ? "standard" : "opposite"; }
inline FlowConvention parse_flow_convention(const std::string& s) {
  if (s == "standard") return FlowConvention::Standard;
  if (s == "opposite") return FlowConvention::Opposite;
  throw ConfigError("flow convention must be 'standard' or 'opposite', got '" + s + "'");
}

/// A module with action X_n -> Ad_{t^x}(X_n) pulled back through the
/// spectral flow by an integral coweight x (fundamental coweight coordinates).
class TwistedAction {
 public:
  TwistedAction(const GradedModule& m, IntVec coweight, FlowConvention conv = FlowConvention::Standard)
      : m_(&m), x_(std::move(coweight)) {
    const auto& rs = m.root_system();
    rs.check_dim(x_.size());
    const int sign = conv == FlowConvention::Standard ? 1 : -1;
    RatVec xr(x_.begin(), x_.end());
    const auto& g = m.algebra();
    shift_.assign(g.dim(), 0);
    constant_.assign(g.dim(), Rational(0));
    for (int a = 0; a < g.dim(); ++a) {
      if (g.kind[a] == LieAlgebraData::Kind::Cartan) {
        // kappa(h_a, x) with h_a the simple coroot; its coweight coordinates form a Cartan row.
        const IntVec& row = rs.cartan()[g.coroot_index[a]];
        RatVec h(row.begin(), row.end());
        constant_[a] = sign * m.level() * rs.basic_form_coweights(h, xr);
      } else {
        long s = 0;
        for (std::size_t i = 0; i < x_.size(); ++i) s += g.root[a][i] * x_[i];
        shift_[a] = sign * s;
      }
    }
  }

  const GradedModule& module() const { return *m_; }
  const IntVec& coweight() const { return x_; }
  long max_shift() const {
    long s = 0;
    for (long v : shift_) s = std::max(s, std::labs(v));
    return s;
  }

  ModeVector act(int index, int mode, const ModeVector& v) const {
    ModeVector out = m_->act(index, mode + static_cast<int>(shift_[index]), v);
    if (mode == 0) add_to(out, v, constant_[index]);
    return out;
  }

 private:
  const GradedModule* m_;
  IntVec x_;
  std::vector<long> shift_;
  std::vector<Rational> constant_;
};

/// The untwisted action, with the same interface as TwistedAction.
struct PlainAction {
  const GradedModule* m;
  const GradedModule& module() const { return *m; }
  long max_shift() const { return 0; }
  ModeVector act(int index, int mode, const ModeVector& v) const { return m->act(index, mode, v); }
};

/// S_n v = 1/(2(k + h^v)) sum_a sum_m :J_{a,m} J^a_{n-m}: v, where :A_m B_l: = A_m B_l
/// for m <= -1 and B_l A_m otherwise. Only finitely many m contribute on v.
template <class Action>
ModeVector sugawara_apply(const Action& act, int n, const ModeVector& v) {
  const GradedModule& mod = act.module();
  const auto& rs = mod.root_system();
  Rational shifted = mod.level() + rs.dual_coxeter_number();
  if (sgn(shifted) == 0) throw DomainError("Sugawara operators are undefined at the critical level");
  const long d = vector_depth(v) + act.max_shift();
  const auto& g = mod.algebra();
  ModeVector sum;
  for (int a = 0; a < g.dim(); ++a)
    for (const auto& t : g.dual[a])
      for (long m = n - d - 1; m <= d + 1; ++m) {
        const int mm = static_cast<int>(m), l = n - mm;
        ModeVector term = m <= -1 ? act.act(a, mm, act.act(t.index, l, v)) : act.act(t.index, l, act.act(a, mm, v));
        add_to(sum, term, t.coeff);
      }
  ModeVector out;
  add_to(out, sum, 1 / (2 * shifted));
  return out;
}

inline ModeVector sugawara_apply(const GradedModule& m, int n, const ModeVector& v) {
  return sugawara_apply(PlainAction{&m}, n, v);
}

/// x_n acting through `act`, for a coweight x in fundamental coweight coordinates.
template <class Action>
ModeVector coweight_mode_apply(const Action& act, const IntVec& x, int n, const ModeVector& v) {
  const auto& mod = act.module();
  const auto& rs = mod.root_system();
  const auto& g = mod.algebra();
  // x = sum_i c_i alpha_i^v with c = (A^T)^{-1} x.
  RatMatrix at(rs.rank(), RatVec(rs.rank()));
  for (int i = 0; i < rs.rank(); ++i)
    for (int j = 0; j < rs.rank(); ++j) at[j][i] = rs.cartan()[i][j];
  RatVec c = mat_vec(inverse(at), RatVec(x.begin(), x.end()));
  ModeVector out;
  for (int a = 0; a < g.dim(); ++a)
    if (g.coroot_index[a] >= 0) add_to(out, act.act(a, n, v), c[g.coroot_index[a]]);
  return out;
}

/// Sparse table of an operator on the window basis.
struct ModeOperator {
  int degree;
  std::vector<ModeVector> images;  // images[i] is the image of basis()[i]
};

inline ModeOperator sugawara_mode(const GradedModule& m, int n) {
  if (std::abs(n) > m.max_depth()) throw DomainError("Sugawara mode index exceeds the window depth");
  ModeOperator op{-n, {}};
  for (const auto& b : m.basis()) op.images.push_back(sugawara_apply(m, n, GradedModule::basis_vector(b)));
  return op;
}

struct DssMismatch {
  std::string basis_vector, lhs, rhs;
};

struct DssReport {
  IntVec coweight;
  int n = 0;
  Rational level;
  FlowConvention convention = FlowConvention::Standard;
  long max_depth = 0;
  long vectors_checked = 0;
  bool passed = true;
  std::vector<DssMismatch> mismatches;  // at most a few, for diagnostics
};

/// Checks Ad_{t^x} S_n = S_n + sigma x_n + delta_{n,0} kappa(x,x)/2 on every window
/// vector, with sigma = +1 for the standard flow and -1 for the opposite one.
inline DssReport check_dss(const GradedModule& m, const IntVec& x, int n,
                           FlowConvention conv = FlowConvention::Standard) {
  TwistedAction tw(m, x, conv);
  const auto& rs = m.root_system();
  RatVec xr(x.begin(), x.end());
  const Rational half_norm = m.level() * rs.basic_form_coweights(xr, xr) / 2;
  const Rational sigma = conv == FlowConvention::Standard ? 1 : -1;
  DssReport r{x, n, m.level(), conv, m.max_depth(), 0, true, {}};
  for (const auto& b : m.basis()) {
    ModeVector v = GradedModule::basis_vector(b);
    ModeVector lhs = sugawara_apply(tw, n, v);
    ModeVector rhs = sugawara_apply(m, n, v);
    add_to(rhs, coweight_mode_apply(PlainAction{&m}, x, n, v), sigma);
    if (n == 0) add_to(rhs, v, half_norm);
    ++r.vectors_checked;
    if (lhs != rhs) {
      r.passed = false;
      if (r.mismatches.size() < 3)
        r.mismatches.push_back({m.monomial_string(b), m.vector_string(lhs), m.vector_string(rhs)});
    }
  }
  return r;
}

struct UnitImageReport {
  bool passed;
  Rational expected;
  std::string observed;
};

/// On the module twisted so that the highest-weight line is the image of the
/// unit of the induction from Ad_{t^x} g, S_0 + sigma x_0 acts on that line by
/// c1(Lambda) / (2(k + h^v)) - kappa(x, x) / 2.
inline UnitImageReport check_unit_image(const GradedModule& m, const IntVec& x,
                                        FlowConvention conv = FlowConvention::Standard) {
  const auto& rs = m.root_system();
  // Pulling back through Ad_{t^{-x}} makes Ad_{t^x} of the nonnegative part act as usual on v.
  IntVec neg(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) neg[i] = -x[i];
  TwistedAction tw(m, neg, conv);
  const Rational sigma = conv == FlowConvention::Standard ? 1 : -1;
  ModeVector v = GradedModule::highest_weight_vector();
  ModeVector out = sugawara_apply(tw, 0, v);
  add_to(out, coweight_mode_apply(tw, x, 0, v), sigma);
  RatVec xr(x.begin(), x.end());
  Rational expected = casimir_eigenvalue(rs, m.highest_weight()) / (2 * (m.level() + rs.dual_coxeter_number())) -
                      m.level() * rs.basic_form_coweights(xr, xr) / 2;
  ModeVector want;
  add_to(want, v, expected);
  return {out == want, expected, m.vector_string(out)};
}

/// Virasoro relations [S_a, S_b] = (a - b) S_{a+b} + delta_{a+b,0} c (a^3 - a)/12
/// with c = k dim g / (k + h^v), on every window vector.
inline bool check_virasoro(const GradedModule& m, int a, int b, std::string* failure = nullptr) {
  const auto& rs = m.root_system();
  Rational c = m.level() * rs.dim() / (m.level() + rs.dual_coxeter_number());
  Rational central = a + b == 0 ? c * (Rational(a) * a * a - a) / 12 : Rational(0);
  for (const auto& bm : m.basis()) {
    ModeVector v = GradedModule::basis_vector(bm);
    ModeVector lhs = sugawara_apply(m, a, sugawara_apply(m, b, v));
    add_to(lhs, sugawara_apply(m, b, sugawara_apply(m, a, v)), Rational(-1));
    ModeVector rhs;
    add_to(rhs, sugawara_apply(m, a + b, v), Rational(a - b));
    add_to(rhs, v, central);
    if (lhs != rhs) {
      if (failure) *failure = m.monomial_string(bm);
      return false;
    }
  }
  return true;
}

inline nlohmann::json to_json(const DssReport& r) {
  nlohmann::json cw = nlohmann::json::array();
  for (long x : r.coweight) cw.push_back(x);
  nlohmann::json mm = nlohmann::json::array();
  for (const auto& x : r.mismatches) mm.push_back({{"basis_vector", x.basis_vector}, {"lhs", x.lhs}, {"rhs", x.rhs}});
  return {{"coweight", cw},
          {"n", r.n},
          {"k", to_string(r.level)},
          {"convention", to_string(r.convention)},
          {"max_depth", r.max_depth},
          {"vectors_checked", r.vectors_checked},
          {"passed", r.passed},
          {"mismatches", mm}};
}

}  // namespace wkl
