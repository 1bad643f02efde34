#pragma once

// Character formulas: Harish-Chandra projection, Verma characters on the
// affine (category O') and W-algebra sides, the Drinfeld-Sokolov character
// transform, simple W-algebra characters from parabolic KL data, and the
// label map Psi_s.
//
// Energy constants use only c1 = (L, L + 2 rho)_b, the level k, h^v,
// (rho^v, rho^v)_b and <rho, rho^v>:
//   E_Delta = c1 / (2 (k + h^v)) - (k / 2) (rho^v, rho^v)_b
//   E_M     = c1 / (2 (k + h^v)) - ((k + h^v) / 2) (rho^v, rho^v)_b + <rho, rho^v>
// The first term is the Sugawara eigenvalue kappa/(2(kappa - kappa_c)) of the
// Casimir Omega_kappa = c1 / k, since kappa/(kappa - kappa_c) = k/(k + h^v).

#include <algorithm>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "wkl/affweyl.hpp"
#include "wkl/coxeter.hpp"
#include "wkl/hecke.hpp"
#include "wkl/qseries.hpp"

namespace wkl {

/// Central character: the finite dot orbit W_f . Lambda at a level,
/// represented by its unique element in the closed dominant chamber
/// (all <mu + rho, alpha_i^v> >= 0).
struct CentralCharLabel {
  RatVec rep;
  Level level;
  bool w0_twist = false;

  friend bool operator==(const CentralCharLabel& a, const CentralCharLabel& b) {
    return a.rep == b.rep && a.level.k == b.level.k && a.w0_twist == b.w0_twist;
  }
};

/// Unique element of the finite dot orbit with all shifted pairings >= 0.
inline RatVec finite_dot_dominant(const RootSystem& rs, RatVec mu) {
  rs.check_dim(mu.size());
  while (true) {
    int i = -1;
    for (int j = 0; j < rs.rank(); ++j)
      if (sgn(mu[j] + 1) < 0) {
        i = j;
        break;
      }
    if (i < 0) return mu;
    mu = rs.dot_reflect_finite(i, mu);
  }
}

/// The whole finite dot orbit (breadth-first, deduplicated).
inline std::vector<RatVec> finite_dot_orbit(const RootSystem& rs, const RatVec& lam) {
  std::vector<RatVec> out{lam};
  std::set<RatVec> seen{lam};
  for (std::size_t k = 0; k < out.size(); ++k)
    for (int i = 0; i < rs.rank(); ++i) {
      RatVec nx = rs.dot_reflect_finite(i, out[k]);
      if (seen.insert(nx).second) out.push_back(nx);
    }
  return out;
}

/// pi(Lambda). With w0_twist the weight is first moved by the linear action
/// of the longest element, the alternative normalization of the
/// Harish-Chandra map.
inline CentralCharLabel hc_project(const RootSystem& rs, const RatVec& lam, const Level& level,
                                   bool w0_twist = false) {
  RatVec mu = w0_twist ? rs.apply_longest(lam) : lam;
  return CentralCharLabel{finite_dot_dominant(rs, mu), level, w0_twist};
}

struct EnergyOffsets {
  Rational conformal_weight;  // c1 / (2 (k + h^v))
  Rational e_delta;
  Rational e_m;
};

inline EnergyOffsets energy_offsets(const RootSystem& rs, const CentralCharLabel& chi) {
  if (chi.level.is_critical(rs)) throw DomainError("energy offsets are undefined at the critical level");
  const Rational shifted = chi.level.shifted(rs);
  const Rational r = rs.rhocheck_norm();
  EnergyOffsets e;
  e.conformal_weight = casimir_eigenvalue(rs, chi.rep) / (2 * shifted);
  e.e_delta = e.conformal_weight - chi.level.k / 2 * r;
  e.e_m = e.conformal_weight - shifted / 2 * r + rs.rho_rhocheck();
  return e;
}

/// ch Delta_chi = q^{E_Delta} prod_{i>=1} (1 - q^i)^{-dim g}.
inline QSeries ch_verma_Oprime(const RootSystem& rs, const CentralCharLabel& chi, long N) {
  return QSeries::monomial(energy_offsets(rs, chi).e_delta, N) * eta_factor(1, -rs.dim(), N);
}

/// ch M_chi = q^{E_M} prod_{i>=1} (1 - q^i)^{-rk g}.
inline QSeries ch_verma_W(const RootSystem& rs, const CentralCharLabel& chi, long N) {
  return QSeries::monomial(energy_offsets(rs, chi).e_m, N) * eta_factor(1, -rs.rank(), N);
}

/// Exponent of the level-independent Drinfeld-Sokolov prefactor:
/// (1/2) kappa_c(rho^v, rho^v) + <rho, rho^v> with kappa_c = -h^v kappa_b.
inline Rational ds_prefactor_exponent(const RootSystem& rs) {
  return -Rational(rs.dual_coxeter_number()) / 2 * rs.rhocheck_norm() + rs.rho_rhocheck();
}

/// Multiplies by q^{prefactor} prod_{i>=1} (1 - q^i)^{dim - rk}.
inline QSeries ds_transform(const QSeries& s, const RootSystem& rs) {
  const long N = s.truncation();
  return s * (QSeries::monomial(ds_prefactor_exponent(rs), N) * eta_factor(1, rs.dim() - rs.rank(), N));
}

// ---------------------------------------------------------------------------
// Labels and Psi_s

enum class ModuleKind { Verma, Simple, DualVerma };
enum class ModuleSide { KacMoody, BabyWhittaker, WAlgebra };

inline const char* to_string(ModuleKind k) {
  switch (k) {
    case ModuleKind::Verma: return "Verma";
    case ModuleKind::Simple: return "Simple";
    default: return "DualVerma";
  }
}
inline const char* to_string(ModuleSide s) {
  switch (s) {
    case ModuleSide::KacMoody: return "KacMoody";
    case ModuleSide::BabyWhittaker: return "BabyWhittaker";
    default: return "WAlgebra";
  }
}

struct ModuleLabel {
  ModuleKind kind = ModuleKind::Verma;
  ModuleSide side = ModuleSide::KacMoody;
  RatVec weight;                          // KacMoody side
  std::optional<CentralCharLabel> chi;    // WAlgebra side
  Level level;
};

/// Psi_s on labels: Vermas and dual Vermas go to the W-side object with
/// central character pi(Lambda); Simple(Lambda) goes to the W-side simple
/// unless <Lambda, alpha_i^v> is a nonnegative integer for some finite simple
/// coroot, in which case the image is zero (nullopt).
inline std::optional<ModuleLabel> psi_s_label(const RootSystem& rs, const ModuleLabel& m, bool w0_twist = false) {
  if (m.side != ModuleSide::KacMoody) throw DomainError("psi_s_label expects a Kac-Moody side label");
  rs.check_dim(m.weight.size());
  if (m.kind == ModuleKind::Simple)
    for (const auto& x : m.weight)
      if (is_nonnegative_integer(x)) return std::nullopt;
  ModuleLabel out;
  out.kind = m.kind;
  out.side = ModuleSide::WAlgebra;
  out.level = m.level;
  out.chi = hc_project(rs, m.weight, m.level, w0_twist);
  return out;
}

// ---------------------------------------------------------------------------
// Simple W-algebra characters

/// W_lambda as an abstract Coxeter system together with its realization by
/// affine reflections.
struct IntegralCoxeterSystem {
  std::vector<AffineCoroot> simple;  // simple coroots of W_lambda
  CoxeterMatrix coxeter;
  std::vector<int> finite_part;      // indices of simple coroots with m = 0

  AffineWeylElt realize(const RootSystem& rs, const std::vector<int>& word) const {
    AffineWeylElt w = AffineWeylElt::identity(rs);
    for (int i : word) w = w.times(rs, AffineWeylElt::reflection(rs, simple.at(i)));
    return w;
  }
};

inline IntegralCoxeterSystem integral_coxeter_system(const RootSystem& rs, const LevelWeight& lw) {
  // The integral m-lattices have step s * denominator; a ball four times the
  // widest step contains the simple coroots as candidates.
  long widest = 1;
  for (const auto& g : rs.positive_coroots()) {
    MLattice lat = integral_m_lattice(rs, lw, g);
    if (!lat.empty) widest = std::max(widest, lat.step + std::labs(lat.offset));
  }
  auto sys = integral_system(rs, lw, static_cast<int>(4 * widest + 4));
  IntegralCoxeterSystem out;
  out.simple = sys.simple;
  const std::size_t n = sys.simple.size();
  if (n == 0) throw DomainError("W_lambda is trivial; there is nothing to compute");
  out.coxeter.assign(n, std::vector<int>(n, 1));
  for (std::size_t i = 0; i < n; ++i) {
    if (sys.simple[i].m == 0) out.finite_part.push_back(static_cast<int>(i));
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      long a = root_coroot_pairing(rs, coroot_data(rs, sys.simple[i].gamma).root, sys.simple[j].gamma);
      long b = root_coroot_pairing(rs, coroot_data(rs, sys.simple[j].gamma).root, sys.simple[i].gamma);
      long p = a * b;
      out.coxeter[i][j] = p == 0 ? 2 : p == 1 ? 3 : p == 2 ? 4 : p == 3 ? 6 : 0;
    }
  }
  return out;
}

struct SimpleCharacterTerm {
  std::string y_word;          // word in the simple reflections of W_lambda
  std::string y_affine_word;   // reduced word in the affine simple reflections
  RatVec weight;               // y . lambda
  Integer coefficient;         // c_{y,w}
  QSeries verma;               // ch M_{pi(y . lambda)}
};

struct SimpleCharacter {
  std::string w_word;
  std::vector<SimpleCharacterTerm> terms;
  QSeries character;
  ParabolicKind route = ParabolicKind::Antispherical;
};

/// Simple W-algebra characters ch L_w = sum_y c_{y,w} ch M_{pi(y . lambda)}
/// for lambda regular antidominant of negative level, w minimal in
/// W_{lambda,f} \ W_lambda.
///
/// Antispherical route (default): c_{y,w} = (-1)^{l(w)-l(y)} n_{y,w}(1) from
/// the sign-induced module. Spherical route: the multiplicity matrix
/// [M_y : L_w] = m_{y,w}(1) from the trivially induced module, inverted
/// exactly.
class SimpleCharacterEngine {
 public:
  SimpleCharacterEngine(const RootSystem& rs, const LevelWeight& lw, int ball_length,
                        ParabolicKind route = ParabolicKind::Antispherical, bool w0_twist = false)
      : rs_(rs), lw_(lw), route_(route), w0_twist_(w0_twist) {
    auto c = classify_weight(rs, lw, std::max(8, 2 * ball_length));
    if (!lw.level.is_negative(rs) || !c.regular || !c.antidominant)
      throw DomainError(std::string("simple characters need a regular antidominant weight of negative level;") +
                        " antidominant=" + (c.antidominant ? "yes" : "no") + " regular=" +
                        (c.regular ? "yes" : "no") + " negative=" + (lw.level.is_negative(rs) ? "yes" : "no"));
    system_ = integral_coxeter_system(rs, lw);
    ball_ = std::make_unique<BruhatBall>(system_.coxeter, ball_length);
    module_ = std::make_unique<ParabolicModule>(*ball_, system_.finite_part, route);
  }

  const BruhatBall& ball() const { return *ball_; }
  const ParabolicModule& module() const { return *module_; }
  const IntegralCoxeterSystem& system() const { return system_; }

  /// Minimal coset representatives y <= w, ordered by length then index.
  std::vector<int> lower_set(int w) const {
    std::vector<int> out;
    for (int y : module_->minimal_elements())
      if (ball_->leq(y, w)) out.push_back(y);
    return out;
  }

  /// Matrix of c_{y,z} over the lower set of w (rows y, columns z).
  IntMatrix coefficient_matrix(const std::vector<int>& elems) const {
    const std::size_t n = elems.size();
    IntMatrix c(n, std::vector<Integer>(n, 0));
    if (route_ == ParabolicKind::Antispherical) {
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
          Integer v = module_->coefficient(elems[i], elems[j]).value_at_one();
          if ((ball_->length(elems[j]) - ball_->length(elems[i])) % 2) v = -v;
          c[i][j] = v;
        }
      return c;
    }
    return inverse_multiplicity_matrix(multiplicity_matrix(elems), leq_on(elems));
  }

  /// [M_y : L_z] over the lower set: inverse of the coefficient matrix on the
  /// antispherical route, spherical canonical basis at v = 1 otherwise.
  IntMatrix multiplicity_matrix(const std::vector<int>& elems) const {
    const std::size_t n = elems.size();
    if (route_ == ParabolicKind::Antispherical)
      return inverse_multiplicity_matrix(coefficient_matrix(elems), leq_on(elems));
    IntMatrix m(n, std::vector<Integer>(n, 0));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) m[i][j] = module_->coefficient(elems[i], elems[j]).value_at_one();
    return m;
  }

  RatVec weight_of(int y) const { return system_.realize(rs_, ball_->word(y)).act(rs_, lw_).lam; }

  SimpleCharacter character(int w, long N) const {
    if (w < 0 || w >= ball_->size()) throw ResourceError("insufficient ball: w outside the Bruhat ball");
    if (!module_->is_minimal(w)) throw DomainError("w is not a minimal coset representative");
    auto elems = lower_set(w);
    IntMatrix c = coefficient_matrix(elems);
    const std::size_t col = std::find(elems.begin(), elems.end(), w) - elems.begin();
    SimpleCharacter out;
    out.route = route_;
    out.w_word = ball_->word_string(w);
    bool first = true;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (c[i][col] == 0) continue;
      SimpleCharacterTerm t;
      t.y_word = ball_->word_string(elems[i]);
      AffineWeylElt y = system_.realize(rs_, ball_->word(elems[i]));
      t.y_affine_word = y.word_string();
      t.weight = y.act(rs_, lw_).lam;
      t.coefficient = c[i][col];
      t.verma = ch_verma_W(rs_, hc_project(rs_, t.weight, lw_.level, w0_twist_), N);
      QSeries scaled = t.coefficient * t.verma;
      out.character = first ? scaled : out.character + scaled;
      first = false;
      out.terms.push_back(std::move(t));
    }
    return out;
  }

 private:
  std::function<bool(std::size_t, std::size_t)> leq_on(const std::vector<int>& elems) const {
    return [this, elems](std::size_t i, std::size_t j) { return ball_->leq(elems[i], elems[j]); };
  }

  const RootSystem& rs_;
  LevelWeight lw_;
  ParabolicKind route_;
  bool w0_twist_;
  IntegralCoxeterSystem system_;
  std::unique_ptr<BruhatBall> ball_;
  std::unique_ptr<ParabolicModule> module_;
};

}  // namespace wkl
