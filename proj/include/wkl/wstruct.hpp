#pragma once

// Exponent-driven structure of the W-algebra filtration: the ideal-jump
// function n -> ceil(n h) / h, the energy windows of generators in each
// Kazhdan-Kostant degree, and bigraded characters of the associated graded
// vacuum modules.

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "wkl/errors.hpp"
#include "wkl/liecore.hpp"
#include "wkl/qseries.hpp"
#include "wkl/rational.hpp"

namespace wkl {

/// ceil(n h) / h, the canonical index of the ideal I_n.
inline Rational ideal_jump(const Rational& n, long h) {
  if (sgn(n) < 0) throw DomainError("ideal_jump needs n >= 0, got " + to_string(n));
  if (h <= 0) throw DomainError("Coxeter number must be positive");
  Rational r(ceil_of(n * h), Integer(h));
  r.canonicalize();
  return r;
}

struct JumpProfile {
  long h;
  std::vector<int> exponents;
  Rational representative(const Rational& n) const { return ideal_jump(n, h); }
};

inline JumpProfile jump_profile(const RootSystem& rs) { return {rs.coxeter_number(), rs.exponents()}; }

/// Half-open energy interval [lo, hi) for generators of KK degree `degree`.
struct EnergyWindow {
  int degree;
  Rational lo, hi;
  bool empty() const { return !(lo < hi); }
  Rational length() const { return hi - lo; }
};

/// Windows [i n, i m) for 1 <= i <= h; degrees above h carry no generators.
inline std::vector<EnergyWindow> generator_windows(const Rational& n, const Rational& m, const RootSystem& rs) {
  if (sgn(n) < 0) throw DomainError("generator_windows needs n >= 0");
  if (m < n) throw DomainError("generator_windows needs m >= n, got n=" + to_string(n) + " m=" + to_string(m));
  std::vector<EnergyWindow> out;
  for (int i = 1; i <= rs.coxeter_number(); ++i) out.push_back({i, i * n, i * m});
  return out;
}

/// Orientation of the energy grading. Conformal: modes have energies
/// d_i + 1 - n d_i + t, t >= 0 (bounded below). LoopRotation: the negatives of
/// those, the orientation in which the filtration pieces vanish above n j.
enum class EnergySign { Conformal, LoopRotation };

inline std::string to_string(EnergySign s) { return s == EnergySign::Conformal ? "conformal" : "loop-rotation"; }
inline EnergySign parse_energy_sign(const std::string& s) {
  if (s == "conformal") return EnergySign::Conformal;
  if (s == "loop-rotation") return EnergySign::LoopRotation;
  throw ConfigError("energy sign must be 'conformal' or 'loop-rotation', got '" + s + "'");
}

/// A polynomial generator: one mode of the tower attached to an exponent.
struct VacuumMode {
  int exponent;
  int u_degree;
  long energy;  // in the conformal orientation
  friend auto operator<=>(const VacuumMode&, const VacuumMode&) = default;
};

inline long tower_base_energy(int d, long n) { return d + 1 - n * d; }

/// Modes of every tower with conformal energy <= max_energy, sorted.
inline std::vector<VacuumMode> mode_towers(const RootSystem& rs, long n, long max_energy) {
  if (n < 0) throw DomainError("vacuum modes need n >= 0");
  std::vector<VacuumMode> out;
  for (int d : rs.exponents())
    for (long e = tower_base_energy(d, n); e <= max_energy; ++e) out.push_back({d, d + 1, e});
  std::sort(out.begin(), out.end());
  return out;
}

struct BigradedCharacter {
  long n = 0;
  EnergySign sign = EnergySign::Conformal;
  int max_u = 0;
  long min_q = 0, max_q = 0;
  std::map<std::pair<int, long>, Integer> coeffs;  // (u-degree, energy) -> coefficient, nonzero only

  Integer coefficient(int j, long m) const {
    auto it = coeffs.find({j, m});
    return it == coeffs.end() ? Integer(0) : it->second;
  }

  /// Entries with sign * m > n j, which must be absent.
  std::vector<std::pair<int, long>> vanishing_violations() const {
    const long s = sign == EnergySign::LoopRotation ? 1 : -1;
    std::vector<std::pair<int, long>> bad;
    for (const auto& [key, c] : coeffs)
      if (s * key.second > n * key.first) bad.push_back(key);
    return bad;
  }

  /// The q-series obtained by setting u = 1, exact to order max_q - min_q.
  /// Only available in the conformal orientation when every mode has
  /// positive energy, and when the u cutoff cannot have dropped terms.
  QSeries u_specialized(const RootSystem& rs) const {
    if (sign != EnergySign::Conformal) throw DomainError("u = 1 specialization needs the conformal orientation");
    long base = std::numeric_limits<long>::max();
    int top = 0;
    for (int d : rs.exponents()) {
      base = std::min(base, tower_base_energy(d, n));
      top = std::max(top, d + 1);
    }
    if (base <= 0) throw DomainError("u = 1 specialization diverges: some mode has energy <= 0");
    if (static_cast<long>(max_u) * base < max_q * top)
      throw DomainError("u-degree cutoff too small for the requested q-order");
    std::vector<Integer> c(max_q - min_q + 1, Integer(0));
    for (const auto& [key, v] : coeffs) c[key.second - min_q] += v;
    return QSeries(Rational(min_q), std::move(c), max_q - min_q);
  }

  nlohmann::json to_json() const {
    nlohmann::json entries = nlohmann::json::object();
    for (const auto& [key, c] : coeffs)
      entries[std::to_string(key.first) + "," + std::to_string(key.second)] = c.get_str();
    return {{"n", n},
            {"energy_sign", to_string(sign)},
            {"max_u_degree", max_u},
            {"q_range", {min_q, max_q}},
            {"coefficients", entries}};
  }

  std::string to_csv() const {
    std::string out = "u_degree,energy,coefficient\n";
    for (const auto& [key, c] : coeffs)
      out += std::to_string(key.first) + "," + std::to_string(key.second) + "," + c.get_str() + "\n";
    return out;
  }
};

/// Bigraded character of the polynomial algebra on all tower modes,
/// restricted to u-degree <= max_u and energies in [-N, N] in the chosen
/// orientation. Throws std::logic_error if the vanishing law fails.
inline BigradedCharacter vacuum_graded_character(const RootSystem& rs, long n, long N, int max_u,
                                                 EnergySign sign = EnergySign::Conformal) {
  if (n < 0) throw DomainError("vacuum characters need n >= 0");
  if (N < 0 || max_u < 0) throw DomainError("truncation bounds must be >= 0");
  // Work in the conformal orientation on the window [lo, hi] and flip at the end.
  const long lo = -N;
  const long hi = N;
  long min_base = 0;
  for (int d : rs.exponents()) min_base = std::min(min_base, tower_base_energy(d, n));
  const long max_modes = max_u / 2;
  // Partial products of an in-window monomial stay in [ilo, ihi].
  const long ilo = std::min(lo, max_modes * min_base);
  const long ihi = hi - max_modes * min_base;
  const long width = ihi - ilo + 1;
  if (static_cast<double>(width) * (max_u + 1) > 5e7) throw ResourceError("vacuum character window too large");
  std::vector<std::vector<Integer>> table(max_u + 1, std::vector<Integer>(width, Integer(0)));
  table[0][-ilo] = 1;
  for (const auto& mode : mode_towers(rs, n, ihi)) {
    // Multiply by 1 / (1 - u^j q^e): in-place forward accumulation.
    const int j = mode.u_degree;
    const long e = mode.energy;
    for (int a = j; a <= max_u; ++a)
      for (long x = 0; x < width; ++x) {
        long src = x - e;
        if (src < 0 || src >= width) continue;
        if (table[a - j][src] != 0) table[a][x] += table[a - j][src];
      }
  }
  BigradedCharacter ch;
  ch.n = n;
  ch.sign = sign;
  ch.max_u = max_u;
  ch.min_q = lo;
  ch.max_q = hi;
  for (int a = 0; a <= max_u; ++a)
    for (long m = lo; m <= hi; ++m) {
      const Integer& c = table[a][m - ilo];
      if (c == 0) continue;
      long q = sign == EnergySign::Conformal ? m : -m;
      ch.coeffs[{a, q}] = c;
    }
  if (!ch.vanishing_violations().empty())
    throw std::logic_error("vacuum character violates the vanishing law for n=" + std::to_string(n));
  return ch;
}

}  // namespace wkl
