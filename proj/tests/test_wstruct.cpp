#include <gtest/gtest.h>

#include <random>

#include "oracles/partitions.hpp"
#include "wkl/wstruct.hpp"

using namespace wkl;

TEST(IdealJump, Examples) {
  EXPECT_EQ(ideal_jump(make_rational(3, 10), 2), make_rational(1, 2));
  EXPECT_EQ(ideal_jump(Rational(1), 2), Rational(1));
  EXPECT_EQ(ideal_jump(make_rational(5, 6), 6), make_rational(5, 6));
  EXPECT_EQ(ideal_jump(Rational(0), 3), Rational(0));
  EXPECT_THROW(ideal_jump(make_rational(-1, 5), 2), DomainError);
}

TEST(IdealJump, IdempotentMonotoneAndStepConstant) {
  std::mt19937 gen(5);
  std::uniform_int_distribution<int> num(0, 400), den(1, 37), hh(1, 30);
  for (int t = 0; t < 1000; ++t) {
    long h = hh(gen);
    Rational a = make_rational(num(gen), den(gen)), b = make_rational(num(gen), den(gen));
    Rational ja = ideal_jump(a, h);
    EXPECT_EQ(ideal_jump(ja, h), ja);
    EXPECT_GE(ja, a);
    EXPECT_LT(ja - a, make_rational(1, h));
    EXPECT_TRUE(is_integer(ja * h));
    if (a <= b) {
      EXPECT_LE(ja, ideal_jump(b, h));
    }
    // Constant on ((m - 1)/h, m/h].
    Integer m = ceil_of(a * h);
    if (m > 0) {
      Rational inside = make_rational(m.get_si() - 1, h) + make_rational(1, 1000 * h);
      EXPECT_EQ(ideal_jump(inside, h), ja);
    }
  }
}

TEST(GeneratorWindows, Examples) {
  RootSystem a1 = build_root_system('A', 1), a2 = build_root_system('A', 2);
  auto w = generator_windows(Rational(1), Rational(2), a1);
  ASSERT_EQ(w.size(), 2u);
  EXPECT_EQ(w[0].lo, 1);
  EXPECT_EQ(w[0].hi, 2);
  EXPECT_EQ(w[1].lo, 2);
  EXPECT_EQ(w[1].hi, 4);
  for (const auto& x : generator_windows(Rational(3), Rational(3), a2)) EXPECT_TRUE(x.empty());
  auto w3 = generator_windows(Rational(0), Rational(1), a2);
  ASSERT_EQ(w3.size(), 3u);
  for (const auto& x : w3) {
    EXPECT_EQ(x.lo, 0);
    EXPECT_EQ(x.hi, x.degree);
  }
  EXPECT_THROW(generator_windows(Rational(2), Rational(1), a1), DomainError);
}

TEST(GeneratorWindows, LengthsAndDegreeCutoff) {
  for (auto [fam, rk] : std::vector<std::pair<char, int>>{{'A', 3}, {'B', 3}, {'G', 2}, {'E', 6}}) {
    RootSystem rs = build_root_system(fam, rk);
    Rational n = make_rational(2, 3), m = make_rational(7, 2);
    auto w = generator_windows(n, m, rs);
    EXPECT_EQ(static_cast<int>(w.size()), rs.coxeter_number());
    for (const auto& x : w) EXPECT_EQ(x.length(), x.degree * (m - n));
  }
}

TEST(VacuumCharacter, VirasoroAnchorAtNZero) {
  RootSystem rs = build_root_system('A', 1);
  auto ch = vacuum_graded_character(rs, 0, 20, 40);
  auto s = ch.u_specialized(rs);
  auto want = eta_factor(2, -1, 20);
  for (long e = 0; e <= 20; ++e) EXPECT_EQ(s.coefficient_at(Rational(e)), want.coefficient(e)) << e;
}

TEST(VacuumCharacter, NOneAnchor) {
  for (auto [fam, rk] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}, {'B', 2}}) {
    RootSystem rs = build_root_system(fam, rk);
    auto ch = vacuum_graded_character(rs, 1, 15, 15 * rs.coxeter_number());
    auto s = ch.u_specialized(rs);
    auto p = oracle::colored_partitions(15, rk);
    for (long e = 0; e <= 15; ++e) EXPECT_EQ(s.coefficient_at(Rational(e)), p[e]);
  }
}

TEST(VacuumCharacter, DegreeZeroSliceIsOne) {
  for (long n = 0; n <= 3; ++n) {
    RootSystem rs = build_root_system('A', 2);
    auto ch = vacuum_graded_character(rs, n, 12, 6);
    for (long m = -12; m <= 12; ++m) EXPECT_EQ(ch.coefficient(0, m), m == 0 ? 1 : 0);
  }
}

TEST(VacuumCharacter, ExtraModesPerUnitN) {
  for (auto [fam, rk] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}, {'G', 2}}) {
    RootSystem rs = build_root_system(fam, rk);
    auto m0 = mode_towers(rs, 0, 30), m1 = mode_towers(rs, 1, 30);
    std::vector<VacuumMode> diff;
    std::set_difference(m1.begin(), m1.end(), m0.begin(), m0.end(), std::back_inserter(diff));
    EXPECT_TRUE(std::includes(m1.begin(), m1.end(), m0.begin(), m0.end()));
    for (int d : rs.exponents()) {
      long count = std::count_if(diff.begin(), diff.end(), [&](const VacuumMode& x) { return x.exponent == d; });
      EXPECT_EQ(count, d);
    }
  }
}

TEST(VacuumCharacter, VanishingLawLoopRotationSign) {
  for (auto [fam, rk] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}}) {
    RootSystem rs = build_root_system(fam, rk);
    for (long n = 0; n <= 3; ++n) {
      auto ch = vacuum_graded_character(rs, n, 20, 6, EnergySign::LoopRotation);
      for (int j = 0; j <= 6; ++j)
        for (long m = n * j + 1; m <= 20; ++m) EXPECT_EQ(ch.coefficient(j, m), 0) << n << " " << j << " " << m;
      // The top mode of the d = 1 tower sits at n d - d - 1.
      EXPECT_EQ(ch.coefficient(2, n - 2), 1);
      EXPECT_EQ(ch.coefficient(2, n - 1), 0);
    }
  }
}

TEST(VacuumCharacter, OrientationsMirror) {
  RootSystem rs = build_root_system('A', 2);
  auto c = vacuum_graded_character(rs, 2, 10, 6);
  auto l = vacuum_graded_character(rs, 2, 10, 6, EnergySign::LoopRotation);
  for (int j = 0; j <= 6; ++j)
    for (long m = -10; m <= 10; ++m) EXPECT_EQ(c.coefficient(j, m), l.coefficient(j, -m));
  EXPECT_THROW(l.u_specialized(rs), DomainError);
  EXPECT_THROW(c.u_specialized(rs), DomainError);  // n = 2 has modes of energy <= 0
}

TEST(VacuumCharacter, BruteForceAgainstMonomialEnumeration) {
  // sl3, n = 1: count monomials in the modes directly.
  RootSystem rs = build_root_system('A', 2);
  auto ch = vacuum_graded_character(rs, 1, 8, 9);
  auto modes = mode_towers(rs, 1, 8);
  std::map<std::pair<int, long>, long> count;
  std::function<void(std::size_t, int, long)> rec = [&](std::size_t i, int j, long e) {
    if (e > 8 || j > 9) return;
    ++count[{j, e}];
    for (std::size_t t = i; t < modes.size(); ++t) rec(t, j + modes[t].u_degree, e + modes[t].energy);
  };
  rec(0, 0, 0);
  for (const auto& [key, c] : count) EXPECT_EQ(ch.coefficient(key.first, key.second), c);
  EXPECT_EQ(ch.coeffs.size(), count.size());
}

TEST(VacuumCharacter, JsonAndCsv) {
  RootSystem rs = build_root_system('A', 1);
  auto ch = vacuum_graded_character(rs, 0, 4, 4);
  auto j = ch.to_json();
  EXPECT_EQ(j["coefficients"]["2,2"], "1");
  EXPECT_EQ(j["energy_sign"], "conformal");
  EXPECT_EQ(ch.to_csv().substr(0, 27), "u_degree,energy,coefficient");
}
