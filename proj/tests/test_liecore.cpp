#include <gtest/gtest.h>

#include <numeric>

#include "wkl/liecore.hpp"

using namespace wkl;

namespace {

struct TypeFacts {
  char family;
  int rank;
  int dim;
  int h;
  int hdual;
  std::vector<int> exponents;
};

// Standard tables of simple Lie algebra data.
const std::vector<TypeFacts> kFacts = {
    {'A', 1, 3, 2, 2, {1}},
    {'A', 2, 8, 3, 3, {1, 2}},
    {'A', 3, 15, 4, 4, {1, 2, 3}},
    {'A', 4, 24, 5, 5, {1, 2, 3, 4}},
    {'B', 2, 10, 4, 3, {1, 3}},
    {'B', 3, 21, 6, 5, {1, 3, 5}},
    {'C', 3, 21, 6, 4, {1, 3, 5}},
    {'C', 4, 36, 8, 5, {1, 3, 5, 7}},
    {'D', 4, 28, 6, 6, {1, 3, 3, 5}},
    {'D', 5, 45, 8, 8, {1, 3, 4, 5, 7}},
    {'E', 6, 78, 12, 12, {1, 4, 5, 7, 8, 11}},
    {'E', 7, 133, 18, 18, {1, 5, 7, 9, 11, 13, 17}},
    {'E', 8, 248, 30, 30, {1, 7, 11, 13, 17, 19, 23, 29}},
    {'F', 4, 52, 12, 9, {1, 5, 7, 11}},
    {'G', 2, 14, 6, 4, {1, 5}},
};

}  // namespace

TEST(RootSystem, MatchesStandardTables) {
  for (const auto& f : kFacts) {
    SCOPED_TRACE(std::string(1, f.family) + std::to_string(f.rank));
    RootSystem rs = build_root_system(f.family, f.rank);
    EXPECT_EQ(rs.dim(), f.dim);
    EXPECT_EQ(rs.coxeter_number(), f.h);
    EXPECT_EQ(rs.dual_coxeter_number(), f.hdual);
    EXPECT_EQ(rs.exponents(), f.exponents);
  }
}

TEST(RootSystem, ExponentSumRule) {
  for (const auto& f : kFacts) {
    RootSystem rs = build_root_system(f.family, f.rank);
    int total = 0;
    for (int d : rs.exponents()) total += 2 * d + 1;
    EXPECT_EQ(total, rs.dim());
    EXPECT_EQ(static_cast<int>(rs.positive_roots().size()) * 2 + rs.rank(), rs.dim());
    // The largest exponent is h - 1 and exponents are symmetric about h/2.
    EXPECT_EQ(rs.exponents().back(), rs.coxeter_number() - 1);
    for (std::size_t i = 0; i < rs.exponents().size(); ++i)
      EXPECT_EQ(rs.exponents()[i] + rs.exponents()[rs.exponents().size() - 1 - i], rs.coxeter_number());
  }
}

TEST(RootSystem, LongestWordSendsRhoToMinusRho) {
  for (const auto& f : kFacts) {
    if (f.rank > 6) continue;
    RootSystem rs = build_root_system(f.family, f.rank);
    RatVec image = rs.apply_longest(rs.rho());
    for (const auto& x : image) EXPECT_EQ(x, -1);
    EXPECT_EQ(static_cast<std::size_t>(rs.longest_word().size()), rs.positive_roots().size());
  }
}

TEST(RootSystem, HighestCorootHasBasicNormTwo) {
  for (const auto& f : kFacts) {
    RootSystem rs = build_root_system(f.family, f.rank);
    RatVec th(rs.rank());
    // theta^v in fundamental-coweight coordinates: <alpha_i, theta^v>.
    for (int i = 0; i < rs.rank(); ++i) {
      long s = 0;
      for (int j = 0; j < rs.rank(); ++j) s += rs.cartan()[j][i] * rs.theta_check()[j];
      th[i] = s;
    }
    EXPECT_EQ(rs.basic_form_coweights(th, th), 2);
  }
}

TEST(RootSystem, Sl2BasicFormAndCasimir) {
  RootSystem rs = build_root_system('A', 1);
  RatVec alpha_check{Rational(2)};
  EXPECT_EQ(rs.basic_form_coweights(alpha_check, alpha_check), 2);
  for (long a = -6; a <= 6; ++a) {
    RatVec lam{Rational(a)};
    EXPECT_EQ(casimir_eigenvalue(rs, lam), make_rational(a * (a + 2), 2));
  }
  EXPECT_EQ(rs.rhocheck_norm(), make_rational(1, 2));
  EXPECT_EQ(rs.rho_rhocheck(), make_rational(1, 2));
}

TEST(RootSystem, FreudenthalStrangeFormula) {
  // (rho, rho)_b = h^v dim / 12 in the basic normalization.
  for (const auto& f : kFacts) {
    RootSystem rs = build_root_system(f.family, f.rank);
    EXPECT_EQ(rs.basic_form_weights(rs.rho(), rs.rho()), make_rational(f.hdual * f.dim, 12));
  }
}

TEST(RootSystem, RejectsBadTypes) {
  EXPECT_THROW(build_root_system('A', 0), DomainError);
  EXPECT_THROW(build_root_system('B', 1), DomainError);
  EXPECT_THROW(build_root_system('D', 3), DomainError);
  EXPECT_THROW(build_root_system('E', 9), DomainError);
  EXPECT_THROW(build_root_system('G', 3), DomainError);
  EXPECT_THROW(build_root_system('X', 2), DomainError);
}

TEST(Level, CriticalAndSign) {
  RootSystem rs = build_root_system('A', 1);
  EXPECT_TRUE(Level{Rational(-2)}.is_critical(rs));
  EXPECT_TRUE(Level{Rational(-2)}.is_positive(rs));
  EXPECT_TRUE(Level{make_rational(-3, 2)}.is_positive(rs));
  EXPECT_TRUE(Level{Rational(-3)}.is_negative(rs));
  RatVec x{Rational(2)};
  EXPECT_EQ(form_value(rs, Level{Rational(5)}, x, x), 10);
}

TEST(SemisimpleSystem, ProductSignRules) {
  SemisimpleSystem ss;
  ss.factors = {build_root_system('A', 1), build_root_system('A', 2)};
  ss.levels = {Level{Rational(-3)}, Level{Rational(-5)}};
  EXPECT_TRUE(ss.noncritical());
  EXPECT_TRUE(ss.negative());
  EXPECT_FALSE(ss.positive());
  EXPECT_EQ(ss.rank(), 3);
  ss.levels[1] = Level{Rational(-3)};
  EXPECT_FALSE(ss.noncritical());
}

TEST(Rational, ParsesExactForms) {
  EXPECT_EQ(parse_rational("-3/6"), make_rational(-1, 2));
  EXPECT_EQ(parse_rational("0.3"), make_rational(3, 10));
  EXPECT_EQ(parse_rational("-1.25"), make_rational(-5, 4));
  EXPECT_EQ(parse_rational("+7"), 7);
  // Leading zeros must not switch the base.
  EXPECT_EQ(parse_rational("0.25"), make_rational(1, 4));
  EXPECT_EQ(parse_rational("0.08"), make_rational(2, 25));
  EXPECT_EQ(parse_rational("010"), 10);
  EXPECT_EQ(parse_rational("-07/010"), make_rational(-7, 10));
  EXPECT_THROW(parse_rational("1/0"), ConfigError);
  EXPECT_THROW(parse_rational("abc"), ConfigError);
  EXPECT_THROW(parse_rational("1e5"), ConfigError);
  EXPECT_EQ(to_string(make_rational(6, -4)), "-3/2");
}
