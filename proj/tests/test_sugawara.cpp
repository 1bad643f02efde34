#include <gtest/gtest.h>

#include <random>

#include "oracles/partitions.hpp"
#include "wkl/characters.hpp"
#include "wkl/sugawara.hpp"

using namespace wkl;

namespace {

const RootSystem& sl2() {
  static const RootSystem rs = build_root_system('A', 1);
  return rs;
}

constexpr int E = 0, H = 1, F = 2;

}  // namespace

TEST(TruncatedVerma, WindowDimensions) {
  auto m0 = build_truncated_verma(sl2(), RatVec{0}, Rational(1), 0, 3);
  EXPECT_EQ(m0.basis().size(), 4u);  // f0^j v, j <= 3
  auto m = build_truncated_verma(sl2(), RatVec{0}, Rational(1), 6, 2);
  auto p3 = oracle::colored_partitions(6, 3);
  for (long d = 0; d <= 6; ++d) EXPECT_EQ(m.graded_dimension(d), p3[d] * 3) << d;
  EXPECT_THROW(build_truncated_verma(sl2(), RatVec{0}, Rational(1), 9, 0), ResourceError);
}

TEST(TruncatedVerma, HighestWeightConditions) {
  auto m = build_truncated_verma(sl2(), RatVec{make_rational(3, 2)}, make_rational(-1, 2), 2, 1);
  auto v = GradedModule::highest_weight_vector();
  EXPECT_TRUE(m.act(E, 0, v).empty());
  for (int a : {E, H, F}) EXPECT_TRUE(m.act(a, 1, v).empty());
  auto hv = m.act(H, 0, v);
  ASSERT_EQ(hv.size(), 1u);
  EXPECT_EQ(hv.begin()->second, make_rational(3, 2));
  // e_0 f_0 v = h_0 v.
  EXPECT_EQ(m.act(E, 0, m.act(F, 0, v)), hv);
}

TEST(TruncatedVerma, BracketRelationsOnTheWindow) {
  auto m = build_truncated_verma(sl2(), RatVec{make_rational(-1, 3)}, make_rational(5, 7), 3, 1);
  const auto& g = m.algebra();
  for (const auto& b : m.basis()) {
    auto v = GradedModule::basis_vector(b);
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y)
        for (int p = -2; p <= 2; ++p)
          for (int q = -2; q <= 2; ++q) {
            auto lhs = m.act(x, p, m.act(y, q, v));
            add_to(lhs, m.act(y, q, m.act(x, p, v)), Rational(-1));
            ModeVector rhs;
            for (const auto& t : g.bracket[x][y]) add_to(rhs, m.act(t.index, p + q, v), t.coeff);
            if (p + q == 0) add_to(rhs, v, Rational(p) * m.level() * g.form[x][y]);
            ASSERT_EQ(lhs, rhs) << m.monomial_string(b) << " " << x << p << " " << y << q;
          }
  }
}

TEST(Sugawara, HighestWeightEigenvalues) {
  auto v = GradedModule::highest_weight_vector();
  auto m0 = build_truncated_verma(sl2(), RatVec{0}, Rational(1), 2, 1);
  EXPECT_TRUE(sugawara_apply(m0, 0, v).empty());
  auto m1 = build_truncated_verma(sl2(), RatVec{1}, Rational(1), 2, 1);
  EXPECT_EQ(sugawara_apply(m1, 0, v), (ModeVector{{Monomial{}, make_rational(1, 4)}}));
}

TEST(Sugawara, ZeroModeIsConformalWeightPlusDepth) {
  auto m = build_truncated_verma(sl2(), RatVec{0}, Rational(1), 4, 2);
  for (const auto& b : m.basis()) {
    auto v = GradedModule::basis_vector(b);
    ModeVector want;
    add_to(want, v, Rational(monomial_depth(b)));
    EXPECT_EQ(sugawara_apply(m, 0, v), want) << m.monomial_string(b);
  }
  auto op = sugawara_mode(m, 0);
  EXPECT_EQ(op.images.size(), m.basis().size());
  EXPECT_THROW(sugawara_mode(m, 5), DomainError);
}

TEST(Sugawara, MatchesCharacterConformalWeight) {
  std::mt19937 gen(2718);
  std::uniform_int_distribution<int> num(-12, 12), den(1, 6);
  for (int t = 0; t < 10; ++t) {
    Rational k = make_rational(num(gen), den(gen));
    if (k == -2) k = 3;
    RatVec lam{make_rational(num(gen), den(gen))};
    auto m = build_truncated_verma(sl2(), lam, k, 1, 0);
    auto s = sugawara_apply(m, 0, GradedModule::highest_weight_vector());
    Rational expected = energy_offsets(sl2(), hc_project(sl2(), lam, Level{k})).conformal_weight;
    ModeVector want;
    add_to(want, GradedModule::highest_weight_vector(), expected);
    EXPECT_EQ(s, want);
  }
}

TEST(Sugawara, CriticalLevelRejected) {
  auto m = build_truncated_verma(sl2(), RatVec{0}, Rational(-2), 1, 0);
  EXPECT_THROW(sugawara_apply(m, 0, GradedModule::highest_weight_vector()), DomainError);
}

TEST(Sugawara, VirasoroRelations) {
  for (Rational k : {Rational(1), make_rational(-1, 2), make_rational(7, 3)}) {
    auto m = build_truncated_verma(sl2(), RatVec{make_rational(2, 5)}, k, 4, 1);
    for (int a = -1; a <= 1; ++a)
      for (int b = -1; b <= 1; ++b) {
        std::string where;
        EXPECT_TRUE(check_virasoro(m, a, b, &where)) << a << " " << b << " at " << where;
      }
  }
}

TEST(SpectralFlow, ModeRules) {
  auto m = build_truncated_verma(sl2(), RatVec{make_rational(1, 2)}, make_rational(3, 4), 3, 1);
  auto v = GradedModule::basis_vector(m.basis()[5]);
  TwistedAction rho(m, IntVec{1});
  EXPECT_EQ(rho.act(E, -2, v), m.act(E, -1, v));
  EXPECT_EQ(rho.act(F, -2, v), m.act(F, -3, v));
  auto h0 = m.act(H, 0, v);
  add_to(h0, v, make_rational(3, 4));  // kappa(h, rho^v) = k
  EXPECT_EQ(rho.act(H, 0, v), h0);
  TwistedAction zero(m, IntVec{0});
  for (int a : {E, H, F})
    for (int n = -2; n <= 2; ++n) EXPECT_EQ(zero.act(a, n, v), m.act(a, n, v));
  TwistedAction opp(m, IntVec{1}, FlowConvention::Opposite);
  EXPECT_EQ(opp.act(E, -2, v), m.act(E, -3, v));
}

TEST(SpectralFlow, ShiftConstantForRhoCheck) {
  RatVec r{1};
  EXPECT_EQ(Rational(1) * sl2().basic_form_coweights(r, r) / 2, make_rational(1, 4));
}

TEST(SpectralFlow, SugawaraIdentityOnTheDepthFiveWindow) {
  for (Rational k : {Rational(1), make_rational(-1, 2), Rational(-3)}) {
    auto m = build_truncated_verma(sl2(), RatVec{make_rational(-2, 3)}, k, 5, 1);
    for (IntVec x : {IntVec{0}, IntVec{1}, IntVec{2}, IntVec{-3}})
      for (int n = -2; n <= 2; ++n) {
        auto r = check_dss(m, x, n);
        EXPECT_TRUE(r.passed) << to_string(k) << " " << x[0] << " " << n << " "
                              << (r.mismatches.empty() ? "" : r.mismatches[0].basis_vector);
        EXPECT_EQ(r.vectors_checked, static_cast<long>(m.basis().size()));
      }
  }
}

TEST(SpectralFlow, OppositeConventionAndSignSensitivity) {
  auto m = build_truncated_verma(sl2(), RatVec{Rational(1)}, Rational(1), 3, 1);
  for (int n = -1; n <= 1; ++n) EXPECT_TRUE(check_dss(m, IntVec{1}, n, FlowConvention::Opposite).passed);
  // The standard flow checked against the opposite-sign linear term must fail.
  TwistedAction tw(m, IntVec{1});
  auto v = GradedModule::highest_weight_vector();
  auto lhs = sugawara_apply(tw, 0, v);
  auto wrong = sugawara_apply(m, 0, v);
  add_to(wrong, coweight_mode_apply(PlainAction{&m}, IntVec{1}, 0, v), Rational(-1));
  add_to(wrong, v, make_rational(1, 4));
  EXPECT_NE(lhs, wrong);
}

TEST(SpectralFlow, UnitImageEnergy) {
  std::mt19937 gen(31);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  for (int t = 0; t < 20; ++t) {
    Rational k = make_rational(num(gen), den(gen));
    if (k == -2) continue;
    auto m = build_truncated_verma(sl2(), RatVec{make_rational(num(gen), den(gen))}, k, 0, 0);
    for (IntVec x : {IntVec{1}, IntVec{2}, IntVec{-1}})
      for (auto conv : {FlowConvention::Standard, FlowConvention::Opposite}) {
        auto r = check_unit_image(m, x, conv);
        EXPECT_TRUE(r.passed) << r.observed << " vs " << to_string(r.expected);
      }
  }
}

TEST(SpectralFlow, JsonReport) {
  auto m = build_truncated_verma(sl2(), RatVec{0}, make_rational(-1, 2), 1, 0);
  auto j = to_json(check_dss(m, IntVec{2}, 1));
  EXPECT_EQ(j["k"], "-1/2");
  EXPECT_EQ(j["passed"], true);
  EXPECT_EQ(j["convention"], "standard");
}
