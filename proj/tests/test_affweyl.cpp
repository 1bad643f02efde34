#include <gtest/gtest.h>

#include <random>
#include <set>

#include "wkl/affweyl.hpp"

using namespace wkl;

namespace {

LevelWeight sl2_weight(const Rational& a, const Rational& k) { return LevelWeight{RatVec{a}, Level{k}}; }

// All words of length <= L over {0..rk}.
std::vector<std::vector<int>> all_words(int rk, int L) {
  std::vector<std::vector<int>> out{{}};
  std::size_t begin = 0;
  for (int len = 0; len < L; ++len) {
    std::size_t end = out.size();
    for (std::size_t k = begin; k < end; ++k)
      for (int i = 0; i <= rk; ++i) {
        auto w = out[k];
        w.push_back(i);
        out.push_back(w);
      }
    begin = end;
  }
  return out;
}

}  // namespace

TEST(AffineWeyl, GeneratorsAreInvolutions) {
  for (auto [fam, rk] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}, {'B', 2}, {'G', 2}, {'C', 3}}) {
    RootSystem rs = build_root_system(fam, rk);
    auto e = AffineWeylElt::identity(rs);
    for (int i = 0; i <= rk; ++i) {
      auto s = AffineWeylElt::generator(rs, i);
      EXPECT_EQ(s.length(), 1);
      EXPECT_TRUE(s.times(rs, s) == e);
    }
  }
}

TEST(AffineWeyl, BraidRelationsFromCoxeterDiagram) {
  // Affine diagrams: A2 triangle (m=3), B2 / C2 (4,4,2), G2 (6,3,2).
  struct Case {
    char fam;
    int rk;
    int i, j, m;
  };
  std::vector<Case> cases = {{'A', 2, 0, 1, 3}, {'A', 2, 1, 2, 3}, {'A', 2, 0, 2, 3},
                             {'B', 2, 1, 2, 4}, {'C', 2, 0, 1, 4}, {'C', 2, 1, 2, 4},
                             {'C', 2, 0, 2, 2}, {'G', 2, 1, 2, 6}, {'A', 1, 0, 1, 0}};
  for (const auto& c : cases) {
    RootSystem rs = build_root_system(c.fam, c.rk);
    auto si = AffineWeylElt::generator(rs, c.i), sj = AffineWeylElt::generator(rs, c.j);
    auto p = si.times(rs, sj);
    auto acc = AffineWeylElt::identity(rs);
    int order = 0;
    for (int n = 1; n <= 8; ++n) {
      acc = acc.times(rs, p);
      if (acc == AffineWeylElt::identity(rs)) {
        order = n;
        break;
      }
    }
    EXPECT_EQ(order, c.m) << c.fam << c.rk << " " << c.i << c.j;
  }
}

TEST(AffineWeyl, CanonicalWordIsReducedAndMatchesWallCount) {
  for (auto [fam, rk] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}, {'B', 2}, {'G', 2}}) {
    RootSystem rs = build_root_system(fam, rk);
    for (const auto& word : all_words(rk, 6)) {
      auto w = AffineWeylElt::from_word(rs, word);
      EXPECT_EQ(w.length(), length_by_walls(rs, w));
      EXPECT_LE(w.length(), static_cast<int>(word.size()));
      EXPECT_EQ(w.length() % 2, static_cast<int>(word.size()) % 2);
      auto again = AffineWeylElt::from_word(rs, w.word());
      EXPECT_TRUE(again == w);
      EXPECT_EQ(again.word(), w.word());
    }
  }
}

TEST(AffineWeyl, EqualityAgreesWithActionOnTestWeights) {
  RootSystem rs = build_root_system('A', 2);
  auto words = all_words(2, 4);
  for (std::size_t a = 0; a < words.size(); a += 3)
    for (std::size_t b = 0; b < words.size(); b += 5) {
      auto x = AffineWeylElt::from_word(rs, words[a]);
      auto y = AffineWeylElt::from_word(rs, words[b]);
      EXPECT_EQ(x == y, acts_identically(rs, x, y));
    }
}

TEST(AffineWeyl, ActionMatchesLetterByLetterReflections) {
  RootSystem rs = build_root_system('B', 2);
  LevelWeight lw{RatVec{make_rational(1, 3), make_rational(-2, 5)}, Level{make_rational(-7, 4)}};
  for (const auto& word : all_words(2, 4)) {
    auto w = AffineWeylElt::from_word(rs, word);
    EXPECT_TRUE(w.act(rs, lw) == dot_act_word(rs, word, lw));
  }
}

TEST(AffineWeyl, AffineSimpleReflectionClosedForm) {
  // s_0 . lam = lam + ((k + h^v) - <lam + rho, theta^v>) theta.
  RootSystem rs = build_root_system('A', 2);
  LevelWeight lw{RatVec{make_rational(3, 2), Rational(-4)}, Level{make_rational(-5, 3)}};
  LevelWeight got = dot_reflect(rs, lw, simple_affine_coroot(rs, 0));
  Rational c = lw.level.shifted(rs) - (lw.lam[0] + 1 + lw.lam[1] + 1);
  RatVec theta = rs.root_to_weight(rs.theta());
  for (int i = 0; i < 2; ++i) EXPECT_EQ(got.lam[i], lw.lam[i] + c * theta[i]);
}

TEST(AffineWeyl, InverseAndAssociativity) {
  RootSystem rs = build_root_system('G', 2);
  auto words = all_words(2, 4);
  for (std::size_t a = 0; a < words.size(); a += 7) {
    auto x = AffineWeylElt::from_word(rs, words[a]);
    EXPECT_TRUE(x.times(rs, x.inverse(rs)) == AffineWeylElt::identity(rs));
    for (std::size_t b = 1; b < words.size(); b += 11) {
      auto y = AffineWeylElt::from_word(rs, words[b]);
      auto z = AffineWeylElt::from_word(rs, words[(a + b) % words.size()]);
      EXPECT_TRUE(x.times(rs, y).times(rs, z) == x.times(rs, y.times(rs, z)));
    }
  }
}

TEST(AffineWeyl, DotActionPreservesShiftedForm) {
  // |lam + rho|^2 + 2 (k + h^v) e is constant on dot orbits, where e is the
  // delta coefficient.
  RootSystem rs = build_root_system('A', 2);
  LevelWeight lw{RatVec{make_rational(1, 2), make_rational(1, 3)}, Level{make_rational(-9, 2)}};
  FullWeight base{lw.lam, Rational(0)};
  auto inv = [&](const FullWeight& fw) -> Rational {
    RatVec x = fw.lam;
    for (auto& v : x) v += 1;
    return rs.basic_form_weights(x, x) + 2 * lw.level.shifted(rs) * fw.delta;
  };
  for (const auto& word : all_words(2, 4)) {
    FullWeight img = dot_act_full(rs, word, base, lw.level);
    EXPECT_EQ(inv(img), inv(base));
  }
}

TEST(Classify, Sl2Examples) {
  RootSystem rs = build_root_system('A', 1);
  // k = -4, lam = -2 omega: pairings -1, -1.
  auto c = classify_weight(rs, sl2_weight(-2, -4), 6);
  EXPECT_TRUE(c.antidominant);
  EXPECT_TRUE(c.regular);
  EXPECT_TRUE(c.walls_in_ball.empty());
  EXPECT_EQ(c.simple_pairings, (RatVec{Rational(-1), Rational(-1)}));
  // lam = -omega is on the finite wall.
  auto d = classify_weight(rs, sl2_weight(-1, -4), 6);
  EXPECT_FALSE(d.regular);
  ASSERT_FALSE(d.walls_in_ball.empty());
  EXPECT_EQ(d.walls_in_ball.front(), (AffineCoroot{{1}, 0}));
}

TEST(Classify, NoRegularIntegralWeightsAtSl2LevelMinusThree) {
  // The simple shifted pairings sum to k + h^v = -1, so for integral lam one of
  // them is 0 or they straddle a wall: every integral weight is singular.
  RootSystem rs = build_root_system('A', 1);
  for (long a = -60; a <= 60; ++a) EXPECT_FALSE(classify_weight(rs, sl2_weight(a, -3), 4).regular);
}

TEST(Classify, RegularityClosedFormAgreesWithBall) {
  RootSystem rs = build_root_system('B', 2);
  std::mt19937 gen(17);
  std::uniform_int_distribution<int> num(-12, 12), den(1, 4);
  for (int t = 0; t < 200; ++t) {
    LevelWeight lw{RatVec{make_rational(num(gen), den(gen)), make_rational(num(gen), den(gen))},
                   Level{make_rational(num(gen), den(gen))}};
    if (lw.level.is_critical(rs)) continue;
    auto c = classify_weight(rs, lw, 200);
    EXPECT_EQ(c.regular, c.walls_in_ball.empty());
  }
}

TEST(IntegralSystem, ClosedFormMatchesEnumeration) {
  std::mt19937 gen(5);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
  for (auto [fam, rk] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}, {'B', 2}, {'G', 2}}) {
    RootSystem rs = build_root_system(fam, rk);
    for (int t = 0; t < 40; ++t) {
      LevelWeight lw{RatVec(rk), Level{make_rational(num(gen), den(gen))}};
      for (auto& x : lw.lam) x = make_rational(num(gen), den(gen));
      auto sys = integral_system(rs, lw, 24);
      EXPECT_EQ(sys.positive, integral_coroots_by_enumeration(rs, lw, 24));
    }
  }
}

TEST(IntegralSystem, SimpleCorootsOfRegularExample) {
  RootSystem rs = build_root_system('A', 1);
  auto sys = integral_system(rs, sl2_weight(-2, make_rational(-9, 2)), 16);
  std::vector<AffineCoroot> expect{{{1}, 0}, {{-1}, 2}};
  EXPECT_EQ(sys.simple, expect);
  auto full = integral_system(rs, sl2_weight(-2, -4), 16);
  std::vector<AffineCoroot> expect_full{{{1}, 0}, {{-1}, 1}};
  EXPECT_EQ(full.simple, expect_full);
}

TEST(Orbit, UniqueAntidominantRepresentativeAtNegativeLevel) {
  RootSystem rs = build_root_system('A', 1);
  std::mt19937 gen(11);
  std::uniform_int_distribution<int> pick(-12, 12);
  int checked = 0;
  while (checked < 20) {
    long a = pick(gen);
    auto lw = sl2_weight(a, -4);
    if (!classify_weight(rs, lw, 2).regular) continue;
    auto orb = orbit_and_representative(rs, lw, 12);
    ASSERT_EQ(orb.antidominant.size(), 1u) << a;
    ++checked;
  }
}

TEST(Orbit, PositiveIntegralLevelHasNoAntidominant) {
  RootSystem rs = build_root_system('A', 2);
  LevelWeight lw{RatVec{Rational(1), Rational(0)}, Level{Rational(1)}};
  auto orb = orbit_and_representative(rs, lw, 6);
  EXPECT_TRUE(orb.antidominant.empty());
  EXPECT_TRUE(orb.provably_none);
  EXPECT_FALSE(orb.representative.has_value());
  EXPECT_EQ(orb.dominant.size(), 1u);
}

TEST(Blocks, TwoBlocksForHalfIntegralLevel) {
  RootSystem rs = build_root_system('A', 1);
  auto bd = block_decomposition(rs, sl2_weight(-2, make_rational(-9, 2)), 8);
  ASSERT_EQ(bd.blocks.size(), 2u);
  EXPECT_EQ(bd.blocks[0].representative.length(), 0);
  EXPECT_EQ(bd.blocks[1].representative.word(), std::vector<int>{0});
  std::size_t total = 0;
  for (const auto& b : bd.blocks) total += b.labels.size();
  EXPECT_EQ(total, bd.minimal_reps.size());
}

TEST(Blocks, OneBlockForIntegralLevel) {
  RootSystem rs = build_root_system('A', 1);
  auto bd = block_decomposition(rs, sl2_weight(-2, -4), 8);
  EXPECT_EQ(bd.blocks.size(), 1u);
}

TEST(Blocks, RejectsBadInput) {
  RootSystem rs = build_root_system('A', 1);
  EXPECT_THROW(block_decomposition(rs, sl2_weight(0, make_rational(-3, 2)), 4), DomainError);
  EXPECT_THROW(block_decomposition(rs, sl2_weight(-1, -4), 4), DomainError);
}

TEST(Blocks, LatticeCriterionMatchesReflectionGroup) {
  // W_lambda generated by integral reflections equals {w : w.Lambda - Lambda in ZR}.
  for (auto [fam, rk, k] : std::vector<std::tuple<char, int, Rational>>{
           {'A', 1, make_rational(-9, 2)}, {'A', 2, make_rational(-10, 3)}, {'B', 2, make_rational(-7, 2)}}) {
    RootSystem rs = build_root_system(fam, rk);
    LevelWeight lw{RatVec(rk, Rational(-1) / 2), Level{k}};
    if (fam == 'A' && rk == 1) lw.lam = {Rational(-2)};
    auto sys = integral_system(rs, lw, 16);
    std::set<AffineWeylElt> generated{AffineWeylElt::identity(rs)};
    std::vector<AffineWeylElt> todo{AffineWeylElt::identity(rs)};
    const int cap = 6;
    while (!todo.empty()) {
      auto w = todo.back();
      todo.pop_back();
      for (const auto& c : sys.positive) {
        auto nw = AffineWeylElt::reflection(rs, c).times(rs, w);
        if (nw.length() > cap) continue;
        if (generated.insert(nw).second) todo.push_back(nw);
      }
    }
    FullWeight base{lw.lam, Rational(0)};
    RatVec base_class = lattice_class(rs, base);
    for (const auto& w : weyl_ball(rs, cap)) {
      bool lattice = lattice_class(rs, dot_act_full(rs, w.word(), base, lw.level)) == base_class;
      EXPECT_EQ(lattice, generated.count(w) > 0) << fam << rk << " " << w.word_string();
    }
  }
}

TEST(RealCoroots, OrbitGeneratorMatchesClosedForm) {
  for (auto [fam, rk] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}, {'B', 2}, {'C', 3}, {'G', 2}}) {
    RootSystem rs = build_root_system(fam, rk);
    EXPECT_EQ(real_coroots_by_orbit(rs, 6), real_coroots_closed_form(rs, 6)) << fam << rk;
  }
}

TEST(DotPair, Sl2Values) {
  RootSystem rs = build_root_system('A', 1);
  AffineCoroot a1{{1}, 0}, a0 = simple_affine_coroot(rs, 0);
  EXPECT_EQ(dot_pair(rs, sl2_weight(0, make_rational(5, 7)), a1), 1);
  EXPECT_EQ(dot_pair(rs, sl2_weight(0, make_rational(-1, 2)), a0), make_rational(1, 2));
  EXPECT_EQ(dot_pair(rs, sl2_weight(0, -3), a0), -2);
  EXPECT_EQ(dot_pair(rs, sl2_weight(3, -3), a0, false), -6);
}

TEST(DotReflect, Sl2Values) {
  RootSystem rs = build_root_system('A', 1);
  EXPECT_EQ(dot_reflect(rs, sl2_weight(0, 1), {{1}, 0}).lam, RatVec{Rational(-2)});
  EXPECT_EQ(dot_reflect(rs, sl2_weight(0, make_rational(-1, 2)), simple_affine_coroot(rs, 0)).lam,
            RatVec{Rational(1)});
  EXPECT_EQ(AffineWeylElt::generator(rs, 0).act(rs, sl2_weight(0, -3)).lam, RatVec{Rational(-4)});
}

TEST(DotReflect, InvolutionAndSignFlipOnRandomWeights) {
  std::mt19937 gen(23);
  std::uniform_int_distribution<int> num(-15, 15), den(1, 7);
  for (auto [fam, rk] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}, {'B', 2}, {'G', 2}}) {
    RootSystem rs = build_root_system(fam, rk);
    auto coroots = real_coroots_closed_form(rs, 3);
    for (int t = 0; t < 200; ++t) {
      LevelWeight lw{RatVec(rk), Level{make_rational(num(gen), den(gen))}};
      for (auto& x : lw.lam) x = make_rational(num(gen), den(gen));
      const auto& cr = coroots[t % coroots.size()];
      LevelWeight once = dot_reflect(rs, lw, cr);
      EXPECT_TRUE(dot_reflect(rs, once, cr) == lw);
      EXPECT_EQ(dot_pair(rs, once, cr), -dot_pair(rs, lw, cr));
    }
  }
}

TEST(Classify, Sl2Table) {
  RootSystem rs = build_root_system('A', 1);
  auto a = classify_weight(rs, sl2_weight(0, -3), 4);
  EXPECT_FALSE(a.antidominant);
  EXPECT_FALSE(a.dominant);
  auto b = classify_weight(rs, sl2_weight(-2, -3), 4);
  EXPECT_TRUE(b.antidominant);
  EXPECT_FALSE(b.regular);
  auto c = classify_weight(rs, sl2_weight(0, make_rational(1, 3)), 4);
  EXPECT_TRUE(c.regular);
  EXPECT_TRUE(c.dominant);
  EXPECT_FALSE(c.antidominant);
}

TEST(Orbit, Sl2SmallCases) {
  RootSystem rs = build_root_system('A', 1);
  auto same = orbit_and_representative(rs, sl2_weight(-2, -4), 3);
  ASSERT_TRUE(same.representative.has_value());
  EXPECT_TRUE(same.orbit[*same.representative].word.empty());
  auto zero = orbit_and_representative(rs, sl2_weight(0, -3), 2);
  ASSERT_TRUE(zero.representative.has_value());
  EXPECT_LE(zero.orbit[*zero.representative].word.size(), 2u);
  EXPECT_EQ(zero.antidominant.size(), 1u);
}

TEST(IntegralSystem, Sl2TableCases) {
  RootSystem rs = build_root_system('A', 1);
  auto full = integral_system(rs, sl2_weight(0, 5), 12);
  EXPECT_EQ(full.simple, (std::vector<AffineCoroot>{{{1}, 0}, {{-1}, 1}}));
  auto half = integral_system(rs, sl2_weight(0, make_rational(1, 2)), 12);
  for (const auto& c : half.positive) EXPECT_EQ(c.m % 2, 0);
  auto shifted = integral_system(rs, sl2_weight(make_rational(1, 2), 3), 12);
  // 1/2 + 3m is never an integer, so W_lambda is trivial.
  EXPECT_TRUE(shifted.positive.empty());
  EXPECT_TRUE(shifted.simple.empty());
}
