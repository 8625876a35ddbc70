#include <gtest/gtest.h>

#include <random>

#include "polyak/error.hpp"
#include "polyak/gauss_code.hpp"
#include "polyak/gpv.hpp"
#include "polyak/invariants.hpp"
#include "polyak/moves.hpp"
#include "polyak/verifier.hpp"
#include "support/knot_gen.hpp"

using namespace polyak;

using testing_support::random_knot;
using testing_support::random_move;

TEST(IGpv, SmallExamples) {
  EXPECT_EQ(i_gpv(GaussDiagram(Skeleton::Circle)).size(), 1u);
  FormalSum one = i_gpv(parse_gauss_code("L:O1+,U1+"));
  EXPECT_EQ(one.size(), 2u);
  GaussDiagram dashed(Skeleton::Line, {Arrow{0, 1, 1, Style::Dashed}});
  FormalSum d = i_gpv(dashed);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d.terms().begin()->first.degree(), 1);
}

TEST(IGpv, InverseOfSingleDashedArrow) {
  GaussDiagram dashed(Skeleton::Line, {Arrow{0, 1, 1, Style::Dashed}});
  FormalSum inv = i_gpv_inverse(FormalSum::of(dashed, Flavor::ArrowSigned));
  FormalSum expect(Flavor::Gauss, Skeleton::Line);
  expect.add(dashed.with_style(Style::Solid), 1);
  expect.add(GaussDiagram(Skeleton::Line), -1);
  EXPECT_EQ(inv, expect);
}

TEST(IGpv, InverseExhaustiveUpToThree) {
  for (Skeleton skel : {Skeleton::Circle, Skeleton::Line})
    for (const DiagramKey& k : enumerate_diagrams(skel, Flavor::ArrowSigned, 3, CountMode::UpTo)) {
      FormalSum a = FormalSum::of(k);
      ASSERT_EQ(i_gpv(i_gpv_inverse(a)), a) << k.text();
    }
  for (Skeleton skel : {Skeleton::Circle, Skeleton::Line})
    for (const DiagramKey& k : enumerate_diagrams(skel, Flavor::Gauss, 3, CountMode::UpTo)) {
      FormalSum d = FormalSum::of(k);
      ASSERT_EQ(i_gpv_inverse(i_gpv(d)), d) << k.text();
    }
}

TEST(IGpv, InverseRandomFourArrow) {
  std::mt19937_64 rng(404);
  for (int i = 0; i < 100; ++i) {
    Skeleton skel = (i % 2) ? Skeleton::Circle : Skeleton::Line;
    GaussDiagram d = random_knot(rng, skel, 4, Style::Dashed);
    FormalSum a = FormalSum::of(d, Flavor::ArrowSigned);
    ASSERT_EQ(i_gpv(i_gpv_inverse(a)), a);
  }
}

TEST(IChord, ArrowReversalInvisible) {
  std::mt19937_64 rng(6);
  EXPECT_EQ(i_chord(parse_gauss_code("O1+,U1+")).size(), 2u);
  for (int i = 0; i < 30; ++i) {
    GaussDiagram d = random_knot(rng, Skeleton::Circle, 3);
    EXPECT_EQ(i_chord(d), i_chord(reverse_arrow(d, static_cast<int>(rng() % 3))));
  }
}

TEST(Flip, OrderOneCounts) {
  EXPECT_TRUE(flip_constraints(1, Skeleton::Circle).empty());
  EXPECT_EQ(flip_constraints(1, Skeleton::Line).size(), 2u);
}

TEST(Flip, CountMatchesBruteForce) {
  for (Skeleton skel : {Skeleton::Circle, Skeleton::Line})
    for (int n = 1; n <= 3; ++n) {
      std::set<std::vector<std::pair<std::string, std::string>>> rows;
      for (int m = 1; m <= n; ++m)
        for (const auto& k : enumerate_diagrams(skel, Flavor::ArrowSigned, m, CountMode::Exactly)) {
          GaussDiagram d = gauss_from_key(k);
          for (int a = 0; a < d.size(); ++a) {
            DiagramKey r = key_of(reverse_arrow(d, a), Flavor::ArrowSigned);
            if (r == k) continue;
            auto lo = std::min(k, r), hi = std::max(k, r);
            rows.insert({{lo.bytes(), "+"}, {hi.bytes(), "-"}});
          }
        }
      EXPECT_EQ(flip_constraints(n, skel).size(), rows.size()) << "n=" << n;
    }
}

// span{i_gpv(B) - i_gpv(B with arrow k reversed)} = span{flip constraints}
TEST(Flip, SpanEqualityWithReversedKnots) {
  for (Skeleton skel : {Skeleton::Circle, Skeleton::Line})
    for (int n = 2; n <= 3; ++n) {
      Ambient amb(enumerate_diagrams(skel, Flavor::ArrowSigned, n, CountMode::UpTo));
      std::vector<SparseVec> lhs, rhs;
      for (const auto& k : enumerate_diagrams(skel, Flavor::Gauss, n, CountMode::UpTo)) {
        GaussDiagram b = gauss_from_key(k);
        for (int a = 0; a < b.size(); ++a) {
          SparseVec v = amb.vec(i_gpv(b) - i_gpv(reverse_arrow(b, a)));
          if (!v.empty()) lhs.push_back(std::move(v));
        }
      }
      for (const auto& f : flip_constraints(n, skel)) rhs.push_back(amb.vec(f));
      SpanSolver ls(lhs), rs(rhs);
      for (const auto& v : rhs) ASSERT_TRUE(ls.solve(v));
      for (const auto& v : lhs) ASSERT_TRUE(rs.solve(v));
      EXPECT_EQ(ls.rank(), rs.rank());
    }
}

TEST(Space, Dimensions) {
  EXPECT_EQ(invariant_space(1, Skeleton::Circle, Profile::Gpv).size(), 1u);
  EXPECT_EQ(invariant_space(3, Skeleton::Circle, Profile::Gpv).size(), 2u);
  EXPECT_EQ(invariant_space(2, Skeleton::Line, Profile::Gpv).size(), 3u);
  for (auto [n, skel] : {std::pair{3, Skeleton::Circle}, std::pair{2, Skeleton::Line}}) {
    auto v = invariant_space(n, skel, Profile::GpvVirtualization);
    ASSERT_EQ(v.size(), 1u);
    EXPECT_TRUE(v[0].is_constant());
    EXPECT_EQ(invariant_space(n, skel, Profile::Chord).size(), 1u);
  }
}

TEST(Evaluate, EmptyIndicatorIsOne) {
  auto v = invariant_space(2, Skeleton::Line, Profile::Gpv);
  const InvariantFunctional& one = v.front();
  ASSERT_TRUE(one.is_constant());
  EXPECT_EQ(evaluate(one, parse_gauss_code("L:O1+,U2-,U1+,O2-")), 1);
  EXPECT_EQ(evaluate(one, parse_gauss_code("L:")), 1);
}

TEST(Evaluate, AgreesWithPairing) {
  std::mt19937_64 rng(31);
  for (auto [n, skel] : {std::pair{3, Skeleton::Circle}, std::pair{2, Skeleton::Line}}) {
    auto basis = invariant_space(n, skel, Profile::Gpv);
    for (int i = 0; i < 40; ++i) {
      GaussDiagram k = random_knot(rng, skel, 1 + static_cast<int>(rng() % 5));
      for (const auto& f : basis) EXPECT_EQ(evaluate(f, k), pairing(f, k));
    }
  }
}

class MoveInvariance : public ::testing::TestWithParam<std::pair<int, Skeleton>> {};

TEST_P(MoveInvariance, RandomSequences) {
  const auto [n, skel] = GetParam();
  auto basis = invariant_space(n, skel, Profile::Gpv);
  std::mt19937_64 rng(1000 + static_cast<unsigned>(n) * 2 + static_cast<unsigned>(skel));
  for (int seq = 0; seq < 100; ++seq) {
    GaussDiagram k = random_knot(rng, skel, static_cast<int>(rng() % 4));
    std::vector<Rational> start;
    for (const auto& f : basis) start.push_back(evaluate(f, k));
    for (int step = 0; step < 6; ++step) k = random_move(rng, k);
    for (std::size_t i = 0; i < basis.size(); ++i) ASSERT_EQ(evaluate(basis[i], k), start[i]) << emit_gauss_code(k);
  }
}

INSTANTIATE_TEST_SUITE_P(Orders, MoveInvariance,
                         ::testing::Values(std::pair{1, Skeleton::Circle}, std::pair{2, Skeleton::Circle},
                                           std::pair{3, Skeleton::Circle}, std::pair{1, Skeleton::Line},
                                           std::pair{2, Skeleton::Line}, std::pair{3, Skeleton::Line}));

// negative control: a functional outside the invariant space does notice R1
TEST(MoveInvarianceControl, SingleArrowCountChangesUnderR1) {
  GaussDiagram arrow(Skeleton::Line, {Arrow{0, 1, 1, Style::Dashed}});
  InvariantFunctional f{1, Skeleton::Line, Profile::Gpv, FormalSum::of(arrow, Flavor::ArrowSigned)};
  GaussDiagram k = parse_gauss_code("L:");
  GaussDiagram k1 = apply_r_move(k, R1Insert{0, 1, true}).diagram;
  EXPECT_NE(evaluate(f, k), evaluate(f, k1));
}

TEST(Evaluate, VirtualizationFunctionalsIgnoreFlips) {
  std::mt19937_64 rng(77);
  auto v = invariant_space(2, Skeleton::Line, Profile::GpvVirtualization);
  for (int i = 0; i < 30; ++i) {
    GaussDiagram k = random_knot(rng, Skeleton::Line, 3);
    for (const auto& f : v) EXPECT_EQ(evaluate(f, k), evaluate(f, reverse_arrow(k, static_cast<int>(rng() % 3))));
  }
}

TEST(Witness, ConstantHasNone) {
  auto v = invariant_space(3, Skeleton::Circle, Profile::GpvVirtualization);
  EXPECT_FALSE(find_witness(v[0], 4));
}

TEST(Witness, NonconstantFunctionalsWithinThreeCrossings) {
  for (auto [n, skel] : {std::pair{3, Skeleton::Circle}, std::pair{2, Skeleton::Line}})
    for (const auto& f : invariant_space(n, skel, Profile::Gpv)) {
      if (f.is_constant()) continue;
      auto w = find_witness(f, 3);
      ASSERT_TRUE(w);
      GaussDiagram k = parse_gauss_code(w->knot), kp = parse_gauss_code(w->flipped_knot);
      EXPECT_NE(pairing(f, k), pairing(f, kp));
      EXPECT_EQ(key_of(reverse_arrow(k, w->flipped_arrow - 1), Flavor::Gauss), key_of(kp, Flavor::Gauss));
    }
}
