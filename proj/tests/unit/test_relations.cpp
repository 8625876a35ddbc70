#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "polyak/diagram_maps.hpp"
#include "polyak/error.hpp"
#include "polyak/relations.hpp"

using namespace polyak;

namespace {

struct Vec2 {
  double x, y;
};
Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
double dotp(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

struct Line {
  Vec2 p, u;
};

// parameter along a where it meets b
double meet(const Line& a, const Line& b) { return cross(b.p - a.p, b.u) / cross(a.u, b.u); }

int arrow_between(int s, int t) {
  if (s > t) std::swap(s, t);
  return s == 0 ? (t == 1 ? 0 : 1) : 2;
}

// Reads off the configuration of three oriented lines; height[i] is the strand
// (0 top, 2 bottom) of line i. Over-crossing is positive when cross(u_over, u_under) > 0.
R3Config observe(const std::array<Line, 3>& lines, const std::array<int, 3>& height) {
  R3Config c;
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3, k = (i + 2) % 3;
    const int s = height[static_cast<std::size_t>(i)];
    double tj = meet(lines[static_cast<std::size_t>(i)], lines[static_cast<std::size_t>(j)]);
    double tk = meet(lines[static_cast<std::size_t>(i)], lines[static_cast<std::size_t>(k)]);
    int aj = arrow_between(s, height[static_cast<std::size_t>(j)]), ak = arrow_between(s, height[static_cast<std::size_t>(k)]);
    c.order[static_cast<std::size_t>(s)] = tj < tk ? std::array<int, 2>{aj, ak} : std::array<int, 2>{ak, aj};
  }
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      int hi = height[static_cast<std::size_t>(i)], hj = height[static_cast<std::size_t>(j)];
      const Line& over = hi < hj ? lines[static_cast<std::size_t>(i)] : lines[static_cast<std::size_t>(j)];
      const Line& under = hi < hj ? lines[static_cast<std::size_t>(j)] : lines[static_cast<std::size_t>(i)];
      c.sign[static_cast<std::size_t>(arrow_between(hi, hj))] = cross(over.u, under.u) > 0 ? 1 : -1;
    }
  return c;
}

}  // namespace

// Random planar triples, before and after sliding one line across the opposite vertex.
TEST(R3, PlanarLinesOracle) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> U(-1, 1);
  std::set<R3Config> seen;
  int samples = 0;
  while (samples < 2000) {
    std::array<Line, 3> lines;
    for (auto& l : lines) {
      double ang = U(rng) * M_PI;
      l = Line{{U(rng), U(rng)}, {std::cos(ang), std::sin(ang)}};
    }
    bool generic = true;
    for (int i = 0; i < 3; ++i)
      if (std::abs(cross(lines[static_cast<std::size_t>(i)].u, lines[static_cast<std::size_t>((i + 1) % 3)].u)) < 0.05) generic = false;
    if (!generic) continue;
    std::array<int, 3> height{0, 1, 2};
    std::shuffle(height.begin(), height.end(), rng);
    R3Config before = observe(lines, height);

    const int k = static_cast<int>(rng() % 3);
    Line& mv = lines[static_cast<std::size_t>(k)];
    const Line& a = lines[static_cast<std::size_t>((k + 1) % 3)];
    const Line& b = lines[static_cast<std::size_t>((k + 2) % 3)];
    Vec2 vertex = a.p + meet(a, b) * a.u;
    Vec2 normal{-mv.u.y, mv.u.x};
    mv.p = mv.p + 2 * dotp(vertex - mv.p, normal) * normal;
    R3Config after = observe(lines, height);

    ASSERT_TRUE(is_r3_configuration(before));
    ASSERT_TRUE(is_r3_configuration(after));
    EXPECT_EQ(after, before.reversed());
    seen.insert(before);
    ++samples;
  }
  const auto& table = r3_configurations();
  EXPECT_EQ(std::vector<R3Config>(seen.begin(), seen.end()), table);
  EXPECT_EQ(table.size(), 16u);
}

TEST(Polyak, OrderOneRowsAndTruncation) {
  for (Skeleton skel : {Skeleton::Circle, Skeleton::Line}) {
    RelationSystem sys = generate_polyak(1, skel);
    EXPECT_TRUE(sys.truncated);
    for (const auto& r : sys.rows) {
      EXPECT_LE(r.max_degree(), 1);
      EXPECT_EQ(r.terms().begin()->second, 1);
    }
    EXPECT_TRUE(std::is_sorted(sys.rows.begin(), sys.rows.end(), [](const FormalSum& x, const FormalSum& y) {
      return std::lexicographical_compare(x.terms().begin(), x.terms().end(), y.terms().begin(), y.terms().end());
    }));
  }
}

TEST(Polyak, UntruncatedKeepsHigherTerms) {
  RelationSystem full = generate_polyak(2, Skeleton::Line, false);
  int above = 0;
  for (const auto& r : full.rows) above += r.max_degree() > 2;
  EXPECT_GT(above, 0);
}

TEST(Chord, PIRowsBarToIsolatedChord) {
  RelationSystem sys = generate_chord_relations(2, Skeleton::Line);
  int ri = 0;
  for (std::size_t i = 0; i < sys.rows.size(); ++i) {
    if (sys.provenance[i].kind != RelationKind::RI || sys.rows[i].size() != 1) continue;
    ++ri;
    EXPECT_TRUE(chord_from_key(sys.rows[i].terms().begin()->first).has_isolated_chord());
  }
  EXPECT_GT(ri, 0);
}

TEST(SignedFamilies, TermCounts) {
  for (Skeleton skel : {Skeleton::Line}) {
    RelationSystem ns = generate_signed_family(RelationKind::NS, 3, skel, Flavor::ChordSigned);
    ASSERT_FALSE(ns.rows.empty());
    for (const auto& r : ns.rows) {
      EXPECT_LE(r.size(), 2u);
      EXPECT_TRUE(xi(r).is_zero());
    }
    RelationSystem six = generate_signed_family(RelationKind::SixTSigned, 3, skel, Flavor::ArrowSigned);
    std::size_t most = 0;
    for (const auto& r : six.rows) most = std::max(most, r.size());
    EXPECT_EQ(most, 6u);
    RelationSystem one = generate_signed_family(RelationKind::OneTSigned, 2, skel, Flavor::ChordSigned);
    for (const auto& r : one.rows) EXPECT_TRUE(chord_from_key(r.terms().begin()->first).has_isolated_chord());
  }
}

TEST(SixT, DecomposesCircle2AndLine3) {
  for (auto [n, skel] : {std::pair{2, Skeleton::Circle}, std::pair{3, Skeleton::Line}, std::pair{3, Skeleton::Circle}}) {
    RelationSystem six = generate_unsigned(RelationKind::SixT, n, skel, Flavor::ChordUnsigned);
    ASSERT_FALSE(six.rows.empty());
    for (std::size_t i = 0; i < six.rows.size(); ++i) {
      SixTDecomposition d = decompose_6T(six.rows[i], six.provenance[i]);
      EXPECT_EQ(d.four_term * d.four_term_coeff + d.two_term * d.two_term_coeff, six.rows[i]);
    }
  }
}

TEST(SixT, CorruptedSignRefused) {
  RelationSystem six = generate_unsigned(RelationKind::SixT, 3, Skeleton::Line, Flavor::ChordUnsigned);
  int refused = 0, tried = 0;
  for (std::size_t i = 0; i < six.rows.size(); ++i) {
    const FormalSum& row = six.rows[i];
    if (row.size() < 3) continue;
    FormalSum bad = row;
    const auto& [k, c] = *row.terms().begin();
    bad.add(k, -2 * c);
    ++tried;
    try {
      decompose_6T(bad, six.provenance[i]);
    } catch (const ConventionMismatchError&) {
      ++refused;
    }
  }
  ASSERT_GT(tried, 0);
  EXPECT_EQ(refused, tried);
}

TEST(Unsigned, FourAndTwoTermChordOnly) {
  EXPECT_THROW(generate_unsigned(RelationKind::FourT, 2, Skeleton::Line, Flavor::ArrowUnsigned), FlavorError);
  RelationSystem two = generate_unsigned(RelationKind::TwoT, 2, Skeleton::Line, Flavor::ChordUnsigned);
  for (const auto& r : two.rows) EXPECT_EQ(r.size(), 2u);
}

TEST(Unsigned, AverageOfFourTermInSixTSpan) {
  for (Skeleton skel : {Skeleton::Circle, Skeleton::Line}) {
    RelationSystem four = generate_unsigned(RelationKind::FourT, 2, skel, Flavor::ChordUnsigned);
    RelationSystem six = generate_unsigned(RelationKind::SixT, 2, skel, Flavor::ArrowUnsigned);
    SpanSolver solver(six.vectors());
    for (const auto& r : four.rows) EXPECT_TRUE(solver.solve(six.ambient.vec(average(r))));
  }
}
