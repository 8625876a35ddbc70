#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <tuple>

#include "polyak/diagram.hpp"
#include "polyak/diagram_maps.hpp"
#include "polyak/gauss_code.hpp"

using namespace polyak;

namespace {

// Rotation oracle: a diagram as per-position (partner offset, head?, sign), minimized
// over all cyclic shifts. Written against raw arrow data only.
using Word = std::vector<std::tuple<int, int, int>>;

Word word(const GaussDiagram& d, int shift) {
  const int m = d.endpoints();
  Word w(static_cast<std::size_t>(m));
  for (const Arrow& a : d.arrows()) {
    int t = ((a.tail - shift) % m + m) % m, h = ((a.head - shift) % m + m) % m;
    w[static_cast<std::size_t>(t)] = {h, 0, a.sign};
    w[static_cast<std::size_t>(h)] = {t, 1, a.sign};
  }
  return w;
}

Word orbit_min(const GaussDiagram& d) {
  Word best = word(d, 0);
  if (d.skeleton() == Skeleton::Circle)
    for (int s = 1; s < std::max(1, d.endpoints()); ++s) best = std::min(best, word(d, s));
  return best;
}

std::vector<GaussDiagram> all_signed(Skeleton skel, int n) {
  std::vector<GaussDiagram> out;
  for (const auto& match : perfect_matchings(n))
    for (unsigned dir = 0; dir < (1u << n); ++dir)
      for (unsigned sg = 0; sg < (1u << n); ++sg) {
        std::vector<Arrow> arrows;
        for (int i = 0; i < n; ++i) {
          auto [a, b] = match[static_cast<std::size_t>(i)];
          if (dir >> i & 1) std::swap(a, b);
          arrows.push_back(Arrow{a, b, (sg >> i & 1) ? -1 : 1, Style::Dashed});
        }
        out.emplace_back(skel, arrows);
      }
  return out;
}

GaussDiagram random_diagram(std::mt19937_64& rng, Skeleton skel, int n) {
  std::vector<int> pts(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < 2 * n; ++i) pts[static_cast<std::size_t>(i)] = i;
  std::shuffle(pts.begin(), pts.end(), rng);
  std::vector<Arrow> arrows;
  for (int i = 0; i < n; ++i)
    arrows.push_back(Arrow{pts[static_cast<std::size_t>(2 * i)], pts[static_cast<std::size_t>(2 * i + 1)],
                           (rng() & 1) ? 1 : -1, Style::Solid});
  return GaussDiagram(skel, arrows);
}

long double_factorial(int n) {
  long r = 1;
  for (int k = 2 * n - 1; k > 1; k -= 2) r *= k;
  return r;
}

}  // namespace

TEST(Canonical, OneArrowRotation) {
  GaussDiagram a(Skeleton::Circle, {Arrow{1, 0, 1, Style::Solid}});
  GaussDiagram b(Skeleton::Circle, {Arrow{0, 1, 1, Style::Solid}});
  EXPECT_EQ(key_of(a, Flavor::Gauss), key_of(b, Flavor::Gauss));
}

TEST(Canonical, LineUnchanged) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    GaussDiagram d = random_diagram(rng, Skeleton::Line, 1 + i % 4);
    auto [c, k] = canonical_form(d, Flavor::Gauss);
    EXPECT_EQ(c, d);
    EXPECT_EQ(k.rotation, 0);
  }
}

TEST(Canonical, RandomFourArrowRotatedByThree) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    GaussDiagram d = random_diagram(rng, Skeleton::Circle, 4);
    EXPECT_EQ(key_of(d, Flavor::Gauss), key_of(rotate(d, 3), Flavor::Gauss));
  }
}

// Keys agree exactly when oracle orbit minima agree; canonical_form is idempotent.
TEST(Canonical, MatchesRotationOracleExhaustive) {
  for (Skeleton skel : {Skeleton::Circle, Skeleton::Line})
    for (int n = 0; n <= 4; ++n) {
      std::map<Word, DiagramKey> by_oracle;
      std::map<DiagramKey, Word> by_key;
      for (const GaussDiagram& d : all_signed(skel, n)) {
        auto [c, ck] = canonical_form(d, Flavor::ArrowSigned);
        ASSERT_EQ(canonical_form(c, Flavor::ArrowSigned).first, c);
        ASSERT_EQ(key_of(c, Flavor::ArrowSigned), ck.key);
        ASSERT_EQ(orbit_min(c), orbit_min(d));
        Word w = orbit_min(d);
        auto [it1, new1] = by_oracle.emplace(w, ck.key);
        auto [it2, new2] = by_key.emplace(ck.key, w);
        ASSERT_EQ(it1->second, ck.key);
        ASSERT_EQ(it2->second, w);
      }
      EXPECT_EQ(by_oracle.size(), by_key.size());
      auto enumerated = enumerate_diagrams(skel, Flavor::ArrowSigned, n, CountMode::Exactly);
      EXPECT_EQ(enumerated.size(), by_key.size()) << "n=" << n;
    }
}

TEST(Enumerate, MatchingCount) {
  for (int n = 0; n <= 5; ++n) EXPECT_EQ(static_cast<long>(perfect_matchings(n).size()), double_factorial(n));
}

TEST(Enumerate, SmallChordCounts) {
  EXPECT_EQ(enumerate_diagrams(Skeleton::Line, Flavor::ChordUnsigned, 2, CountMode::Exactly).size(), 3u);
  EXPECT_EQ(enumerate_diagrams(Skeleton::Circle, Flavor::ChordUnsigned, 2, CountMode::Exactly).size(), 2u);
  EXPECT_EQ(enumerate_diagrams(Skeleton::Line, Flavor::ChordUnsigned, 3, CountMode::Exactly).size(), 15u);
}

TEST(Enumerate, CircleThreeChordsByBruteForce) {
  std::set<std::vector<int>> classes;
  for (const auto& match : perfect_matchings(3)) {
    std::vector<int> partner(6);
    for (auto [a, b] : match) partner[static_cast<std::size_t>(a)] = b, partner[static_cast<std::size_t>(b)] = a;
    std::vector<int> best;
    for (int s = 0; s < 6; ++s) {
      std::vector<int> w(6);
      for (int p = 0; p < 6; ++p) w[static_cast<std::size_t>(p)] = (partner[static_cast<std::size_t>((p + s) % 6)] - s + 6) % 6;
      if (best.empty() || w < best) best = w;
    }
    classes.insert(best);
  }
  EXPECT_EQ(enumerate_diagrams(Skeleton::Circle, Flavor::ChordUnsigned, 3, CountMode::Exactly).size(), classes.size());
}

TEST(Enumerate, UpToIsUnionOfExactly) {
  for (Skeleton skel : {Skeleton::Circle, Skeleton::Line}) {
    std::size_t total = 0;
    for (int m = 0; m <= 3; ++m) total += enumerate_diagrams(skel, Flavor::ChordSigned, m, CountMode::Exactly).size();
    EXPECT_EQ(enumerate_diagrams(skel, Flavor::ChordSigned, 3, CountMode::UpTo).size(), total);
  }
}

TEST(Enumerate, KeysSortedAndTextRoundTrip) {
  auto keys = enumerate_diagrams(Skeleton::Circle, Flavor::ArrowSigned, 3, CountMode::UpTo);
  EXPECT_TRUE(std::is_sorted(keys.begin(), keys.end()));
  EXPECT_EQ(keys.front().degree(), 0);
  for (const auto& k : keys) EXPECT_EQ(DiagramKey::from_text(k.text()), k);
  // two-digit partners with unsigned flavors
  for (Flavor f : {Flavor::ChordUnsigned, Flavor::ArrowUnsigned})
    for (const auto& k : enumerate_diagrams(Skeleton::Line, f, f == Flavor::ChordUnsigned ? 6 : 5, CountMode::Exactly))
      ASSERT_EQ(DiagramKey::from_text(k.text()), k) << k.text();
}

TEST(Subdiagrams, PowerOfTwoCounts) {
  std::mt19937_64 rng(3);
  EXPECT_EQ(subdiagrams(GaussDiagram(Skeleton::Circle)).size(), 1u);
  for (int n = 1; n <= 6; ++n) {
    GaussDiagram d = random_diagram(rng, n % 2 ? Skeleton::Circle : Skeleton::Line, n);
    auto subs = subdiagrams(d);
    EXPECT_EQ(subs.size(), std::size_t{1} << n);
    std::map<int, int> by_size;
    for (const auto& s : subs) ++by_size[s.size()];
    EXPECT_EQ(by_size[0], 1);
    EXPECT_EQ(by_size[n], 1);
    EXPECT_TRUE(std::find(subs.begin(), subs.end(), d) != subs.end());
  }
}

TEST(ReverseArrow, GaussCodeExample) {
  GaussDiagram d = parse_gauss_code("O1+,U2+,O2+,U1+");
  // label 1 swaps its O and U; the chords {0,3},{1,2} stay unlinked
  EXPECT_EQ(emit_gauss_code(reverse_arrow(d, 0)), "U1+,U2+,O2+,O1+");
  EXPECT_EQ(emit_gauss_code(reverse_arrow(d, 1)), "O1+,O2+,U2+,U1+");
  EXPECT_EQ(reverse_arrow(reverse_arrow(d, 1), 1), d);
}

TEST(Bar, ForgetsDirection) {
  EXPECT_TRUE(bar(GaussDiagram(Skeleton::Circle)).empty());
  ChordDiagram c = bar(GaussDiagram(Skeleton::Line, {Arrow{0, 1, 1, Style::Solid}}));
  ASSERT_EQ(c.size(), 1);
  EXPECT_EQ(c.chords()[0].sign, 1);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 30; ++i) {
    GaussDiagram d = random_diagram(rng, Skeleton::Circle, 3);
    GaussDiagram r = d;
    for (int k = 0; k < d.size(); ++k) r = reverse_arrow(r, k);
    EXPECT_EQ(key_of(bar(d), Flavor::ChordSigned), key_of(bar(r), Flavor::ChordSigned));
  }
}

TEST(Xi, SignCounting) {
  ChordDiagram pos(Skeleton::Circle, {Chord{0, 2, 1}, Chord{1, 3, 1}});
  FormalSum x = xi(pos);
  ASSERT_EQ(x.size(), 1u);
  EXPECT_EQ(x.terms().begin()->second, 1);
  ChordDiagram one_neg(Skeleton::Circle, {Chord{0, 2, -1}, Chord{1, 3, 1}});
  EXPECT_EQ(xi(one_neg).terms().begin()->second, -1);
  EXPECT_EQ(xi(one_neg).terms().begin()->first, key_of(pos.without_signs(), Flavor::ChordUnsigned));
}

TEST(Average, SmallCases) {
  FormalSum e = average(ChordDiagram(Skeleton::Circle));
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e.terms().begin()->second, 1);
  EXPECT_EQ(average(ChordDiagram(Skeleton::Line, {Chord{0, 1, 0}})).size(), 2u);
  ChordDiagram two(Skeleton::Line, {Chord{0, 2, 0}, Chord{1, 3, 0}});
  FormalSum avg = average(two);
  Rational total = 0;
  for (const auto& [k, c] : avg.terms()) total += c;
  EXPECT_EQ(total, 4);
  EXPECT_EQ(bar(avg) * Rational(1, 4), FormalSum::of(two, Flavor::ChordUnsigned));
}

TEST(Average, MuPrimeIdentityRandom) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 50; ++i) {
    const int n = 1 + static_cast<int>(rng() % 5);
    Skeleton skel = (rng() & 1) ? Skeleton::Circle : Skeleton::Line;
    ChordDiagram c = bar(random_diagram(rng, skel, n)).without_signs();
    EXPECT_EQ(bar(average(c)) * Rational(1, 1 << n), FormalSum::of(c, Flavor::ChordUnsigned));
  }
}
