#include <gtest/gtest.h>

#include <random>

#include "polyak/error.hpp"
#include "polyak/gauss_code.hpp"
#include "polyak/io.hpp"
#include "polyak/verifier.hpp"

using namespace polyak;

TEST(GaussCode, ParsesSingleArrow) {
  GaussDiagram d = parse_gauss_code("O1+,U1+");
  EXPECT_EQ(d.skeleton(), Skeleton::Circle);
  ASSERT_EQ(d.size(), 1);
  EXPECT_EQ(d.arrow(0), (Arrow{0, 1, 1, Style::Solid}));
}

TEST(GaussCode, ParsesLongKnot) {
  GaussDiagram d = parse_gauss_code("L:O1+,U2-,U1+,O2-");
  EXPECT_EQ(d.skeleton(), Skeleton::Line);
  ASSERT_EQ(d.size(), 2);
  EXPECT_EQ(d.arrow(0), (Arrow{0, 2, 1, Style::Solid}));
  EXPECT_EQ(d.arrow(1), (Arrow{3, 1, -1, Style::Solid}));
}

TEST(GaussCode, Empty) {
  EXPECT_TRUE(parse_gauss_code("").empty());
  EXPECT_EQ(parse_gauss_code("").skeleton(), Skeleton::Circle);
  EXPECT_EQ(parse_gauss_code("L:").skeleton(), Skeleton::Line);
  EXPECT_EQ(emit_gauss_code(GaussDiagram(Skeleton::Circle)), "");
  EXPECT_EQ(emit_gauss_code(GaussDiagram(Skeleton::Line)), "L:");
}

TEST(GaussCode, Errors) {
  EXPECT_THROW(parse_gauss_code("O1+,U1-"), ParseError);  // sign mismatch
  EXPECT_THROW(parse_gauss_code("O1+,O1+"), ParseError);  // two overs
  EXPECT_THROW(parse_gauss_code("O1+"), ParseError);
  EXPECT_THROW(parse_gauss_code("O1+,U1+,U1+"), ParseError);
  EXPECT_THROW(parse_gauss_code("X1+,U1+"), ParseError);
  EXPECT_THROW(parse_gauss_code("O0+,U0+"), ParseError);
  EXPECT_THROW(parse_gauss_code("O1+,,U1+"), ParseError);
  try {
    parse_gauss_code("O1+,U1?");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 6u);
  }
}

TEST(GaussCode, RoundTripExample) {
  GaussDiagram d = parse_gauss_code("O1+,U2+,O2+,U1+");
  EXPECT_EQ(emit_gauss_code(d), "O1+,U2+,O2+,U1+");
  EXPECT_EQ(key_of(parse_gauss_code(emit_gauss_code(d)), Flavor::Gauss), key_of(d, Flavor::Gauss));
}

TEST(GaussCode, RoundTripAllThreeArrow) {
  for (Skeleton skel : {Skeleton::Circle, Skeleton::Line})
    for (const DiagramKey& k : enumerate_diagrams(skel, Flavor::Gauss, 3, CountMode::Exactly)) {
      GaussDiagram d = gauss_from_key(k);
      ASSERT_EQ(key_of(parse_gauss_code(emit_gauss_code(d)), Flavor::Gauss), k) << k.text();
    }
}

TEST(GaussCode, RefusesDashed) {
  GaussDiagram d(Skeleton::Circle, {Arrow{0, 1, 1, Style::Dashed}});
  EXPECT_THROW(emit_gauss_code(d), FlavorError);
}

// Random strings over the grammar alphabet: either a valid round trip or a ParseError.
TEST(GaussCode, FuzzCorpus) {
  const std::string alphabet = "OU123+-,L: 0";
  std::mt19937_64 rng(2024);
  int parsed = 0;
  for (int i = 0; i < 5000; ++i) {
    std::string s;
    const int len = static_cast<int>(rng() % 16);
    if (i % 3 == 0) {
      // mostly well formed: shuffle a valid code
      std::vector<std::string> items = {"O1+", "U1+", "O2-", "U2-"};
      std::shuffle(items.begin(), items.end(), rng);
      for (std::size_t j = 0; j < items.size(); ++j) s += (j ? "," : "") + items[j];
      if (rng() % 4 == 0) s[rng() % s.size()] = alphabet[rng() % alphabet.size()];
    } else {
      for (int j = 0; j < len; ++j) s += alphabet[rng() % alphabet.size()];
    }
    try {
      GaussDiagram d = parse_gauss_code(s);
      ++parsed;
      ASSERT_EQ(parse_gauss_code(emit_gauss_code(d)), d) << s;
    } catch (const ParseError&) {
    }
  }
  EXPECT_GT(parsed, 100);
}

TEST(Json, FormalSumRoundTrip) {
  std::mt19937_64 rng(1);
  auto keys = enumerate_diagrams(Skeleton::Line, Flavor::ArrowSigned, 2, CountMode::UpTo);
  for (int i = 0; i < 20; ++i) {
    FormalSum s(Flavor::ArrowSigned, Skeleton::Line);
    for (int j = 0; j < 6; ++j) {
      Rational c(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 7));
      c.canonicalize();
      s.add(keys[rng() % keys.size()], c);
    }
    Json j = to_json(s);
    EXPECT_EQ(formal_sum_from_json(parse_json(dump_json(j))), s);
  }
}

TEST(Json, RationalNormalized) {
  EXPECT_EQ(rational_to_string(rational_from_string("2/4")), "1/2");
  Json j = to_json(FormalSum::of(enumerate_diagrams(Skeleton::Circle, Flavor::ChordSigned, 1, CountMode::Exactly)[0]));
  j["terms"][0]["coeff"] = "2/4";
  FormalSum s = formal_sum_from_json(j);
  EXPECT_EQ(to_json(s)["terms"][0]["coeff"], "1/2");
}

TEST(Json, DiagramRoundTrip) {
  GaussDiagram d = parse_gauss_code("L:O1+,U2-,U1+,O2-");
  EXPECT_EQ(gauss_diagram_from_json(to_json(d)), d);
  ChordDiagram c = bar(d);
  EXPECT_EQ(chord_diagram_from_json(to_json(c)), c);
}

TEST(Json, FunctionalAndWitnessRoundTrip) {
  auto basis = invariant_space(2, Skeleton::Line, Profile::Gpv);
  for (const auto& f : basis) EXPECT_EQ(functional_from_json(to_json(f)), f);
  auto w = find_witness(basis.back(), 3);
  ASSERT_TRUE(w);
  WitnessPair back = witness_from_json(to_json(*w));
  EXPECT_EQ(back.knot, w->knot);
  EXPECT_EQ(back.value, w->value);
  EXPECT_EQ(back.flipped_arrow, w->flipped_arrow);
}

TEST(Json, CertificateRoundTripAndSchema) {
  Certificate c = verify_theorem1(1, Skeleton::Circle);
  Json j = to_json(c, false);
  Certificate back = certificate_from_json(j);
  EXPECT_EQ(dump_json(to_json(back, false)), dump_json(j));

  j.erase("dims");
  try {
    certificate_from_json(j);
    FAIL();
  } catch (const SchemaError& e) {
    EXPECT_EQ(e.pointer(), "/dims");
  }
}

TEST(Json, MalformedTextHasOffset) {
  try {
    parse_json("{\"a\": [1, 2,, 3]}");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 13u);
  }
}

TEST(Json, RelationSystemRoundTrip) {
  RelationSystem sys = generate_polyak(2, Skeleton::Line);
  RelationSystem back = relation_system_from_json(to_json(sys));
  EXPECT_EQ(back.rows, sys.rows);
  EXPECT_EQ(back.ambient.keys(), sys.ambient.keys());
  EXPECT_EQ(dump_json(to_json(back)), dump_json(to_json(sys)));
}
