#pragma once

#include <array>
#include <compare>
#include <variant>
#include <vector>

#include "polyak/diagram.hpp"

namespace polyak {

// One endpoint in traversal order: which arrow, and whether it is the head.
struct Token {
  int arrow = 0;
  bool head = false;
  auto operator<=>(const Token&) const = default;
};

std::vector<Token> word_of(const GaussDiagram& d);

// Builds a diagram from a traversal word; props[i] supplies sign and style of arrow i.
GaussDiagram diagram_from_word(Skeleton skeleton, const std::vector<Token>& word, const std::vector<Arrow>& props);

// ---------------------------------------------------------------------------
// Third Reidemeister move on Gauss diagrams.
//
// The three strands are top, middle and bottom (by height). Arrows always run
// from the upper strand to the lower one:
//   arrow 0: top -> middle, arrow 1: top -> bottom, arrow 2: middle -> bottom.
// A configuration records the crossing signs and, for each strand, the two
// arrow ids in the order the strand meets them. The move reverses every
// strand's order and keeps the signs.
struct R3Config {
  std::array<int, 3> sign{};
  std::array<std::array<int, 2>, 3> order{};  // indexed by strand: 0 top, 1 middle, 2 bottom

  R3Config reversed() const;
  auto operator<=>(const R3Config&) const = default;
};

// All configurations realized by three oriented lines in the plane with a
// height order, on both sides of the move. Sorted, duplicate free.
const std::vector<R3Config>& r3_configurations();
bool is_r3_configuration(const R3Config& c);

// Endpoint blocks for the three strands (top, middle, bottom). Arrow ids 0..2
// as in R3Config.
std::array<std::vector<Token>, 3> r3_blocks(const R3Config& c);

// ---------------------------------------------------------------------------
// Moves. Gaps index the spaces between endpoints: gap g puts new endpoints
// at position g, shifting the old endpoints at positions >= g.

struct R1Insert {
  int gap = 0;
  int sign = 1;
  bool tail_first = true;
  Style style = Style::Solid;
};

struct R1Delete {
  int arrow = 0;
};

// Tails of the two new arrows form one block, heads another. The head block
// gap refers to the word after the tail block is inserted and may not split it.
// The arrows get signs first_sign and -first_sign.
struct R2Insert {
  int tail_gap = 0;
  int head_gap = 2;
  bool same_order = true;
  int first_sign = 1;
  Style style = Style::Solid;
};

struct R2Delete {
  int first = 0;
  int second = 1;
};

struct R3Move {
  std::array<int, 3> arrows{};
};

using RMove = std::variant<R1Insert, R1Delete, R2Insert, R2Delete, R3Move>;

struct MoveResult {
  GaussDiagram diagram;
  std::vector<int> arrows;  // indices in `diagram` of the inserted or moved arrows
};

MoveResult apply_r_move(const GaussDiagram& d, const RMove& move);

// Every applicable R1Delete, R2Delete and R3Move on d.
std::vector<RMove> applicable_moves(const GaussDiagram& d);

// Arrow count change of a move: +1/-1 for R1, +2/-2 for R2, 0 for R3.
int arrow_delta(const RMove& move);

// ---------------------------------------------------------------------------
// Sites: a context word with numbered insertion markers. A site entry >= 0 is
// a context endpoint position; entry -(m+1) is marker m.

using Site = std::vector<int>;

// All ways to insert `markers` labelled markers into a word of `length` endpoints.
std::vector<Site> enumerate_sites(int length, int markers);

// Replaces marker m by blocks[m]. Block tokens name new arrows 0..k-1, which
// become arrows context.size()+i with sign/style from new_arrows[i]. Context
// arrows keep sign and direction and take style context_style.
GaussDiagram fill_site(const GaussDiagram& context, const Site& site, const std::vector<std::vector<Token>>& blocks,
                       const std::vector<Arrow>& new_arrows, Style context_style);

// Chord analogue; block entries are new chord ids.
ChordDiagram fill_site(const ChordDiagram& context, const Site& site, const std::vector<std::vector<int>>& blocks,
                       const std::vector<int>& new_signs);

}  // namespace polyak
