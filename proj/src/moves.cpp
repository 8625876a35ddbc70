#include "polyak/moves.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <string>

#include "polyak/error.hpp"

namespace polyak {

std::vector<Token> word_of(const GaussDiagram& d) {
  std::vector<Token> w(static_cast<std::size_t>(d.endpoints()));
  for (int k = 0; k < d.size(); ++k) {
    w[static_cast<std::size_t>(d.arrow(k).tail)] = Token{k, false};
    w[static_cast<std::size_t>(d.arrow(k).head)] = Token{k, true};
  }
  return w;
}

GaussDiagram diagram_from_word(Skeleton skeleton, const std::vector<Token>& word, const std::vector<Arrow>& props) {
  std::vector<Arrow> arrows = props;
  std::vector<int> seen(props.size(), 0);
  for (int p = 0; p < static_cast<int>(word.size()); ++p) {
    const Token& t = word[static_cast<std::size_t>(p)];
    if (t.arrow < 0 || t.arrow >= static_cast<int>(props.size()))
      throw ValidationError("word names unknown arrow " + std::to_string(t.arrow));
    (t.head ? arrows[static_cast<std::size_t>(t.arrow)].head : arrows[static_cast<std::size_t>(t.arrow)].tail) = p;
    seen[static_cast<std::size_t>(t.arrow)] += t.head ? 2 : 1;
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (seen[i] != 3) throw ValidationError("arrow " + std::to_string(i) + " needs exactly one tail and one head");
  return GaussDiagram(skeleton, std::move(arrows));
}

// ---------------------------------------------------------------------------

R3Config R3Config::reversed() const {
  R3Config r = *this;
  for (auto& o : r.order) std::swap(o[0], o[1]);
  return r;
}

namespace {

int arrow_between(int s, int t) {
  if (s > t) std::swap(s, t);
  if (s == 0 && t == 1) return 0;
  if (s == 0 && t == 2) return 1;
  return 2;
}

// Three lines bounding a counterclockwise triangle, labelled cyclically 0,1,2.
// Line i passes from its crossing with line i-1 to its crossing with line i+1
// when orient[i] = +1. For consecutive lines, cross(u_i, u_{i+1}) has sign
// orient[i]*orient[i+1]; a crossing is positive when cross(u_over, u_under) > 0.
std::vector<R3Config> derive_r3_configurations() {
  std::set<R3Config> out;
  std::array<int, 3> height{0, 1, 2};
  do {
    for (int om = 0; om < 8; ++om) {
      std::array<int, 3> orient{};
      for (int i = 0; i < 3; ++i) orient[static_cast<std::size_t>(i)] = ((om >> i) & 1) ? -1 : 1;
      R3Config c;
      for (int i = 0; i < 3; ++i) {
        int prev = (i + 2) % 3, next = (i + 1) % 3;
        int first = orient[static_cast<std::size_t>(i)] > 0 ? prev : next;
        int second = first == prev ? next : prev;
        int s = height[static_cast<std::size_t>(i)];
        c.order[static_cast<std::size_t>(s)] = {arrow_between(s, height[static_cast<std::size_t>(first)]),
                                                arrow_between(s, height[static_cast<std::size_t>(second)])};
      }
      for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3;
        int hi = height[static_cast<std::size_t>(i)], hj = height[static_cast<std::size_t>(j)];
        int oo = orient[static_cast<std::size_t>(i)] * orient[static_cast<std::size_t>(j)];
        c.sign[static_cast<std::size_t>(arrow_between(hi, hj))] = hi < hj ? oo : -oo;
      }
      out.insert(c);
      out.insert(c.reversed());
    }
  } while (std::next_permutation(height.begin(), height.end()));
  return {out.begin(), out.end()};
}

}  // namespace

const std::vector<R3Config>& r3_configurations() {
  static const std::vector<R3Config> configs = derive_r3_configurations();
  return configs;
}

bool is_r3_configuration(const R3Config& c) {
  const auto& all = r3_configurations();
  return std::binary_search(all.begin(), all.end(), c);
}

std::array<std::vector<Token>, 3> r3_blocks(const R3Config& c) {
  // tail strand of arrow id, head strand of arrow id
  static constexpr std::array<int, 3> tail_strand{0, 0, 1};
  std::array<std::vector<Token>, 3> blocks;
  for (int s = 0; s < 3; ++s)
    for (int id : c.order[static_cast<std::size_t>(s)])
      blocks[static_cast<std::size_t>(s)].push_back(Token{id, tail_strand[static_cast<std::size_t>(id)] != s});
  return blocks;
}

// ---------------------------------------------------------------------------

namespace {

bool adjacent_positions(Skeleton s, int m, int x, int y) {
  if (y == x + 1) return true;
  return s == Skeleton::Circle && m > 2 && x == m - 1 && y == 0;
}

void check_gap(int gap, int length) {
  if (gap < 0 || gap > length)
    throw PreconditionError("gap " + std::to_string(gap) + " out of range 0.." + std::to_string(length));
}

void check_arrow(const GaussDiagram& d, int k) {
  if (k < 0 || k >= d.size()) throw PreconditionError("arrow index " + std::to_string(k) + " out of range");
  if (d.arrow(k).style != Style::Solid) throw PreconditionError("arrow " + std::to_string(k) + " is not solid");
}

std::vector<Arrow> props_of(const GaussDiagram& d) { return d.arrows(); }

// Rebuilds a diagram from a word and reports where the given arrow ids ended up.
MoveResult finish(Skeleton s, const std::vector<Token>& word, const std::vector<Arrow>& props, const std::vector<int>& ids) {
  GaussDiagram out = diagram_from_word(s, word, props);
  // Arrows are re-sorted by first endpoint; locate the requested ids by position.
  std::vector<int> first_pos(props.size(), -1);
  for (int p = static_cast<int>(word.size()) - 1; p >= 0; --p) first_pos[static_cast<std::size_t>(word[static_cast<std::size_t>(p)].arrow)] = p;
  std::vector<int> result;
  for (int id : ids) {
    for (int k = 0; k < out.size(); ++k)
      if (out.arrow(k).first() == first_pos[static_cast<std::size_t>(id)]) result.push_back(k);
  }
  return {std::move(out), std::move(result)};
}

MoveResult remove_arrows(const GaussDiagram& d, std::vector<int> ks) {
  std::sort(ks.begin(), ks.end());
  unsigned mask = 0;
  for (int k = 0; k < d.size(); ++k)
    if (!std::binary_search(ks.begin(), ks.end(), k)) mask |= 1u << k;
  return {subdiagram(d, mask), {}};
}

struct Triangle {
  std::array<std::array<int, 2>, 3> segment{};  // positions per strand, in traversal order
  R3Config config;
  std::array<int, 3> arrow_of_id{};
};

std::optional<Triangle> find_triangle(const GaussDiagram& d, std::array<int, 3> ks) {
  const int m = d.endpoints();
  std::vector<int> pos;
  for (int k : ks) {
    pos.push_back(d.arrow(k).tail);
    pos.push_back(d.arrow(k).head);
  }
  std::sort(pos.begin(), pos.end());
  auto owner = word_of(d);

  std::vector<std::array<int, 2>> segs;
  std::optional<Triangle> found;
  std::vector<int> remaining = pos;
  std::function<void()> rec = [&] {
    if (found) return;
    if (remaining.empty()) {
      // classify segments
      Triangle tri;
      std::array<int, 3> filled{-1, -1, -1};
      for (const auto& sg : segs) {
        const Token& a = owner[static_cast<std::size_t>(sg[0])];
        const Token& b = owner[static_cast<std::size_t>(sg[1])];
        if (a.arrow == b.arrow) return;
        int heads = a.head + b.head;
        int strand = heads == 0 ? 0 : heads == 1 ? 1 : 2;
        if (filled[static_cast<std::size_t>(strand)] >= 0) return;
        filled[static_cast<std::size_t>(strand)] = 1;
        tri.segment[static_cast<std::size_t>(strand)] = sg;
      }
      // strand of each endpoint
      auto strand_of = [&](int p) {
        for (int s = 0; s < 3; ++s)
          if (tri.segment[static_cast<std::size_t>(s)][0] == p || tri.segment[static_cast<std::size_t>(s)][1] == p) return s;
        return -1;
      };
      std::array<int, 3> id_seen{0, 0, 0};
      std::array<int, 3> id_of_arrow{};
      for (int i = 0; i < 3; ++i) {
        const Arrow& a = d.arrow(ks[static_cast<std::size_t>(i)]);
        int ts = strand_of(a.tail), hs = strand_of(a.head);
        if (ts >= hs) return;
        int id = arrow_between(ts, hs);
        if (id_seen[static_cast<std::size_t>(id)]++) return;
        tri.arrow_of_id[static_cast<std::size_t>(id)] = ks[static_cast<std::size_t>(i)];
        id_of_arrow[static_cast<std::size_t>(i)] = id;
        tri.config.sign[static_cast<std::size_t>(id)] = a.sign;
      }
      for (int s = 0; s < 3; ++s)
        for (int e = 0; e < 2; ++e) {
          int arrow = owner[static_cast<std::size_t>(tri.segment[static_cast<std::size_t>(s)][static_cast<std::size_t>(e)])].arrow;
          for (int i = 0; i < 3; ++i)
            if (ks[static_cast<std::size_t>(i)] == arrow)
              tri.config.order[static_cast<std::size_t>(s)][static_cast<std::size_t>(e)] = id_of_arrow[static_cast<std::size_t>(i)];
        }
      if (is_r3_configuration(tri.config)) found = tri;
      return;
    }
    int x = remaining.front();
    for (int y : remaining) {
      if (y == x) continue;
      std::array<int, 2> sg;
      if (adjacent_positions(d.skeleton(), m, x, y)) sg = {x, y};
      else if (adjacent_positions(d.skeleton(), m, y, x)) sg = {y, x};
      else continue;
      auto saved = remaining;
      remaining.erase(std::remove_if(remaining.begin(), remaining.end(), [&](int p) { return p == x || p == y; }), remaining.end());
      segs.push_back(sg);
      rec();
      segs.pop_back();
      remaining = saved;
    }
  };
  rec();
  return found;
}

}  // namespace

MoveResult apply_r_move(const GaussDiagram& d, const RMove& move) {
  const Skeleton skel = d.skeleton();
  const int m = d.endpoints();
  return std::visit(
      [&](const auto& mv) -> MoveResult {
        using M = std::decay_t<decltype(mv)>;
        if constexpr (std::is_same_v<M, R1Insert>) {
          check_gap(mv.gap, m);
          if (mv.sign != 1 && mv.sign != -1) throw PreconditionError("R1 sign must be +1 or -1");
          auto word = word_of(d);
          auto props = props_of(d);
          const int id = d.size();
          props.push_back(Arrow{0, 0, mv.sign, mv.style});
          std::vector<Token> block{Token{id, !mv.tail_first}, Token{id, mv.tail_first}};
          word.insert(word.begin() + mv.gap, block.begin(), block.end());
          return finish(skel, word, props, {id});
        } else if constexpr (std::is_same_v<M, R1Delete>) {
          check_arrow(d, mv.arrow);
          if (!d.is_isolated(mv.arrow))
            throw PreconditionError("R1-delete: arrow " + std::to_string(mv.arrow) + " does not have adjacent endpoints");
          return remove_arrows(d, {mv.arrow});
        } else if constexpr (std::is_same_v<M, R2Insert>) {
          check_gap(mv.tail_gap, m);
          check_gap(mv.head_gap, m + 2);
          if (mv.head_gap == mv.tail_gap + 1) throw PreconditionError("R2-insert: head block would split the tail block");
          if (mv.first_sign != 1 && mv.first_sign != -1) throw PreconditionError("R2 sign must be +1 or -1");
          auto word = word_of(d);
          auto props = props_of(d);
          const int x = d.size(), y = d.size() + 1;
          props.push_back(Arrow{0, 0, mv.first_sign, mv.style});
          props.push_back(Arrow{0, 0, -mv.first_sign, mv.style});
          std::vector<Token> tails{Token{x, false}, Token{y, false}};
          std::vector<Token> heads = mv.same_order ? std::vector<Token>{Token{x, true}, Token{y, true}}
                                                   : std::vector<Token>{Token{y, true}, Token{x, true}};
          word.insert(word.begin() + mv.tail_gap, tails.begin(), tails.end());
          word.insert(word.begin() + mv.head_gap, heads.begin(), heads.end());
          return finish(skel, word, props, {x, y});
        } else if constexpr (std::is_same_v<M, R2Delete>) {
          check_arrow(d, mv.first);
          check_arrow(d, mv.second);
          if (mv.first == mv.second) throw PreconditionError("R2-delete needs two distinct arrows");
          const Arrow& a = d.arrow(mv.first);
          const Arrow& b = d.arrow(mv.second);
          auto adj = [&](int p, int q) { return adjacent_positions(skel, m, p, q) || adjacent_positions(skel, m, q, p); };
          if (a.sign != -b.sign) throw PreconditionError("R2-delete: arrows must have opposite signs");
          if (!adj(a.tail, b.tail) || !adj(a.head, b.head))
            throw PreconditionError("R2-delete: tails and heads must be adjacent pairs");
          return remove_arrows(d, {mv.first, mv.second});
        } else {
          for (int k : mv.arrows) check_arrow(d, k);
          if (mv.arrows[0] == mv.arrows[1] || mv.arrows[0] == mv.arrows[2] || mv.arrows[1] == mv.arrows[2])
            throw PreconditionError("R3 needs three distinct arrows");
          auto tri = find_triangle(d, mv.arrows);
          if (!tri) throw PreconditionError("R3: arrows do not form a triangle configuration");
          auto word = word_of(d);
          for (const auto& sg : tri->segment)
            std::swap(word[static_cast<std::size_t>(sg[0])], word[static_cast<std::size_t>(sg[1])]);
          std::vector<int> ids(mv.arrows.begin(), mv.arrows.end());
          return finish(skel, word, props_of(d), ids);
        }
      },
      move);
}

std::vector<RMove> applicable_moves(const GaussDiagram& d) {
  std::vector<RMove> out;
  const int n = d.size();
  auto solid = [&](int k) { return d.arrow(k).style == Style::Solid; };
  for (int k = 0; k < n; ++k)
    if (solid(k) && d.is_isolated(k)) out.emplace_back(R1Delete{k});
  const int m = d.endpoints();
  auto adj = [&](int p, int q) { return adjacent_positions(d.skeleton(), m, p, q) || adjacent_positions(d.skeleton(), m, q, p); };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Arrow& a = d.arrow(i);
      const Arrow& b = d.arrow(j);
      if (solid(i) && solid(j) && a.sign == -b.sign && adj(a.tail, b.tail) && adj(a.head, b.head))
        out.emplace_back(R2Delete{i, j});
    }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (solid(i) && solid(j) && solid(k) && find_triangle(d, {i, j, k})) out.emplace_back(R3Move{{i, j, k}});
  return out;
}

int arrow_delta(const RMove& move) {
  return std::visit(
      [](const auto& mv) {
        using M = std::decay_t<decltype(mv)>;
        if constexpr (std::is_same_v<M, R1Insert>) return 1;
        else if constexpr (std::is_same_v<M, R1Delete>) return -1;
        else if constexpr (std::is_same_v<M, R2Insert>) return 2;
        else if constexpr (std::is_same_v<M, R2Delete>) return -2;
        else return 0;
      },
      move);
}

// ---------------------------------------------------------------------------

std::vector<Site> enumerate_sites(int length, int markers) {
  Site base;
  for (int p = 0; p < length; ++p) base.push_back(p);
  std::vector<Site> out{base};
  for (int mk = 0; mk < markers; ++mk) {
    std::vector<Site> next;
    for (const Site& s : out)
      for (std::size_t g = 0; g <= s.size(); ++g) {
        Site t = s;
        t.insert(t.begin() + static_cast<std::ptrdiff_t>(g), -(mk + 1));
        next.push_back(std::move(t));
      }
    out = std::move(next);
  }
  return out;
}

GaussDiagram fill_site(const GaussDiagram& context, const Site& site, const std::vector<std::vector<Token>>& blocks,
                       const std::vector<Arrow>& new_arrows, Style context_style) {
  auto ctx_word = word_of(context);
  std::vector<Arrow> props = context.arrows();
  for (Arrow& a : props) a.style = context_style;
  const int base = context.size();
  props.insert(props.end(), new_arrows.begin(), new_arrows.end());
  std::vector<Token> word;
  for (int e : site) {
    if (e >= 0) {
      word.push_back(ctx_word.at(static_cast<std::size_t>(e)));
    } else {
      for (const Token& t : blocks.at(static_cast<std::size_t>(-e - 1))) word.push_back(Token{base + t.arrow, t.head});
    }
  }
  return diagram_from_word(context.skeleton(), word, props);
}

ChordDiagram fill_site(const ChordDiagram& context, const Site& site, const std::vector<std::vector<int>>& blocks,
                       const std::vector<int>& new_signs) {
  std::vector<int> owner(static_cast<std::size_t>(context.endpoints()));
  for (int k = 0; k < context.size(); ++k) {
    owner[static_cast<std::size_t>(context.chords()[static_cast<std::size_t>(k)].a)] = k;
    owner[static_cast<std::size_t>(context.chords()[static_cast<std::size_t>(k)].b)] = k;
  }
  const int base = context.size();
  std::vector<int> word;
  for (int e : site) {
    if (e >= 0) word.push_back(owner.at(static_cast<std::size_t>(e)));
    else
      for (int c : blocks.at(static_cast<std::size_t>(-e - 1))) word.push_back(base + c);
  }
  const int total = base + static_cast<int>(new_signs.size());
  std::vector<Chord> chords(static_cast<std::size_t>(total), Chord{-1, -1, 0});
  for (int k = 0; k < base; ++k) chords[static_cast<std::size_t>(k)].sign = context.chords()[static_cast<std::size_t>(k)].sign;
  for (std::size_t i = 0; i < new_signs.size(); ++i) chords[static_cast<std::size_t>(base) + i].sign = new_signs[i];
  for (int p = 0; p < static_cast<int>(word.size()); ++p) {
    Chord& c = chords.at(static_cast<std::size_t>(word[static_cast<std::size_t>(p)]));
    (c.a < 0 ? c.a : c.b) = p;
  }
  return ChordDiagram(context.skeleton(), std::move(chords));
}

}  // namespace polyak
