#include "polyak/diagram.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "polyak/error.hpp"

namespace polyak {

namespace {

constexpr unsigned char kHeadBit = 1;
constexpr unsigned char kPlus = 1 << 1;
constexpr unsigned char kMinus = 2 << 1;
constexpr unsigned char kSignMask = 3 << 1;
constexpr unsigned char kDashedBit = 1 << 3;

constexpr std::size_t kHeader = 3;

unsigned char sign_bits(int sign) { return sign > 0 ? kPlus : sign < 0 ? kMinus : 0; }
int sign_from_bits(unsigned char flags) {
  switch (flags & kSignMask) {
    case kPlus: return 1;
    case kMinus: return -1;
    default: return 0;
  }
}

void check_endpoints(const std::vector<std::pair<int, int>>& pairs) {
  const int m = 2 * static_cast<int>(pairs.size());
  std::vector<int> seen(static_cast<std::size_t>(m), 0);
  auto mark = [&](int e) {
    if (e < 0 || e >= m) throw ValidationError("endpoint index " + std::to_string(e) + " out of range 0.." + std::to_string(m - 1));
    if (seen[static_cast<std::size_t>(e)]++) throw ValidationError("endpoint index " + std::to_string(e) + " used twice");
  };
  for (auto [x, y] : pairs) {
    if (x == y) throw ValidationError("endpoint index " + std::to_string(x) + " is both ends of one arrow");
    mark(x);
    mark(y);
  }
}

void check_signs(const std::vector<int>& signs) {
  bool any_signed = false, any_unsigned = false;
  for (std::size_t i = 0; i < signs.size(); ++i) {
    int s = signs[i];
    if (s != 1 && s != -1 && s != 0) throw ValidationError("arrow " + std::to_string(i) + " has sign " + std::to_string(s));
    (s == 0 ? any_unsigned : any_signed) = true;
  }
  if (any_signed && any_unsigned) throw ValidationError("diagram mixes signed and unsigned arrows");
}

bool adjacent(Skeleton s, int n_endpoints, int x, int y) {
  int lo = std::min(x, y), hi = std::max(x, y);
  if (hi - lo == 1) return true;
  return s == Skeleton::Circle && lo == 0 && hi == n_endpoints - 1 && n_endpoints > 2;
}

// Per-position (partner, flags) with no header.
std::vector<std::array<unsigned char, 2>> slots_of(const GaussDiagram& d, Flavor flavor) {
  std::vector<std::array<unsigned char, 2>> slots(static_cast<std::size_t>(d.endpoints()));
  const bool keep_style = flavor == Flavor::Gauss;
  for (const Arrow& a : d.arrows()) {
    unsigned char f = sign_bits(a.sign);
    if (keep_style && a.style == Style::Dashed) f |= kDashedBit;
    slots[static_cast<std::size_t>(a.tail)] = {static_cast<unsigned char>(a.head), f};
    slots[static_cast<std::size_t>(a.head)] = {static_cast<unsigned char>(a.tail), static_cast<unsigned char>(f | kHeadBit)};
  }
  return slots;
}

std::vector<std::array<unsigned char, 2>> slots_of(const ChordDiagram& d) {
  std::vector<std::array<unsigned char, 2>> slots(static_cast<std::size_t>(d.endpoints()));
  for (const Chord& c : d.chords()) {
    unsigned char f = sign_bits(c.sign);
    slots[static_cast<std::size_t>(c.a)] = {static_cast<unsigned char>(c.b), f};
    slots[static_cast<std::size_t>(c.b)] = {static_cast<unsigned char>(c.a), f};
  }
  return slots;
}

std::string header(Flavor f, Skeleton s, int size) {
  std::string out;
  out.push_back(static_cast<char>(f));
  out.push_back(static_cast<char>(s));
  out.push_back(static_cast<char>(size));
  return out;
}

std::string encode_rotated(const std::vector<std::array<unsigned char, 2>>& slots, int offset, const std::string& head) {
  const int m = static_cast<int>(slots.size());
  std::string out = head;
  out.reserve(head.size() + 2 * slots.size());
  for (int p = 0; p < m; ++p) {
    const auto& s = slots[static_cast<std::size_t>((p + offset) % m)];
    out.push_back(static_cast<char>((s[0] - offset + m) % m));
    out.push_back(static_cast<char>(s[1]));
  }
  return out;
}

std::pair<std::string, int> minimal_encoding(const std::vector<std::array<unsigned char, 2>>& slots, Skeleton skel,
                                             const std::string& head) {
  std::string best = encode_rotated(slots, 0, head);
  int best_r = 0;
  if (skel == Skeleton::Circle) {
    for (int r = 1; r < static_cast<int>(slots.size()); ++r) {
      std::string e = encode_rotated(slots, r, head);
      if (e < best) {
        best = std::move(e);
        best_r = r;
      }
    }
  }
  return {best, best_r};
}

void require_flavor(bool ok, Flavor f) {
  if (!ok) throw FlavorError("diagram is not compatible with flavor " + std::string(to_string(f)));
}

}  // namespace

std::string_view to_string(Skeleton s) { return s == Skeleton::Circle ? "circle" : "line"; }

std::string_view to_string(Flavor f) {
  switch (f) {
    case Flavor::Gauss: return "gauss";
    case Flavor::ArrowSigned: return "arrow-signed";
    case Flavor::ArrowUnsigned: return "arrow-unsigned";
    case Flavor::ChordSigned: return "chord-signed";
    case Flavor::ChordUnsigned: return "chord-unsigned";
  }
  return "?";
}

Skeleton skeleton_from_string(std::string_view s) {
  if (s == "circle") return Skeleton::Circle;
  if (s == "line") return Skeleton::Line;
  throw ValidationError("unknown skeleton '" + std::string(s) + "'");
}

Flavor flavor_from_string(std::string_view s) {
  for (Flavor f : {Flavor::Gauss, Flavor::ArrowSigned, Flavor::ArrowUnsigned, Flavor::ChordSigned, Flavor::ChordUnsigned})
    if (to_string(f) == s) return f;
  throw ValidationError("unknown flavor '" + std::string(s) + "'");
}

// ---------------------------------------------------------------------------

GaussDiagram::GaussDiagram(Skeleton skeleton, std::vector<Arrow> arrows) : skeleton_(skeleton), arrows_(std::move(arrows)) {
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> signs;
  for (const Arrow& a : arrows_) {
    pairs.emplace_back(a.tail, a.head);
    signs.push_back(a.sign);
  }
  check_endpoints(pairs);
  check_signs(signs);
  for (const Arrow& a : arrows_)
    if (a.sign == 0 && a.style == Style::Solid)
      throw ValidationError("unsigned arrow at endpoint " + std::to_string(a.first()) + " must be dashed");
  std::sort(arrows_.begin(), arrows_.end(), [](const Arrow& x, const Arrow& y) { return x.first() < y.first(); });
}

bool GaussDiagram::all_solid() const {
  return std::all_of(arrows_.begin(), arrows_.end(), [](const Arrow& a) { return a.style == Style::Solid; });
}
bool GaussDiagram::all_dashed() const {
  return std::all_of(arrows_.begin(), arrows_.end(), [](const Arrow& a) { return a.style == Style::Dashed; });
}
bool GaussDiagram::is_signed() const {
  return std::all_of(arrows_.begin(), arrows_.end(), [](const Arrow& a) { return a.sign != 0; });
}
bool GaussDiagram::is_unsigned() const {
  return std::all_of(arrows_.begin(), arrows_.end(), [](const Arrow& a) { return a.sign == 0; });
}

bool GaussDiagram::compatible_with(Flavor f) const {
  switch (f) {
    case Flavor::Gauss: return is_signed();
    case Flavor::ArrowSigned: return is_signed() && all_dashed();
    case Flavor::ArrowUnsigned: return is_unsigned() && all_dashed();
    default: return false;
  }
}

GaussDiagram GaussDiagram::with_style(Style s) const {
  auto arrows = arrows_;
  for (Arrow& a : arrows) a.style = s;
  return GaussDiagram(skeleton_, std::move(arrows));
}

GaussDiagram GaussDiagram::without_signs() const {
  auto arrows = arrows_;
  for (Arrow& a : arrows) {
    a.sign = 0;
    a.style = Style::Dashed;
  }
  return GaussDiagram(skeleton_, std::move(arrows));
}

bool GaussDiagram::is_isolated(int k) const {
  const Arrow& a = arrow(k);
  return adjacent(skeleton_, endpoints(), a.tail, a.head);
}

bool GaussDiagram::has_isolated_arrow() const {
  for (int k = 0; k < size(); ++k)
    if (is_isolated(k)) return true;
  return false;
}

ChordDiagram::ChordDiagram(Skeleton skeleton, std::vector<Chord> chords) : skeleton_(skeleton), chords_(std::move(chords)) {
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> signs;
  for (Chord& c : chords_) {
    if (c.a > c.b) std::swap(c.a, c.b);
    pairs.emplace_back(c.a, c.b);
    signs.push_back(c.sign);
  }
  check_endpoints(pairs);
  check_signs(signs);
  std::sort(chords_.begin(), chords_.end());
}

bool ChordDiagram::is_signed() const {
  return std::all_of(chords_.begin(), chords_.end(), [](const Chord& c) { return c.sign != 0; });
}
bool ChordDiagram::is_unsigned() const {
  return std::all_of(chords_.begin(), chords_.end(), [](const Chord& c) { return c.sign == 0; });
}
bool ChordDiagram::compatible_with(Flavor f) const {
  if (f == Flavor::ChordSigned) return is_signed();
  if (f == Flavor::ChordUnsigned) return is_unsigned();
  return false;
}

ChordDiagram ChordDiagram::without_signs() const {
  auto chords = chords_;
  for (Chord& c : chords) c.sign = 0;
  return ChordDiagram(skeleton_, std::move(chords));
}

bool ChordDiagram::is_isolated(int k) const {
  const Chord& c = chords_.at(static_cast<std::size_t>(k));
  return adjacent(skeleton_, endpoints(), c.a, c.b);
}

bool ChordDiagram::has_isolated_chord() const {
  for (int k = 0; k < size(); ++k)
    if (is_isolated(k)) return true;
  return false;
}

// ---------------------------------------------------------------------------

std::string encode_positions(const GaussDiagram& d, Flavor flavor) {
  require_flavor(d.compatible_with(flavor), flavor);
  return encode_rotated(slots_of(d, flavor), 0, header(flavor, d.skeleton(), d.size()));
}

std::string encode_positions(const ChordDiagram& d, Flavor flavor) {
  require_flavor(d.compatible_with(flavor), flavor);
  return encode_rotated(slots_of(d), 0, header(flavor, d.skeleton(), d.size()));
}

Flavor natural_flavor(const GaussDiagram& d) {
  if (d.is_unsigned() && !d.empty()) return Flavor::ArrowUnsigned;
  if (d.all_dashed() && !d.empty()) return Flavor::ArrowSigned;
  return Flavor::Gauss;
}

std::pair<GaussDiagram, CanonicalKey> canonical_form(const GaussDiagram& d, Flavor flavor) {
  require_flavor(d.compatible_with(flavor), flavor);
  auto [bytes, rot] = minimal_encoding(slots_of(d, flavor), d.skeleton(), header(flavor, d.skeleton(), d.size()));
  DiagramKey key(std::move(bytes));
  return {gauss_from_key(key), CanonicalKey{std::move(key), rot}};
}

std::pair<ChordDiagram, CanonicalKey> canonical_form(const ChordDiagram& d, Flavor flavor) {
  require_flavor(d.compatible_with(flavor), flavor);
  auto [bytes, rot] = minimal_encoding(slots_of(d), d.skeleton(), header(flavor, d.skeleton(), d.size()));
  DiagramKey key(std::move(bytes));
  return {chord_from_key(key), CanonicalKey{std::move(key), rot}};
}

DiagramKey key_of(const GaussDiagram& d, Flavor flavor) {
  require_flavor(d.compatible_with(flavor), flavor);
  return DiagramKey(minimal_encoding(slots_of(d, flavor), d.skeleton(), header(flavor, d.skeleton(), d.size())).first);
}

DiagramKey key_of(const ChordDiagram& d, Flavor flavor) {
  require_flavor(d.compatible_with(flavor), flavor);
  return DiagramKey(minimal_encoding(slots_of(d), d.skeleton(), header(flavor, d.skeleton(), d.size())).first);
}

GaussDiagram gauss_from_key(const DiagramKey& key) {
  const std::string& b = key.bytes();
  if (b.size() < kHeader) throw ValidationError("truncated diagram key");
  Flavor f = key.flavor();
  if (!is_arrow_flavor(f)) throw FlavorError("key does not encode an arrow diagram");
  const int m = 2 * key.degree();
  if (b.size() != kHeader + 2 * static_cast<std::size_t>(m)) throw ValidationError("diagram key length mismatch");
  std::vector<Arrow> arrows;
  for (int p = 0; p < m; ++p) {
    auto partner = static_cast<unsigned char>(b[kHeader + 2 * p]);
    auto flags = static_cast<unsigned char>(b[kHeader + 2 * p + 1]);
    if (flags & kHeadBit) continue;
    Style st = f == Flavor::Gauss ? ((flags & kDashedBit) ? Style::Dashed : Style::Solid) : Style::Dashed;
    arrows.push_back(Arrow{p, partner, sign_from_bits(flags), st});
  }
  if (static_cast<int>(arrows.size()) * 2 != m) throw ValidationError("diagram key has unbalanced tails and heads");
  return GaussDiagram(key.skeleton(), std::move(arrows));
}

ChordDiagram chord_from_key(const DiagramKey& key) {
  const std::string& b = key.bytes();
  if (b.size() < kHeader) throw ValidationError("truncated diagram key");
  if (!is_chord_flavor(key.flavor())) throw FlavorError("key does not encode a chord diagram");
  const int m = 2 * key.degree();
  if (b.size() != kHeader + 2 * static_cast<std::size_t>(m)) throw ValidationError("diagram key length mismatch");
  std::vector<Chord> chords;
  for (int p = 0; p < m; ++p) {
    auto partner = static_cast<unsigned char>(b[kHeader + 2 * p]);
    auto flags = static_cast<unsigned char>(b[kHeader + 2 * p + 1]);
    if (partner > p) chords.push_back(Chord{p, partner, sign_from_bits(flags)});
  }
  return ChordDiagram(key.skeleton(), std::move(chords));
}

std::string DiagramKey::text() const {
  if (bytes_.size() < kHeader) return "";
  std::string out(to_string(flavor()));
  out += '|';
  out += to_string(skeleton());
  out += '|';
  const bool arrows = is_arrow_flavor(flavor());
  const int m = 2 * degree();
  for (int p = 0; p < m; ++p) {
    auto partner = static_cast<unsigned char>(bytes_[kHeader + 2 * p]);
    auto flags = static_cast<unsigned char>(bytes_[kHeader + 2 * p + 1]);
    if (p) out += ',';
    out += std::to_string(partner);
    if (arrows) out += (flags & kHeadBit) ? 'h' : 't';
    int s = sign_from_bits(flags);
    out += s > 0 ? '+' : s < 0 ? '-' : 'u';
    if (flavor() == Flavor::Gauss) out += (flags & kDashedBit) ? 'd' : 's';
  }
  return out;
}

DiagramKey DiagramKey::from_text(std::string_view text) {
  auto bar1 = text.find('|');
  auto bar2 = bar1 == std::string_view::npos ? bar1 : text.find('|', bar1 + 1);
  if (bar2 == std::string_view::npos) throw ParseError("diagram key needs flavor|skeleton|endpoints", 0);
  Flavor f = flavor_from_string(text.substr(0, bar1));
  Skeleton s = skeleton_from_string(text.substr(bar1 + 1, bar2 - bar1 - 1));
  std::string_view body = text.substr(bar2 + 1);

  struct Tok { int partner; bool head; int sign; bool dashed; };
  std::vector<Tok> toks;
  std::size_t i = 0;
  while (i < body.size()) {
    std::size_t start = i;
    int partner = 0;
    if (i >= body.size() || body[i] < '0' || body[i] > '9') throw ParseError("expected endpoint index", bar2 + 1 + i);
    while (i < body.size() && body[i] >= '0' && body[i] <= '9') partner = partner * 10 + (body[i++] - '0');
    Tok t{partner, false, 0, false};
    if (is_arrow_flavor(f)) {
      if (i >= body.size() || (body[i] != 't' && body[i] != 'h')) throw ParseError("expected 't' or 'h'", bar2 + 1 + i);
      t.head = body[i++] == 'h';
    }
    if (i >= body.size()) throw ParseError("expected sign", bar2 + 1 + i);
    char sc = body[i++];
    if (sc == '+') t.sign = 1;
    else if (sc == '-') t.sign = -1;
    else if (sc == 'u') t.sign = 0;
    else throw ParseError("bad sign character", bar2 + i);
    if (f == Flavor::Gauss) {
      if (i >= body.size() || (body[i] != 's' && body[i] != 'd')) throw ParseError("expected style 's' or 'd'", bar2 + 1 + i);
      t.dashed = body[i++] == 'd';
    }
    toks.push_back(t);
    if (i < body.size()) {
      if (body[i] != ',') throw ParseError("expected ','", bar2 + 1 + i);
      ++i;
      if (i == body.size()) throw ParseError("trailing ','", bar2 + 1 + start);
    }
  }
  const int m = static_cast<int>(toks.size());
  for (int p = 0; p < m; ++p) {
    const Tok& t = toks[static_cast<std::size_t>(p)];
    if (t.partner >= m || t.partner == p || toks[static_cast<std::size_t>(t.partner)].partner != p)
      throw ValidationError("endpoint " + std::to_string(p) + " has inconsistent partner");
  }
  if (is_arrow_flavor(f)) {
    std::vector<Arrow> arrows;
    for (int p = 0; p < m; ++p) {
      const Tok& t = toks[static_cast<std::size_t>(p)];
      if (t.head) continue;
      const Tok& o = toks[static_cast<std::size_t>(t.partner)];
      if (!o.head || o.sign != t.sign || o.dashed != t.dashed)
        throw ValidationError("endpoints " + std::to_string(p) + " and " + std::to_string(t.partner) + " disagree");
      Style st = (f == Flavor::Gauss && !t.dashed) ? Style::Solid : Style::Dashed;
      arrows.push_back(Arrow{p, t.partner, t.sign, st});
    }
    if (static_cast<int>(arrows.size()) * 2 != m) throw ValidationError("unbalanced tails and heads");
    return key_of(GaussDiagram(s, std::move(arrows)), f);
  }
  std::vector<Chord> chords;
  for (int p = 0; p < m; ++p) {
    const Tok& t = toks[static_cast<std::size_t>(p)];
    if (t.partner > p) {
      if (toks[static_cast<std::size_t>(t.partner)].sign != t.sign)
        throw ValidationError("endpoints " + std::to_string(p) + " and " + std::to_string(t.partner) + " disagree");
      chords.push_back(Chord{p, t.partner, t.sign});
    }
  }
  return key_of(ChordDiagram(s, std::move(chords)), f);
}

GaussDiagram rotate(const GaussDiagram& d, int offset) {
  const int m = d.endpoints();
  if (m == 0) return d;
  offset = ((offset % m) + m) % m;
  auto arrows = d.arrows();
  for (Arrow& a : arrows) {
    a.tail = (a.tail - offset + m) % m;
    a.head = (a.head - offset + m) % m;
  }
  return GaussDiagram(d.skeleton(), std::move(arrows));
}

ChordDiagram rotate(const ChordDiagram& d, int offset) {
  const int m = d.endpoints();
  if (m == 0) return d;
  offset = ((offset % m) + m) % m;
  auto chords = d.chords();
  for (Chord& c : chords) {
    c.a = (c.a - offset + m) % m;
    c.b = (c.b - offset + m) % m;
  }
  return ChordDiagram(d.skeleton(), std::move(chords));
}

// ---------------------------------------------------------------------------

std::vector<std::vector<std::pair<int, int>>> perfect_matchings(int n) {
  std::vector<std::vector<std::pair<int, int>>> out;
  std::vector<std::pair<int, int>> cur;
  std::vector<bool> used(static_cast<std::size_t>(2 * n), false);
  std::function<void()> rec = [&] {
    int first = -1;
    for (int i = 0; i < 2 * n; ++i)
      if (!used[static_cast<std::size_t>(i)]) {
        first = i;
        break;
      }
    if (first < 0) {
      out.push_back(cur);
      return;
    }
    used[static_cast<std::size_t>(first)] = true;
    for (int j = first + 1; j < 2 * n; ++j) {
      if (used[static_cast<std::size_t>(j)]) continue;
      used[static_cast<std::size_t>(j)] = true;
      cur.emplace_back(first, j);
      rec();
      cur.pop_back();
      used[static_cast<std::size_t>(j)] = false;
    }
    used[static_cast<std::size_t>(first)] = false;
  };
  rec();
  return out;
}

std::vector<DiagramKey> enumerate_diagrams(Skeleton skeleton, Flavor flavor, int n, CountMode mode, int ceiling) {
  if (n < 0) throw PreconditionError("diagram count must be non-negative");
  if (n > ceiling)
    throw ResourceLimitError("order " + std::to_string(n) + " exceeds enumeration ceiling " + std::to_string(ceiling));
  std::set<DiagramKey> keys;
  const int lo = mode == CountMode::Exactly ? n : 0;
  const bool arrows = is_arrow_flavor(flavor);
  const bool signed_ = is_signed_flavor(flavor);
  const Style style = flavor == Flavor::Gauss ? Style::Solid : Style::Dashed;
  for (int k = lo; k <= n; ++k) {
    const unsigned dirs = arrows ? (1u << k) : 1u;
    const unsigned signs = signed_ ? (1u << k) : 1u;
    for (const auto& match : perfect_matchings(k)) {
      for (unsigned dm = 0; dm < dirs; ++dm) {
        for (unsigned sm = 0; sm < signs; ++sm) {
          if (arrows) {
            std::vector<Arrow> as;
            for (int i = 0; i < k; ++i) {
              auto [x, y] = match[static_cast<std::size_t>(i)];
              bool flip = (dm >> i) & 1u;
              int sg = signed_ ? (((sm >> i) & 1u) ? -1 : 1) : 0;
              as.push_back(Arrow{flip ? y : x, flip ? x : y, sg, style});
            }
            keys.insert(key_of(GaussDiagram(skeleton, std::move(as)), flavor));
          } else {
            std::vector<Chord> cs;
            for (int i = 0; i < k; ++i) {
              auto [x, y] = match[static_cast<std::size_t>(i)];
              int sg = signed_ ? (((sm >> i) & 1u) ? -1 : 1) : 0;
              cs.push_back(Chord{x, y, sg});
            }
            keys.insert(key_of(ChordDiagram(skeleton, std::move(cs)), flavor));
          }
        }
      }
    }
  }
  return {keys.begin(), keys.end()};
}

// ---------------------------------------------------------------------------

namespace {

// Maps each kept endpoint to its compacted index.
std::vector<int> compaction(int n_endpoints, const std::vector<int>& kept_positions) {
  std::vector<int> keep(static_cast<std::size_t>(n_endpoints), 0);
  for (int p : kept_positions) keep[static_cast<std::size_t>(p)] = 1;
  std::vector<int> index(static_cast<std::size_t>(n_endpoints), -1);
  int next = 0;
  for (int p = 0; p < n_endpoints; ++p)
    if (keep[static_cast<std::size_t>(p)]) index[static_cast<std::size_t>(p)] = next++;
  return index;
}

}  // namespace

GaussDiagram subdiagram(const GaussDiagram& d, unsigned mask) {
  std::vector<int> kept;
  for (int k = 0; k < d.size(); ++k)
    if ((mask >> k) & 1u) {
      kept.push_back(d.arrow(k).tail);
      kept.push_back(d.arrow(k).head);
    }
  auto index = compaction(d.endpoints(), kept);
  std::vector<Arrow> arrows;
  for (int k = 0; k < d.size(); ++k)
    if ((mask >> k) & 1u) {
      Arrow a = d.arrow(k);
      a.tail = index[static_cast<std::size_t>(a.tail)];
      a.head = index[static_cast<std::size_t>(a.head)];
      arrows.push_back(a);
    }
  return GaussDiagram(d.skeleton(), std::move(arrows));
}

std::vector<GaussDiagram> subdiagrams(const GaussDiagram& d) {
  if (d.size() > 30) throw ResourceLimitError("too many arrows for subdiagram enumeration");
  std::vector<GaussDiagram> out;
  const unsigned total = 1u << d.size();
  out.reserve(total);
  for (unsigned mask = 0; mask < total; ++mask) out.push_back(subdiagram(d, mask));
  return out;
}

ChordDiagram subdiagram(const ChordDiagram& d, unsigned mask) {
  std::vector<int> kept;
  for (int k = 0; k < d.size(); ++k)
    if ((mask >> k) & 1u) {
      kept.push_back(d.chords()[static_cast<std::size_t>(k)].a);
      kept.push_back(d.chords()[static_cast<std::size_t>(k)].b);
    }
  auto index = compaction(d.endpoints(), kept);
  std::vector<Chord> chords;
  for (int k = 0; k < d.size(); ++k)
    if ((mask >> k) & 1u) {
      Chord c = d.chords()[static_cast<std::size_t>(k)];
      chords.push_back(Chord{index[static_cast<std::size_t>(c.a)], index[static_cast<std::size_t>(c.b)], c.sign});
    }
  return ChordDiagram(d.skeleton(), std::move(chords));
}

GaussDiagram reverse_arrow(const GaussDiagram& d, int k) {
  if (k < 0 || k >= d.size())
    throw PreconditionError("arrow index " + std::to_string(k) + " out of range for " + std::to_string(d.size()) + " arrows");
  auto arrows = d.arrows();
  std::swap(arrows[static_cast<std::size_t>(k)].tail, arrows[static_cast<std::size_t>(k)].head);
  return GaussDiagram(d.skeleton(), std::move(arrows));
}

ChordDiagram bar(const GaussDiagram& d) {
  std::vector<Chord> chords;
  for (const Arrow& a : d.arrows()) chords.push_back(Chord{a.tail, a.head, a.sign});
  return ChordDiagram(d.skeleton(), std::move(chords));
}

ChordDiagram swap_adjacent(const ChordDiagram& d, int p) {
  const int m = d.endpoints();
  if (p < 0 || p >= m || (p == m - 1 && d.skeleton() == Skeleton::Line))
    throw PreconditionError("no adjacent endpoint pair at position " + std::to_string(p));
  const int q = (p + 1) % m;
  auto chords = d.chords();
  for (Chord& c : chords) {
    auto sw = [&](int x) { return x == p ? q : x == q ? p : x; };
    c.a = sw(c.a);
    c.b = sw(c.b);
  }
  return ChordDiagram(d.skeleton(), std::move(chords));
}

}  // namespace polyak
