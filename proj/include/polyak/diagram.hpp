#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polyak {

enum class Skeleton : std::uint8_t { Circle = 0, Line = 1 };

enum class Style : std::uint8_t { Solid = 0, Dashed = 1 };

// Which free module a diagram indexes.
//   Gauss          signed arrows of any style (knot diagrams, semivirtual diagrams)
//   ArrowSigned    signed dashed arrows (the arrow space)
//   ArrowUnsigned  unsigned dashed arrows
//   ChordSigned    signed chords
//   ChordUnsigned  unsigned chords
enum class Flavor : std::uint8_t { Gauss = 0, ArrowSigned = 1, ArrowUnsigned = 2, ChordSigned = 3, ChordUnsigned = 4 };

constexpr bool is_arrow_flavor(Flavor f) { return f == Flavor::Gauss || f == Flavor::ArrowSigned || f == Flavor::ArrowUnsigned; }
constexpr bool is_chord_flavor(Flavor f) { return !is_arrow_flavor(f); }
constexpr bool is_signed_flavor(Flavor f) { return f != Flavor::ArrowUnsigned && f != Flavor::ChordUnsigned; }

std::string_view to_string(Skeleton s);
std::string_view to_string(Flavor f);
Skeleton skeleton_from_string(std::string_view s);
Flavor flavor_from_string(std::string_view s);

// sign is +1 or -1; 0 marks an unsigned arrow.
struct Arrow {
  int tail = 0;
  int head = 0;
  int sign = 1;
  Style style = Style::Solid;

  int first() const { return tail < head ? tail : head; }
  auto operator<=>(const Arrow&) const = default;
};

struct Chord {
  int a = 0;  // a < b
  int b = 0;
  int sign = 0;

  auto operator<=>(const Chord&) const = default;
};

// Arrows on 2n endpoints 0..2n-1 of a circle or line. Arrows are kept sorted
// by first endpoint, so arrow indices are stable under reverse_arrow.
class GaussDiagram {
 public:
  GaussDiagram() = default;
  explicit GaussDiagram(Skeleton skeleton) : skeleton_(skeleton) {}
  GaussDiagram(Skeleton skeleton, std::vector<Arrow> arrows);

  Skeleton skeleton() const { return skeleton_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(int k) const { return arrows_.at(static_cast<std::size_t>(k)); }
  int size() const { return static_cast<int>(arrows_.size()); }
  int endpoints() const { return 2 * size(); }
  bool empty() const { return arrows_.empty(); }

  bool all_solid() const;
  bool all_dashed() const;
  bool is_signed() const;
  bool is_unsigned() const;
  bool compatible_with(Flavor f) const;

  GaussDiagram with_style(Style s) const;
  GaussDiagram without_signs() const;

  // Arrows k with adjacent endpoints (wrapping on the circle).
  bool is_isolated(int k) const;
  bool has_isolated_arrow() const;

  friend bool operator==(const GaussDiagram&, const GaussDiagram&) = default;

 private:
  Skeleton skeleton_ = Skeleton::Circle;
  std::vector<Arrow> arrows_;
};

class ChordDiagram {
 public:
  ChordDiagram() = default;
  explicit ChordDiagram(Skeleton skeleton) : skeleton_(skeleton) {}
  ChordDiagram(Skeleton skeleton, std::vector<Chord> chords);

  Skeleton skeleton() const { return skeleton_; }
  const std::vector<Chord>& chords() const { return chords_; }
  int size() const { return static_cast<int>(chords_.size()); }
  int endpoints() const { return 2 * size(); }
  bool empty() const { return chords_.empty(); }
  bool is_signed() const;
  bool is_unsigned() const;
  bool compatible_with(Flavor f) const;
  ChordDiagram without_signs() const;

  bool is_isolated(int k) const;
  bool has_isolated_chord() const;

  friend bool operator==(const ChordDiagram&, const ChordDiagram&) = default;

 private:
  Skeleton skeleton_ = Skeleton::Circle;
  std::vector<Chord> chords_;
};

// Byte encoding of a canonical diagram: [flavor, skeleton, size] followed by
// (partner, flags) per endpoint. Byte order sorts by flavor, skeleton, size and
// then lexicographically by endpoint data.
class DiagramKey {
 public:
  DiagramKey() = default;
  explicit DiagramKey(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& bytes() const { return bytes_; }
  Flavor flavor() const { return static_cast<Flavor>(bytes_.at(0)); }
  Skeleton skeleton() const { return static_cast<Skeleton>(bytes_.at(1)); }
  int degree() const { return static_cast<unsigned char>(bytes_.at(2)); }

  // Human readable form, e.g. "arrow-signed|circle|1t+,0h+". Round-trips through from_text.
  std::string text() const;
  static DiagramKey from_text(std::string_view text);

  auto operator<=>(const DiagramKey&) const = default;
  bool operator==(const DiagramKey&) const = default;

 private:
  std::string bytes_;
};

struct CanonicalKey {
  DiagramKey key;
  int rotation = 0;  // canonical position 0 is input position `rotation`
};

std::pair<GaussDiagram, CanonicalKey> canonical_form(const GaussDiagram& d, Flavor flavor);
std::pair<ChordDiagram, CanonicalKey> canonical_form(const ChordDiagram& d, Flavor flavor);

DiagramKey key_of(const GaussDiagram& d, Flavor flavor);
DiagramKey key_of(const ChordDiagram& d, Flavor flavor);

// Flavor used for a Gauss diagram when none is given: signed dashed diagrams
// index the arrow space, everything else is a Gauss diagram.
Flavor natural_flavor(const GaussDiagram& d);

GaussDiagram gauss_from_key(const DiagramKey& key);
ChordDiagram chord_from_key(const DiagramKey& key);

// Encoding of d as positioned, without symmetry reduction.
std::string encode_positions(const GaussDiagram& d, Flavor flavor);
std::string encode_positions(const ChordDiagram& d, Flavor flavor);

// Rotates the circle so that input position `offset` becomes position 0.
GaussDiagram rotate(const GaussDiagram& d, int offset);
ChordDiagram rotate(const ChordDiagram& d, int offset);

enum class CountMode { Exactly, UpTo };

inline constexpr int kDefaultEnumerationCeiling = 6;

// Canonical diagrams of the given flavor with n (or at most n) arrows/chords,
// sorted by key. Flavor::Gauss enumerates all-solid signed diagrams.
std::vector<DiagramKey> enumerate_diagrams(Skeleton skeleton, Flavor flavor, int n, CountMode mode,
                                           int ceiling = kDefaultEnumerationCeiling);

// All perfect matchings of 0..2n-1, each as n pairs (a < b) sorted by a.
std::vector<std::vector<std::pair<int, int>>> perfect_matchings(int n);

GaussDiagram subdiagram(const GaussDiagram& d, unsigned mask);
std::vector<GaussDiagram> subdiagrams(const GaussDiagram& d);
ChordDiagram subdiagram(const ChordDiagram& d, unsigned mask);

GaussDiagram reverse_arrow(const GaussDiagram& d, int k);
ChordDiagram bar(const GaussDiagram& d);

// Swap of the endpoints at positions p and p+1 (p = 2n-1 swaps with 0 on the circle).
ChordDiagram swap_adjacent(const ChordDiagram& d, int p);

}  // namespace polyak

template <>
struct std::hash<polyak::DiagramKey> {
  std::size_t operator()(const polyak::DiagramKey& k) const noexcept { return std::hash<std::string>{}(k.bytes()); }
};
