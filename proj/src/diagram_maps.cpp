#include "polyak/diagram_maps.hpp"

#include "polyak/error.hpp"

namespace polyak {

FormalSum bar(const FormalSum& v) {
  Flavor target;
  switch (v.flavor()) {
    case Flavor::ArrowSigned: target = Flavor::ChordSigned; break;
    case Flavor::ArrowUnsigned: target = Flavor::ChordUnsigned; break;
    default: throw FlavorError("bar expects an arrow-signed or arrow-unsigned sum");
  }
  FormalSum out(target, v.skeleton());
  for (const auto& [k, c] : v.terms()) out.add(bar(gauss_from_key(k)), c);
  return out;
}

namespace {
int negatives(const std::vector<int>& signs) {
  int m = 0;
  for (int s : signs) m += s < 0;
  return m;
}
}  // namespace

FormalSum xi(const GaussDiagram& d) {
  if (!d.is_signed()) throw FlavorError("xi expects a signed diagram");
  std::vector<int> signs;
  for (const Arrow& a : d.arrows()) signs.push_back(a.sign);
  return FormalSum::of(d.without_signs(), Flavor::ArrowUnsigned, negatives(signs) % 2 ? -1 : 1);
}

FormalSum xi(const ChordDiagram& d) {
  if (!d.is_signed()) throw FlavorError("xi expects a signed diagram");
  std::vector<int> signs;
  for (const Chord& c : d.chords()) signs.push_back(c.sign);
  return FormalSum::of(d.without_signs(), Flavor::ChordUnsigned, negatives(signs) % 2 ? -1 : 1);
}

FormalSum xi(const FormalSum& v) {
  Flavor target;
  switch (v.flavor()) {
    case Flavor::ArrowSigned: target = Flavor::ArrowUnsigned; break;
    case Flavor::ChordSigned: target = Flavor::ChordUnsigned; break;
    default: throw FlavorError("xi expects an arrow-signed or chord-signed sum");
  }
  FormalSum out(target, v.skeleton());
  for (const auto& [k, c] : v.terms()) {
    FormalSum t = is_arrow_flavor(k.flavor()) ? xi(gauss_from_key(k)) : xi(chord_from_key(k));
    out += t * c;
  }
  return out;
}

std::vector<GaussDiagram> orientations(const ChordDiagram& c) {
  if (!c.is_unsigned()) throw FlavorError("average map expects an unsigned chord diagram");
  std::vector<GaussDiagram> out;
  const unsigned total = 1u << c.size();
  for (unsigned mask = 0; mask < total; ++mask) {
    std::vector<Arrow> arrows;
    for (int k = 0; k < c.size(); ++k) {
      const Chord& ch = c.chords()[static_cast<std::size_t>(k)];
      bool flip = (mask >> k) & 1u;
      arrows.push_back(Arrow{flip ? ch.b : ch.a, flip ? ch.a : ch.b, 0, Style::Dashed});
    }
    out.emplace_back(c.skeleton(), std::move(arrows));
  }
  return out;
}

FormalSum average(const ChordDiagram& c) {
  FormalSum out(Flavor::ArrowUnsigned, c.skeleton());
  for (const GaussDiagram& d : orientations(c)) out.add(d, 1);
  return out;
}

FormalSum average(const FormalSum& v) {
  if (v.flavor() != Flavor::ChordUnsigned) throw FlavorError("average map expects a chord-unsigned sum");
  FormalSum out(Flavor::ArrowUnsigned, v.skeleton());
  for (const auto& [k, c] : v.terms()) out += average(chord_from_key(k)) * c;
  return out;
}

ChordDiagram flip_sign(const ChordDiagram& c, int k) {
  auto chords = c.chords();
  chords.at(static_cast<std::size_t>(k)).sign *= -1;
  return ChordDiagram(c.skeleton(), std::move(chords));
}

}  // namespace polyak
