#include "polyak/gpv.hpp"

#include <bit>

#include "polyak/diagram_maps.hpp"
#include "polyak/error.hpp"

namespace polyak {

FormalSum i_gpv(const GaussDiagram& d) {
  const Flavor target = d.is_unsigned() && !d.empty() ? Flavor::ArrowUnsigned : Flavor::ArrowSigned;
  FormalSum out(target, d.skeleton());
  unsigned dashed = 0;
  std::vector<int> solid;
  for (int k = 0; k < d.size(); ++k) {
    if (d.arrow(k).style == Style::Dashed) dashed |= 1u << k;
    else solid.push_back(k);
  }
  if (solid.size() > 24) throw ResourceLimitError("too many solid arrows for i_gpv");
  const unsigned total = 1u << solid.size();
  for (unsigned s = 0; s < total; ++s) {
    unsigned mask = dashed;
    for (std::size_t i = 0; i < solid.size(); ++i)
      if ((s >> i) & 1u) mask |= 1u << solid[i];
    out.add(subdiagram(d, mask).with_style(Style::Dashed), 1);
  }
  return out;
}

FormalSum i_gpv(const FormalSum& v) {
  if (v.flavor() != Flavor::Gauss) throw FlavorError("i_gpv expects a sum of Gauss diagrams");
  FormalSum out(Flavor::ArrowSigned, v.skeleton());
  for (const auto& [k, c] : v.terms()) out += i_gpv(gauss_from_key(k)) * c;
  return out;
}

FormalSum i_gpv_inverse(const FormalSum& a) {
  if (a.flavor() != Flavor::ArrowSigned) throw FlavorError("i_gpv_inverse expects an arrow-signed sum");
  FormalSum out(Flavor::Gauss, a.skeleton());
  for (const auto& [k, c] : a.terms()) {
    GaussDiagram d = gauss_from_key(k).with_style(Style::Solid);
    const unsigned total = 1u << d.size();
    for (unsigned mask = 0; mask < total; ++mask) {
      const int missing = d.size() - std::popcount(mask);
      out.add(subdiagram(d, mask), missing % 2 ? -c : c);
    }
  }
  return out;
}

FormalSum i_chord(const GaussDiagram& d) { return bar(i_gpv(d)); }

}  // namespace polyak
