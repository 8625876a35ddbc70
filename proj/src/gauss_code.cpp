#include "polyak/gauss_code.hpp"

#include <map>

#include "polyak/error.hpp"

namespace polyak {

namespace {

struct Occurrence {
  std::size_t text_pos;
  int endpoint;
  bool over;
  int sign;
};

}  // namespace

GaussDiagram parse_gauss_code(std::string_view text) {
  Skeleton skeleton = Skeleton::Circle;
  std::size_t i = 0;
  if (text.starts_with("L:")) {
    skeleton = Skeleton::Line;
    i = 2;
  }
  std::map<long, std::vector<Occurrence>> labels;
  int endpoint = 0;
  if (i < text.size()) {
    for (;;) {
      const std::size_t item = i;
      if (i >= text.size()) throw ParseError("expected 'O' or 'U'", i);
      if (text[i] != 'O' && text[i] != 'U') throw ParseError(std::string("expected 'O' or 'U', found '") + text[i] + "'", i);
      const bool over = text[i] == 'O';
      ++i;
      const std::size_t digits = i;
      long label = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        label = label * 10 + (text[i] - '0');
        if (label > 1000000) throw ParseError("label too large", digits);
        ++i;
      }
      if (i == digits) throw ParseError("expected a label", i);
      if (label == 0) throw ParseError("labels must be positive", digits);
      if (i >= text.size() || (text[i] != '+' && text[i] != '-')) throw ParseError("expected '+' or '-'", i);
      const int sign = text[i] == '+' ? 1 : -1;
      ++i;
      labels[label].push_back(Occurrence{item, endpoint++, over, sign});
      if (i == text.size()) break;
      if (text[i] != ',') throw ParseError(std::string("expected ',', found '") + text[i] + "'", i);
      ++i;
    }
  }
  std::vector<Arrow> arrows;
  for (const auto& [label, occ] : labels) {
    const std::string name = "label " + std::to_string(label);
    if (occ.size() != 2)
      throw ParseError(name + " occurs " + std::to_string(occ.size()) + " times, expected 2", occ.back().text_pos);
    if (occ[0].over == occ[1].over)
      throw ParseError(name + " needs one O and one U occurrence", occ[1].text_pos);
    if (occ[0].sign != occ[1].sign) throw ParseError("sign mismatch for " + name, occ[1].text_pos);
    const Occurrence& o = occ[0].over ? occ[0] : occ[1];
    const Occurrence& u = occ[0].over ? occ[1] : occ[0];
    arrows.push_back(Arrow{o.endpoint, u.endpoint, o.sign, Style::Solid});
  }
  return GaussDiagram(skeleton, std::move(arrows));
}

std::string emit_gauss_code(const GaussDiagram& d) {
  if (!d.all_solid()) throw FlavorError("Gauss codes describe solid arrows only");
  if (!d.is_signed()) throw FlavorError("Gauss codes need signed arrows");
  std::vector<std::string> items(static_cast<std::size_t>(d.endpoints()));
  for (int k = 0; k < d.size(); ++k) {
    const Arrow& a = d.arrow(k);
    const std::string label = std::to_string(k + 1) + (a.sign > 0 ? "+" : "-");
    items[static_cast<std::size_t>(a.tail)] = "O" + label;
    items[static_cast<std::size_t>(a.head)] = "U" + label;
  }
  std::string out = d.skeleton() == Skeleton::Line ? "L:" : "";
  for (std::size_t p = 0; p < items.size(); ++p) {
    if (p) out += ',';
    out += items[p];
  }
  return out;
}

}  // namespace polyak
