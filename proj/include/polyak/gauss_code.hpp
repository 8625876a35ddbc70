#pragma once

#include <string>
#include <string_view>

#include "polyak/diagram.hpp"

namespace polyak {

// Grammar: ["L:"] item ("," item)*, item = ("O"|"U") digits ("+"|"-").
// One solid arrow per label, tail at the O occurrence, head at the U
// occurrence. The empty string is the empty circle diagram, "L:" the empty line.
GaussDiagram parse_gauss_code(std::string_view text);

// Labels follow the order of first endpoints. Requires solid signed arrows.
std::string emit_gauss_code(const GaussDiagram& d);

}  // namespace polyak
