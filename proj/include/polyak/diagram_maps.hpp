#pragma once

#include <vector>

#include "polyak/diagram.hpp"
#include "polyak/formal_sum.hpp"

namespace polyak {

// Forget arrow directions (signs kept); arrow-signed -> chord-signed,
// arrow-unsigned -> chord-unsigned.
FormalSum bar(const FormalSum& v);

// F -> (-1)^(number of negative signs) |F|, lifted linearly.
FormalSum xi(const GaussDiagram& d);
FormalSum xi(const ChordDiagram& d);
FormalSum xi(const FormalSum& v);

// The 2^n orientations of an unsigned chord diagram, unmerged, in mask order.
std::vector<GaussDiagram> orientations(const ChordDiagram& c);
// Average map: sum of all orientations with coefficient 1.
FormalSum average(const ChordDiagram& c);
FormalSum average(const FormalSum& v);

// Flips the sign of every arrow (chord) in one position; used by property tests.
ChordDiagram flip_sign(const ChordDiagram& c, int k);

}  // namespace polyak
