#pragma once

#include "polyak/diagram.hpp"
#include "polyak/formal_sum.hpp"

namespace polyak {

// Sum over subdiagrams that keep every dashed arrow and any subset of the solid
// ones, each term made fully dashed. Signed input lands in the arrow-signed
// space, unsigned input in the arrow-unsigned space.
FormalSum i_gpv(const GaussDiagram& d);
// Linear extension over a Gauss-flavor sum.
FormalSum i_gpv(const FormalSum& v);

// Inverse of i_gpv on the arrow-signed space: each dashed A goes to
// sum over A' in A of (-1)^(|A| - |A'|) solid(A'). Result has Gauss flavor.
FormalSum i_gpv_inverse(const FormalSum& a);

// bar o i_gpv
FormalSum i_chord(const GaussDiagram& d);

}  // namespace polyak
