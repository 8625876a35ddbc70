#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polyak/formal_sum.hpp"
#include "polyak/gpv.hpp"
#include "polyak/relations.hpp"

namespace polyak {

enum class Profile { Gpv, GpvVirtualization, Chord };

std::string_view to_string(Profile p);
Profile profile_from_string(std::string_view s);

// A rational functional on dashed signed diagrams (Gpv profiles) or signed
// chord diagrams (Chord profile) with at most `order` arrows.
struct InvariantFunctional {
  int order = 0;
  Skeleton skeleton = Skeleton::Circle;
  Profile profile = Profile::Gpv;
  FormalSum entries;

  bool is_constant() const;  // supported on the empty diagram only
  friend bool operator==(const InvariantFunctional&, const InvariantFunctional&) = default;
};

// D - D' for every dashed signed diagram D with 1..n arrows and every single
// arrow reversal D'; zero vectors dropped, normalized, deduped, sorted.
std::vector<FormalSum> flip_constraints(int n, Skeleton skeleton);

// The relation rows whose orthogonal complement is the invariant space.
RelationSystem profile_relations(int n, Skeleton skeleton, Profile profile);

// Basis of the orthogonal complement of the profile's relations, in reduced
// echelon form over the key-sorted ambient (first entry of each is 1).
std::vector<InvariantFunctional> invariant_space(int n, Skeleton skeleton, Profile profile);
std::vector<InvariantFunctional> invariant_space(const RelationSystem& relations, Profile profile);

// Pairing of v with the subdiagram sum of K (bar'd first for the chord profile).
Rational evaluate(const InvariantFunctional& v, const GaussDiagram& k);

struct WitnessPair {
  std::string knot;          // Gauss code of K
  std::string flipped_knot;  // Gauss code of K' (one arrow reversed)
  int flipped_arrow = 0;     // label in K's Gauss code (1-based, order of first endpoint)
  Rational value;
  Rational flipped_value;
};

// Searches all-solid diagrams by arrow count, then canonical key, then flipped
// arrow, up to max_crossings arrows.
std::optional<WitnessPair> find_witness(const InvariantFunctional& v, int max_crossings);

}  // namespace polyak
