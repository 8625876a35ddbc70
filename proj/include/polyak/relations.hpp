#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "polyak/diagram.hpp"
#include "polyak/formal_sum.hpp"
#include "polyak/linalg.hpp"
#include "polyak/moves.hpp"

namespace polyak {

enum class RelationKind {
  PI,
  PII,
  PIII,
  RI,
  RII,
  RIII,
  OneTSigned,
  NS,
  SixTSigned,
  OneT,
  SixT,
  FourT,
  TwoT,
  Flip,
};

std::string_view to_string(RelationKind k);
RelationKind relation_kind_from_string(std::string_view s);

// Where a row came from. `context` is the canonical context diagram (its key is
// decoded with gauss_from_key / chord_from_key, so positions are reproducible),
// `site` places the move's blocks, `params` records the move variant.
//   PI:   params = {sign, tail_first}
//   PII:  params = {first_sign, same_order}
//   PIII: params = {index of the left configuration in r3_configurations()}
//   4T:   site markers 0,1,2 are slots S1,S2,S3
//   2T:   params = {swapped position}
struct Provenance {
  RelationKind kind = RelationKind::PI;
  DiagramKey context;
  Site site;
  std::vector<int> params;
};

struct RelationSystem {
  Flavor flavor = Flavor::ArrowSigned;
  Skeleton skeleton = Skeleton::Circle;
  int order = 0;
  bool truncated = true;
  Ambient ambient;
  std::vector<FormalSum> rows;  // normalized, duplicate free, sorted
  std::vector<Provenance> provenance;

  std::vector<SparseVec> vectors() const;
  std::size_t size() const { return rows.size(); }
};

// Worker threads used by relation generation (default: hardware concurrency).
void set_parallelism(int jobs);
int parallelism();

// I_GPV(left) - I_GPV(right) over every R1/R2/R3 instance whose context has
// few enough arrows to matter at order n (R1, R2: <= n-1, R3: <= n-2). Context
// arrows are dashed, move arrows solid. Truncated systems drop terms with more
// than n arrows and use all dashed signed diagrams with <= n arrows as ambient;
// untruncated systems use the union of row supports.
RelationSystem generate_polyak(int n, Skeleton skeleton, bool truncate = true);

// Adds rows to a system, then normalizes, dedupes and re-sorts all of them.
void append_rows(RelationSystem& sys, std::vector<FormalSum> rows, std::vector<Provenance> provenance);

// bar of the Polyak rows.
RelationSystem generate_chord_relations(int n, Skeleton skeleton, bool truncate = true);

// Signed degree-n families. flavor is ArrowSigned or ChordSigned.
//   OneTSigned: degree-n rows of R1 instances with n-1 context arrows
//   NS:         degree-n part of R2 instances with n-1 context arrows
//   SixTSigned: degree-n part of R3 instances with n-2 context arrows
RelationSystem generate_signed_family(RelationKind kind, int n, Skeleton skeleton, Flavor flavor);

// Unsigned families over diagrams with exactly n arrows/chords.
//   OneT: diagrams with an isolated arrow/chord.  SixT: xi of the 6T+- rows.
//   FourT, TwoT: chord flavor only.
RelationSystem generate_unsigned(RelationKind kind, int n, Skeleton skeleton, Flavor flavor);

// Four-term row at a 3-marker site over an unsigned chord context; markers
// 0,1,2 are slots S1,S2,S3, with p = (S1,S2), q = (S1,S3), r = (S2,S3):
//   D(S1: p q) - D(S1: q p) + D(S2: p r) - D(S2: r p).
FormalSum four_term(const ChordDiagram& context, const Site& site);

struct SixTDecomposition {
  FormalSum four_term;         // the 4T instance used
  Rational four_term_coeff;    // row = c4 * four_term + c2 * two_term
  FormalSum two_term;
  Rational two_term_coeff;
  int pivot = 0;               // R3 arrow id shared by the 4T terms
};

// Splits an unsigned chord 6T row (with its provenance) into a 4T row plus a
// 2T row, verified exactly. Throws ConventionMismatchError when no split exists.
SixTDecomposition decompose_6T(const FormalSum& row, const Provenance& origin);

// Degree-n R-move rows for a context of n-1 (R1, R2) or n-2 (R3) arrows, built
// directly from a site; exposed for tests and the membership check.
FormalSum polyak_row(const GaussDiagram& context, const Site& site, RelationKind kind, const std::vector<int>& params,
                     int truncate_at = -1);

}  // namespace polyak
