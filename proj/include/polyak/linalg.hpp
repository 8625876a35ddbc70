#pragma once

#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "polyak/formal_sum.hpp"

namespace polyak {

// Sparse rational vector: (column, value) sorted by column, no zero values.
using SparseVec = std::vector<std::pair<int, Rational>>;

// a - f*b
SparseVec axpy(const SparseVec& a, const Rational& f, const SparseVec& b);
Rational dot(const SparseVec& a, const SparseVec& b);
SparseVec scaled(const SparseVec& a, const Rational& f);

struct RowSpace {
  std::vector<SparseVec> basis;  // reduced row-echelon form, leading coefficient 1, sorted by leading column
  std::vector<int> pivots;       // leading column of each basis row
  int rank() const { return static_cast<int>(basis.size()); }
};

// Exact Gauss-Jordan elimination. Rows are sorted and deduplicated first, so
// the result does not depend on input order. Pivots are chosen Markowitz
// style: shortest active row, then the column of that row with fewest active
// entries; ties go to the lowest column, then the lowest row.
RowSpace row_space(std::vector<SparseVec> rows, int ncols);

// Canonical reduced row-echelon form of the span of `rows` (leftmost pivots).
std::vector<SparseVec> reduced_echelon(const std::vector<SparseVec>& rows);

// Basis of {w : <w, r> = 0 for every row r}, in reduced row-echelon form.
std::vector<SparseVec> orthogonal_complement(const std::vector<SparseVec>& rows, int ncols);

// Incremental echelon basis that remembers how each basis vector combines the
// input rows, so membership queries return explicit coefficients.
class SpanSolver {
 public:
  explicit SpanSolver(std::vector<SparseVec> rows);

  int rank() const { return static_cast<int>(basis_.size()); }
  const std::vector<SparseVec>& rows() const { return rows_; }

  // Coefficients c over the input rows with sum c_i r_i = v, verified exactly,
  // or nullopt when v is not in the span.
  std::optional<SparseVec> solve(const SparseVec& v) const;

 private:
  struct Entry {
    SparseVec vec;
    SparseVec combo;
  };
  void reduce(SparseVec& v, SparseVec& combo) const;

  std::vector<SparseVec> rows_;
  std::map<int, Entry> basis_;
};

std::optional<SparseVec> in_span(const SparseVec& v, const std::vector<SparseVec>& rows);

// Column index over an ordered list of diagram keys.
class Ambient {
 public:
  Ambient() = default;
  explicit Ambient(std::vector<DiagramKey> keys);

  const std::vector<DiagramKey>& keys() const { return keys_; }
  int size() const { return static_cast<int>(keys_.size()); }
  std::optional<int> index(const DiagramKey& k) const;

  // Throws FlavorError when a term lies outside the ambient set.
  SparseVec vec(const FormalSum& s) const;
  FormalSum sum(const SparseVec& v, Flavor flavor, Skeleton skeleton) const;

 private:
  std::vector<DiagramKey> keys_;
  std::unordered_map<DiagramKey, int> index_;
};

}  // namespace polyak
