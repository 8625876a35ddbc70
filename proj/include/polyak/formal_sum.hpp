#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <string_view>

#include "polyak/diagram.hpp"

namespace polyak {

using Rational = mpq_class;

// "p/q" in lowest terms, q > 0 (integers keep the "/1").
std::string rational_to_string(const Rational& q);
// Accepts "p/q" or "p"; normalizes. Throws ParseError.
Rational rational_from_string(std::string_view s);

// Sparse rational combination of canonical diagrams of one flavor and skeleton.
// Zero coefficients are never stored.
class FormalSum {
 public:
  using Terms = std::map<DiagramKey, Rational>;

  FormalSum() = default;
  FormalSum(Flavor flavor, Skeleton skeleton) : flavor_(flavor), skeleton_(skeleton) {}

  static FormalSum of(const DiagramKey& key, const Rational& coeff = 1);
  static FormalSum of(const GaussDiagram& d, Flavor flavor, const Rational& coeff = 1);
  static FormalSum of(const ChordDiagram& d, Flavor flavor, const Rational& coeff = 1);

  Flavor flavor() const { return flavor_; }
  Skeleton skeleton() const { return skeleton_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const DiagramKey& key) const;

  void add(const DiagramKey& key, const Rational& coeff);
  void add(const GaussDiagram& d, const Rational& coeff);  // canonicalized in this sum's flavor
  void add(const ChordDiagram& d, const Rational& coeff);

  FormalSum& operator+=(const FormalSum& other);
  FormalSum& operator-=(const FormalSum& other);
  FormalSum& operator*=(const Rational& c);
  friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
  friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
  friend FormalSum operator*(FormalSum a, const Rational& c) { return a *= c; }
  friend FormalSum operator*(const Rational& c, FormalSum a) { return a *= c; }
  FormalSum operator-() const;

  friend bool operator==(const FormalSum& a, const FormalSum& b) {
    return a.flavor_ == b.flavor_ && a.skeleton_ == b.skeleton_ && a.terms_ == b.terms_;
  }

  int min_degree() const;  // -1 when zero
  int max_degree() const;

  // Scaled so the first coefficient (in key order) is +1.
  FormalSum normalized() const;

  std::string debug_string() const;

 private:
  void check(const DiagramKey& key) const;

  Flavor flavor_ = Flavor::ArrowSigned;
  Skeleton skeleton_ = Skeleton::Circle;
  Terms terms_;
};

// Keeps exactly the terms of degree d.
FormalSum homogeneous_part(const FormalSum& v, int degree);
// Drops terms of degree greater than n.
FormalSum truncate(const FormalSum& v, int n);

}  // namespace polyak
