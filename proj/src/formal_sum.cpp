#include "polyak/formal_sum.hpp"

#include <sstream>

#include "polyak/error.hpp"

namespace polyak {

std::string rational_to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational rational_from_string(std::string_view s) {
  auto digits = [&](std::size_t from, std::size_t to, bool allow_sign) {
    if (from >= to) throw ParseError("empty number in rational '" + std::string(s) + "'", from);
    std::size_t i = from;
    if (allow_sign && (s[i] == '-' || s[i] == '+')) ++i;
    if (i >= to) throw ParseError("missing digits in rational '" + std::string(s) + "'", i);
    for (; i < to; ++i)
      if (s[i] < '0' || s[i] > '9') throw ParseError("bad character in rational '" + std::string(s) + "'", i);
  };
  auto slash = s.find('/');
  std::string num, den = "1";
  if (slash == std::string_view::npos) {
    digits(0, s.size(), true);
    num = std::string(s);
  } else {
    digits(0, slash, true);
    digits(slash + 1, s.size(), false);
    num = std::string(s.substr(0, slash));
    den = std::string(s.substr(slash + 1));
  }
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0) throw ParseError("zero denominator in rational '" + std::string(s) + "'", slash);
  Rational q(n, d);
  q.canonicalize();
  return q;
}

FormalSum FormalSum::of(const DiagramKey& key, const Rational& coeff) {
  FormalSum s(key.flavor(), key.skeleton());
  s.add(key, coeff);
  return s;
}

FormalSum FormalSum::of(const GaussDiagram& d, Flavor flavor, const Rational& coeff) {
  return of(key_of(d, flavor), coeff);
}

FormalSum FormalSum::of(const ChordDiagram& d, Flavor flavor, const Rational& coeff) {
  return of(key_of(d, flavor), coeff);
}

void FormalSum::check(const DiagramKey& key) const {
  if (key.flavor() != flavor_)
    throw FlavorError("cannot add a " + std::string(to_string(key.flavor())) + " diagram to a " +
                      std::string(to_string(flavor_)) + " sum");
  if (key.skeleton() != skeleton_) throw FlavorError("skeleton mismatch in formal sum");
}

Rational FormalSum::coefficient(const DiagramKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

void FormalSum::add(const DiagramKey& key, const Rational& coeff) {
  check(key);
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void FormalSum::add(const GaussDiagram& d, const Rational& coeff) { add(key_of(d, flavor_), coeff); }
void FormalSum::add(const ChordDiagram& d, const Rational& coeff) { add(key_of(d, flavor_), coeff); }

FormalSum& FormalSum::operator+=(const FormalSum& other) {
  for (const auto& [k, c] : other.terms_) add(k, c);
  return *this;
}

FormalSum& FormalSum::operator-=(const FormalSum& other) {
  for (const auto& [k, c] : other.terms_) add(k, -c);
  return *this;
}

FormalSum& FormalSum::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

FormalSum FormalSum::operator-() const {
  FormalSum out = *this;
  for (auto& [k, v] : out.terms_) v = -v;
  return out;
}

int FormalSum::min_degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_)
    if (d < 0 || k.degree() < d) d = k.degree();
  return d;
}

int FormalSum::max_degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.degree());
  return d;
}

FormalSum FormalSum::normalized() const {
  if (terms_.empty()) return *this;
  Rational lead = terms_.begin()->second;
  FormalSum out = *this;
  for (auto& [k, v] : out.terms_) v /= lead;
  return out;
}

std::string FormalSum::debug_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << rational_to_string(c) << "*[" << k.text() << "]";
  }
  if (first) os << "0";
  return os.str();
}

FormalSum homogeneous_part(const FormalSum& v, int degree) {
  FormalSum out(v.flavor(), v.skeleton());
  for (const auto& [k, c] : v.terms())
    if (k.degree() == degree) out.add(k, c);
  return out;
}

FormalSum truncate(const FormalSum& v, int n) {
  FormalSum out(v.flavor(), v.skeleton());
  for (const auto& [k, c] : v.terms())
    if (k.degree() <= n) out.add(k, c);
  return out;
}

}  // namespace polyak
