#include "polyak/invariants.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "polyak/diagram_maps.hpp"
#include "polyak/error.hpp"
#include "polyak/gauss_code.hpp"

namespace polyak {

std::string_view to_string(Profile p) {
  switch (p) {
    case Profile::Gpv: return "gpv";
    case Profile::GpvVirtualization: return "gpv+virtualization";
    case Profile::Chord: return "chord";
  }
  return "?";
}

Profile profile_from_string(std::string_view s) {
  if (s == "gpv") return Profile::Gpv;
  if (s == "gpv+virtualization" || s == "virt") return Profile::GpvVirtualization;
  if (s == "chord") return Profile::Chord;
  throw ValidationError("unknown profile '" + std::string(s) + "'");
}

bool InvariantFunctional::is_constant() const {
  return std::all_of(entries.terms().begin(), entries.terms().end(),
                     [](const auto& t) { return t.first.degree() == 0; });
}

namespace {

std::vector<std::pair<FormalSum, Provenance>> flip_rows(int n, Skeleton skeleton) {
  std::vector<std::pair<FormalSum, Provenance>> out;
  for (int m = 1; m <= n; ++m)
    for (const DiagramKey& key : enumerate_diagrams(skeleton, Flavor::ArrowSigned, m, CountMode::Exactly)) {
      GaussDiagram d = gauss_from_key(key);
      for (int k = 0; k < d.size(); ++k) {
        FormalSum v(Flavor::ArrowSigned, skeleton);
        v.add(key, 1);
        v.add(reverse_arrow(d, k), -1);
        if (!v.is_zero()) out.emplace_back(v.normalized(), Provenance{RelationKind::Flip, key, {}, {k}});
      }
    }
  return out;
}

}  // namespace

std::vector<FormalSum> flip_constraints(int n, Skeleton skeleton) {
  std::vector<FormalSum> rows;
  for (auto& [v, p] : flip_rows(n, skeleton)) rows.push_back(std::move(v));
  auto less = [](const FormalSum& a, const FormalSum& b) {
    return std::lexicographical_compare(a.terms().begin(), a.terms().end(), b.terms().begin(), b.terms().end(),
                                        [](const auto& x, const auto& y) {
                                          if (x.first != y.first) return x.first < y.first;
                                          return x.second < y.second;
                                        });
  };
  std::sort(rows.begin(), rows.end(), less);
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  return rows;
}

RelationSystem profile_relations(int n, Skeleton skeleton, Profile profile) {
  switch (profile) {
    case Profile::Gpv: return generate_polyak(n, skeleton, true);
    case Profile::GpvVirtualization: {
      RelationSystem sys = generate_polyak(n, skeleton, true);
      std::vector<FormalSum> rows;
      std::vector<Provenance> prov;
      for (auto& [v, p] : flip_rows(n, skeleton)) {
        rows.push_back(std::move(v));
        prov.push_back(std::move(p));
      }
      append_rows(sys, std::move(rows), std::move(prov));
      return sys;
    }
    case Profile::Chord: return generate_chord_relations(n, skeleton, true);
  }
  throw ValidationError("unknown profile");
}

std::vector<InvariantFunctional> invariant_space(const RelationSystem& relations, Profile profile) {
  auto basis = orthogonal_complement(relations.vectors(), relations.ambient.size());
  std::vector<InvariantFunctional> out;
  out.reserve(basis.size());
  for (const auto& w : basis)
    out.push_back(InvariantFunctional{relations.order, relations.skeleton, profile,
                                      relations.ambient.sum(w, relations.flavor, relations.skeleton)});
  return out;
}

std::vector<InvariantFunctional> invariant_space(int n, Skeleton skeleton, Profile profile) {
  return invariant_space(profile_relations(n, skeleton, profile), profile);
}

Rational evaluate(const InvariantFunctional& v, const GaussDiagram& k) {
  if (k.skeleton() != v.skeleton) throw ValidationError("skeleton mismatch between invariant and knot");
  if (!k.is_signed()) throw FlavorError("invariants evaluate on signed diagrams");
  unsigned dashed = 0;
  std::vector<int> solid;
  for (int a = 0; a < k.size(); ++a) {
    if (k.arrow(a).style == Style::Dashed) dashed |= 1u << a;
    else solid.push_back(a);
  }
  const int budget = v.order - std::popcount(dashed);
  Rational total = 0;
  if (budget < 0) return total;
  auto pair = [&](unsigned mask) {
    GaussDiagram sub = subdiagram(k, mask).with_style(Style::Dashed);
    DiagramKey key = v.profile == Profile::Chord ? key_of(bar(sub), Flavor::ChordSigned) : key_of(sub, Flavor::ArrowSigned);
    total += v.entries.coefficient(key);
  };
  // subsets of the solid arrows with at most `budget` elements
  std::function<void(std::size_t, unsigned, int)> walk = [&](std::size_t from, unsigned mask, int left) {
    pair(mask);
    if (left == 0) return;
    for (std::size_t i = from; i < solid.size(); ++i) walk(i + 1, mask | (1u << solid[i]), left - 1);
  };
  walk(0, dashed, budget);
  return total;
}

std::optional<WitnessPair> find_witness(const InvariantFunctional& v, int max_crossings) {
  if (v.is_constant()) return std::nullopt;
  for (int m = 1; m <= max_crossings; ++m) {
    const auto keys = enumerate_diagrams(v.skeleton, Flavor::Gauss, m, CountMode::Exactly,
                                         std::max(m, kDefaultEnumerationCeiling));
    for (const DiagramKey& key : keys) {
      GaussDiagram d = gauss_from_key(key);
      Rational value = evaluate(v, d);
      for (int a = 0; a < d.size(); ++a) {
        GaussDiagram flipped = reverse_arrow(d, a);
        Rational fv = evaluate(v, flipped);
        if (fv != value) return WitnessPair{emit_gauss_code(d), emit_gauss_code(flipped), a + 1, value, fv};
      }
    }
  }
  return std::nullopt;
}

}  // namespace polyak
