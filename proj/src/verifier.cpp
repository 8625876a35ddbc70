#include "polyak/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <random>

#include "polyak/diagram_maps.hpp"
#include "polyak/error.hpp"
#include "polyak/gauss_code.hpp"
#include "polyak/io.hpp"

#ifndef POLYAK_VERSION
#define POLYAK_VERSION "0.0.0"
#endif

namespace polyak {

std::string tool_version() { return POLYAK_VERSION; }

namespace {

using Clock = std::chrono::steady_clock;

class Run {
 public:
  Run(std::string claim, Json params) : start_(Clock::now()) {
    cert.claim = std::move(claim);
    cert.params = std::move(params);
    cert.version = tool_version();
  }
  Certificate finish(Status status) {
    cert.status = status;
    cert.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start_).count();
    return std::move(cert);
  }
  Certificate finish_by_checks() { return finish(cert.all_checks_ok() ? Status::Pass : Status::Fail); }

  Certificate cert;

 private:
  Clock::time_point start_;
};

Json base_params(int n, Skeleton skeleton) {
  return Json{{"n", n}, {"skeleton", std::string(to_string(skeleton))}};
}

void require_order(int n, int lo, int ceiling, const char* what) {
  if (n < lo) throw ValidationError(std::string(what) + " needs n >= " + std::to_string(lo));
  if (n > ceiling)
    throw ResourceLimitError(std::string(what) + " at n = " + std::to_string(n) + " exceeds the ceiling " +
                             std::to_string(ceiling));
}

std::vector<SparseVec> prepared(std::vector<SparseVec> rows, const VerifyOptions& opts) {
  if (opts.shuffle_seed) {
    std::mt19937_64 rng(opts.shuffle_seed);
    std::shuffle(rows.begin(), rows.end(), rng);
  }
  return rows;
}

int rank_of(const RelationSystem& sys, const VerifyOptions& opts) {
  return row_space(prepared(sys.vectors(), opts), sys.ambient.size()).rank();
}

Json sparse_json(const SparseVec& v) {
  Json out = Json::array();
  for (const auto& [i, c] : v) out.push_back(Json::array({i, rational_to_string(c)}));
  return out;
}

Json basis_json(Profile profile, const SpaceResult& s) {
  Json fs = Json::array();
  for (const auto& f : s.basis) fs.push_back(to_json(f)["entries"]);
  return Json{{"profile", std::string(to_string(profile))},
              {"dimension", s.basis.size()},
              {"hash", fingerprint(fs)},
              {"functionals", std::move(fs)}};
}

bool is_empty_indicator(const InvariantFunctional& f) {
  return f.entries.size() == 1 && f.entries.terms().begin()->first.degree() == 0 &&
         f.entries.terms().begin()->second == 1;
}

}  // namespace

SpaceResult compute_invariant_space(int n, Skeleton skeleton, Profile profile, const VerifyOptions& opts) {
  const std::string kind = "space-" + std::string(to_string(profile));
  SpaceResult out;
  if (opts.cache) {
    if (auto hit = opts.cache->get(kind, skeleton, n)) {
      try {
        for (std::size_t i = 0; i < hit->at("basis").size(); ++i)
          out.basis.push_back(functional_from_json((*hit)["basis"][i], "/basis/" + std::to_string(i)));
        out.rows = hit->at("rows").get<std::int64_t>();
        out.ambient = hit->at("ambient").get<std::int64_t>();
        out.fingerprint = fingerprint(*hit);
        return out;
      } catch (const std::exception&) {
        out = SpaceResult{};  // unusable entry, recompute
      }
    }
  }
  RelationSystem rel = profile_relations(n, skeleton, profile);
  auto basis = orthogonal_complement(prepared(rel.vectors(), opts), rel.ambient.size());
  for (const auto& w : basis)
    out.basis.push_back(InvariantFunctional{n, skeleton, profile, rel.ambient.sum(w, rel.flavor, skeleton)});
  out.rows = static_cast<std::int64_t>(rel.rows.size());
  out.ambient = rel.ambient.size();
  Json payload = Json::object();
  payload["rows"] = out.rows;
  payload["ambient"] = out.ambient;
  payload["basis"] = Json::array();
  for (const auto& f : out.basis) payload["basis"].push_back(to_json(f));
  out.fingerprint = fingerprint(payload);
  if (opts.cache) opts.cache->put(kind, skeleton, n, payload);
  return out;
}

Rational pairing(const InvariantFunctional& v, const GaussDiagram& k) {
  FormalSum image = v.profile == Profile::Chord ? i_chord(k) : i_gpv(k);
  Rational total = 0;
  for (const auto& [key, c] : image.terms())
    if (key.degree() <= v.order) total += c * v.entries.coefficient(key);
  return total;
}

Certificate verify_theorem1(int n, Skeleton skeleton, const VerifyOptions& opts) {
  require_order(n, 0, opts.signed_ceiling, "theorem1");
  Run run("theorem1", base_params(n, skeleton));
  auto& cert = run.cert;
  SpaceResult gpv = compute_invariant_space(n, skeleton, Profile::Gpv, opts);
  SpaceResult virt = compute_invariant_space(n, skeleton, Profile::GpvVirtualization, opts);
  SpaceResult chord = compute_invariant_space(n, skeleton, Profile::Chord, opts);
  cert.dims = Json{{"gpv", gpv.basis.size()}, {"virt", virt.basis.size()}};
  cert.basis.push_back(basis_json(Profile::Gpv, gpv));
  cert.basis.push_back(basis_json(Profile::GpvVirtualization, virt));
  cert.diagrams = virt.ambient;
  cert.relations = virt.rows;
  cert.fingerprints = Json{{"gpv", gpv.fingerprint}, {"virt", virt.fingerprint}, {"chord", chord.fingerprint}};

  const bool constants_only = virt.basis.size() == 1 && is_empty_indicator(virt.basis[0]);
  cert.check("virtualization-invariant space is spanned by the empty-diagram indicator", constants_only);
  cert.check("chord-side dimension equals virtualization-invariant dimension", chord.basis.size() == virt.basis.size(),
             Json{{"chord", chord.basis.size()}, {"virt", virt.basis.size()}});

  Json missing = Json::array();
  for (std::size_t i = 0; i < gpv.basis.size(); ++i) {
    const auto& f = gpv.basis[i];
    if (f.is_constant()) continue;
    auto w = find_witness(f, opts.witness_bound);
    if (!w) {
      missing.push_back(i);
      continue;
    }
    const GaussDiagram k = parse_gauss_code(w->knot);
    const GaussDiagram kp = parse_gauss_code(w->flipped_knot);
    const bool recheck = pairing(f, k) == w->value && pairing(f, kp) == w->flipped_value && w->value != w->flipped_value;
    Json wj = to_json(*w);
    wj["functional"] = i;
    wj["rechecked"] = recheck;
    cert.witnesses.push_back(std::move(wj));
    if (!recheck) cert.check("witness " + std::to_string(i) + " re-verifies by pairing", false);
  }
  if (!cert.all_checks_ok()) return run.finish(Status::Fail);
  if (!missing.empty()) {
    cert.check("every nonconstant functional has a witness within the bound", false,
               Json{{"bound", opts.witness_bound}, {"functionals", missing}});
    return run.finish(Status::Inconclusive);
  }
  cert.check("every nonconstant functional has a witness within the bound", true, Json{{"bound", opts.witness_bound}});
  return run.finish(Status::Pass);
}

Certificate verify_vanishing(int n, Skeleton skeleton, const VerifyOptions& opts) {
  require_order(n, 1, opts.unsigned_ceiling, "vanishing");
  Run run("vanishing", base_params(n, skeleton));
  auto& cert = run.cert;
  RelationSystem one = generate_unsigned(RelationKind::OneT, n, skeleton, Flavor::ChordUnsigned);
  RelationSystem six = generate_unsigned(RelationKind::SixT, n, skeleton, Flavor::ChordUnsigned);
  RelationSystem both = one;
  append_rows(both, six.rows, six.provenance);
  const int count = both.ambient.size();
  const int rank = rank_of(both, opts);
  const int rank_one = rank_of(one, opts);
  cert.dims = Json{{"diagrams", count}, {"rank", rank}, {"quotient", count - rank}};
  cert.diagrams = count;
  cert.relations = static_cast<std::int64_t>(both.rows.size());
  cert.check("rank of 1T and 6T rows equals the number of diagrams", rank == count);
  if (n >= 2)
    cert.check("1T rows alone leave a nonzero quotient", rank_one < count, Json{{"rank_1T", rank_one}});
  int split = 0;
  Json bad = Json::array();
  for (std::size_t i = 0; i < six.rows.size(); ++i) {
    try {
      decompose_6T(six.rows[i], six.provenance[i]);
      ++split;
    } catch (const ConventionMismatchError&) {
      bad.push_back(to_json(six.rows[i]));
    }
  }
  cert.check("every 6T row splits as a 4T row plus a 2T row", bad.empty(),
             Json{{"rows", six.rows.size()}, {"split", split}, {"failures", bad}});
  cert.fingerprints = Json{{"rows", fingerprint(to_json(both))}};
  return run.finish_by_checks();
}

Certificate verify_caterpillar(int n, Skeleton skeleton, const VerifyOptions& opts) {
  require_order(n, 1, opts.unsigned_ceiling, "caterpillar");
  Run run("caterpillar", base_params(n, skeleton));
  auto& cert = run.cert;
  RelationSystem two = generate_unsigned(RelationKind::TwoT, n, skeleton, Flavor::ChordUnsigned);
  const int count = two.ambient.size();
  const int rank = rank_of(two, opts);
  cert.dims = Json{{"diagrams", count}, {"rank", rank}, {"quotient", count - rank}};
  cert.diagrams = count;
  cert.relations = static_cast<std::int64_t>(two.rows.size());
  cert.check("quotient by 2T has dimension 1", count - rank == 1);

  // connectivity of the 2T graph, independent of the rank computation
  std::vector<int> parent(static_cast<std::size_t>(count));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (const auto& row : two.rows) {
    std::vector<int> ends;
    for (const auto& [k, c] : row.terms()) ends.push_back(*two.ambient.index(k));
    for (std::size_t i = 1; i < ends.size(); ++i) parent[static_cast<std::size_t>(find(ends[0]))] = find(ends[i]);
  }
  int classes = 0;
  for (int i = 0; i < count; ++i) classes += find(i) == i;
  cert.check("all diagrams are connected by 2T moves", classes == 1, Json{{"classes", classes}});

  std::string representative;
  for (const auto& k : two.ambient.keys())
    if (chord_from_key(k).has_isolated_chord()) {
      representative = k.text();
      break;
    }
  cert.check("the class contains a diagram with an isolated chord", !representative.empty());
  if (!representative.empty()) cert.witnesses.push_back(Json{{"representative", representative}});
  cert.fingerprints = Json{{"rows", fingerprint(to_json(two))}};
  return run.finish_by_checks();
}

Certificate verify_average(int n, Skeleton skeleton, const VerifyOptions& opts) {
  require_order(n, 1, opts.unsigned_ceiling, "average");
  Run run("average", base_params(n, skeleton));
  auto& cert = run.cert;
  RelationSystem four = generate_unsigned(RelationKind::FourT, n, skeleton, Flavor::ChordUnsigned);
  RelationSystem one_c = generate_unsigned(RelationKind::OneT, n, skeleton, Flavor::ChordUnsigned);
  RelationSystem six_a = generate_unsigned(RelationKind::SixT, n, skeleton, Flavor::ArrowUnsigned);
  RelationSystem one_a = generate_unsigned(RelationKind::OneT, n, skeleton, Flavor::ArrowUnsigned);
  cert.dims = Json{{"chord_diagrams", one_c.ambient.size()}, {"arrow_diagrams", six_a.ambient.size()}};
  cert.diagrams = one_c.ambient.size() + six_a.ambient.size();
  cert.relations = static_cast<std::int64_t>(four.rows.size() + one_c.rows.size() + six_a.rows.size() + one_a.rows.size());

  auto memberships = [&](const RelationSystem& from, const RelationSystem& into, const char* label) {
    SpanSolver solver(prepared(into.vectors(), opts));
    // prepared() may reorder rows; map coefficients back to row indices of `into`
    std::vector<std::size_t> order(into.rows.size());
    std::iota(order.begin(), order.end(), 0);
    if (opts.shuffle_seed) {
      std::mt19937_64 rng(opts.shuffle_seed);
      std::shuffle(order.begin(), order.end(), rng);
    }
    int ok = 0;
    for (std::size_t i = 0; i < from.rows.size(); ++i) {
      auto coeffs = solver.solve(into.ambient.vec(average(from.rows[i])));
      if (!coeffs) continue;
      ++ok;
      SparseVec mapped;
      for (const auto& [j, c] : *coeffs) mapped.emplace_back(static_cast<int>(order[static_cast<std::size_t>(j)]), c);
      std::sort(mapped.begin(), mapped.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      cert.witnesses.push_back(Json{{"kind", label}, {"row", i}, {"coefficients", sparse_json(mapped)}});
    }
    return ok;
  };
  const int in6 = memberships(four, six_a, "4T->6T");
  cert.check("average of every 4T row lies in the 6T span", in6 == static_cast<int>(four.rows.size()),
             Json{{"rows", four.rows.size()}, {"members", in6}});
  const int in1 = memberships(one_c, one_a, "1T->1T");
  cert.check("average of every chord 1T row lies in the arrow 1T span", in1 == static_cast<int>(one_c.rows.size()),
             Json{{"rows", one_c.rows.size()}, {"members", in1}});

  int identity = 0;
  const Rational scale(1, 1u << n);
  for (const auto& k : one_c.ambient.keys()) {
    FormalSum back = bar(average(chord_from_key(k))) * scale;
    identity += back == FormalSum::of(k);
  }
  cert.check("(1/2^n) bar o average is the identity on every n-chord diagram", identity == one_c.ambient.size(),
             Json{{"diagrams", one_c.ambient.size()}, {"identity", identity}});
  cert.fingerprints = Json{{"4T", fingerprint(to_json(four))}, {"6T", fingerprint(to_json(six_a))}};
  return run.finish_by_checks();
}

Certificate verify_membership_lemma(int n, Flavor flavor, Skeleton skeleton, const VerifyOptions& opts) {
  if (flavor != Flavor::ArrowSigned && flavor != Flavor::ChordSigned)
    throw FlavorError("membership lemma is stated for arrow-signed or chord-signed diagrams");
  require_order(n, 1, opts.signed_ceiling - 1, "membership");
  Json params = base_params(n, skeleton);
  params["flavor"] = std::string(to_string(flavor));
  Run run("membership", std::move(params));
  auto& cert = run.cert;
  RelationSystem full = flavor == Flavor::ArrowSigned ? generate_polyak(n, skeleton, false)
                                                      : generate_chord_relations(n, skeleton, false);
  // untruncated rows indexed by their part of degree <= n
  std::map<FormalSum::Terms, std::size_t> low;
  for (std::size_t i = 0; i < full.rows.size(); ++i) {
    FormalSum t = truncate(full.rows[i], n);
    if (!t.is_zero()) low.try_emplace(t.normalized().terms(), i);
  }
  cert.relations = static_cast<std::int64_t>(full.rows.size());
  cert.diagrams = full.ambient.size();
  Json counts = Json::object();
  for (RelationKind kind : {RelationKind::SixTSigned, RelationKind::NS, RelationKind::OneTSigned}) {
    RelationSystem fam = generate_signed_family(kind, n, skeleton, flavor);
    int ok = 0;
    Json failures = Json::array();
    for (const auto& v : fam.rows) {
      auto it = low.find(v.normalized().terms());
      bool found = false;
      if (it != low.end()) {
        const FormalSum& r = full.rows[it->second];
        FormalSum t = truncate(r, n);
        Rational lambda = v.terms().begin()->second / t.terms().begin()->second;
        FormalSum rest = r * lambda - v;
        found = rest.is_zero() || rest.min_degree() >= n + 1;
      }
      if (found) ++ok;
      else failures.push_back(to_json(v));
    }
    counts[std::string(to_string(kind))] = fam.rows.size();
    cert.check("every " + std::string(to_string(kind)) + " instance is an untruncated relation plus terms of degree > n",
               failures.empty(), Json{{"instances", fam.rows.size()}, {"decomposed", ok}, {"failures", failures}});
  }
  cert.dims = Json{{"instances", counts}, {"untruncated_rows", full.rows.size()}};
  cert.fingerprints = Json{{"untruncated", fingerprint(to_json(full))}};
  return run.finish_by_checks();
}

Certificate verify_stability(int n_low, int n_high, Skeleton skeleton, const VerifyOptions& opts) {
  if (n_low > n_high) throw ValidationError("stability needs n_low <= n_high");
  require_order(n_low, 0, opts.signed_ceiling, "stability");
  require_order(n_high, 0, opts.signed_ceiling, "stability");
  Run run("stability",
          Json{{"n_low", n_low}, {"n_high", n_high}, {"skeleton", std::string(to_string(skeleton))}});
  auto& cert = run.cert;
  bool constant = true;
  for (int n = n_low; n <= n_high; ++n) {
    SpaceResult s = compute_invariant_space(n, skeleton, Profile::Chord, opts);
    cert.dims[std::to_string(n)] = s.basis.size();
    cert.fingerprints[std::to_string(n)] = s.fingerprint;
    cert.diagrams += s.ambient;
    cert.relations += s.rows;
    constant = constant && s.basis.size() == 1 && is_empty_indicator(s.basis[0]);
  }
  cert.check("chord-side invariant space is the constants at every order", constant);
  return run.finish_by_checks();
}

std::vector<Certificate> verify_all(int order_max, const VerifyOptions& opts) {
  std::vector<Certificate> out;
  for (Skeleton s : {Skeleton::Circle, Skeleton::Line}) {
    for (int n = 1; n <= std::min(order_max, opts.signed_ceiling); ++n) out.push_back(verify_theorem1(n, s, opts));
    for (int n = 2; n <= std::min(order_max, opts.unsigned_ceiling); ++n) out.push_back(verify_vanishing(n, s, opts));
    for (int n = 2; n <= std::min(order_max, opts.unsigned_ceiling); ++n) out.push_back(verify_caterpillar(n, s, opts));
    for (int n = 2; n <= std::min(order_max, opts.unsigned_ceiling); ++n) out.push_back(verify_average(n, s, opts));
    for (Flavor f : {Flavor::ChordSigned, Flavor::ArrowSigned})
      for (int n = 2; n <= std::min(order_max, opts.signed_ceiling - 1); ++n)
        out.push_back(verify_membership_lemma(n, f, s, opts));
    if (order_max >= 1) out.push_back(verify_stability(1, std::min(order_max, opts.signed_ceiling), s, opts));
  }
  return out;
}

Status combined_status(const std::vector<Certificate>& certs) {
  Status s = Status::Pass;
  for (const auto& c : certs) {
    if (c.status == Status::Fail) return Status::Fail;
    if (c.status == Status::Inconclusive) s = Status::Inconclusive;
  }
  return s;
}

}  // namespace polyak
