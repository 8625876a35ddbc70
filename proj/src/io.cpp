#include "polyak/io.hpp"

#include <algorithm>

#include "polyak/error.hpp"

namespace polyak {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

Status status_from_string(std::string_view s) {
  if (s == "PASS") return Status::Pass;
  if (s == "FAIL") return Status::Fail;
  if (s == "INCONCLUSIVE") return Status::Inconclusive;
  throw ValidationError("unknown status '" + std::string(s) + "'");
}

void Certificate::check(const std::string& name, bool ok, Json detail) {
  Json c = Json::object();
  c["name"] = name;
  c["ok"] = ok;
  if (!detail.is_null()) c["detail"] = std::move(detail);
  checks.push_back(std::move(c));
}

bool Certificate::all_checks_ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Json& c) { return c.at("ok").get<bool>(); });
}

namespace {

std::string child(const std::string& at, std::string_view name) { return at + "/" + std::string(name); }
std::string child(const std::string& at, std::size_t i) { return at + "/" + std::to_string(i); }

const char* type_name(const Json& j) { return j.type_name(); }

void expect_object(const Json& j, const std::string& at) {
  if (!j.is_object()) throw SchemaError(std::string("expected an object, found ") + type_name(j), at);
}

const Json& field(const Json& j, std::string_view name, const std::string& at) {
  expect_object(j, at);
  auto it = j.find(name);
  if (it == j.end()) throw SchemaError("missing field \"" + std::string(name) + "\"", child(at, name));
  return *it;
}

std::string get_string(const Json& j, std::string_view name, const std::string& at) {
  const Json& v = field(j, name, at);
  if (!v.is_string()) throw SchemaError(std::string("expected a string, found ") + type_name(v), child(at, name));
  return v.get<std::string>();
}

std::int64_t get_int(const Json& j, std::string_view name, const std::string& at) {
  const Json& v = field(j, name, at);
  if (!v.is_number_integer()) throw SchemaError(std::string("expected an integer, found ") + type_name(v), child(at, name));
  return v.get<std::int64_t>();
}

bool get_bool(const Json& j, std::string_view name, const std::string& at) {
  const Json& v = field(j, name, at);
  if (!v.is_boolean()) throw SchemaError(std::string("expected a boolean, found ") + type_name(v), child(at, name));
  return v.get<bool>();
}

const Json& get_array(const Json& j, std::string_view name, const std::string& at) {
  const Json& v = field(j, name, at);
  if (!v.is_array()) throw SchemaError(std::string("expected an array, found ") + type_name(v), child(at, name));
  return v;
}

const Json& get_object(const Json& j, std::string_view name, const std::string& at) {
  const Json& v = field(j, name, at);
  expect_object(v, child(at, name));
  return v;
}

// Runs f, turning library errors into schema errors at `at`.
template <class F>
auto at_pointer(const std::string& at, F f) -> decltype(f()) {
  try {
    return f();
  } catch (const SchemaError&) {
    throw;
  } catch (const Error& e) {
    throw SchemaError(e.what(), at);
  }
}

Skeleton read_skeleton(const Json& j, const std::string& at) {
  std::string s = get_string(j, "skeleton", at);
  return at_pointer(child(at, "skeleton"), [&] { return skeleton_from_string(s); });
}

Rational read_rational(const Json& v, const std::string& at) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (!v.is_string()) throw SchemaError(std::string("expected a rational string, found ") + type_name(v), at);
  return at_pointer(at, [&] { return rational_from_string(v.get<std::string>()); });
}

Json terms_json(const FormalSum& s) {
  Json terms = Json::array();
  for (const auto& [k, c] : s.terms()) terms.push_back(Json{{"diagram", k.text()}, {"coeff", rational_to_string(c)}});
  return terms;
}

void read_terms(FormalSum& s, const Json& arr, const std::string& at) {
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = child(at, i);
    std::string text = get_string(arr[i], "diagram", p);
    DiagramKey key = at_pointer(child(p, "diagram"), [&] { return DiagramKey::from_text(text); });
    Rational c = read_rational(field(arr[i], "coeff", p), child(p, "coeff"));
    at_pointer(child(p, "diagram"), [&] {
      s.add(key, c);
      return 0;
    });
  }
}

Json sparse_json(const SparseVec& v) {
  Json out = Json::array();
  for (const auto& [i, c] : v) out.push_back(Json::array({i, rational_to_string(c)}));
  return out;
}

}  // namespace

Json to_json(const GaussDiagram& d) {
  Json arrows = Json::array();
  for (const Arrow& a : d.arrows())
    arrows.push_back(Json{{"tail", a.tail}, {"head", a.head}, {"sign", a.sign},
                          {"style", a.style == Style::Solid ? "solid" : "dashed"}});
  return Json{{"skeleton", std::string(to_string(d.skeleton()))}, {"arrows", std::move(arrows)}};
}

GaussDiagram gauss_diagram_from_json(const Json& j, const std::string& at) {
  Skeleton skel = read_skeleton(j, at);
  const Json& arr = get_array(j, "arrows", at);
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = child(child(at, "arrows"), i);
    Arrow a;
    a.tail = static_cast<int>(get_int(arr[i], "tail", p));
    a.head = static_cast<int>(get_int(arr[i], "head", p));
    a.sign = static_cast<int>(get_int(arr[i], "sign", p));
    if (a.sign < -1 || a.sign > 1) throw SchemaError("sign must be 1, -1 or 0", child(p, "sign"));
    std::string style = get_string(arr[i], "style", p);
    if (style != "solid" && style != "dashed") throw SchemaError("style must be solid or dashed", child(p, "style"));
    a.style = style == "solid" ? Style::Solid : Style::Dashed;
    arrows.push_back(a);
  }
  return at_pointer(child(at, "arrows"), [&] { return GaussDiagram(skel, std::move(arrows)); });
}

Json to_json(const ChordDiagram& d) {
  Json chords = Json::array();
  for (const Chord& c : d.chords()) chords.push_back(Json{{"a", c.a}, {"b", c.b}, {"sign", c.sign}});
  return Json{{"skeleton", std::string(to_string(d.skeleton()))}, {"chords", std::move(chords)}};
}

ChordDiagram chord_diagram_from_json(const Json& j, const std::string& at) {
  Skeleton skel = read_skeleton(j, at);
  const Json& arr = get_array(j, "chords", at);
  std::vector<Chord> chords;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = child(child(at, "chords"), i);
    Chord c;
    c.a = static_cast<int>(get_int(arr[i], "a", p));
    c.b = static_cast<int>(get_int(arr[i], "b", p));
    c.sign = static_cast<int>(get_int(arr[i], "sign", p));
    chords.push_back(c);
  }
  return at_pointer(child(at, "chords"), [&] { return ChordDiagram(skel, std::move(chords)); });
}

Json to_json(const FormalSum& s) {
  return Json{{"flavor", std::string(to_string(s.flavor()))},
              {"skeleton", std::string(to_string(s.skeleton()))},
              {"terms", terms_json(s)}};
}

FormalSum formal_sum_from_json(const Json& j, const std::string& at) {
  std::string f = get_string(j, "flavor", at);
  Flavor flavor = at_pointer(child(at, "flavor"), [&] { return flavor_from_string(f); });
  FormalSum s(flavor, read_skeleton(j, at));
  read_terms(s, get_array(j, "terms", at), child(at, "terms"));
  return s;
}

Json to_json(const InvariantFunctional& f) {
  return Json{{"order", f.order},
              {"skeleton", std::string(to_string(f.skeleton))},
              {"profile", std::string(to_string(f.profile))},
              {"entries", terms_json(f.entries)}};
}

InvariantFunctional functional_from_json(const Json& j, const std::string& at) {
  InvariantFunctional f;
  f.order = static_cast<int>(get_int(j, "order", at));
  if (f.order < 0) throw SchemaError("order must be non-negative", child(at, "order"));
  f.skeleton = read_skeleton(j, at);
  expect_object(j, at);
  if (j.contains("profile")) {
    std::string p = get_string(j, "profile", at);
    f.profile = at_pointer(child(at, "profile"), [&] { return profile_from_string(p); });
  }
  const Flavor flavor = f.profile == Profile::Chord ? Flavor::ChordSigned : Flavor::ArrowSigned;
  f.entries = FormalSum(flavor, f.skeleton);
  read_terms(f.entries, get_array(j, "entries", at), child(at, "entries"));
  for (const auto& [k, c] : f.entries.terms())
    if (k.degree() > f.order) throw SchemaError("entry " + k.text() + " exceeds the order", child(at, "entries"));
  return f;
}

Json to_json(const WitnessPair& w) {
  return Json{{"knot", w.knot},
              {"flipped_knot", w.flipped_knot},
              {"flipped_arrow", w.flipped_arrow},
              {"value", rational_to_string(w.value)},
              {"flipped_value", rational_to_string(w.flipped_value)}};
}

WitnessPair witness_from_json(const Json& j, const std::string& at) {
  WitnessPair w;
  w.knot = get_string(j, "knot", at);
  w.flipped_knot = get_string(j, "flipped_knot", at);
  w.flipped_arrow = static_cast<int>(get_int(j, "flipped_arrow", at));
  w.value = read_rational(field(j, "value", at), child(at, "value"));
  w.flipped_value = read_rational(field(j, "flipped_value", at), child(at, "flipped_value"));
  return w;
}

Json to_json(const RelationSystem& sys) {
  Json ambient = Json::array();
  for (const auto& k : sys.ambient.keys()) ambient.push_back(k.text());
  Json rows = Json::array();
  for (std::size_t i = 0; i < sys.rows.size(); ++i) {
    const Provenance& p = sys.provenance[i];
    Json r = Json::object();
    r["kind"] = std::string(to_string(p.kind));
    r["context"] = p.context.bytes().empty() ? "" : p.context.text();
    r["site"] = p.site;
    r["params"] = p.params;
    r["terms"] = sparse_json(sys.ambient.vec(sys.rows[i]));
    rows.push_back(std::move(r));
  }
  return Json{{"flavor", std::string(to_string(sys.flavor))},
              {"skeleton", std::string(to_string(sys.skeleton))},
              {"order", sys.order},
              {"truncated", sys.truncated},
              {"ambient", std::move(ambient)},
              {"rows", std::move(rows)}};
}

RelationSystem relation_system_from_json(const Json& j, const std::string& at) {
  RelationSystem sys;
  std::string f = get_string(j, "flavor", at);
  sys.flavor = at_pointer(child(at, "flavor"), [&] { return flavor_from_string(f); });
  sys.skeleton = read_skeleton(j, at);
  sys.order = static_cast<int>(get_int(j, "order", at));
  sys.truncated = get_bool(j, "truncated", at);
  const Json& amb = get_array(j, "ambient", at);
  std::vector<DiagramKey> keys;
  for (std::size_t i = 0; i < amb.size(); ++i) {
    const std::string p = child(child(at, "ambient"), i);
    if (!amb[i].is_string()) throw SchemaError("expected a diagram key", p);
    keys.push_back(at_pointer(p, [&] { return DiagramKey::from_text(amb[i].get<std::string>()); }));
  }
  if (!std::is_sorted(keys.begin(), keys.end()) || std::adjacent_find(keys.begin(), keys.end()) != keys.end())
    throw SchemaError("ambient keys must be sorted and distinct", child(at, "ambient"));
  sys.ambient = Ambient(keys);
  const Json& rows = get_array(j, "rows", at);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string p = child(child(at, "rows"), i);
    Provenance prov;
    std::string kind = get_string(rows[i], "kind", p);
    prov.kind = at_pointer(child(p, "kind"), [&] { return relation_kind_from_string(kind); });
    std::string ctx = get_string(rows[i], "context", p);
    if (!ctx.empty()) prov.context = at_pointer(child(p, "context"), [&] { return DiagramKey::from_text(ctx); });
    for (const Json& e : get_array(rows[i], "site", p)) {
      if (!e.is_number_integer()) throw SchemaError("site entries are integers", child(p, "site"));
      prov.site.push_back(e.get<int>());
    }
    for (const Json& e : get_array(rows[i], "params", p)) {
      if (!e.is_number_integer()) throw SchemaError("params are integers", child(p, "params"));
      prov.params.push_back(e.get<int>());
    }
    SparseVec v;
    const Json& terms = get_array(rows[i], "terms", p);
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const std::string tp = child(child(p, "terms"), t);
      if (!terms[t].is_array() || terms[t].size() != 2 || !terms[t][0].is_number_integer())
        throw SchemaError("expected [column, coeff]", tp);
      int col = terms[t][0].get<int>();
      if (col < 0 || col >= sys.ambient.size()) throw SchemaError("column out of range", tp);
      v.emplace_back(col, read_rational(terms[t][1], child(tp, "1")));
    }
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    sys.rows.push_back(sys.ambient.sum(v, sys.flavor, sys.skeleton));
    sys.provenance.push_back(std::move(prov));
  }
  return sys;
}

Json to_json(const Certificate& c, bool with_runtime) {
  Json j = Json::object();
  j["schema"] = "polyak-lab/cert/1";
  j["claim"] = c.claim;
  j["params"] = c.params;
  j["status"] = std::string(to_string(c.status));
  j["dims"] = c.dims;
  j["basis"] = c.basis;
  j["witnesses"] = c.witnesses;
  j["checks"] = c.checks;
  j["counts"] = Json{{"diagrams", c.diagrams}, {"relations", c.relations}};
  j["runtime_ms"] = with_runtime ? c.runtime_ms : 0;
  j["version"] = c.version;
  j["fingerprints"] = c.fingerprints;
  return j;
}

Certificate certificate_from_json(const Json& j, const std::string& at) {
  Certificate c;
  if (get_string(j, "schema", at) != "polyak-lab/cert/1") throw SchemaError("unknown schema", child(at, "schema"));
  c.claim = get_string(j, "claim", at);
  c.params = get_object(j, "params", at);
  std::string st = get_string(j, "status", at);
  c.status = at_pointer(child(at, "status"), [&] { return status_from_string(st); });
  c.dims = get_object(j, "dims", at);
  c.basis = get_array(j, "basis", at);
  c.witnesses = get_array(j, "witnesses", at);
  if (j.contains("checks")) c.checks = get_array(j, "checks", at);
  const Json& counts = get_object(j, "counts", at);
  c.diagrams = get_int(counts, "diagrams", child(at, "counts"));
  c.relations = get_int(counts, "relations", child(at, "counts"));
  c.runtime_ms = get_int(j, "runtime_ms", at);
  c.version = get_string(j, "version", at);
  c.fingerprints = get_object(j, "fingerprints", at);
  return c;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
  }
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace polyak
