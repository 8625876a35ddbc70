// polyak-lab: command-line front end.
//
// Exit codes: 0 success/PASS, 1 FAIL, 2 INCONCLUSIVE, 64 usage, 65 bad input data,
// 70 internal error. Every error goes to stderr as "error[<code>]: <message>".

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "polyak/cache.hpp"
#include "polyak/error.hpp"
#include "polyak/gauss_code.hpp"
#include "polyak/io.hpp"
#include "polyak/verifier.hpp"

using namespace polyak;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitInternal = 70;

struct Failure {
  int exit_code;
  std::string code;
  std::string message;
};

// Layered settings: defaults < polyak-lab.toml < VKFT_* environment < flags.
struct RunConfig {
  std::string cache_dir;  // empty: no cache
  int ceiling = kDefaultEnumerationCeiling;
  int signed_ceiling = 4;
  int unsigned_ceiling = 5;
  int witness_bound = 4;
  std::string output;  // empty: stdout
  std::string format = "json";
  int jobs = 0;  // 0: hardware concurrency
  std::uint64_t seed = 0;
  bool deterministic = false;
};

using Settings = std::map<std::string, std::string>;

const char* const kKeys[] = {"cache_dir", "ceiling", "signed_ceiling", "unsigned_ceiling", "witness_bound",
                             "output",    "format",  "jobs",           "seed",             "deterministic"};

Settings read_config_file(const std::string& path, bool required) {
  Settings out;
  std::ifstream in(path);
  if (!in) {
    if (required) throw Failure{kExitUsage, "config", "cannot read config file '" + path + "'"};
    return out;
  }
  std::vector<CLI::ConfigItem> items;
  try {
    items = CLI::ConfigTOML().from_config(in);
  } catch (const CLI::ParseError& e) {
    throw Failure{kExitData, "config", path + ": " + e.what()};
  }
  for (const auto& item : items) {
    if (item.name == "++" || item.name == "--" || item.inputs.empty()) continue;
    std::string key = item.name;
    std::replace(key.begin(), key.end(), '-', '_');
    if (std::find(std::begin(kKeys), std::end(kKeys), key) == std::end(kKeys))
      throw Failure{kExitData, "config", path + ": unknown key '" + item.name + "'"};
    out[key] = item.inputs.front();
  }
  return out;
}

Settings read_environment() {
  Settings out;
  for (const char* key : kKeys) {
    std::string name = "VKFT_";
    for (const char* c = key; *c; ++c) name += static_cast<char>(std::toupper(static_cast<unsigned char>(*c)));
    if (const char* v = std::getenv(name.c_str()); v && *v) out[key] = v;
  }
  return out;
}

int to_int(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    int x = std::stoi(v, &used);
    if (used == v.size()) return x;
  } catch (const std::exception&) {
  }
  throw Failure{kExitUsage, "config", "setting '" + key + "' expects an integer, got '" + v + "'"};
}

void apply_settings(RunConfig& rc, const Settings& s) {
  for (const auto& [k, v] : s) {
    if (k == "cache_dir") rc.cache_dir = v;
    else if (k == "ceiling") rc.ceiling = to_int(k, v);
    else if (k == "signed_ceiling") rc.signed_ceiling = to_int(k, v);
    else if (k == "unsigned_ceiling") rc.unsigned_ceiling = to_int(k, v);
    else if (k == "witness_bound") rc.witness_bound = to_int(k, v);
    else if (k == "output") rc.output = v;
    else if (k == "format") rc.format = v;
    else if (k == "jobs") rc.jobs = to_int(k, v);
    else if (k == "seed") rc.seed = static_cast<std::uint64_t>(std::stoull(v));
    else if (k == "deterministic") rc.deterministic = v == "true" || v == "1" || v == "yes";
  }
}

void emit(const RunConfig& rc, const std::string& text) {
  if (rc.output.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(rc.output, std::ios::binary);
  if (!out || !(out << text)) throw Failure{kExitData, "io", "cannot write '" + rc.output + "'"};
}

std::string format_sum(const FormalSum& v) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : v.terms()) {
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    Rational a = abs(c);
    if (a != 1) os << rational_to_string(a) << "*";
    os << "[" << k.text() << "]";
  }
  if (first) os << "0";
  return os.str();
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kExitData, "io", "cannot read '" + path + "'"};
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

// Accepts a functional document or an `invariants` listing plus an index.
InvariantFunctional load_functional(const std::string& path, int index) {
  Json j = read_json_file(path);
  if (j.is_object() && j.contains("basis")) {
    const Json& basis = j["basis"];
    if (!basis.is_array() || index < 0 || static_cast<std::size_t>(index) >= basis.size())
      throw SchemaError("basis index " + std::to_string(index) + " out of range", "/basis");
    return functional_from_json(basis[static_cast<std::size_t>(index)], "/basis/" + std::to_string(index));
  }
  return functional_from_json(j);
}

int status_exit(Status s) {
  switch (s) {
    case Status::Pass: return 0;
    case Status::Fail: return kExitFail;
    case Status::Inconclusive: return kExitInconclusive;
  }
  return kExitInternal;
}

std::string certificate_table(const Certificate& c) {
  std::ostringstream os;
  os << c.claim << " " << c.params.dump() << ": " << to_string(c.status) << "\n";
  os << "  dims " << c.dims.dump() << "\n";
  for (const auto& chk : c.checks)
    os << "  [" << (chk.value("ok", false) ? "ok" : "FAILED") << "] " << chk.value("name", "") << "\n";
  return os.str();
}

RelationSystem build_relations(const std::string& kind, int n, Skeleton skeleton, const std::string& flavor,
                               bool untruncated) {
  if (kind == "polyak") return generate_polyak(n, skeleton, !untruncated);
  if (kind == "chord") return generate_chord_relations(n, skeleton, !untruncated);
  if (kind == "virt") return profile_relations(n, skeleton, Profile::GpvVirtualization);
  const RelationKind k = relation_kind_from_string(kind);
  switch (k) {
    case RelationKind::OneTSigned:
    case RelationKind::NS:
    case RelationKind::SixTSigned:
      return generate_signed_family(k, n, skeleton, flavor.empty() ? Flavor::ChordSigned : flavor_from_string(flavor));
    case RelationKind::OneT:
    case RelationKind::SixT:
    case RelationKind::FourT:
    case RelationKind::TwoT:
      return generate_unsigned(k, n, skeleton, flavor.empty() ? Flavor::ChordUnsigned : flavor_from_string(flavor));
    default:
      throw ValidationError("relation kind '" + kind + "' cannot be generated on its own");
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Gauss-diagram invariants of virtual knots: enumeration, relations, invariant spaces and verification"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", tool_version());

  std::string config_path;
  std::string skeleton_s = "circle";
  std::string format_s, output_s, cache_s;
  int jobs = 0, ceiling = 0;
  std::uint64_t seed = 0;
  bool deterministic = false;

  auto* config_opt = app.add_option("--config", config_path, "settings file (key = value); default ./polyak-lab.toml");
  auto* format_opt = app.add_option("--format", format_s, "output format")->check(CLI::IsMember({"json", "table"}));
  auto* output_opt = app.add_option("-o,--output", output_s, "write output to a file instead of stdout");
  auto* cache_opt = app.add_option("--cache-dir", cache_s, "cache directory for invariant spaces");
  auto* jobs_opt = app.add_option("-j,--jobs", jobs, "worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
  auto* ceiling_opt = app.add_option("--ceiling", ceiling, "enumeration ceiling")->check(CLI::PositiveNumber);
  auto* seed_opt = app.add_option("--seed", seed, "seed for row shuffling and randomized suites");
  auto* det_opt = app.add_flag("--deterministic", deterministic, "write runtime_ms as 0");

  auto add_skeleton = [&](CLI::App* sub) {
    sub->add_option("-s,--skeleton", skeleton_s, "circle or line")->check(CLI::IsMember({"circle", "line"}));
  };

  // enum
  auto* en = app.add_subcommand("enum", "list canonical diagrams");
  std::string flavor_s;
  int exactly = -1, up_to = -1;
  add_skeleton(en);
  en->add_option("-f,--flavor", flavor_s, "gauss, arrow-signed, arrow-unsigned, chord-signed, chord-unsigned")
      ->required();
  auto* ex_opt = en->add_option("--exactly", exactly, "exactly N arrows/chords")->check(CLI::NonNegativeNumber);
  auto* up_opt = en->add_option("--up-to", up_to, "at most N arrows/chords")->check(CLI::NonNegativeNumber);
  ex_opt->excludes(up_opt);

  // relations
  auto* rel = app.add_subcommand("relations", "export a relation system");
  std::string kind_s = "polyak", rel_flavor;
  int order = 1;
  bool untruncated = false;
  add_skeleton(rel);
  rel->add_option("-k,--kind", kind_s, "polyak, chord, virt, 1T, 6T, 4T, 2T, 1T+-, NS, 6T+-");
  rel->add_option("-n,--order", order, "order n")->check(CLI::NonNegativeNumber);
  rel->add_option("-f,--flavor", rel_flavor, "flavor for the 1T/6T/4T/2T families");
  rel->add_flag("--untruncated", untruncated, "keep terms above the order (polyak, chord)");

  // invariants
  auto* inv = app.add_subcommand("invariants", "basis of the invariant space");
  std::string profile_s = "gpv";
  add_skeleton(inv);
  inv->add_option("-n,--order", order, "order n")->check(CLI::NonNegativeNumber);
  inv->add_option("-p,--profile", profile_s, "gpv, gpv+virtualization, chord");

  // eval
  auto* ev = app.add_subcommand("eval", "evaluate an invariant on a Gauss code");
  std::string invariant_path, knot;
  int index = 0;
  ev->add_option("-i,--invariant", invariant_path, "functional JSON or invariants output")->required();
  ev->add_option("--index", index, "basis index when the file is an invariants listing");
  ev->add_option("-k,--knot", knot, "Gauss code, e.g. O1+,U2+,O2+,U1+ (prefix L: for long knots)")->required();

  // witness
  auto* wi = app.add_subcommand("witness", "find a knot and an arrow flip that change the invariant");
  int bound = 0;
  wi->add_option("-i,--invariant", invariant_path, "functional JSON or invariants output")->required();
  wi->add_option("--index", index, "basis index when the file is an invariants listing");
  auto* bound_opt = wi->add_option("--bound", bound, "maximum crossings to search")->check(CLI::PositiveNumber);

  // verify
  auto* ve = app.add_subcommand("verify", "run a verification claim and print its certificate");
  std::string claim;
  int order_min = 1, order_max = 3, signed_ceiling = 0, unsigned_ceiling = 0, witness_bound = 0;
  std::string ver_flavor = "chord-signed";
  ve->add_option("claim", claim, "theorem1, vanishing, caterpillar, average, membership, stability, all")
      ->required()
      ->check(CLI::IsMember({"theorem1", "vanishing", "caterpillar", "average", "membership", "stability", "all"}));
  add_skeleton(ve);
  ve->add_option("-n,--order", order, "order n")->check(CLI::NonNegativeNumber);
  ve->add_option("--order-min", order_min, "lower order for stability")->check(CLI::NonNegativeNumber);
  ve->add_option("--order-max", order_max, "upper order for stability and all")->check(CLI::NonNegativeNumber);
  ve->add_option("-f,--flavor", ver_flavor, "membership flavor")
      ->check(CLI::IsMember({"chord-signed", "arrow-signed"}));
  auto* sc_opt = ve->add_option("--signed-ceiling", signed_ceiling, "largest order for signed computations");
  auto* uc_opt = ve->add_option("--unsigned-ceiling", unsigned_ceiling, "largest order for unsigned chord computations");
  auto* wb_opt = ve->add_option("--witness-bound", witness_bound, "crossing bound for witness search");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error[usage]: " << e.what() << "\n";
    std::cerr << "run with --help for usage\n";
    return kExitUsage;
  }

  RunConfig rc;
  if (config_opt->count()) apply_settings(rc, read_config_file(config_path, true));
  else if (const char* env_cfg = std::getenv("VKFT_CONFIG"); env_cfg && *env_cfg) apply_settings(rc, read_config_file(env_cfg, true));
  else apply_settings(rc, read_config_file("polyak-lab.toml", false));
  apply_settings(rc, read_environment());
  if (format_opt->count()) rc.format = format_s;
  if (output_opt->count()) rc.output = output_s;
  if (cache_opt->count()) rc.cache_dir = cache_s;
  if (jobs_opt->count()) rc.jobs = jobs;
  if (ceiling_opt->count()) rc.ceiling = ceiling;
  if (seed_opt->count()) rc.seed = seed;
  if (det_opt->count()) rc.deterministic = deterministic;
  if (sc_opt->count()) rc.signed_ceiling = signed_ceiling;
  if (uc_opt->count()) rc.unsigned_ceiling = unsigned_ceiling;
  if (wb_opt->count()) rc.witness_bound = witness_bound;
  if (bound_opt->count()) rc.witness_bound = bound;
  if (rc.format != "json" && rc.format != "table")
    throw Failure{kExitUsage, "usage", "format must be json or table, got '" + rc.format + "'"};
  if (rc.jobs < 0) throw Failure{kExitUsage, "usage", "jobs must be non-negative"};
  if (rc.jobs > 0) set_parallelism(rc.jobs);
  const bool json = rc.format == "json";
  const Skeleton skeleton = skeleton_from_string(skeleton_s);

  if (*en) {
    const Flavor flavor = flavor_from_string(flavor_s);
    const bool up = up_opt->count() > 0;
    if (!up && !ex_opt->count()) throw Failure{kExitUsage, "usage", "enum needs --exactly N or --up-to N"};
    const int n = up ? up_to : exactly;
    auto keys = enumerate_diagrams(skeleton, flavor, n, up ? CountMode::UpTo : CountMode::Exactly, rc.ceiling);
    if (json) {
      Json out = Json::object();
      out["skeleton"] = std::string(to_string(skeleton));
      out["flavor"] = std::string(to_string(flavor));
      out["mode"] = up ? "up-to" : "exactly";
      out["n"] = n;
      out["count"] = keys.size();
      out["diagrams"] = Json::array();
      for (const auto& k : keys) out["diagrams"].push_back(k.text());
      emit(rc, dump_json(out));
    } else {
      std::ostringstream os;
      for (const auto& k : keys) {
        os << k.text();
        if (flavor == Flavor::Gauss) os << "\t" << emit_gauss_code(gauss_from_key(k));
        os << "\n";
      }
      os << keys.size() << " diagrams\n";
      emit(rc, os.str());
    }
    return 0;
  }

  if (*rel) {
    RelationSystem sys = build_relations(kind_s, order, skeleton, rel_flavor, untruncated);
    if (json) {
      emit(rc, dump_json(to_json(sys)));
    } else {
      std::ostringstream os;
      os << sys.rows.size() << " rows over " << sys.ambient.size() << " diagrams\n";
      for (std::size_t i = 0; i < sys.rows.size(); ++i)
        os << to_string(sys.provenance[i].kind) << "\t" << format_sum(sys.rows[i]) << "\n";
      emit(rc, os.str());
    }
    return 0;
  }

  VerifyOptions vo;
  vo.signed_ceiling = rc.signed_ceiling;
  vo.unsigned_ceiling = rc.unsigned_ceiling;
  vo.witness_bound = rc.witness_bound;
  vo.shuffle_seed = rc.seed;
  std::optional<Cache> cache;
  if (!rc.cache_dir.empty()) {
    cache.emplace(rc.cache_dir, tool_version());
    vo.cache = &*cache;
  }

  if (*inv) {
    const Profile profile = profile_from_string(profile_s);
    if (order > rc.signed_ceiling)
      throw ResourceLimitError("order " + std::to_string(order) + " exceeds the signed ceiling " +
                               std::to_string(rc.signed_ceiling));
    SpaceResult s = compute_invariant_space(order, skeleton, profile, vo);
    if (json) {
      Json out = Json::object();
      out["order"] = order;
      out["skeleton"] = std::string(to_string(skeleton));
      out["profile"] = std::string(to_string(profile));
      out["dimension"] = s.basis.size();
      out["relations"] = s.rows;
      out["diagrams"] = s.ambient;
      out["fingerprint"] = s.fingerprint;
      out["basis"] = Json::array();
      for (const auto& f : s.basis) out["basis"].push_back(to_json(f));
      emit(rc, dump_json(out));
    } else {
      std::ostringstream os;
      os << "dimension " << s.basis.size() << " (" << s.rows << " relations, " << s.ambient << " diagrams)\n";
      for (std::size_t i = 0; i < s.basis.size(); ++i) os << "v" << i << " = " << format_sum(s.basis[i].entries) << "\n";
      emit(rc, os.str());
    }
    return 0;
  }

  if (*ev) {
    InvariantFunctional f = load_functional(invariant_path, index);
    GaussDiagram k = parse_gauss_code(knot);
    emit(rc, rational_to_string(evaluate(f, k)) + "\n");
    return 0;
  }

  if (*wi) {
    InvariantFunctional f = load_functional(invariant_path, index);
    auto w = find_witness(f, rc.witness_bound);
    if (!w) {
      std::cerr << (f.is_constant() ? "functional is constant; no witness exists\n"
                                    : "no witness within " + std::to_string(rc.witness_bound) + " crossings\n");
      return kExitInconclusive;
    }
    if (json) {
      emit(rc, dump_json(to_json(*w)));
    } else {
      emit(rc, w->knot + " -> " + rational_to_string(w->value) + "\n" + w->flipped_knot + " -> " +
                   rational_to_string(w->flipped_value) + "  (arrow " + std::to_string(w->flipped_arrow) +
                   " reversed)\n");
    }
    return 0;
  }

  if (*ve) {
    const bool with_runtime = !rc.deterministic;
    std::vector<Certificate> certs;
    if (claim == "theorem1") certs.push_back(verify_theorem1(order, skeleton, vo));
    else if (claim == "vanishing") certs.push_back(verify_vanishing(order, skeleton, vo));
    else if (claim == "caterpillar") certs.push_back(verify_caterpillar(order, skeleton, vo));
    else if (claim == "average") certs.push_back(verify_average(order, skeleton, vo));
    else if (claim == "membership") certs.push_back(verify_membership_lemma(order, flavor_from_string(ver_flavor), skeleton, vo));
    else if (claim == "stability") certs.push_back(verify_stability(order_min, order_max, skeleton, vo));
    else certs = verify_all(order_max, vo);

    const Status status = combined_status(certs);
    if (json) {
      if (claim == "all") {
        Json out = Json::object();
        out["status"] = std::string(to_string(status));
        out["certificates"] = Json::array();
        for (const auto& c : certs) out["certificates"].push_back(to_json(c, with_runtime));
        emit(rc, dump_json(out));
      } else {
        emit(rc, dump_json(to_json(certs.front(), with_runtime)));
      }
    } else {
      std::string text;
      for (const auto& c : certs) text += certificate_table(c);
      if (claim == "all") text += "overall: " + std::string(to_string(status)) + "\n";
      emit(rc, text);
    }
    for (const auto& c : certs)
      if (c.status != Status::Pass) std::cerr << c.claim << " " << c.params.dump() << ": " << to_string(c.status) << "\n";
    return status_exit(status);
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  auto fail = [](int exit_code, std::string_view code, std::string_view message) {
    std::cerr << "error[" << code << "]: " << message << "\n";
    return exit_code;
  };
  try {
    return run(argc, argv);
  } catch (const Failure& f) {
    return fail(f.exit_code, f.code, f.message);
  } catch (const ResourceLimitError& e) {
    return fail(kExitUsage, "ceiling", e.what());
  } catch (const ParseError& e) {
    return fail(kExitData, "parse", e.what());
  } catch (const SchemaError& e) {
    return fail(kExitData, "schema", e.what());
  } catch (const FlavorError& e) {
    return fail(kExitData, "flavor", e.what());
  } catch (const ValidationError& e) {
    return fail(kExitData, "invalid", e.what());
  } catch (const PreconditionError& e) {
    return fail(kExitData, "precondition", e.what());
  } catch (const ConventionMismatchError& e) {
    return fail(kExitData, "convention", e.what());
  } catch (const std::exception& e) {
    return fail(kExitInternal, "internal", e.what());
  }
}
