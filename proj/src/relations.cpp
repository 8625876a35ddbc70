#include "polyak/relations.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <thread>

#include "polyak/diagram_maps.hpp"
#include "polyak/error.hpp"
#include "polyak/gpv.hpp"

namespace polyak {

namespace {

struct KindName {
  RelationKind kind;
  std::string_view name;
};

constexpr KindName kKindNames[] = {
    {RelationKind::PI, "PI"},       {RelationKind::PII, "PII"},      {RelationKind::PIII, "PIII"},
    {RelationKind::RI, "RI"},       {RelationKind::RII, "RII"},      {RelationKind::RIII, "RIII"},
    {RelationKind::OneTSigned, "1T+-"}, {RelationKind::NS, "NS"},   {RelationKind::SixTSigned, "6T+-"},
    {RelationKind::OneT, "1T"},     {RelationKind::SixT, "6T"},      {RelationKind::FourT, "4T"},
    {RelationKind::TwoT, "2T"},     {RelationKind::Flip, "flip"},
};

std::atomic<int> g_jobs{0};

// Runs fn(0..count-1) on worker threads; results come back in index order.
template <class F>
auto parallel_collect(std::size_t count, F fn) -> std::vector<decltype(fn(std::size_t{0}))> {
  using R = decltype(fn(std::size_t{0}));
  std::vector<R> out(count);
  const int workers = std::max(1, std::min<int>(parallelism(), static_cast<int>(count)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          out[i] = fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

using Emitted = std::vector<std::pair<FormalSum, Provenance>>;

struct TermsLess {
  bool operator()(const FormalSum::Terms& a, const FormalSum::Terms& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), [](const auto& x, const auto& y) {
      if (x.first != y.first) return x.first < y.first;
      return x.second < y.second;
    });
  }
};

// Normalizes, drops zero rows, dedupes and sorts.
void collect_rows(RelationSystem& sys, const std::vector<Emitted>& batches) {
  std::map<FormalSum::Terms, std::pair<FormalSum, Provenance>, TermsLess> unique;
  for (const auto& batch : batches)
    for (const auto& [row, prov] : batch) {
      if (row.is_zero()) continue;
      FormalSum r = row.normalized();
      unique.try_emplace(r.terms(), r, prov);
    }
  sys.rows.clear();
  sys.provenance.clear();
  for (auto& [terms, entry] : unique) {
    sys.rows.push_back(std::move(entry.first));
    sys.provenance.push_back(std::move(entry.second));
  }
}

void set_support_ambient(RelationSystem& sys) {
  std::vector<DiagramKey> keys;
  for (const auto& r : sys.rows)
    for (const auto& [k, c] : r.terms()) keys.push_back(k);
  sys.ambient = Ambient(std::move(keys));
}

std::vector<Site> sites_for(Skeleton, int length, int markers) { return enumerate_sites(length, markers); }

int context_size(RelationKind kind, int n) { return kind == RelationKind::PIII ? n - 2 : n - 1; }

std::vector<std::vector<int>> move_variants(RelationKind kind) {
  switch (kind) {
    case RelationKind::PI: return {{1, 1}, {1, 0}, {-1, 1}, {-1, 0}};
    case RelationKind::PII: return {{1, 1}, {1, 0}, {-1, 1}, {-1, 0}};
    case RelationKind::PIII: {
      std::vector<std::vector<int>> out;
      for (int i = 0; i < static_cast<int>(r3_configurations().size()); ++i) out.push_back({i});
      return out;
    }
    default: throw ValidationError("not an R-move relation kind");
  }
}

int markers_of(RelationKind kind) {
  switch (kind) {
    case RelationKind::PI: return 1;
    case RelationKind::PII: return 2;
    default: return 3;
  }
}

// Rows of one move kind over every context with k arrows.
std::vector<Emitted> emit_polyak(RelationKind kind, int k, Skeleton skeleton, int truncate_at) {
  auto contexts = enumerate_diagrams(skeleton, Flavor::ArrowSigned, k, CountMode::Exactly);
  const auto variants = move_variants(kind);
  return parallel_collect(contexts.size(), [&](std::size_t i) {
    Emitted out;
    GaussDiagram ctx = gauss_from_key(contexts[i]);
    for (const Site& site : sites_for(skeleton, ctx.endpoints(), markers_of(kind)))
      for (const auto& params : variants)
        out.emplace_back(polyak_row(ctx, site, kind, params, truncate_at), Provenance{kind, contexts[i], site, params});
    return out;
  });
}

std::vector<Emitted> polyak_batches(int n, Skeleton skeleton, bool truncate) {
  std::vector<Emitted> batches;
  for (RelationKind kind : {RelationKind::PI, RelationKind::PII, RelationKind::PIII})
    for (int k = 0; k <= context_size(kind, n); ++k) {
      auto part = emit_polyak(kind, k, skeleton, truncate ? n : -1);
      std::move(part.begin(), part.end(), std::back_inserter(batches));
    }
  return batches;
}

RelationKind chord_kind(RelationKind k) {
  switch (k) {
    case RelationKind::PI: return RelationKind::RI;
    case RelationKind::PII: return RelationKind::RII;
    case RelationKind::PIII: return RelationKind::RIII;
    default: return k;
  }
}

}  // namespace

std::string_view to_string(RelationKind k) {
  for (const auto& e : kKindNames)
    if (e.kind == k) return e.name;
  return "?";
}

RelationKind relation_kind_from_string(std::string_view s) {
  for (const auto& e : kKindNames)
    if (e.name == s) return e.kind;
  throw ValidationError("unknown relation kind '" + std::string(s) + "'");
}

std::vector<SparseVec> RelationSystem::vectors() const {
  std::vector<SparseVec> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(ambient.vec(r));
  return out;
}

void append_rows(RelationSystem& sys, std::vector<FormalSum> rows, std::vector<Provenance> provenance) {
  if (rows.size() != provenance.size()) throw ValidationError("each row needs a provenance entry");
  Emitted all;
  for (std::size_t i = 0; i < sys.rows.size(); ++i) all.emplace_back(std::move(sys.rows[i]), std::move(sys.provenance[i]));
  for (std::size_t i = 0; i < rows.size(); ++i) all.emplace_back(std::move(rows[i]), std::move(provenance[i]));
  collect_rows(sys, {all});
}

void set_parallelism(int jobs) { g_jobs = jobs; }

int parallelism() {
  int j = g_jobs.load();
  if (j > 0) return j;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

FormalSum polyak_row(const GaussDiagram& context, const Site& site, RelationKind kind, const std::vector<int>& params,
                     int truncate_at) {
  const GaussDiagram ctx = context.with_style(Style::Dashed);
  FormalSum row(Flavor::ArrowSigned, context.skeleton());
  switch (kind) {
    case RelationKind::PI: {
      const bool tail_first = params.at(1) != 0;
      std::vector<std::vector<Token>> blocks{{Token{0, !tail_first}, Token{0, tail_first}}};
      GaussDiagram left = fill_site(ctx, site, blocks, {Arrow{0, 0, params.at(0), Style::Solid}}, Style::Dashed);
      row = i_gpv(left) - i_gpv(ctx);
      break;
    }
    case RelationKind::PII: {
      const int s = params.at(0);
      std::vector<std::vector<Token>> blocks{{Token{0, false}, Token{1, false}}, {Token{0, true}, Token{1, true}}};
      if (params.at(1) == 0) std::swap(blocks[1][0], blocks[1][1]);
      GaussDiagram left =
          fill_site(ctx, site, blocks, {Arrow{0, 0, s, Style::Solid}, Arrow{0, 0, -s, Style::Solid}}, Style::Dashed);
      row = i_gpv(left) - i_gpv(ctx);
      break;
    }
    case RelationKind::PIII: {
      const R3Config& c = r3_configurations().at(static_cast<std::size_t>(params.at(0)));
      std::vector<Arrow> arrows;
      for (int id = 0; id < 3; ++id) arrows.push_back(Arrow{0, 0, c.sign[static_cast<std::size_t>(id)], Style::Solid});
      auto lb = r3_blocks(c);
      auto rb = r3_blocks(c.reversed());
      GaussDiagram left = fill_site(ctx, site, {lb.begin(), lb.end()}, arrows, Style::Dashed);
      GaussDiagram right = fill_site(ctx, site, {rb.begin(), rb.end()}, arrows, Style::Dashed);
      row = i_gpv(left) - i_gpv(right);
      break;
    }
    default: throw ValidationError("polyak_row expects PI, PII or PIII");
  }
  return truncate_at >= 0 ? truncate(row, truncate_at) : row;
}

RelationSystem generate_polyak(int n, Skeleton skeleton, bool truncate) {
  if (n < 0) throw ValidationError("order must be non-negative");
  RelationSystem sys;
  sys.flavor = Flavor::ArrowSigned;
  sys.skeleton = skeleton;
  sys.order = n;
  sys.truncated = truncate;
  collect_rows(sys, polyak_batches(n, skeleton, truncate));
  if (truncate) sys.ambient = Ambient(enumerate_diagrams(skeleton, Flavor::ArrowSigned, n, CountMode::UpTo));
  else set_support_ambient(sys);
  return sys;
}

RelationSystem generate_chord_relations(int n, Skeleton skeleton, bool truncate) {
  RelationSystem polyak = generate_polyak(n, skeleton, truncate);
  RelationSystem sys;
  sys.flavor = Flavor::ChordSigned;
  sys.skeleton = skeleton;
  sys.order = n;
  sys.truncated = truncate;
  Emitted barred;
  for (std::size_t i = 0; i < polyak.rows.size(); ++i) {
    Provenance p = polyak.provenance[i];
    p.kind = chord_kind(p.kind);
    barred.emplace_back(bar(polyak.rows[i]), std::move(p));
  }
  collect_rows(sys, {barred});
  if (truncate) sys.ambient = Ambient(enumerate_diagrams(skeleton, Flavor::ChordSigned, n, CountMode::UpTo));
  else set_support_ambient(sys);
  return sys;
}

RelationSystem generate_signed_family(RelationKind kind, int n, Skeleton skeleton, Flavor flavor) {
  if (flavor != Flavor::ArrowSigned && flavor != Flavor::ChordSigned)
    throw FlavorError("signed relation families live in arrow-signed or chord-signed space");
  RelationKind move;
  switch (kind) {
    case RelationKind::OneTSigned: move = RelationKind::PI; break;
    case RelationKind::NS: move = RelationKind::PII; break;
    case RelationKind::SixTSigned: move = RelationKind::PIII; break;
    default: throw ValidationError("not a signed relation family: " + std::string(to_string(kind)));
  }
  const int k = context_size(move, n);
  RelationSystem sys;
  sys.flavor = flavor;
  sys.skeleton = skeleton;
  sys.order = n;
  if (k < 0) {
    sys.ambient = Ambient(enumerate_diagrams(skeleton, flavor, n, CountMode::Exactly));
    return sys;
  }
  auto batches = emit_polyak(move, k, skeleton, -1);
  for (auto& batch : batches)
    for (auto& [row, prov] : batch) {
      row = homogeneous_part(row, n);
      if (flavor == Flavor::ChordSigned) row = bar(row);
      prov.kind = kind;
    }
  collect_rows(sys, batches);
  sys.ambient = Ambient(enumerate_diagrams(skeleton, flavor, n, CountMode::Exactly));
  return sys;
}

FormalSum four_term(const ChordDiagram& context, const Site& site) {
  const ChordDiagram ctx = context.without_signs();
  FormalSum row(Flavor::ChordUnsigned, context.skeleton());
  // chord 0 = p, chord 1 = q (terms 1, 2) or r (terms 3, 4)
  row.add(fill_site(ctx, site, {{0, 1}, {0}, {1}}, {0, 0}), 1);
  row.add(fill_site(ctx, site, {{1, 0}, {0}, {1}}, {0, 0}), -1);
  row.add(fill_site(ctx, site, {{0}, {0, 1}, {1}}, {0, 0}), 1);
  row.add(fill_site(ctx, site, {{0}, {1, 0}, {1}}, {0, 0}), -1);
  return row;
}

RelationSystem generate_unsigned(RelationKind kind, int n, Skeleton skeleton, Flavor flavor) {
  if (n < 1) throw ValidationError("unsigned relation families need n >= 1");
  if (flavor != Flavor::ArrowUnsigned && flavor != Flavor::ChordUnsigned)
    throw FlavorError("unsigned relation families live in arrow-unsigned or chord-unsigned space");
  const bool chord = flavor == Flavor::ChordUnsigned;
  if ((kind == RelationKind::FourT || kind == RelationKind::TwoT) && !chord)
    throw FlavorError(std::string(to_string(kind)) + " relations are defined on unsigned chord diagrams");
  RelationSystem sys;
  sys.flavor = flavor;
  sys.skeleton = skeleton;
  sys.order = n;
  const auto diagrams = enumerate_diagrams(skeleton, flavor, n, CountMode::Exactly);
  sys.ambient = Ambient(diagrams);
  Emitted rows;
  switch (kind) {
    case RelationKind::OneT:
      for (const DiagramKey& k : diagrams) {
        bool iso = chord ? chord_from_key(k).has_isolated_chord() : gauss_from_key(k).has_isolated_arrow();
        if (iso) rows.emplace_back(FormalSum::of(k), Provenance{kind, k, {}, {}});
      }
      break;
    case RelationKind::SixT: {
      RelationSystem signed_rows = generate_signed_family(RelationKind::SixTSigned, n, skeleton, Flavor::ArrowSigned);
      for (std::size_t i = 0; i < signed_rows.rows.size(); ++i) {
        FormalSum v = chord ? xi(bar(signed_rows.rows[i])) : xi(signed_rows.rows[i]);
        Provenance p = signed_rows.provenance[i];
        p.kind = kind;
        rows.emplace_back(std::move(v), std::move(p));
      }
      break;
    }
    case RelationKind::FourT: {
      if (n < 2) break;
      for (const DiagramKey& ck : enumerate_diagrams(skeleton, Flavor::ChordUnsigned, n - 2, CountMode::Exactly)) {
        ChordDiagram ctx = chord_from_key(ck);
        for (const Site& site : sites_for(skeleton, ctx.endpoints(), 3))
          rows.emplace_back(four_term(ctx, site), Provenance{kind, ck, site, {}});
      }
      break;
    }
    case RelationKind::TwoT:
      for (const DiagramKey& k : diagrams) {
        ChordDiagram d = chord_from_key(k);
        const int m = d.endpoints();
        const int last = skeleton == Skeleton::Circle && m > 2 ? m - 1 : m - 2;
        std::vector<int> owner(static_cast<std::size_t>(m));
        for (int c = 0; c < d.size(); ++c) {
          owner[static_cast<std::size_t>(d.chords()[static_cast<std::size_t>(c)].a)] = c;
          owner[static_cast<std::size_t>(d.chords()[static_cast<std::size_t>(c)].b)] = c;
        }
        for (int p = 0; p <= last; ++p) {
          if (owner[static_cast<std::size_t>(p)] == owner[static_cast<std::size_t>((p + 1) % m)]) continue;
          FormalSum row(flavor, skeleton);
          row.add(d, 1);
          row.add(swap_adjacent(d, p), -1);
          rows.emplace_back(std::move(row), Provenance{kind, k, {}, {p}});
        }
      }
      break;
    default: throw ValidationError("not an unsigned relation family: " + std::string(to_string(kind)));
  }
  collect_rows(sys, {rows});
  return sys;
}

SixTDecomposition decompose_6T(const FormalSum& row, const Provenance& origin) {
  if (row.flavor() != Flavor::ChordUnsigned) throw FlavorError("decompose_6T expects an unsigned chord row");
  if (origin.kind != RelationKind::SixT || origin.params.empty())
    throw ValidationError("decompose_6T needs the provenance of a generated 6T row");
  const R3Config& c = r3_configurations().at(static_cast<std::size_t>(origin.params[0]));
  const ChordDiagram ctx = bar(gauss_from_key(origin.context)).without_signs();
  const Skeleton skel = row.skeleton();
  static constexpr std::array<std::array<int, 2>, 3> strands_of{{{0, 1}, {0, 2}, {1, 2}}};

  for (int pivot = 0; pivot < 3; ++pivot) {
    // 2T part: the pair of arrows not containing the pivot, before and after the move
    std::array<int, 2> others{};
    for (int id = 0, j = 0; id < 3; ++id)
      if (id != pivot) others[static_cast<std::size_t>(j++)] = id;
    auto pair_diagram = [&](const R3Config& cfg) {
      auto blocks = r3_blocks(cfg);
      std::vector<std::vector<int>> cb(3);
      for (int s = 0; s < 3; ++s)
        for (const Token& t : blocks[static_cast<std::size_t>(s)]) {
          if (t.arrow == others[0]) cb[static_cast<std::size_t>(s)].push_back(0);
          if (t.arrow == others[1]) cb[static_cast<std::size_t>(s)].push_back(1);
        }
      return fill_site(ctx, origin.site, cb, {0, 0});
    };
    FormalSum two(Flavor::ChordUnsigned, skel);
    two.add(pair_diagram(c), 1);
    two.add(pair_diagram(c.reversed()), -1);

    const auto [x, y] = strands_of[static_cast<std::size_t>(pivot)];
    const int z = 3 - x - y;
    for (int orient = 0; orient < 2; ++orient) {
      std::array<int, 3> slot{};  // strand -> slot
      slot[static_cast<std::size_t>(orient ? y : x)] = 0;
      slot[static_cast<std::size_t>(orient ? x : y)] = 1;
      slot[static_cast<std::size_t>(z)] = 2;
      Site site = origin.site;
      for (int& e : site)
        if (e < 0) e = -(slot[static_cast<std::size_t>(-e - 1)] + 1);
      FormalSum four = four_term(ctx, site);
      // circle rotations can merge terms, so the row may be a rational multiple
      std::vector<DiagramKey> keys;
      for (const FormalSum* v : std::array<const FormalSum*, 3>{&row, &four, &two})
        for (const auto& [k, coeff] : v->terms()) keys.push_back(k);
      Ambient amb(std::move(keys));
      auto coeffs = in_span(amb.vec(row), {amb.vec(four), amb.vec(two)});
      if (!coeffs) continue;
      Rational c4 = 0, c2 = 0;
      for (const auto& [i, coeff] : *coeffs) (i == 0 ? c4 : c2) = coeff;
      return {four, c4, two, c2, pivot};
    }
  }
  throw ConventionMismatchError("6T row does not split into a 4T row and a 2T row: " + row.debug_string());
}

}  // namespace polyak
