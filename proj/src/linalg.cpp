#include "polyak/linalg.hpp"

#include <algorithm>
#include <set>

#include "polyak/error.hpp"

namespace polyak {

SparseVec axpy(const SparseVec& a, const Rational& f, const SparseVec& b) {
  if (f == 0) return a;
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -f * b[j].second);
      ++j;
    } else {
      Rational v = a[i].second - f * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

Rational dot(const SparseVec& a, const SparseVec& b) {
  Rational acc = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first) ++i;
    else if (b[j].first < a[i].first) ++j;
    else acc += a[i++].second * b[j++].second;
  }
  return acc;
}

SparseVec scaled(const SparseVec& a, const Rational& f) {
  if (f == 0) return {};
  SparseVec out = a;
  for (auto& [c, v] : out) v *= f;
  return out;
}

namespace {

bool vec_less(const SparseVec& a, const SparseVec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first < y.first;
    return x.second < y.second;
  });
}

void check_columns(const SparseVec& v, int ncols) {
  int prev = -1;
  for (const auto& [c, x] : v) {
    if (c < 0 || c >= ncols) throw FlavorError("row entry in column " + std::to_string(c) + " outside ambient of size " + std::to_string(ncols));
    if (c <= prev) throw ValidationError("sparse row is not sorted by column");
    if (x == 0) throw ValidationError("sparse row stores an explicit zero");
    prev = c;
  }
}

const Rational* find_entry(const SparseVec& v, int col) {
  auto it = std::lower_bound(v.begin(), v.end(), col, [](const auto& e, int c) { return e.first < c; });
  return (it != v.end() && it->first == col) ? &it->second : nullptr;
}

}  // namespace

std::vector<SparseVec> reduced_echelon(const std::vector<SparseVec>& rows) {
  std::map<int, SparseVec> basis;  // leading column -> row
  for (SparseVec v : rows) {
    // full reduction against current basis
    bool changed = true;
    while (changed && !v.empty()) {
      changed = false;
      for (const auto& [c, x] : v) {
        auto it = basis.find(c);
        if (it != basis.end()) {
          Rational f = x;
          v = axpy(v, f, it->second);
          changed = true;
          break;
        }
      }
    }
    if (v.empty()) continue;
    Rational lead = v.front().second;
    if (lead != 1) v = scaled(v, 1 / lead);
    const int col = v.front().first;
    for (auto& [pc, row] : basis) {
      if (const Rational* x = find_entry(row, col)) {
        Rational f = *x;
        row = axpy(row, f, v);
      }
    }
    basis.emplace(col, std::move(v));
  }
  std::vector<SparseVec> out;
  out.reserve(basis.size());
  for (auto& [c, row] : basis) out.push_back(std::move(row));
  return out;
}

namespace {

// Markowitz Gauss-Jordan; returns rows reduced against their own pivots.
std::vector<std::pair<int, SparseVec>> markowitz_gauss_jordan(std::vector<SparseVec> rows, int ncols) {
  for (const auto& r : rows) check_columns(r, ncols);
  rows.erase(std::remove_if(rows.begin(), rows.end(), [](const SparseVec& r) { return r.empty(); }), rows.end());
  std::sort(rows.begin(), rows.end(), vec_less);
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

  const int nrows = static_cast<int>(rows.size());
  std::vector<std::vector<int>> col_rows(static_cast<std::size_t>(ncols));
  std::vector<int> col_count(static_cast<std::size_t>(ncols), 0);
  std::vector<char> active(static_cast<std::size_t>(nrows), 1);
  std::set<std::pair<std::size_t, int>> queue;
  for (int r = 0; r < nrows; ++r) {
    for (const auto& [c, x] : rows[static_cast<std::size_t>(r)]) {
      col_rows[static_cast<std::size_t>(c)].push_back(r);
      ++col_count[static_cast<std::size_t>(c)];
    }
    queue.emplace(rows[static_cast<std::size_t>(r)].size(), r);
  }

  std::vector<std::pair<int, int>> pivots;  // (column, row)
  while (!queue.empty()) {
    auto [len, r] = *queue.begin();
    queue.erase(queue.begin());
    SparseVec& prow = rows[static_cast<std::size_t>(r)];
    active[static_cast<std::size_t>(r)] = 0;
    int best_col = -1;
    int best_count = 0;
    for (const auto& [c, x] : prow) {
      int cnt = col_count[static_cast<std::size_t>(c)];
      if (best_col < 0 || cnt < best_count) {
        best_col = c;
        best_count = cnt;
      }
    }
    for (const auto& [c, x] : prow) --col_count[static_cast<std::size_t>(c)];
    const Rational* pv = find_entry(prow, best_col);
    if (*pv != 1) prow = scaled(prow, 1 / Rational(*pv));

    std::vector<int> touched = std::move(col_rows[static_cast<std::size_t>(best_col)]);
    col_rows[static_cast<std::size_t>(best_col)].clear();
    for (int s : touched) {
      if (s == r) continue;
      SparseVec& srow = rows[static_cast<std::size_t>(s)];
      const Rational* sx = find_entry(srow, best_col);
      if (!sx) continue;  // stale index entry
      Rational f = *sx;
      const bool is_active = active[static_cast<std::size_t>(s)];
      if (is_active) queue.erase({srow.size(), s});
      // merge, tracking column membership changes
      SparseVec out;
      out.reserve(srow.size() + prow.size());
      std::size_t i = 0, j = 0;
      while (i < srow.size() || j < prow.size()) {
        if (j == prow.size() || (i < srow.size() && srow[i].first < prow[j].first)) {
          out.push_back(std::move(srow[i++]));
        } else if (i == srow.size() || prow[j].first < srow[i].first) {
          const int c = prow[j].first;
          out.emplace_back(c, -f * prow[j].second);
          col_rows[static_cast<std::size_t>(c)].push_back(s);
          if (is_active) ++col_count[static_cast<std::size_t>(c)];
          ++j;
        } else {
          const int c = srow[i].first;
          Rational v = srow[i].second - f * prow[j].second;
          if (v != 0) out.emplace_back(c, std::move(v));
          else if (is_active) --col_count[static_cast<std::size_t>(c)];
          ++i;
          ++j;
        }
      }
      srow = std::move(out);
      if (is_active && !srow.empty()) queue.emplace(srow.size(), s);
      if (is_active && srow.empty()) active[static_cast<std::size_t>(s)] = 0;
    }
    col_rows[static_cast<std::size_t>(best_col)].push_back(r);
    pivots.emplace_back(best_col, r);
  }
  std::sort(pivots.begin(), pivots.end());
  std::vector<std::pair<int, SparseVec>> out;
  out.reserve(pivots.size());
  for (auto [c, r] : pivots) out.emplace_back(c, std::move(rows[static_cast<std::size_t>(r)]));
  return out;
}

}  // namespace

RowSpace row_space(std::vector<SparseVec> rows, int ncols) {
  auto gj = markowitz_gauss_jordan(std::move(rows), ncols);
  std::vector<SparseVec> reduced;
  reduced.reserve(gj.size());
  for (auto& [c, r] : gj) reduced.push_back(std::move(r));
  RowSpace rs;
  rs.basis = reduced_echelon(reduced);
  for (const auto& r : rs.basis) rs.pivots.push_back(r.front().first);
  return rs;
}

std::vector<SparseVec> orthogonal_complement(const std::vector<SparseVec>& rows, int ncols) {
  auto gj = markowitz_gauss_jordan(rows, ncols);
  std::vector<char> is_pivot(static_cast<std::size_t>(ncols), 0);
  for (const auto& [c, r] : gj) is_pivot[static_cast<std::size_t>(c)] = 1;
  std::map<int, SparseVec> w;  // free column -> vector
  for (int f = 0; f < ncols; ++f)
    if (!is_pivot[static_cast<std::size_t>(f)]) w[f].emplace_back(f, Rational(1));
  for (const auto& [p, row] : gj)
    for (const auto& [c, x] : row)
      if (c != p) w[c].emplace_back(p, -x);
  std::vector<SparseVec> basis;
  basis.reserve(w.size());
  for (auto& [f, v] : w) {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    basis.push_back(std::move(v));
  }
  return reduced_echelon(basis);
}

// ---------------------------------------------------------------------------

SpanSolver::SpanSolver(std::vector<SparseVec> rows) : rows_(std::move(rows)) {
  for (int i = 0; i < static_cast<int>(rows_.size()); ++i) {
    SparseVec v = rows_[static_cast<std::size_t>(i)];
    SparseVec combo{{i, Rational(1)}};
    reduce(v, combo);
    if (v.empty()) continue;
    Rational lead = v.front().second;
    const int col = v.front().first;
    basis_.emplace(col, Entry{scaled(v, 1 / lead), scaled(combo, 1 / lead)});
  }
}

void SpanSolver::reduce(SparseVec& v, SparseVec& combo) const {
  while (!v.empty()) {
    auto it = basis_.find(v.front().first);
    if (it == basis_.end()) return;
    Rational f = v.front().second;
    v = axpy(v, f, it->second.vec);
    combo = axpy(combo, f, it->second.combo);
  }
}

std::optional<SparseVec> SpanSolver::solve(const SparseVec& target) const {
  SparseVec v = target;
  SparseVec combo;
  reduce(v, combo);
  if (!v.empty()) return std::nullopt;
  SparseVec coeffs = scaled(combo, -1);
  // independent re-check: sum c_i r_i == target
  SparseVec acc;
  for (const auto& [i, c] : coeffs) acc = axpy(acc, -c, rows_[static_cast<std::size_t>(i)]);
  if (acc != target) throw Error("span certificate failed exact re-check");
  return coeffs;
}

std::optional<SparseVec> in_span(const SparseVec& v, const std::vector<SparseVec>& rows) {
  return SpanSolver(rows).solve(v);
}

// ---------------------------------------------------------------------------

Ambient::Ambient(std::vector<DiagramKey> keys) : keys_(std::move(keys)) {
  std::sort(keys_.begin(), keys_.end());
  keys_.erase(std::unique(keys_.begin(), keys_.end()), keys_.end());
  index_.reserve(keys_.size());
  for (int i = 0; i < static_cast<int>(keys_.size()); ++i) index_.emplace(keys_[static_cast<std::size_t>(i)], i);
}

std::optional<int> Ambient::index(const DiagramKey& k) const {
  auto it = index_.find(k);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SparseVec Ambient::vec(const FormalSum& s) const {
  SparseVec v;
  v.reserve(s.size());
  for (const auto& [k, c] : s.terms()) {
    auto i = index(k);
    if (!i) throw FlavorError("diagram " + k.text() + " is not in the ambient set");
    v.emplace_back(*i, c);
  }
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

FormalSum Ambient::sum(const SparseVec& v, Flavor flavor, Skeleton skeleton) const {
  FormalSum s(flavor, skeleton);
  for (const auto& [i, c] : v) s.add(keys_.at(static_cast<std::size_t>(i)), c);
  return s;
}

}  // namespace polyak
