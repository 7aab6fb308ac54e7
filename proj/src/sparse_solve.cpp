#include "sparse_solve.hpp"

#include <algorithm>
#include <limits>

namespace honeycomb {

namespace {

void normalise(SparseRow& row) {
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseRow out;
  for (auto& [c, v] : row) {
    if (!out.empty() && out.back().first == c) {
      out.back().second += v;
    } else {
      out.emplace_back(c, std::move(v));
    }
  }
  std::erase_if(out, [](const auto& e) { return e.second.is_zero(); });
  row = std::move(out);
}

// row += f * pivot, both sorted by column.
void axpy(SparseRow& row, const Rat& f, const SparseRow& pivot) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.push_back(std::move(row[i++]));
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, f * pivot[j].second);
      ++j;
    } else {
      Rat v = std::move(row[i].second);
      v.add_product(f, pivot[j].second);
      if (!v.is_zero()) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  row = std::move(out);
}

const Rat* find(const SparseRow& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col, [](const auto& e, std::size_t c) { return e.first < c; });
  return (it != row.end() && it->first == col) ? &it->second : nullptr;
}

}  // namespace

std::optional<std::vector<Rat>> solve_square(const std::vector<SparseRow>& input, const std::vector<Rat>& rhs_in,
                                             std::size_t dim) {
  if (input.size() != dim || rhs_in.size() != dim) return std::nullopt;
  std::vector<SparseRow> rows = input;
  std::vector<Rat> rhs = rhs_in;
  for (auto& r : rows) {
    normalise(r);
    for (const auto& e : r)
      if (e.first >= dim) return std::nullopt;
  }
  // Column occurrence lists; entries may go stale and are re-checked on use.
  std::vector<std::vector<std::size_t>> col_rows(dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (const auto& e : rows[r]) col_rows[e.first].push_back(r);

  std::vector<bool> done(dim, false);
  std::vector<std::pair<std::size_t, std::size_t>> order;  // (row, col)
  order.reserve(dim);
  for (std::size_t step = 0; step < dim; ++step) {
    // Row with the fewest entries, then its entry in the sparsest column.
    std::size_t pr = dim;
    for (std::size_t r = 0; r < dim; ++r) {
      if (done[r]) continue;
      if (pr == dim || rows[r].size() < rows[pr].size()) pr = r;
    }
    if (rows[pr].empty()) return std::nullopt;
    std::size_t pc = rows[pr].front().first;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (const auto& e : rows[pr]) {
      if (col_rows[e.first].size() < best) {
        best = col_rows[e.first].size();
        pc = e.first;
      }
    }
    done[pr] = true;
    order.emplace_back(pr, pc);
    const Rat piv = *find(rows[pr], pc);
    std::vector<std::size_t> touched;
    touched.swap(col_rows[pc]);
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    for (std::size_t r : touched) {
      if (done[r]) continue;
      const Rat* a = find(rows[r], pc);
      if (!a) continue;
      const Rat f = -(*a) / piv;
      std::vector<std::size_t> before;
      for (const auto& e : rows[r]) before.push_back(e.first);
      axpy(rows[r], f, rows[pr]);
      rhs[r].add_product(f, rhs[pr]);
      for (const auto& e : rows[r])
        if (!std::binary_search(before.begin(), before.end(), e.first)) col_rows[e.first].push_back(r);
    }
  }
  std::vector<Rat> x(dim);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto [r, c] = *it;
    Rat v = rhs[r];
    Rat piv;
    for (const auto& e : rows[r]) {
      if (e.first == c) {
        piv = e.second;
      } else {
        v.add_product(-e.second, x[e.first]);
      }
    }
    x[c] = v / piv;
  }
  return x;
}

}  // namespace honeycomb

namespace honeycomb {

std::size_t sparse_rank(std::vector<SparseRow> rows, std::size_t dim) {
  for (auto& r : rows) normalise(r);
  std::vector<std::vector<std::size_t>> col_rows(dim);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& e : rows[r]) col_rows.at(e.first).push_back(r);
  std::vector<bool> done(rows.size(), false);
  std::size_t rank = 0;
  for (;;) {
    std::size_t pr = rows.size();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (done[r] || rows[r].empty()) continue;
      if (pr == rows.size() || rows[r].size() < rows[pr].size()) pr = r;
    }
    if (pr == rows.size()) return rank;
    done[pr] = true;
    ++rank;
    std::size_t pc = rows[pr].front().first;
    for (const auto& e : rows[pr])
      if (col_rows[e.first].size() < col_rows[pc].size()) pc = e.first;
    const Rat piv = *find(rows[pr], pc);
    std::vector<std::size_t> touched;
    touched.swap(col_rows[pc]);
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    for (std::size_t r : touched) {
      if (done[r]) continue;
      const Rat* a = find(rows[r], pc);
      if (!a) continue;
      const Rat f = -(*a) / piv;
      std::vector<std::size_t> before;
      for (const auto& e : rows[r]) before.push_back(e.first);
      axpy(rows[r], f, rows[pr]);
      for (const auto& e : rows[r])
        if (!std::binary_search(before.begin(), before.end(), e.first)) col_rows[e.first].push_back(r);
    }
  }
}

}  // namespace honeycomb
