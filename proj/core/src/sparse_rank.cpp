#include "torica/sparse_rank.hpp"

namespace torica {

namespace {

// a - c * b, both sorted.
SparseRow axpy(const SparseRow& a, const Rational& c, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -c * b[j].second);
      ++j;
    } else {
      Rational v = a[i].second - c * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

bool SparseEchelon::add(SparseRow row) {
  while (!row.empty()) {
    auto it = pivots_.find(row.front().first);
    if (it == pivots_.end()) break;
    row = axpy(row, row.front().second, it->second);
  }
  if (row.empty()) return false;
  const Rational inv = 1 / row.front().second;
  for (auto& [c, v] : row) v *= inv;
  const std::size_t lead = row.front().first;
  pivots_.emplace(lead, std::move(row));
  return true;
}

bool SparseEchelon::contains(SparseRow row) const {
  while (!row.empty()) {
    auto it = pivots_.find(row.front().first);
    if (it == pivots_.end()) return false;
    row = axpy(row, row.front().second, it->second);
  }
  return true;
}

std::size_t sparse_rank(const std::vector<SparseRow>& rows) {
  SparseEchelon e;
  for (const auto& r : rows) e.add(r);
  return e.rank();
}

}  // namespace torica
