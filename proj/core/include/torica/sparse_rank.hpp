#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "torica/arith.hpp"

namespace torica {

/// Sparse row over Q: (column, value) pairs sorted by column, no zeros.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

/// Incremental row echelon form over Q. Rows are reduced against the stored
/// pivots as they arrive, so rank() is always exact.
class SparseEchelon {
 public:
  /// Returns true iff the row was independent of the rows seen so far.
  bool add(SparseRow row);
  /// True iff the row lies in the span of the stored rows.
  bool contains(SparseRow row) const;
  std::size_t rank() const noexcept { return pivots_.size(); }

 private:
  std::map<std::size_t, SparseRow> pivots_;  // leading column -> monic row
};

std::size_t sparse_rank(const std::vector<SparseRow>& rows);

}  // namespace torica
