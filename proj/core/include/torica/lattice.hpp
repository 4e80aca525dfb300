#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "torica/arith.hpp"

namespace torica {

/// Dense integer matrix, row-major, arbitrary precision entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                             std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  IntVector row(std::size_t r) const;
  IntVector col(std::size_t c) const;

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  IntVector operator*(const IntVector& v) const;

  bool operator==(const IntMatrix& rhs) const = default;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row a += k * row b
  void add_row_multiple(std::size_t a, std::size_t b, const Integer& k);
  void add_col_multiple(std::size_t a, std::size_t b, const Integer& k);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Exact determinant (fraction-free Bareiss). Square matrices only.
Integer determinant(const IntMatrix& m);

/// Rank over the rationals.
std::size_t rank(const IntMatrix& m);

/// U * A * V == D with U, V unimodular and D diagonal, d_1 | d_2 | ...
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  /// Nonzero diagonal entries of D in order.
  IntVector invariants() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Inverse of a unimodular matrix; throws InternalInvariant otherwise.
IntMatrix unimodular_inverse(const IntMatrix& u);

/// Basis of the right kernel over Q. Each vector is scaled to a primitive
/// integer vector whose first nonzero entry is positive.
std::vector<RatVector> kernel_basis_rational(const IntMatrix& a);

/// Solves the square system m * x = rhs over Q; empty result when singular.
std::vector<Rational> solve_rational(const std::vector<RatVector>& m,
                                     const RatVector& rhs);

class ClassGroup;

/// An element of a class group. Coordinates are basis-dependent and may
/// only be compared or combined with classes of the same ClassGroup.
class DivisorClass {
 public:
  DivisorClass() = default;

  const IntVector& free_part() const noexcept { return free_; }
  const IntVector& torsion_part() const noexcept { return torsion_; }
  std::uint64_t group_id() const noexcept { return group_id_; }

  bool is_zero() const;

  DivisorClass operator+(const DivisorClass& rhs) const;
  DivisorClass operator-(const DivisorClass& rhs) const;
  DivisorClass operator-() const;
  DivisorClass scaled(long k) const;

  bool operator==(const DivisorClass& rhs) const;
  bool operator<(const DivisorClass& rhs) const;

 private:
  friend class ClassGroup;
  DivisorClass(std::uint64_t id, IntVector free, IntVector torsion,
               IntVector moduli);

  std::uint64_t group_id_ = 0;
  IntVector free_;
  IntVector torsion_;
  IntVector moduli_;
};

std::ostream& operator<<(std::ostream& os, const DivisorClass& c);

/// Presentation of Z^n / alpha(M) for an injective alpha : Z^d -> Z^n.
class ClassGroup {
 public:
  std::size_t ambient_rank() const noexcept { return n_; }
  std::size_t free_rank() const noexcept { return free_rows_.size(); }
  /// Invariants t_1 | t_2 | ... with t_j > 1.
  const IntVector& torsion() const noexcept { return torsion_moduli_; }
  std::uint64_t id() const noexcept { return id_; }

  DivisorClass class_of(const IntVector& b) const;
  DivisorClass class_of(const std::vector<std::int64_t>& b) const;
  DivisorClass zero() const;
  DivisorClass make_class(IntVector free, IntVector torsion) const;

  /// Canonical preimage of a class: the unique representative whose entries
  /// at the echelon pivots of alpha(M) lie in [0, |pivot|).
  IntVector representative(const DivisorClass& c) const;

  /// Reduces b modulo alpha(M) to the canonical representative of its class.
  IntVector reduce(const IntVector& b) const;

  void check_same_group(const DivisorClass& c) const;

 private:
  friend ClassGroup cokernel_presentation(const IntMatrix& alpha);

  std::uint64_t id_ = 0;
  std::size_t n_ = 0;
  std::vector<IntVector> free_rows_;     // rows of the projection to Z^r
  std::vector<IntVector> torsion_rows_;  // rows projecting to Z/t_j
  IntVector torsion_moduli_;
  std::vector<std::size_t> torsion_index_;  // projection row of each torsion factor
  IntMatrix lift_;                      // inverse of the full projection
  std::vector<IntVector> lattice_basis_; // echelon basis of alpha(M)
  std::vector<std::size_t> pivots_;
};

/// Class group of the cokernel of alpha (n rows, d columns).
/// Throws RankDeficient when rank(alpha) < d.
ClassGroup cokernel_presentation(const IntMatrix& alpha);

namespace detail {
// Row Hermite form in place (zero rows dropped); only columns < pivot_limit
// may hold pivots. Returns the pivot columns.
std::vector<std::size_t> hermite_rows(std::vector<IntVector>& rows,
                                      std::size_t pivot_limit);
}  // namespace detail

inline DivisorClass class_of_divisor(const IntVector& b, const ClassGroup& g) {
  return g.class_of(b);
}

inline IntVector representative_divisor(const DivisorClass& c,
                                        const ClassGroup& g) {
  return g.representative(c);
}

}  // namespace torica
