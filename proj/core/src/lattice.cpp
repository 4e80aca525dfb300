#include "torica/lattice.hpp"

#include <algorithm>
#include <atomic>
#include <ostream>
#include <sstream>
#include <utility>

#include "torica/error.hpp"

namespace torica {

namespace {

std::atomic<std::uint64_t> next_group_id{1};

Integer abs_val(const Integer& v) { return v < 0 ? Integer(-v) : v; }

}  // namespace

// Columns at or beyond pivot_limit are carried along, which is how callers
// record the transformation matrix.
std::vector<std::size_t> detail::hermite_rows(std::vector<IntVector>& rows,
                                      std::size_t pivot_limit) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  auto add_multiple = [](IntVector& dst, const IntVector& src, const Integer& k) {
    for (std::size_t j = 0; j < dst.size(); ++j) dst[j] += k * src[j];
  };
  for (std::size_t c = 0; c < pivot_limit && r < rows.size(); ++c) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        if (best == rows.size() || abs_val(rows[i][c]) < abs_val(rows[best][c]))
          best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        Integer q = floor_div(rows[i][c], rows[r][c]);
        add_multiple(rows[i], rows[r], -q);
        if (rows[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (rows[r][c] == 0) continue;
    if (rows[r][c] < 0)
      for (auto& v : rows[r]) v = -v;
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(rows[i][c], rows[r][c]);
      if (q != 0) add_multiple(rows[i], rows[r], -q);
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

namespace {

// Reduced row echelon form over Q; returns pivot columns.
std::vector<std::size_t> rref(std::vector<RatVector>& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    Rational inv = 1 / m[r][c];
    for (auto& v : m[r]) v *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational k = m[i][c];
      for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] -= k * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

// ---------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    require(r.size() == cols_, ErrorCode::InvalidInput, "ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                               std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == cols, ErrorCode::InvalidInput, "ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = static_cast<long>(rows[i][j]);
  }
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

IntVector IntMatrix::col(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  require(cols_ == rhs.rows_, ErrorCode::InvalidInput, "matrix shape mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

IntVector IntMatrix::operator*(const IntVector& v) const {
  require(cols_ == v.size(), ErrorCode::InvalidInput, "matrix/vector shape mismatch");
  IntVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t a, std::size_t b, const Integer& k) {
  if (k == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(a, j) += k * (*this)(b, j);
}

void IntMatrix::add_col_multiple(std::size_t a, std::size_t b, const Integer& k) {
  if (k == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, a) += k * (*this)(i, b);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = -(*this)(i, c);
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

Integer determinant(const IntMatrix& m) {
  require(m.rows() == m.cols(), ErrorCode::InvalidInput, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& m) {
  std::vector<RatVector> rows(m.rows(), RatVector(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
  return rref(rows, m.cols()).size();
}

// ---------------------------------------------------------------- Smith form

IntVector SmithDecomposition::invariants() const {
  IntVector out;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
    if (D(i, i) != 0) out.push_back(D(i, i));
  return out;
}

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  SmithDecomposition s{IntMatrix::identity(m), a, IntMatrix::identity(n)};
  IntMatrix& d = s.D;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    while (true) {
      // Pivot: minimal nonzero |entry| of the trailing block.
      std::size_t pr = m, pc = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (d(i, j) == 0) continue;
          if (pr == m || abs_val(d(i, j)) < abs_val(d(pr, pc))) {
            pr = i;
            pc = j;
          }
        }
      if (pr == m) return s;
      d.swap_rows(t, pr);
      s.U.swap_rows(t, pr);
      d.swap_cols(t, pc);
      s.V.swap_cols(t, pc);

      bool clear = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        Integer q = d(i, t) / d(t, t);
        d.add_row_multiple(i, t, -q);
        s.U.add_row_multiple(i, t, -q);
        if (d(i, t) != 0) clear = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        Integer q = d(t, j) / d(t, t);
        d.add_col_multiple(j, t, -q);
        s.V.add_col_multiple(j, t, -q);
        if (d(t, j) != 0) clear = false;
      }
      if (!clear) continue;

      // Divisibility: fold an offending row into row t and go again.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j) {
          if (d(i, j) % d(t, t) != 0) {
            d.add_row_multiple(t, i, 1);
            s.U.add_row_multiple(t, i, 1);
            divides = false;
            break;
          }
        }
      if (divides) break;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      s.U.negate_row(t);
    }
  }
  return s;
}

IntMatrix unimodular_inverse(const IntMatrix& u) {
  const std::size_t n = u.rows();
  require(n == u.cols(), ErrorCode::InternalInvariant, "inverse of non-square matrix");
  std::vector<RatVector> aug(n, RatVector(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = u(i, j);
    aug[i][n + i] = 1;
  }
  auto piv = rref(aug, n);
  require(piv.size() == n, ErrorCode::InternalInvariant, "matrix is singular");
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& v = aug[i][n + j];
      require(v.get_den() == 1, ErrorCode::InternalInvariant, "matrix is not unimodular");
      inv(i, j) = v.get_num();
    }
  return inv;
}

std::vector<RatVector> kernel_basis_rational(const IntMatrix& a) {
  std::vector<RatVector> m(a.rows(), RatVector(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a(i, j);
  auto pivots = rref(m, a.cols());
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector v(a.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][f];
    // Scale to a primitive integer vector with positive leading entry.
    Integer den = 1, g = 0;
    for (const auto& x : v) {
      Integer l;
      mpz_lcm(l.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
      den = l;
    }
    for (auto& x : v) {
      x *= den;
      g = gcd(g, x.get_num());
    }
    Rational scale(1, g);
    for (const auto& x : v)
      if (x != 0) {
        if (x < 0) scale = -scale;
        break;
      }
    for (auto& x : v) x *= scale;
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Rational> solve_rational(const std::vector<RatVector>& m,
                                     const RatVector& rhs) {
  const std::size_t n = rhs.size();
  std::vector<RatVector> aug(n, RatVector(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n] = rhs[i];
  }
  auto piv = rref(aug, n);
  if (piv.size() != n) return {};
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug[i][n];
  return x;
}

// ---------------------------------------------------------------- classes

DivisorClass::DivisorClass(std::uint64_t id, IntVector free, IntVector torsion,
                           IntVector moduli)
    : group_id_(id), free_(std::move(free)), torsion_(std::move(torsion)),
      moduli_(std::move(moduli)) {
  for (std::size_t j = 0; j < torsion_.size(); ++j)
    torsion_[j] = mod_floor(torsion_[j], moduli_[j]);
}

bool DivisorClass::is_zero() const {
  for (const auto& v : free_)
    if (v != 0) return false;
  for (const auto& v : torsion_)
    if (v != 0) return false;
  return true;
}

static void check_compatible(const DivisorClass& a, const DivisorClass& b) {
  if (a.group_id() != b.group_id() || a.group_id() == 0)
    fail(ErrorCode::ClassGroupMismatch,
         "divisor classes belong to different class groups");
}

DivisorClass DivisorClass::operator+(const DivisorClass& rhs) const {
  check_compatible(*this, rhs);
  IntVector f = free_, t = torsion_;
  for (std::size_t i = 0; i < f.size(); ++i) f[i] += rhs.free_[i];
  for (std::size_t i = 0; i < t.size(); ++i) t[i] += rhs.torsion_[i];
  return DivisorClass(group_id_, std::move(f), std::move(t), moduli_);
}

DivisorClass DivisorClass::operator-() const {
  IntVector f = free_, t = torsion_;
  for (auto& v : f) v = -v;
  for (auto& v : t) v = -v;
  return DivisorClass(group_id_, std::move(f), std::move(t), moduli_);
}

DivisorClass DivisorClass::operator-(const DivisorClass& rhs) const {
  return *this + (-rhs);
}

DivisorClass DivisorClass::scaled(long k) const {
  IntVector f = free_, t = torsion_;
  for (auto& v : f) v *= k;
  for (auto& v : t) v *= k;
  return DivisorClass(group_id_, std::move(f), std::move(t), moduli_);
}

bool DivisorClass::operator==(const DivisorClass& rhs) const {
  check_compatible(*this, rhs);
  return free_ == rhs.free_ && torsion_ == rhs.torsion_;
}

bool DivisorClass::operator<(const DivisorClass& rhs) const {
  check_compatible(*this, rhs);
  if (free_ != rhs.free_) return free_ < rhs.free_;
  return torsion_ < rhs.torsion_;
}

std::ostream& operator<<(std::ostream& os, const DivisorClass& c) {
  os << '(';
  bool first = true;
  for (const auto& v : c.free_part()) {
    os << (first ? "" : ", ") << v;
    first = false;
  }
  for (std::size_t j = 0; j < c.torsion_part().size(); ++j) {
    os << (first ? "" : ", ") << c.torsion_part()[j] << " mod t" << j + 1;
    first = false;
  }
  return os << ')';
}

ClassGroup cokernel_presentation(const IntMatrix& alpha) {
  const std::size_t n = alpha.rows(), d = alpha.cols();
  if (rank(alpha) < d)
    fail(ErrorCode::RankDeficient, "rays do not span N_R: alpha has rank < d");

  SmithDecomposition snf = smith_normal_form(alpha);
  ClassGroup g;
  g.id_ = next_group_id.fetch_add(1);
  g.n_ = n;

  // Free coordinates: rows d..n-1 of U, normalized to Hermite form so the
  // ray degrees come out in a readable basis. The transformation W is
  // recorded through the identity block appended to each row.
  const std::size_t r = n - d;
  std::vector<IntVector> free_aug(r, IntVector(n + r));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < n; ++j) free_aug[i][j] = snf.U(d + i, j);
    free_aug[i][n + i] = 1;
  }
  auto free_pivots = detail::hermite_rows(free_aug, n);
  require(free_pivots.size() == r, ErrorCode::InternalInvariant,
          "free part of the class group lost rank");

  IntMatrix projection(n, n);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < n; ++j) projection(i, j) = snf.U(i, j);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) projection(d + i, j) = free_aug[i][j];
  g.lift_ = unimodular_inverse(projection);

  for (std::size_t i = 0; i < d; ++i) {
    if (snf.D(i, i) > 1) {
      g.torsion_rows_.push_back(projection.row(i));
      g.torsion_moduli_.push_back(snf.D(i, i));
      g.torsion_index_.push_back(i);
    }
  }
  for (std::size_t i = 0; i < r; ++i) g.free_rows_.push_back(projection.row(d + i));

  // Echelon basis of alpha(M) with pivots taken from the last coordinate
  // upward, so canonical representatives concentrate on the first rays.
  std::vector<IntVector> lat(d, IntVector(n));
  for (std::size_t c = 0; c < d; ++c)
    for (std::size_t i = 0; i < n; ++i) lat[c][n - 1 - i] = alpha(i, c);
  auto piv = detail::hermite_rows(lat, n);
  for (std::size_t k = 0; k < lat.size(); ++k) {
    std::reverse(lat[k].begin(), lat[k].end());
    g.pivots_.push_back(n - 1 - piv[k]);
  }
  g.lattice_basis_ = std::move(lat);
  return g;
}

DivisorClass ClassGroup::class_of(const IntVector& b) const {
  require(b.size() == n_, ErrorCode::InvalidInput,
          "divisor has " + std::to_string(b.size()) + " entries, expected " +
              std::to_string(n_));
  auto dot = [&](const IntVector& row) {
    Integer s = 0;
    for (std::size_t j = 0; j < n_; ++j) s += row[j] * b[j];
    return s;
  };
  IntVector f, t;
  for (const auto& row : free_rows_) f.push_back(dot(row));
  for (const auto& row : torsion_rows_) t.push_back(dot(row));
  return DivisorClass(id_, std::move(f), std::move(t), torsion_moduli_);
}

DivisorClass ClassGroup::class_of(const std::vector<std::int64_t>& b) const {
  IntVector v;
  v.reserve(b.size());
  for (auto x : b) v.emplace_back(static_cast<long>(x));
  return class_of(v);
}

DivisorClass ClassGroup::zero() const {
  return DivisorClass(id_, IntVector(free_rank()), IntVector(torsion_moduli_.size()),
                      torsion_moduli_);
}

DivisorClass ClassGroup::make_class(IntVector free, IntVector torsion) const {
  require(free.size() == free_rank() && torsion.size() == torsion_moduli_.size(),
          ErrorCode::InvalidInput, "class coordinates do not match the class group");
  return DivisorClass(id_, std::move(free), std::move(torsion), torsion_moduli_);
}

void ClassGroup::check_same_group(const DivisorClass& c) const {
  if (c.group_id() != id_)
    fail(ErrorCode::ClassGroupMismatch, "divisor class belongs to another class group");
}

IntVector ClassGroup::representative(const DivisorClass& c) const {
  check_same_group(c);
  const std::size_t d = n_ - free_rank();
  IntVector y(n_);
  for (std::size_t t = 0; t < torsion_index_.size(); ++t)
    y[torsion_index_[t]] = c.torsion_part()[t];
  for (std::size_t i = 0; i < free_rank(); ++i) y[d + i] = c.free_part()[i];
  return reduce(lift_ * y);
}

IntVector ClassGroup::reduce(const IntVector& b) const {
  require(b.size() == n_, ErrorCode::InvalidInput, "divisor length mismatch");
  IntVector out = b;
  for (std::size_t k = 0; k < lattice_basis_.size(); ++k) {
    const auto& v = lattice_basis_[k];
    const std::size_t p = pivots_[k];
    Integer q = floor_div(out[p], v[p]);
    if (q == 0) continue;
    for (std::size_t j = 0; j < n_; ++j) out[j] -= q * v[j];
  }
  return out;
}

Rational parse_rational(const std::string& text) {
  Rational q;
  std::string s = text;
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  if (s.empty() || q.set_str(s, 10) != 0)
    fail(ErrorCode::InvalidInput, "cannot parse rational '" + text + "'");
  if (q.get_den() == 0) fail(ErrorCode::InvalidInput, "zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NonPrimitiveRay: return "NonPrimitiveRay";
    case ErrorCode::InvalidFan: return "InvalidFan";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::ClassGroupMismatch: return "ClassGroupMismatch";
    case ErrorCode::InvalidWeights: return "InvalidWeights";
    case ErrorCode::EmptyDegree: return "EmptyDegree";
    case ErrorCode::InconsistentRelation: return "InconsistentRelation";
    case ErrorCode::NotAmple: return "NotAmple";
    case ErrorCode::NotQuasiSmooth: return "NotQuasiSmooth";
    case ErrorCode::NotNondegenerate: return "NotNondegenerate";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::DivisionByVariable: return "DivisionByVariable";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::TheoremViolation: return "TheoremViolation";
    case ErrorCode::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

}  // namespace torica
