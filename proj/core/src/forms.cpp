#include "torica/forms.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <sstream>

#include "torica/error.hpp"
#include "torica/sparse_rank.hpp"

namespace torica {

namespace {

IndexMask bit(std::size_t i) { return IndexMask{1} << i; }

std::vector<std::size_t> bits_of(IndexMask m) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; m; ++i, m >>= 1)
    if (m & 1) out.push_back(i);
  return out;
}

// All masks over `n` bits with popcount k, in increasing order.
std::vector<IndexMask> subsets(std::size_t n, std::size_t k) {
  std::vector<IndexMask> out;
  if (k > n) return out;
  if (k == 0) return {0};
  IndexMask m = (IndexMask{1} << k) - 1;
  const IndexMask limit = n == 64 ? 0 : (IndexMask{1} << n);
  while (limit == 0 || m < limit) {
    out.push_back(m);
    const IndexMask c = m & -m;
    const IndexMask r = m + c;
    if (r == 0) break;
    m = (((r ^ m) >> 2) / c) | r;
  }
  return out;
}

Exponent all_but(std::size_t n, IndexMask drop) {
  Exponent a(n, 1);
  for (std::size_t i : bits_of(drop)) a[i] = 0;
  return a;
}

// Sorts idx, returning the permutation sign, or 0 on a repeated index.
int sort_with_sign(std::vector<std::size_t>& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i)
    for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j]) return 0;
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  if (std::adjacent_find(idx.begin(), idx.end()) != idx.end()) return 0;
  return sign;
}

template <class Terms>
void accumulate(Terms& terms, typename Terms::key_type key, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

Exponent plus(const Exponent& a, const Exponent& b) {
  Exponent c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

void check_ray(const Fan& fan, std::size_t i) {
  require(i < fan.n(), ErrorCode::InvalidInput, "ray index " + std::to_string(i) + " out of range");
}

// det of the p x p matrix <m_{K_r}, e_{I_s}>.
Integer minor(const Fan& fan, const std::vector<std::size_t>& k, const std::vector<std::size_t>& cols) {
  IntMatrix m(k.size(), cols.size());
  for (std::size_t r = 0; r < k.size(); ++r)
    for (std::size_t s = 0; s < cols.size(); ++s) m(r, s) = Integer(fan.ray(cols[s])[k[r]]);
  return k.empty() ? Integer(1) : determinant(m);
}

}  // namespace

int merge_sign(IndexMask a, IndexMask b) {
  int inversions = 0;
  for (std::size_t j : bits_of(b)) inversions += std::popcount(a >> (j + 1));
  return inversions % 2 ? -1 : 1;
}

void ExteriorForm::add_term(const Exponent& a, const std::vector<std::size_t>& idx, const Rational& c) {
  require(a.size() == nvars_, ErrorCode::InvalidInput, "exponent length differs from the ring");
  require(static_cast<int>(idx.size()) == degree_, ErrorCode::InvalidInput,
          "index set size differs from the form degree");
  std::vector<std::size_t> s = idx;
  for (std::size_t i : s) require(i < nvars_, ErrorCode::InvalidInput, "dz index out of range");
  const int sign = sort_with_sign(s);
  if (sign == 0) return;
  IndexMask m = 0;
  for (std::size_t i : s) m |= bit(i);
  add_sorted(a, m, sign > 0 ? c : Rational(-c));
}

void ExteriorForm::add_sorted(const Exponent& a, IndexMask mask, const Rational& c) {
  for (int x : a) require(x >= 0, ErrorCode::DivisionByVariable, "negative exponent in a form");
  accumulate(terms_, Key{a, mask}, c);
}

ExteriorForm ExteriorForm::operator+(const ExteriorForm& rhs) const {
  require(nvars_ == rhs.nvars_ && degree_ == rhs.degree_, ErrorCode::InvalidInput,
          "adding forms of different shape");
  ExteriorForm out = *this;
  for (const auto& [k, c] : rhs.terms_) accumulate(out.terms_, k, c);
  return out;
}

ExteriorForm ExteriorForm::operator-(const ExteriorForm& rhs) const { return *this + rhs.scaled(-1); }

ExteriorForm ExteriorForm::scaled(const Rational& c) const {
  ExteriorForm out(nvars_, degree_);
  if (c == 0) return out;
  for (const auto& [k, x] : terms_) out.terms_.emplace(k, x * c);
  return out;
}

std::string ExteriorForm::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    const auto& [a, mask] = key;
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    const Rational mag = c < 0 ? Rational(-c) : c;
    bool plain = true;
    if (mag != 1) {
      os << mag.get_str();
      plain = false;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      os << (plain ? "" : "*") << 'z' << i + 1;
      if (a[i] > 1) os << '^' << a[i];
      plain = false;
    }
    const auto idx = bits_of(mask);
    if (idx.empty() && plain) os << '1';
    for (std::size_t r = 0; r < idx.size(); ++r)
      os << (r == 0 ? (plain ? "" : " ") : "^") << "dz" << idx[r] + 1;
  }
  return os.str();
}

ExteriorForm wedge(const ExteriorForm& a, const ExteriorForm& b) {
  require(a.nvars() == b.nvars(), ErrorCode::InvalidInput, "forms over different rings");
  ExteriorForm out(a.nvars(), a.degree() + b.degree());
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      if (ka.second & kb.second) continue;
      out.add_sorted(plus(ka.first, kb.first), ka.second | kb.second,
                     merge_sign(ka.second, kb.second) * ca * cb);
    }
  return out;
}

ExteriorForm exterior_derivative(const ExteriorForm& w) {
  ExteriorForm out(w.nvars(), w.degree() + 1);
  for (const auto& [key, c] : w.terms()) {
    const auto& [a, mask] = key;
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (!a[k] || (mask & bit(k))) continue;
      Exponent e = a;
      --e[k];
      out.add_sorted(e, mask | bit(k), merge_sign(bit(k), mask) * c * a[k]);
    }
  }
  return out;
}

ExteriorForm multiply(const GradedPolynomial& g, const ExteriorForm& w) {
  require(g.nvars() == w.nvars() || g.is_zero(), ErrorCode::InvalidInput,
          "polynomial and form over different rings");
  ExteriorForm out(w.nvars(), w.degree());
  for (const auto& [b, x] : g.terms())
    for (const auto& [key, c] : w.terms()) out.add_sorted(plus(b, key.first), key.second, x * c);
  return out;
}

ExteriorForm differential(const GradedPolynomial& g) {
  ExteriorForm out(g.nvars(), 1);
  for (const auto& [a, c] : g.terms())
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      Exponent e = a;
      --e[i];
      out.add_sorted(e, bit(i), c * a[i]);
    }
  return out;
}

Integer det_e(const Fan& fan, const std::vector<std::size_t>& ordered) {
  require(static_cast<int>(ordered.size()) == fan.dim(), ErrorCode::InvalidInput,
          "det(e_I) needs exactly d rays");
  std::vector<std::size_t> rows(fan.dim());
  for (int j = 0; j < fan.dim(); ++j) rows[j] = j;
  return minor(fan, rows, ordered);
}

ExteriorForm omega0(const Fan& fan) {
  const std::size_t n = fan.n();
  ExteriorForm out(n, fan.dim());
  for (IndexMask I : subsets(n, fan.dim())) {
    const Integer det = det_e(fan, bits_of(I));
    if (det != 0) out.add_sorted(all_but(n, I), I, Rational(det));
  }
  return out;
}

ExteriorForm omega_i(const Fan& fan, std::size_t i) {
  check_ray(fan, i);
  const std::size_t n = fan.n();
  ExteriorForm out(n, fan.dim() - 1);
  for (IndexMask J : subsets(n, fan.dim() - 1)) {
    if (J & bit(i)) continue;
    std::vector<std::size_t> cols{i};
    for (std::size_t j : bits_of(J)) cols.push_back(j);
    const Integer det = det_e(fan, cols);
    if (det != 0) out.add_sorted(all_but(n, J | bit(i)), J, Rational(det));
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> opposite_pairs(const Fan& fan) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < fan.n(); ++i)
    for (std::size_t j = i + 1; j < fan.n(); ++j) {
      bool opposite = true;
      for (int k = 0; k < fan.dim() && opposite; ++k)
        opposite = fan.ray(i)[k] == -fan.ray(j)[k];
      if (opposite) out.emplace_back(i, j);
    }
  return out;
}

ExteriorForm omega_ij(const Fan& fan, std::size_t i, std::size_t j) {
  check_ray(fan, i);
  check_ray(fan, j);
  require(i < j, ErrorCode::InvalidInput, "omega_ij needs i < j");
  for (int k = 0; k < fan.dim(); ++k)
    require(fan.ray(i)[k] == -fan.ray(j)[k], ErrorCode::InvalidInput,
            "omega_ij needs e_i = -e_j");
  const std::size_t n = fan.n();
  ExteriorForm out(n, fan.dim() - 1);
  for (IndexMask J : subsets(n, fan.dim() - 1)) {
    if (J & (bit(i) | bit(j))) continue;
    std::vector<std::size_t> cols{i};
    for (std::size_t k : bits_of(J)) cols.push_back(k);
    const Integer det = det_e(fan, cols);
    if (det != 0) out.add_sorted(all_but(n, J | bit(i) | bit(j)), J, Rational(det));
  }
  return out;
}

void MForm::add_term(const Exponent& a, const std::vector<std::size_t>& idx, const Rational& c) {
  require(static_cast<int>(idx.size()) == degree_, ErrorCode::InvalidInput,
          "index set size differs from the form degree");
  std::vector<std::size_t> s = idx;
  for (std::size_t i : s)
    require(i < static_cast<std::size_t>(dim_), ErrorCode::InvalidInput, "M index out of range");
  const int sign = sort_with_sign(s);
  if (sign == 0) return;
  IndexMask m = 0;
  for (std::size_t i : s) m |= bit(i);
  add_sorted(a, m, sign > 0 ? c : Rational(-c));
}

void MForm::add_sorted(const Exponent& a, IndexMask mask, const Rational& c) {
  require(a.size() == nvars_, ErrorCode::InvalidInput, "exponent length differs from the ring");
  for (int x : a) require(x >= 0, ErrorCode::DivisionByVariable, "negative exponent in a form");
  accumulate(terms_, Key{a, mask}, c);
}

MForm MForm::scaled(const Rational& c) const {
  MForm out(nvars_, dim_, degree_);
  if (c == 0) return out;
  for (const auto& [k, x] : terms_) out.terms_.emplace(k, x * c);
  return out;
}

MForm multiply(const GradedPolynomial& g, const MForm& w) {
  MForm out(w.nvars(), w.dim(), w.degree());
  for (const auto& [b, x] : g.terms())
    for (const auto& [key, c] : w.terms()) out.add_sorted(plus(b, key.first), key.second, x * c);
  return out;
}

MForm mform_omega0(const Fan& fan) {
  MForm out(fan.n(), fan.dim(), fan.dim());
  out.add_sorted(Exponent(fan.n(), 1), (IndexMask{1} << fan.dim()) - 1, 1);
  return out;
}

namespace {

MForm omega_from_monomial(const Fan& fan, std::size_t i, const Exponent& mono) {
  const int d = fan.dim();
  const IndexMask full = (IndexMask{1} << d) - 1;
  MForm out(fan.n(), d, d - 1);
  for (int j = 0; j < d; ++j) {
    const std::int64_t pair = fan.ray(i)[j];
    if (!pair) continue;
    out.add_sorted(mono, full & ~bit(j), Rational(j % 2 ? -pair : pair));
  }
  return out;
}

}  // namespace

MForm mform_omega_i(const Fan& fan, std::size_t i) {
  check_ray(fan, i);
  return omega_from_monomial(fan, i, all_but(fan.n(), bit(i)));
}

MForm mform_omega_ij(const Fan& fan, std::size_t i, std::size_t j) {
  check_ray(fan, i);
  check_ray(fan, j);
  require(i < j, ErrorCode::InvalidInput, "omega_ij needs i < j");
  for (int k = 0; k < fan.dim(); ++k)
    require(fan.ray(i)[k] == -fan.ray(j)[k], ErrorCode::InvalidInput,
            "omega_ij needs e_i = -e_j");
  return omega_from_monomial(fan, i, all_but(fan.n(), bit(i) | bit(j)));
}

std::map<IndexMask, Rational> interior(const std::vector<std::int64_t>& e, IndexMask k,
                                       const Rational& c) {
  std::map<IndexMask, Rational> out;
  const auto idx = bits_of(k);
  for (std::size_t r = 0; r < idx.size(); ++r) {
    const std::int64_t v = e.at(idx[r]);
    if (!v) continue;
    accumulate(out, k & ~bit(idx[r]), (r % 2 ? -1 : 1) * c * v);
  }
  return out;
}

bool module_membership(const Fan& fan, const MForm& w) {
  require(w.dim() == fan.dim() && w.nvars() == fan.n(), ErrorCode::InvalidInput,
          "form does not match the fan");
  // Monomials are independent mod z_i, so each Z^n-homogeneous piece is tested alone.
  std::map<Exponent, std::vector<std::pair<IndexMask, Rational>>> pieces;
  for (const auto& [key, c] : w.terms()) pieces[key.first].emplace_back(key.second, c);
  for (const auto& [a, terms] : pieces)
    for (std::size_t i = 0; i < fan.n(); ++i) {
      if (a[i] > 0) continue;
      std::map<IndexMask, Rational> gamma;
      for (const auto& [k, c] : terms)
        for (const auto& [m, x] : interior(fan.ray(i), k, c)) accumulate(gamma, m, x);
      if (!gamma.empty()) return false;
    }
  return true;
}

ExteriorForm to_dz_basis(const Fan& fan, const MForm& w) {
  require(w.dim() == fan.dim() && w.nvars() == fan.n(), ErrorCode::InvalidInput,
          "form does not match the fan");
  const std::size_t n = fan.n();
  // Accumulate with signed exponents first; cancellation may clear a pole.
  std::map<std::pair<Exponent, IndexMask>, Rational> acc;
  for (const auto& [key, c] : w.terms()) {
    const auto k = bits_of(key.second);
    for (IndexMask I : subsets(n, k.size())) {
      const Integer det = minor(fan, k, bits_of(I));
      if (det == 0) continue;
      Exponent e = key.first;
      for (std::size_t i : bits_of(I)) --e[i];
      accumulate(acc, {e, I}, c * det);
    }
  }
  ExteriorForm out(n, w.degree());
  for (const auto& [key, c] : acc) {
    for (int x : key.first)
      require(x >= 0, ErrorCode::DivisionByVariable,
              "form has a pole along a toric divisor in the dz basis");
    out.add_sorted(key.first, key.second, c);
  }
  return out;
}

Rational evaluate_on_rays(const Fan& fan, const ConstantForm& w, const Cone& tau) {
  for (std::size_t i : tau) check_ray(fan, i);
  Rational out = 0;
  for (const auto& [k, c] : w) {
    require(static_cast<std::size_t>(std::popcount(k)) == tau.size(), ErrorCode::InvalidInput,
            "form degree differs from the cone dimension");
    out += c * minor(fan, bits_of(k), tau);
  }
  return out;
}

ConstantForm residue_map(const Fan& fan, const IntVector& b, const Cone& tau,
                         const LatticePoint& m, const ConstantForm& omega_m,
                         const ConstantForm& omega_prime) {
  require(b.size() == fan.n(), ErrorCode::InvalidInput, "divisor length differs from ray count");
  require(m.size() == static_cast<std::size_t>(fan.dim()), ErrorCode::InvalidInput,
          "lattice point has the wrong dimension");
  require(is_ample(fan, b), ErrorCode::NotAmple, "residue map needs an ample divisor");
  Cone t = tau;
  std::sort(t.begin(), t.end());
  require(fan.is_cone(t), ErrorCode::InvalidInput, "tau is not a cone of the fan");

  IndexMask tight = 0;
  for (std::size_t i = 0; i < fan.n(); ++i) {
    Integer pairing = 0;
    for (int j = 0; j < fan.dim(); ++j) pairing += Integer(fan.ray(i)[j]) * m[j];
    require(pairing >= -b[i], ErrorCode::InvalidInput, "m lies outside the polytope");
    if (pairing == -b[i]) tight |= bit(i);
  }
  // omega_m must lie in Lambda Gamma(m): killed by every tight e_i.
  for (std::size_t i : bits_of(tight)) {
    std::map<IndexMask, Rational> acc;
    for (const auto& [k, c] : omega_m)
      for (const auto& [mm, x] : interior(fan.ray(i), k, c)) accumulate(acc, mm, x);
    require(acc.empty(), ErrorCode::InvalidInput,
            "omega_m is not built from directions of the face containing m");
  }

  ConstantForm out;
  if ((cone_mask(t) & ~tight) != 0) return out;
  const Rational s = evaluate_on_rays(fan, omega_prime, t);
  if (s == 0) return out;
  for (const auto& [k, c] : omega_m)
    if (c != 0) out.emplace(k, c * s);
  return out;
}

bool residue_differential_identity_check(const ToricVariety& X, const GradedPolynomial& A,
                                         std::size_t i, long k, const GradedPolynomial& f) {
  const Fan& fan = X.fan();
  check_ray(fan, i);
  require(k >= 1, ErrorCode::InvalidInput, "the pole order k must be positive");
  require(f.nvars() == X.n(), ErrorCode::InvalidInput, "f lives in a different ring");
  if (!A.is_zero())
    require(A.degree() == f.degree().scaled(k) - X.anticanonical() + X.ray_degree(i),
            ErrorCode::DegreeMismatch, "A must have degree k*beta - beta_0 + beta_i");

  const ExteriorForm Wi = omega_i(fan, i);
  const ExteriorForm W0 = omega0(fan);
  const ExteriorForm lhs = multiply(f, wedge(differential(A), Wi)) +
                           multiply(f, multiply(A, exterior_derivative(Wi))) -
                           multiply(A, wedge(differential(f), Wi)).scaled(k);
  const ExteriorForm rhs = multiply(f, multiply(partial_derivative(X, A, i), W0)) -
                           multiply(A, multiply(partial_derivative(X, f, i), W0)).scaled(k);
  return lhs == rhs;
}

std::size_t regular_forms_dimension(const ToricVariety& X, const DivisorClass& beta) {
  const Fan& fan = X.fan();
  const int d = fan.dim();
  const auto cols = subsets(d, d - 1);
  std::size_t total = 0;
  for (const Exponent& D : X.monomial_basis(beta)) {
    std::vector<SparseRow> rows;
    std::map<std::pair<std::size_t, IndexMask>, std::map<std::size_t, Rational>> constraint;
    for (std::size_t i = 0; i < fan.n(); ++i) {
      if (D[i] > 0) continue;
      for (std::size_t c = 0; c < cols.size(); ++c)
        for (const auto& [m, x] : interior(fan.ray(i), cols[c], 1)) constraint[{i, m}][c] += x;
    }
    for (const auto& [key, entries] : constraint) {
      SparseRow r;
      for (const auto& [c, x] : entries)
        if (x != 0) r.emplace_back(c, x);
      if (!r.empty()) rows.push_back(std::move(r));
    }
    total += cols.size() - sparse_rank(rows);
  }
  return total;
}

std::size_t generated_forms_dimension(const ToricVariety& X, const DivisorClass& beta) {
  const Fan& fan = X.fan();
  std::map<std::pair<Exponent, IndexMask>, std::size_t> column;
  SparseEchelon ech;
  for (std::size_t i = 0; i < fan.n(); ++i) {
    const MForm wi = mform_omega_i(fan, i);
    const DivisorClass g = beta - X.anticanonical() + X.ray_degree(i);
    for (const Exponent& a : X.monomial_basis(g)) {
      SparseRow row;
      for (const auto& [key, c] : wi.terms()) {
        auto k = std::make_pair(plus(a, key.first), key.second);
        auto [it, inserted] = column.emplace(std::move(k), column.size());
        row.emplace_back(it->second, c);
      }
      std::sort(row.begin(), row.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
      ech.add(std::move(row));
    }
  }
  return ech.rank();
}

namespace {

ExteriorForm random_form(std::size_t n, int p, std::mt19937_64& rng) {
  ExteriorForm w(n, p);
  const auto masks = subsets(n, p);
  for (int t = 0; t < 3; ++t) {
    Exponent a(n);
    for (auto& x : a) x = static_cast<int>(rng() % 3);
    const int c = static_cast<int>(rng() % 10);
    w.add_sorted(a, masks[rng() % masks.size()], c < 5 ? c - 5 : c - 4);
  }
  return w;
}

GradedPolynomial random_plain_polynomial(std::size_t n, std::mt19937_64& rng) {
  GradedPolynomial g(DivisorClass{}, n);
  for (int t = 0; t < 3; ++t) {
    Exponent a(n);
    for (auto& x : a) x = static_cast<int>(rng() % 3);
    g.add_term(a, static_cast<long>(rng() % 7) - 3);
  }
  return g;
}

}  // namespace

std::vector<FormsCheck> run_forms_suite(const ToricVariety& X,
                                        const std::optional<GradedPolynomial>& f_in,
                                        std::uint64_t seed, std::size_t identity_cases) {
  const Fan& fan = X.fan();
  const std::size_t n = fan.n();
  const int d = fan.dim();
  std::mt19937_64 rng(seed);
  std::vector<FormsCheck> out;

  FormsCheck rel{"omega_ij relations"};
  for (const auto& [i, j] : opposite_pairs(fan)) {
    const ExteriorForm wij = omega_ij(fan, i, j);
    Exponent zi(n, 0), zj(n, 0);
    zi[i] = 1;
    zj[j] = 1;
    GradedPolynomial pi(X.ray_degree(i), n), pj(X.ray_degree(j), n);
    pi.add_term(zi, 1);
    pj.add_term(zj, 1);
    rel.cases += 2;
    rel.passed += omega_i(fan, i) == multiply(pj, wij);
    rel.passed += omega_i(fan, j) == multiply(pi, wij).scaled(-1);
  }
  out.push_back(rel);

  FormsCheck mem{"generator membership"};
  mem.cases += 2;
  mem.passed += module_membership(fan, mform_omega0(fan));
  mem.passed += to_dz_basis(fan, mform_omega0(fan)) == omega0(fan);
  for (std::size_t i = 0; i < n; ++i) {
    mem.cases += 2;
    mem.passed += module_membership(fan, mform_omega_i(fan, i));
    mem.passed += to_dz_basis(fan, mform_omega_i(fan, i)) == omega_i(fan, i);
  }
  for (const auto& [i, j] : opposite_pairs(fan)) {
    mem.cases += 2;
    mem.passed += module_membership(fan, mform_omega_ij(fan, i, j));
    mem.passed += to_dz_basis(fan, mform_omega_ij(fan, i, j)) == omega_ij(fan, i, j);
  }
  out.push_back(mem);

  FormsCheck dd{"d(d(w)) = 0"};
  FormsCheck leibniz{"Leibniz rule"};
  for (int t = 0; t < 10; ++t) {
    const int p = static_cast<int>(rng() % std::min<std::size_t>(n - 1, 3));
    const ExteriorForm w = random_form(n, p, rng);
    dd.cases += 1;
    dd.passed += exterior_derivative(exterior_derivative(w)).is_zero();
    const GradedPolynomial g = random_plain_polynomial(n, rng);
    leibniz.cases += 1;
    leibniz.passed += exterior_derivative(multiply(g, w)) ==
                      wedge(differential(g), w) + multiply(g, exterior_derivative(w));
  }
  out.push_back(dd);
  out.push_back(leibniz);

  std::optional<GradedPolynomial> f = f_in;
  if (!f && X.graded_dim(X.anticanonical()) > 0)
    f = random_polynomial(X, X.anticanonical(), seed);

  FormsCheck ident{"residue-differential identity"};
  if (f) {
    for (std::size_t t = 0; t < identity_cases; ++t) {
      const std::size_t i = rng() % n;
      const long k = 1 + static_cast<long>(rng() % 3);
      const DivisorClass g = f->degree().scaled(k) - X.anticanonical() + X.ray_degree(i);
      GradedPolynomial A(g, n);
      if (X.graded_dim(g) > 0) A = random_polynomial(X, g, rng());
      ident.cases += 1;
      ident.passed += residue_differential_identity_check(X, A, i, k, *f);
    }
  }
  out.push_back(ident);

  FormsCheck surj{"regular (d-1)-forms generated by omega_i"};
  if (f && d >= 2 && is_ample(fan, X.representative(f->degree()))) {
    for (long k = 1; k <= 2; ++k) {
      const DivisorClass beta = f->degree().scaled(k);
      surj.cases += 1;
      surj.passed += generated_forms_dimension(X, beta) == regular_forms_dimension(X, beta);
    }
  }
  out.push_back(surj);
  return out;
}

}  // namespace torica
