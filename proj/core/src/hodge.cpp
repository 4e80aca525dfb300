#include "torica/hodge.hpp"

#include <algorithm>

#include "torica/error.hpp"
#include "torica/sparse_rank.hpp"

namespace torica {

namespace {

using ColumnIndex = std::map<Exponent, std::size_t>;

ColumnIndex index_basis(const std::vector<Exponent>& basis) {
  ColumnIndex idx;
  for (std::size_t k = 0; k < basis.size(); ++k) idx.emplace(basis[k], k);
  return idx;
}

// z^a * g written in the monomial coordinates `cols`.
SparseRow shifted_row(const GradedPolynomial& g, const Exponent& a, const ColumnIndex& cols) {
  SparseRow row;
  Exponent e(a.size());
  for (const auto& [t, c] : g.terms()) {
    for (std::size_t i = 0; i < a.size(); ++i) e[i] = t[i] + a[i];
    auto it = cols.find(e);
    require(it != cols.end(), ErrorCode::InternalInvariant, "product left its graded piece");
    row.emplace_back(it->second, c);
  }
  std::sort(row.begin(), row.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return row;
}

// Rows spanning the ideal generated by `gens` in degree g.
std::vector<SparseRow> ideal_rows(const ToricVariety& X, const std::vector<GradedPolynomial>& gens,
                                  const DivisorClass& g, const ColumnIndex& cols) {
  std::vector<SparseRow> rows;
  for (const auto& h : gens) {
    if (h.is_zero()) continue;
    for (const auto& a : X.monomial_basis(g - h.degree())) rows.push_back(shifted_row(h, a, cols));
  }
  return rows;
}

// p restricted to z_i = 1 for every i outside sigma, in the variables of sigma.
MultiPoly chart_restriction(const MultiPoly& p, const Cone& sigma) {
  MultiPoly out(sigma.size());
  Exponent e(sigma.size());
  for (const auto& [a, c] : p.terms()) {
    for (std::size_t k = 0; k < sigma.size(); ++k) e[k] = a[sigma[k]];
    out.add_term(e, c);
  }
  return out;
}

std::string cone_label(const Cone& c) {
  std::string where;
  for (auto i : c) where += (where.empty() ? "" : ",") + std::to_string(i);
  return "{" + where + "}";
}

}  // namespace

MultiPoly to_multipoly(const GradedPolynomial& f) {
  MultiPoly p(f.nvars());
  for (const auto& [a, c] : f.terms()) p.add_term(a, c);
  return p;
}

QuasiSmoothCertificate certify_quasi_smooth(const ToricVariety& X, const GradedPolynomial& f,
                                            Budget& budget) {
  QuasiSmoothCertificate cert;
  const std::uint64_t start = budget.used();
  std::vector<MultiPoly> partials;
  for (std::size_t i = 0; i < X.n(); ++i)
    partials.push_back(to_multipoly(partial_derivative(X, f, i)));
  cert.quasi_smooth = true;
  for (const auto& sigma : X.fan().max_cones()) {
    bool ok;
    try {
      // The torus of the class group moves any point with z_i != 0 off sigma
      // to one with all those z_i = 1, and V(J(f)) is stable under it.
      std::vector<MultiPoly> chart;
      for (const auto& p : partials) chart.push_back(chart_restriction(p, sigma));
      ok = ideal_contains_one(chart, budget);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BudgetExceeded) throw;
      fail(ErrorCode::BudgetExceeded,
           std::string(e.what()) + " (quasi-smoothness, cone " + cone_label(sigma) + ")");
    }
    cert.cones.push_back({sigma, ok});
    cert.quasi_smooth = cert.quasi_smooth && ok;
  }
  cert.steps = budget.used() - start;
  return cert;
}

NondegeneracyCertificate certify_nondegenerate(const ToricVariety& X, const GradedPolynomial& f,
                                               const IntVector& b, Budget& budget) {
  const Fan& fan = X.fan();
  require(b.size() == X.n(), ErrorCode::InvalidInput, "divisor has wrong length");
  if (!(X.class_of(b) == f.degree()))
    fail(ErrorCode::DegreeMismatch, "divisor class differs from the degree of f");
  auto faces = polytope_faces(fan, b);  // throws NotAmple
  const std::size_t d = fan.dim();

  // Terms of f as (m, coefficient) with a_i = b_i + <m, e_i>.
  std::map<Exponent, LatticePoint> point_of;
  for (const auto& m : polytope_lattice_points(fan, b)) {
    Exponent a(X.n());
    for (std::size_t i = 0; i < X.n(); ++i) {
      std::int64_t s = to_int64(b[i]);
      for (std::size_t k = 0; k < d; ++k) s += m[k] * fan.ray(i)[k];
      a[i] = static_cast<int>(s);
    }
    point_of.emplace(std::move(a), m);
  }
  std::vector<std::pair<LatticePoint, Rational>> terms;
  for (const auto& [a, c] : f.terms()) {
    auto it = point_of.find(a);
    require(it != point_of.end(), ErrorCode::InternalInvariant, "term of f outside its polytope");
    terms.emplace_back(it->second, c);
  }

  NondegeneracyCertificate cert;
  const std::uint64_t start = budget.used();
  cert.nondegenerate = true;
  for (const auto& face : faces) {
    FaceCertificate fc{face.cone, face.dim, 0, false};
    std::vector<const std::pair<LatticePoint, Rational>*> on_face;
    for (const auto& t : terms) {
      bool tight = true;
      for (auto i : face.cone) {
        std::int64_t s = 0;
        for (std::size_t k = 0; k < d; ++k) s += t.first[k] * fan.ray(i)[k];
        if (s != -to_int64(b[i])) {
          tight = false;
          break;
        }
      }
      if (tight) on_face.push_back(&t);
    }
    fc.terms = on_face.size();
    if (!on_face.empty()) {
      // Coordinates on the saturated lattice of the face: with U A V = D for
      // the difference vectors A, x -> (x V)_{<k} is that lattice's basis.
      const LatticePoint& p0 = on_face.front()->first;
      IntMatrix diffs(on_face.size(), d);
      for (std::size_t r = 0; r < on_face.size(); ++r)
        for (std::size_t k = 0; k < d; ++k) diffs(r, k) = Integer(on_face[r]->first[k] - p0[k]);
      const auto snf = smith_normal_form(diffs);
      const std::size_t k_dim = snf.invariants().size();
      std::vector<Exponent> coords;
      Exponent lo(k_dim, 0);
      for (const auto* t : on_face) {
        Exponent u(k_dim);
        for (std::size_t c = 0; c < k_dim; ++c) {
          Integer s = 0;
          for (std::size_t k = 0; k < d; ++k) s += Integer(t->first[k] - p0[k]) * snf.V(k, c);
          u[c] = static_cast<int>(to_int64(s));
          lo[c] = std::min(lo[c], u[c]);
        }
        coords.push_back(std::move(u));
      }
      // Variables u_1..u_k and y (index k).
      MultiPoly g(k_dim + 1);
      std::vector<MultiPoly> log_parts(k_dim, MultiPoly(k_dim + 1));
      for (std::size_t r = 0; r < on_face.size(); ++r) {
        Exponent e(k_dim + 1, 0);
        for (std::size_t c = 0; c < k_dim; ++c) e[c] = coords[r][c] - lo[c];
        g.add_term(e, on_face[r]->second);
        for (std::size_t c = 0; c < k_dim; ++c)
          if (e[c]) log_parts[c].add_term(e, on_face[r]->second * e[c]);
      }
      Exponent uy(k_dim + 1, 1);
      std::vector<MultiPoly> gens{g};
      for (auto& lp : log_parts) gens.push_back(std::move(lp));
      gens.push_back(MultiPoly::constant(k_dim + 1, 1) - MultiPoly::monomial(uy, 1));
      try {
        fc.ok = ideal_contains_one(gens, budget);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::BudgetExceeded) throw;
        fail(ErrorCode::BudgetExceeded, std::string(e.what()) + " (nondegeneracy, face of cone " +
                                            cone_label(face.cone) + ")");
      }
    }
    cert.nondegenerate = cert.nondegenerate && fc.ok;
    cert.faces.push_back(std::move(fc));
  }
  cert.steps = budget.used() - start;
  return cert;
}

std::vector<std::int64_t> betti_numbers(const Fan& fan) {
  const std::size_t d = fan.dim();
  // Coefficients of sum_k f_k (u - 1)^(d - k) in u = t^2.
  std::vector<std::int64_t> poly(d + 1, 0);
  for (std::size_t k = 0; k <= d; ++k) {
    const auto fk = static_cast<std::int64_t>(cones_of_dimension(fan, k).size());
    const std::size_t e = d - k;
    std::int64_t binom = 1;
    for (std::size_t j = 0; j <= e; ++j) {
      const std::int64_t sign = ((e - j) % 2) ? -1 : 1;
      poly[j] += fk * binom * sign;
      binom = binom * static_cast<std::int64_t>(e - j) / static_cast<std::int64_t>(j + 1);
    }
  }
  std::vector<std::int64_t> betti(2 * d + 1, 0);
  for (std::size_t j = 0; j <= d; ++j) {
    require(poly[j] >= 0, ErrorCode::TheoremViolation, "negative Betti number from cone counts");
    betti[2 * j] = poly[j];
  }
  return betti;
}

std::size_t aut_dimension(const ToricVariety& X) {
  std::size_t total = X.dim();
  for (std::size_t i = 0; i < X.n(); ++i) total += X.graded_dim(X.ray_degree(i)) - 1;
  return total;
}

HodgeEngine::HodgeEngine(ToricVariety X, GradedPolynomial f, HodgeOptions opts)
    : X_(std::move(X)), f_(std::move(f)), opts_(std::move(opts)), budget_(opts_.budget) {
  X_.class_group().check_same_group(f_.degree());
  require(f_.nvars() == X_.n(), ErrorCode::InvalidInput, "polynomial has wrong number of variables");
  require(!f_.is_zero(), ErrorCode::InvalidInput, "polynomial is zero");
  require(opts_.budget > 0, ErrorCode::InvalidInput, "budget must be positive");
  if (opts_.divisor) {
    b_ = *opts_.divisor;
    require(b_.size() == X_.n(), ErrorCode::InvalidInput, "divisor has wrong length");
    if (!(X_.class_of(b_) == f_.degree()))
      fail(ErrorCode::DegreeMismatch, "divisor class differs from the degree of f");
  } else {
    b_ = X_.representative(f_.degree());
  }
  for (std::size_t i = 0; i < X_.n(); ++i) {
    partials_.push_back(partial_derivative(X_, f_, i));
    Exponent zi(X_.n(), 0);
    zi[i] = 1;
    log_partials_.push_back(multiply_monomial(X_, partials_.back(), zi));
  }
  betti_ = betti_numbers(X_.fan());
  ample_ = is_ample(X_.fan(), b_);
  cartier_ = is_cartier(X_.fan(), b_);
}

DivisorClass HodgeEngine::shifted(long k) const {
  return f_.degree().scaled(k) - X_.anticanonical();
}

std::size_t HodgeEngine::jacobian_dim(const DivisorClass& g, JacobianVariant v) const {
  X_.class_group().check_same_group(g);
  const auto key = std::make_pair(static_cast<int>(v), g);
  {
    std::lock_guard lock(mu_);
    auto it = dims_.find(key);
    if (it != dims_.end()) return it->second;
  }
  std::size_t result = 0;
  if (v == JacobianVariant::J1) {
    // J1_g = {h : h z_1...z_n in J0_{g+beta_0}}; with mu the (injective)
    // multiplication map, dim = dim W - dim of W projected away from mu(S_g).
    const auto& basis = X_.monomial_basis(g);
    if (!basis.empty()) {
      const DivisorClass up = g + X_.anticanonical();
      const auto& big = X_.monomial_basis(up);
      ColumnIndex cols = index_basis(big);
      std::vector<bool> image(big.size(), false);
      for (auto a : basis) {
        for (auto& x : a) ++x;
        image[cols.at(a)] = true;
      }
      SparseEchelon w, projected;
      for (auto& row : ideal_rows(X_, log_partials_, up, cols)) {
        SparseRow rest;
        for (const auto& e : row)
          if (!image[e.first]) rest.push_back(e);
        w.add(std::move(row));
        projected.add(std::move(rest));
      }
      result = w.rank() - projected.rank();
    }
  } else {
    const auto& basis = X_.monomial_basis(g);
    if (!basis.empty()) {
      ColumnIndex cols = index_basis(basis);
      const auto& gens = v == JacobianVariant::J ? partials_ : log_partials_;
      SparseEchelon e;
      for (auto& row : ideal_rows(X_, gens, g, cols)) {
        e.add(std::move(row));
        if (e.rank() == basis.size()) break;
      }
      result = e.rank();
    }
  }
  std::lock_guard lock(mu_);
  dims_.emplace(key, result);
  return result;
}

bool HodgeEngine::f_in_jacobian() const {
  const auto& basis = X_.monomial_basis(f_.degree());
  ColumnIndex cols = index_basis(basis);
  SparseEchelon e;
  for (auto& row : ideal_rows(X_, partials_, f_.degree(), cols)) e.add(std::move(row));
  return e.contains(shifted_row(f_, Exponent(X_.n(), 0), cols));
}

const QuasiSmoothCertificate& HodgeEngine::quasi_smooth() {
  if (!qs_) qs_ = certify_quasi_smooth(X_, f_, budget_);
  return *qs_;
}

const NondegeneracyCertificate& HodgeEngine::nondegenerate() {
  if (!nd_) nd_ = certify_nondegenerate(X_, f_, b_, budget_);
  return *nd_;
}

void HodgeEngine::require_quasi_smooth_ample() {
  if (opts_.skip_checks) {
    if (!qs_ || !ample_) unchecked_ = true;
    return;
  }
  if (!ample_) fail(ErrorCode::NotAmple, "the class of f is not ample");
  if (!quasi_smooth().quasi_smooth) fail(ErrorCode::NotQuasiSmooth, "f is not quasi-smooth");
}

void HodgeEngine::require_nondegenerate() {
  if (opts_.skip_checks) {
    if (!nd_) unchecked_ = true;
    return;
  }
  if (!ample_) fail(ErrorCode::NotAmple, "the class of f is not ample");
  if (!nondegenerate().nondegenerate) fail(ErrorCode::NotNondegenerate, "f is not nondegenerate");
}

std::size_t HodgeEngine::gr_hodge_complement(int p) {
  require_quasi_smooth_ample();
  if (p < 0 || p > dim()) return 0;
  return dim_R(shifted(dim() - p + 1));
}

std::size_t HodgeEngine::primitive_hodge(int p) {
  require_quasi_smooth_ample();
  const int d = dim();
  if (p < 0 || p > d - 1) return 0;
  if (d % 2 == 0 && p == d / 2 - 1) {
    const auto r = static_cast<std::int64_t>(dim_R(shifted(d / 2 + 1)));
    const std::int64_t defect = betti_[d] - (d >= 2 ? betti_[d - 2] : 0);
    if (r - defect < 0)
      fail(ErrorCode::TheoremViolation,
           "middle-degree correction exceeds dim R(f): " + std::to_string(r) + " - " +
               std::to_string(defect));
    return static_cast<std::size_t>(r - defect);
  }
  return dim_R(shifted(d - p));
}

std::size_t HodgeEngine::primitive_hodge_via_R1(int p) {
  require_nondegenerate();
  if (p < 0 || p > dim() - 1) return 0;
  return dim_R1(shifted(dim() - p));
}

std::size_t HodgeEngine::affine_hodge_gr(int p) {
  require_nondegenerate();
  if (p < 0 || p > dim()) return 0;
  return dim_R0(f_.degree().scaled(dim() - p));
}

std::size_t HodgeEngine::moduli_tangent_dim() {
  require_quasi_smooth_ample();
  return dim_R(f_.degree());
}

}  // namespace torica
