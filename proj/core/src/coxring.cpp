#include "torica/coxring.hpp"

#include <algorithm>
#include <optional>
#include <random>

#include "torica/error.hpp"

namespace torica {

ToricVariety::ToricVariety(Fan fan) : fan_(std::move(fan)) {
  require_valid_fan(fan_);
  group_ = cokernel_presentation(fan_.alpha());
  const std::size_t n = fan_.n();
  IntVector ones(n, Integer(1));
  beta0_ = group_.class_of(ones);
  for (std::size_t i = 0; i < n; ++i) {
    IntVector h(n);
    h[i] = 1;
    ray_degrees_.push_back(group_.class_of(h));
  }
}

DivisorClass ToricVariety::degree_of(const Exponent& a) const {
  require(a.size() == n(), ErrorCode::InvalidInput, "exponent vector has wrong length");
  IntVector v;
  v.reserve(a.size());
  for (int x : a) v.emplace_back(x);
  return group_.class_of(v);
}

const std::vector<Exponent>& ToricVariety::monomial_basis(const DivisorClass& beta) const {
  group_.check_same_group(beta);
  {
    std::lock_guard lock(cache_->mu);
    auto it = cache_->bases.find(beta);
    if (it != cache_->bases.end()) return *it->second;
  }
  const IntVector b = representative(beta);
  auto basis = std::make_shared<std::vector<Exponent>>();
  for (const auto& m : polytope_lattice_points(fan_, b)) {
    Exponent a(n());
    for (std::size_t i = 0; i < n(); ++i) {
      std::int64_t s = to_int64(b[i]);
      for (int k = 0; k < dim(); ++k) s += m[k] * fan_.ray(i)[k];
      require(s >= 0 && fits_int(Integer(static_cast<long>(s))), ErrorCode::InternalInvariant,
              "lattice point outside the support polytope");
      a[i] = static_cast<int>(s);
    }
    basis->push_back(std::move(a));
  }
  std::sort(basis->begin(), basis->end());
  std::lock_guard lock(cache_->mu);
  auto [it, inserted] = cache_->bases.emplace(beta, std::move(basis));
  return *it->second;
}

void GradedPolynomial::add_term(const Exponent& a, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(a, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational GradedPolynomial::coefficient(const Exponent& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool GradedPolynomial::operator==(const GradedPolynomial& rhs) const {
  return nvars_ == rhs.nvars_ && degree_ == rhs.degree_ && terms_ == rhs.terms_;
}

GradedPolynomial make_polynomial(const ToricVariety& X, const DivisorClass& degree,
                                 const GradedPolynomial::Terms& terms) {
  X.class_group().check_same_group(degree);
  GradedPolynomial f(degree, X.n());
  for (const auto& [a, c] : terms) {
    require(a.size() == X.n(), ErrorCode::InvalidInput, "exponent vector has wrong length");
    require(std::all_of(a.begin(), a.end(), [](int x) { return x >= 0; }),
            ErrorCode::InvalidInput, "negative exponent");
    if (c == 0) continue;
    if (!(X.degree_of(a) == degree))
      fail(ErrorCode::DegreeMismatch, "term is not of the polynomial's degree");
    f.add_term(a, c);
  }
  return f;
}

GradedPolynomial partial_derivative(const ToricVariety& X, const GradedPolynomial& f,
                                    std::size_t i) {
  require(i < X.n(), ErrorCode::InvalidInput, "variable index out of range");
  GradedPolynomial out(f.degree() - X.ray_degree(i), f.nvars());
  for (const auto& [a, c] : f.terms()) {
    if (a[i] == 0) continue;
    Exponent e = a;
    --e[i];
    out.add_term(e, c * a[i]);
  }
  return out;
}

GradedPolynomial add(const GradedPolynomial& f, const GradedPolynomial& g) {
  if (!(f.degree() == g.degree()))
    fail(ErrorCode::DegreeMismatch, "adding polynomials of different degrees");
  GradedPolynomial out = f;
  for (const auto& [a, c] : g.terms()) out.add_term(a, c);
  return out;
}

GradedPolynomial scale(const GradedPolynomial& f, const Rational& c) {
  GradedPolynomial out(f.degree(), f.nvars());
  if (c == 0) return out;
  for (const auto& [a, x] : f.terms()) out.add_term(a, x * c);
  return out;
}

GradedPolynomial multiply(const GradedPolynomial& f, const GradedPolynomial& g) {
  GradedPolynomial out(f.degree() + g.degree(), f.nvars());
  for (const auto& [a, x] : f.terms())
    for (const auto& [b, y] : g.terms()) {
      Exponent e(a.size());
      for (std::size_t k = 0; k < a.size(); ++k) e[k] = a[k] + b[k];
      out.add_term(e, x * y);
    }
  return out;
}

GradedPolynomial multiply_monomial(const ToricVariety& X, const GradedPolynomial& f,
                                   const Exponent& a) {
  GradedPolynomial out(f.degree() + X.degree_of(a), f.nvars());
  for (const auto& [b, x] : f.terms()) {
    Exponent e(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) e[k] = a[k] + b[k];
    out.add_term(e, x);
  }
  return out;
}

std::vector<RatVector> euler_relations_basis(const Fan& fan) {
  return kernel_basis_rational(fan.alpha().transpose());
}

bool is_euler_relation(const Fan& fan, const RatVector& phi) {
  if (phi.size() != fan.n()) return false;
  for (int k = 0; k < fan.dim(); ++k) {
    Rational s = 0;
    for (std::size_t i = 0; i < fan.n(); ++i) s += phi[i] * static_cast<long>(fan.ray(i)[k]);
    if (s != 0) return false;
  }
  return true;
}

Rational euler_constant(const ToricVariety& X, const RatVector& phi, const DivisorClass& beta) {
  require(phi.size() == X.n(), ErrorCode::InvalidInput, "relation has wrong length");
  const auto& basis = X.monomial_basis(beta);
  if (basis.empty()) fail(ErrorCode::EmptyDegree, "S_beta is zero");
  std::optional<Rational> value;
  for (const auto& a : basis) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += phi[i] * a[i];
    if (value && *value != s)
      fail(ErrorCode::InconsistentRelation,
           "relation takes values " + to_string(*value) + " and " + to_string(s) + " on S_beta");
    value = s;
  }
  return *value;
}

bool euler_identity_holds(const ToricVariety& X, const RatVector& phi, const GradedPolynomial& f) {
  if (f.is_zero()) return true;
  const Rational c = euler_constant(X, phi, f.degree());
  GradedPolynomial rhs(f.degree(), f.nvars());
  for (std::size_t i = 0; i < X.n(); ++i) {
    if (phi[i] == 0) continue;
    Exponent zi(X.n(), 0);
    zi[i] = 1;
    auto t = multiply_monomial(X, partial_derivative(X, f, i), zi);
    for (const auto& [a, x] : t.terms()) rhs.add_term(a, x * phi[i]);
  }
  return scale(f, c).terms() == rhs.terms();
}

GradedPolynomial random_polynomial(const ToricVariety& X, const DivisorClass& beta,
                                   std::uint64_t seed) {
  const auto& basis = X.monomial_basis(beta);
  if (basis.empty()) fail(ErrorCode::EmptyDegree, "S_beta is zero");
  std::mt19937_64 rng(seed);
  GradedPolynomial f(beta, X.n());
  for (const auto& a : basis) {
    // mt19937_64 output is fully specified, so this is portable.
    const auto r = static_cast<long>(rng() % 18);
    f.add_term(a, Rational(r < 9 ? r - 9 : r - 8));
  }
  return f;
}

bool monomials_in_irrelevant_ideal(const ToricVariety& X, const DivisorClass& beta) {
  for (const auto& a : X.monomial_basis(beta)) {
    bool divisible = false;
    for (const auto& sigma : X.fan().max_cones()) {
      bool ok = true;
      for (std::size_t i = 0; i < X.n() && ok; ++i)
        if (!std::binary_search(sigma.begin(), sigma.end(), i) && a[i] == 0) ok = false;
      if (ok) {
        divisible = true;
        break;
      }
    }
    if (!divisible) return false;
  }
  return true;
}

}  // namespace torica
