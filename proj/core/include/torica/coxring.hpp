#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "torica/arith.hpp"
#include "torica/divisor.hpp"
#include "torica/fan.hpp"
#include "torica/lattice.hpp"

namespace torica {

/// A valid fan together with its class group and the Cl-grading of the Cox
/// ring S = Q[z_1, ..., z_n].
class ToricVariety {
 public:
  /// Validates the fan (throws InvalidFan / NonPrimitiveRay / RankDeficient).
  explicit ToricVariety(Fan fan);

  const Fan& fan() const noexcept { return fan_; }
  const ClassGroup& class_group() const noexcept { return group_; }
  std::size_t n() const noexcept { return fan_.n(); }
  int dim() const noexcept { return fan_.dim(); }

  /// beta_i = deg z_i.
  const DivisorClass& ray_degree(std::size_t i) const { return ray_degrees_.at(i); }
  /// beta_0 = sum of beta_i.
  const DivisorClass& anticanonical() const noexcept { return beta0_; }

  DivisorClass class_of(const IntVector& b) const { return group_.class_of(b); }
  DivisorClass class_of(const std::vector<std::int64_t>& b) const { return group_.class_of(b); }
  DivisorClass degree_of(const Exponent& a) const;
  IntVector representative(const DivisorClass& c) const { return group_.representative(c); }

  /// Exponents a >= 0 with deg z^a = beta, sorted lexicographically.
  /// Results are cached per class.
  const std::vector<Exponent>& monomial_basis(const DivisorClass& beta) const;
  std::size_t graded_dim(const DivisorClass& beta) const { return monomial_basis(beta).size(); }

 private:
  Fan fan_;
  ClassGroup group_;
  std::vector<DivisorClass> ray_degrees_;
  DivisorClass beta0_;

  struct Cache {
    std::mutex mu;
    std::map<DivisorClass, std::shared_ptr<const std::vector<Exponent>>> bases;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Homogeneous element of S: a fixed degree and exact rational terms.
class GradedPolynomial {
 public:
  using Terms = std::map<Exponent, Rational>;

  GradedPolynomial() = default;
  GradedPolynomial(DivisorClass degree, std::size_t nvars)
      : degree_(std::move(degree)), nvars_(nvars) {}

  const DivisorClass& degree() const noexcept { return degree_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Adds c z^a; the caller guarantees deg z^a == degree().
  void add_term(const Exponent& a, const Rational& c);
  Rational coefficient(const Exponent& a) const;

  bool operator==(const GradedPolynomial& rhs) const;

 private:
  DivisorClass degree_;
  std::size_t nvars_ = 0;
  Terms terms_;
};

/// Builds a polynomial of degree `degree`, rejecting terms of another class
/// (DegreeMismatch) or of the wrong length (InvalidInput).
GradedPolynomial make_polynomial(const ToricVariety& X, const DivisorClass& degree,
                                 const GradedPolynomial::Terms& terms);

GradedPolynomial partial_derivative(const ToricVariety& X, const GradedPolynomial& f,
                                    std::size_t i);
GradedPolynomial add(const GradedPolynomial& f, const GradedPolynomial& g);
GradedPolynomial scale(const GradedPolynomial& f, const Rational& c);
GradedPolynomial multiply(const GradedPolynomial& f, const GradedPolynomial& g);
/// z^a * f.
GradedPolynomial multiply_monomial(const ToricVariety& X, const GradedPolynomial& f,
                                   const Exponent& a);

/// Basis of {phi in Q^n : sum phi_i e_i = 0}; dimension n - d.
std::vector<RatVector> euler_relations_basis(const Fan& fan);
bool is_euler_relation(const Fan& fan, const RatVector& phi);

/// phi(beta) = sum phi_i a_i, checked on every monomial of degree beta.
/// Throws EmptyDegree if S_beta = 0 and InconsistentRelation on disagreement.
Rational euler_constant(const ToricVariety& X, const RatVector& phi, const DivisorClass& beta);

/// phi(beta) f == sum phi_i z_i df/dz_i, exactly.
bool euler_identity_holds(const ToricVariety& X, const RatVector& phi, const GradedPolynomial& f);

/// Every monomial coefficient is a nonzero integer in [-9, 9]; deterministic
/// in (beta, seed). Throws EmptyDegree when S_beta = 0.
GradedPolynomial random_polynomial(const ToricVariety& X, const DivisorClass& beta,
                                   std::uint64_t seed);

/// Every monomial of S_beta is divisible by some z^sigma-hat.
bool monomials_in_irrelevant_ideal(const ToricVariety& X, const DivisorClass& beta);

}  // namespace torica
