#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "torica/coxring.hpp"

namespace torica {

/// Index set as a bitmask (bit i <-> dz_i or m_i).
using IndexMask = std::uint64_t;

/// Element of S (x) Lambda^p Z^n in the dz_I basis.
class ExteriorForm {
 public:
  using Key = std::pair<Exponent, IndexMask>;
  using Terms = std::map<Key, Rational>;

  ExteriorForm(std::size_t nvars, int degree) : nvars_(nvars), degree_(degree) {}

  std::size_t nvars() const noexcept { return nvars_; }
  int degree() const noexcept { return degree_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Adds c z^a dz_{idx[0]} ^ dz_{idx[1]} ^ ..., normalizing order and sign.
  void add_term(const Exponent& a, const std::vector<std::size_t>& idx, const Rational& c);
  void add_sorted(const Exponent& a, IndexMask mask, const Rational& c);

  ExteriorForm operator+(const ExteriorForm& rhs) const;
  ExteriorForm operator-(const ExteriorForm& rhs) const;
  ExteriorForm scaled(const Rational& c) const;
  bool operator==(const ExteriorForm& rhs) const = default;

  std::string to_string() const;

 private:
  std::size_t nvars_;
  int degree_;
  Terms terms_;
};

/// Sign of moving the sorted set `b` past `a` when merging (a ^ b).
int merge_sign(IndexMask a, IndexMask b);

ExteriorForm wedge(const ExteriorForm& a, const ExteriorForm& b);
ExteriorForm exterior_derivative(const ExteriorForm& w);
/// g * w for a polynomial g.
ExteriorForm multiply(const GradedPolynomial& g, const ExteriorForm& w);
/// df = sum_i (df/dz_i) dz_i.
ExteriorForm differential(const GradedPolynomial& g);

/// det(<m_j, e_{i_k}>) with the rays taken in the given order.
Integer det_e(const Fan& fan, const std::vector<std::size_t>& ordered);

ExteriorForm omega0(const Fan& fan);
/// Sum over |J| = d-1, i not in J, of det(e_i, e_J) z^(J+i)-hat dz_J.
ExteriorForm omega_i(const Fan& fan, std::size_t i);
/// Requires e_i = -e_j and i < j.
ExteriorForm omega_ij(const Fan& fan, std::size_t i, std::size_t j);
/// Pairs (i, j), i < j, with e_i = -e_j.
std::vector<std::pair<std::size_t, std::size_t>> opposite_pairs(const Fan& fan);

/// Element of S (x) Lambda^p M in the basis m_K of the fixed basis m_1..m_d.
class MForm {
 public:
  using Key = std::pair<Exponent, IndexMask>;
  using Terms = std::map<Key, Rational>;

  MForm(std::size_t nvars, int dim, int degree) : nvars_(nvars), dim_(dim), degree_(degree) {}

  std::size_t nvars() const noexcept { return nvars_; }
  int dim() const noexcept { return dim_; }
  int degree() const noexcept { return degree_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const Exponent& a, const std::vector<std::size_t>& idx, const Rational& c);
  void add_sorted(const Exponent& a, IndexMask mask, const Rational& c);
  MForm scaled(const Rational& c) const;
  bool operator==(const MForm& rhs) const = default;

 private:
  std::size_t nvars_;
  int dim_;
  int degree_;
  Terms terms_;
};

MForm multiply(const GradedPolynomial& g, const MForm& w);

/// z_1...z_n m_1 ^ ... ^ m_d.
MForm mform_omega0(const Fan& fan);
/// sum_j <m_j, e_i> z_i-hat omega_j with omega_j = (-1)^(j+1) m_1 ^ .. m_j-hat .. ^ m_d.
MForm mform_omega_i(const Fan& fan, std::size_t i);
/// sum_j <m_j, e_i> z_{ij}-hat omega_j.
MForm mform_omega_ij(const Fan& fan, std::size_t i, std::size_t j);

/// Interior product <e, m_K> as an element of Lambda^{p-1} M.
std::map<IndexMask, Rational> interior(const std::vector<std::int64_t>& e, IndexMask k,
                                       const Rational& c);

/// gamma_i(w) = 0 mod z_i for every ray i: w lies in the submodule of
/// forms regular along every toric divisor.
bool module_membership(const Fan& fan, const MForm& w);

/// m_k -> sum_i <m_k, e_i> dz_i / z_i. Throws DivisionByVariable when a
/// coefficient would need a negative exponent.
ExteriorForm to_dz_basis(const Fan& fan, const MForm& w);

/// Form in Lambda^q M_Q (no polynomial part), keyed by index mask.
using ConstantForm = std::map<IndexMask, Rational>;

/// omega'(e_{i_1}, ..., e_{i_k}) for omega' in Lambda^k M_Q.
Rational evaluate_on_rays(const Fan& fan, const ConstantForm& w, const Cone& tau);

/// The residue of omega_m ^ omega' along the orbit closure of tau:
/// zero if m is off the face Delta_tau, else omega'(e_tau) * omega_m.
/// Requires m in Delta and omega_m in Lambda Gamma_Delta(m).
ConstantForm residue_map(const Fan& fan, const IntVector& b, const Cone& tau,
                         const LatticePoint& m, const ConstantForm& omega_m,
                         const ConstantForm& omega_prime);

/// Checks f dA ^ W_i + f A dW_i - k A df ^ W_i == (f dA/dz_i - k A df/dz_i) W_0
/// for W_i = omega_i, W_0 = omega0. Requires deg A = k beta - beta_0 + beta_i.
bool residue_differential_identity_check(const ToricVariety& X, const GradedPolynomial& A,
                                         std::size_t i, long k, const GradedPolynomial& f);

/// dim of the degree-beta piece of the module of regular (d-1)-forms,
/// counted monomial by monomial from the membership criterion.
std::size_t regular_forms_dimension(const ToricVariety& X, const DivisorClass& beta);

/// dim span{A omega_i : A in S_{beta - beta_0 + beta_i}}.
std::size_t generated_forms_dimension(const ToricVariety& X, const DivisorClass& beta);

struct FormsCheck {
  std::string name;
  std::size_t cases = 0;
  std::size_t passed = 0;
  bool ok() const { return cases == passed; }
};

/// Identity suite over the generators; `f`, if absent, is a seeded random
/// section of the anticanonical class when that class has sections.
std::vector<FormsCheck> run_forms_suite(const ToricVariety& X,
                                        const std::optional<GradedPolynomial>& f,
                                        std::uint64_t seed, std::size_t identity_cases = 20);

}  // namespace torica
