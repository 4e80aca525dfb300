#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "torica/coxring.hpp"
#include "torica/groebner.hpp"

namespace torica {

enum class JacobianVariant { J, J0, J1 };

MultiPoly to_multipoly(const GradedPolynomial& f);

struct ConeCertificate {
  Cone cone;
  bool ok = false;  // z^sigma-hat lies in the radical of the Jacobian ideal
};

struct QuasiSmoothCertificate {
  bool quasi_smooth = false;
  std::vector<ConeCertificate> cones;
  std::uint64_t steps = 0;
};

struct FaceCertificate {
  Cone cone;           // the cone tau; the face is Delta_tau
  int dim = 0;
  std::size_t terms = 0;  // monomials of f on the face
  bool ok = false;     // restriction has no singular point in the torus
};

struct NondegeneracyCertificate {
  bool nondegenerate = false;
  std::vector<FaceCertificate> faces;
  std::uint64_t steps = 0;
};

/// For every max cone: z^sigma-hat in rad(df/dz_1, ..., df/dz_n).
QuasiSmoothCertificate certify_quasi_smooth(const ToricVariety& X, const GradedPolynomial& f,
                                            Budget& budget);

/// Face-by-face Delta-regularity. `b` must be ample with class deg f.
NondegeneracyCertificate certify_nondegenerate(const ToricVariety& X, const GradedPolynomial& f,
                                               const IntVector& b, Budget& budget);

/// b_0, ..., b_{2d} from the cone counts: sum over cones of (t^2 - 1)^(d - dim).
std::vector<std::int64_t> betti_numbers(const Fan& fan);

/// sum_i (dim S_{beta_i} - 1) + d.
std::size_t aut_dimension(const ToricVariety& X);

struct HodgeOptions {
  std::uint64_t budget = kDefaultGroebnerBudget;
  bool skip_checks = false;
  std::optional<IntVector> divisor;  // defaults to the canonical representative of deg f
};

/// Graded pieces of S, J(f), J0(f), J1(f) and the theorem-level dimensions.
/// Certificates are computed lazily, once, against a shared budget.
class HodgeEngine {
 public:
  HodgeEngine(ToricVariety X, GradedPolynomial f, HodgeOptions opts = {});

  const ToricVariety& variety() const noexcept { return X_; }
  const GradedPolynomial& polynomial() const noexcept { return f_; }
  const std::vector<GradedPolynomial>& partials() const noexcept { return partials_; }
  const IntVector& divisor() const noexcept { return b_; }
  const HodgeOptions& options() const noexcept { return opts_; }
  int dim() const noexcept { return X_.dim(); }

  /// k beta - beta_0.
  DivisorClass shifted(long k) const;

  std::size_t dim_S(const DivisorClass& g) const { return X_.graded_dim(g); }
  std::size_t jacobian_dim(const DivisorClass& g, JacobianVariant v) const;
  std::size_t dim_R(const DivisorClass& g) const { return dim_S(g) - jacobian_dim(g, JacobianVariant::J); }
  std::size_t dim_R0(const DivisorClass& g) const { return dim_S(g) - jacobian_dim(g, JacobianVariant::J0); }
  std::size_t dim_R1(const DivisorClass& g) const { return dim_S(g) - jacobian_dim(g, JacobianVariant::J1); }

  /// f lies in the span of z^a df/dz_i in degree beta.
  bool f_in_jacobian() const;

  bool ample() const noexcept { return ample_; }
  bool cartier() const noexcept { return cartier_; }
  const QuasiSmoothCertificate& quasi_smooth();
  const NondegeneracyCertificate& nondegenerate();
  const std::vector<std::int64_t>& betti() const noexcept { return betti_; }
  std::uint64_t budget_used() const noexcept { return budget_.used(); }

  /// True when a theorem was evaluated without its certificate.
  bool unchecked() const noexcept { return unchecked_; }

  /// dim Gr_F^p H^d(P - X) = dim R(f)_{(d-p+1) beta - beta_0}.
  std::size_t gr_hodge_complement(int p);
  /// dim PH^{p, d-1-p}(X), with the middle-degree correction by b_d - b_{d-2}.
  std::size_t primitive_hodge(int p);
  /// dim R1(f)_{(d-p) beta - beta_0}; needs nondegeneracy.
  std::size_t primitive_hodge_via_R1(int p);
  /// dim Gr_F^p PH^{d-1}(Y) = dim R0(f)_{(d-p) beta}; needs nondegeneracy.
  std::size_t affine_hodge_gr(int p);
  /// dim R(f)_beta.
  std::size_t moduli_tangent_dim();

 private:
  void require_quasi_smooth_ample();
  void require_nondegenerate();

  ToricVariety X_;
  GradedPolynomial f_;
  HodgeOptions opts_;
  IntVector b_;
  std::vector<GradedPolynomial> partials_;
  std::vector<GradedPolynomial> log_partials_;
  std::vector<std::int64_t> betti_;
  bool ample_ = false;
  bool cartier_ = false;
  bool unchecked_ = false;
  Budget budget_;
  std::optional<QuasiSmoothCertificate> qs_;
  std::optional<NondegeneracyCertificate> nd_;

  mutable std::mutex mu_;
  mutable std::map<std::pair<int, DivisorClass>, std::size_t> dims_;
};

}  // namespace torica
