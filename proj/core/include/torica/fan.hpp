#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "torica/arith.hpp"
#include "torica/lattice.hpp"

namespace torica {

/// Sorted list of ray indices (0-based).
using Cone = std::vector<std::size_t>;

/// Complete simplicial fan given by primitive rays and maximal cones.
/// Construction checks shape only; use validate_fan for the geometry.
class Fan {
 public:
  Fan() = default;
  Fan(int dim, std::vector<std::vector<std::int64_t>> rays,
      std::vector<Cone> max_cones);

  int dim() const noexcept { return dim_; }
  std::size_t n() const noexcept { return rays_.size(); }
  const std::vector<std::vector<std::int64_t>>& rays() const noexcept { return rays_; }
  const std::vector<std::int64_t>& ray(std::size_t i) const { return rays_[i]; }
  const std::vector<Cone>& max_cones() const noexcept { return max_cones_; }

  /// <m, e_i> for an integer m.
  Integer pairing(const IntVector& m, std::size_t i) const;
  Rational pairing(const RatVector& m, std::size_t i) const;

  /// True iff the rays in `c` span a cone of the fan (a face of a max cone).
  bool is_cone(const Cone& c) const;
  bool is_cone(std::uint64_t mask) const;

  /// The n x d matrix of alpha : M -> Z^n, rows are the rays.
  IntMatrix alpha() const;

  bool operator==(const Fan& rhs) const = default;

 private:
  int dim_ = 0;
  std::vector<std::vector<std::int64_t>> rays_;
  std::vector<Cone> max_cones_;
  std::vector<std::uint64_t> max_masks_;
};

std::uint64_t cone_mask(const Cone& c);
Cone mask_cone(std::uint64_t mask);

enum class FanIssueKind { NonPrimitiveRay, DuplicateRay, DegenerateCone, BadIntersection, NotComplete };

const char* to_string(FanIssueKind k) noexcept;

struct FanIssue {
  FanIssueKind kind;
  std::vector<std::size_t> where;  // ray index, cone indices, or a face
  std::vector<std::int64_t> direction;  // uncovered direction, if any
  std::string detail;
};

struct FanReport {
  bool valid() const { return issues.empty(); }
  std::vector<FanIssue> issues;
};

FanReport validate_fan(const Fan& fan, std::uint64_t seed = 0x5eed);

/// Throws InvalidFan (or NonPrimitiveRay) describing the first issue.
void require_valid_fan(const Fan& fan);

/// All k-element faces of max cones, sorted; k = 0 gives {{}}.
std::vector<Cone> cones_of_dimension(const Fan& fan, std::size_t k);

/// Minimal non-faces of the simplicial complex of cones.
std::vector<Cone> primitive_collections(const Fan& fan);

struct CoordinateSubspace {
  Cone zero_indices;  // the equations z_i = 0
  bool operator==(const CoordinateSubspace&) const = default;
};

std::vector<CoordinateSubspace> z_sigma_components(const Fan& fan);

struct CodimensionVerdict {
  std::size_t codim = 0;
  bool origin_case = false;  // n = d + 1 and Z = {0}
  std::size_t upper_bound = 0;
  bool bound_holds = false;
};

CodimensionVerdict codim_Z(const Fan& fan);

/// Squarefree exponent vectors, one per primitive collection.
std::vector<Exponent> stanley_reisner_generators(const Fan& fan);

enum class WeightedKind { IsWeightedProjective, FiniteCoverOfFan, NotApplicable };

struct WeightedClassification {
  WeightedKind kind = WeightedKind::NotApplicable;
  std::vector<std::int64_t> weights;  // positive, coprime; empty if not applicable
  Integer index = 1;                  // [N : sublattice spanned by rays]
};

WeightedClassification weighted_projective_classification(const Fan& fan);

Fan projective_space(int d);
Fan weighted_projective(const std::vector<std::int64_t>& w);
Fan product_of_fans(const Fan& a, const Fan& b);

}  // namespace torica
