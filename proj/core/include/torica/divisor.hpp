#pragma once

#include <cstdint>
#include <vector>

#include "torica/arith.hpp"
#include "torica/fan.hpp"

namespace torica {

/// Point of M in the fixed basis m_1, ..., m_d.
using LatticePoint = std::vector<std::int64_t>;

/// The unique m in M_Q with <m, e_i> = -b_i for every ray of the max cone.
RatVector m_sigma(const Fan& fan, const IntVector& b, const Cone& sigma);

/// m_sigma is integral for every maximal cone.
bool is_cartier(const Fan& fan, const IntVector& b);

/// Strict convexity: <m_sigma, e_j> > -b_j for every max cone and e_j outside it.
bool is_ample(const Fan& fan, const IntVector& b);

/// {m : <m, e_i> >= -b_i for all i}.
struct SupportPolytope {
  std::vector<RatVector> vertices;           // sorted, distinct
  std::vector<LatticePoint> lattice_points;  // sorted lexicographically
};

SupportPolytope support_polytope(const Fan& fan, const IntVector& b);

/// Just the vertices; cheaper when lattice points are not needed.
std::vector<RatVector> polytope_vertices(const Fan& fan, const IntVector& b);

/// Lattice points of the polytope, sorted.
std::vector<LatticePoint> polytope_lattice_points(const Fan& fan, const IntVector& b);

/// Face of an ample polytope cut out by <m, e_i> = -b_i for i in `cone`.
struct PolytopeFace {
  Cone cone;
  int dim = 0;
  std::vector<RatVector> vertices;
  std::vector<LatticePoint> lattice_points;
};

/// One face per cone of the fan (the empty cone gives the whole polytope).
/// Throws NotAmple.
std::vector<PolytopeFace> polytope_faces(const Fan& fan, const IntVector& b);

}  // namespace torica
