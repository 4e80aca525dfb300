#include "torica/divisor.hpp"

#include <algorithm>
#include <set>

#include "torica/error.hpp"

namespace torica {

namespace {

std::vector<RatVector> ray_rows(const Fan& fan, const std::vector<std::size_t>& idx) {
  std::vector<RatVector> rows;
  for (auto i : idx) {
    RatVector r;
    for (auto x : fan.ray(i)) r.emplace_back(static_cast<long>(x));
    rows.push_back(std::move(r));
  }
  return rows;
}

bool satisfies_all(const Fan& fan, const IntVector& b, const RatVector& m) {
  for (std::size_t i = 0; i < fan.n(); ++i)
    if (fan.pairing(m, i) < -Rational(b[i])) return false;
  return true;
}

void check_length(const Fan& fan, const IntVector& b) {
  require(b.size() == fan.n(), ErrorCode::InvalidInput,
          "divisor has " + std::to_string(b.size()) + " entries, expected " +
              std::to_string(fan.n()));
}

}  // namespace

RatVector m_sigma(const Fan& fan, const IntVector& b, const Cone& sigma) {
  check_length(fan, b);
  require(sigma.size() == static_cast<std::size_t>(fan.dim()), ErrorCode::InvalidInput,
          "m_sigma needs a maximal cone");
  RatVector rhs;
  for (auto i : sigma) rhs.emplace_back(-b[i]);
  auto m = solve_rational(ray_rows(fan, sigma), rhs);
  require(!m.empty(), ErrorCode::InvalidFan, "cone rays are linearly dependent");
  return m;
}

bool is_cartier(const Fan& fan, const IntVector& b) {
  for (const auto& sigma : fan.max_cones())
    for (const auto& x : m_sigma(fan, b, sigma))
      if (x.get_den() != 1) return false;
  return true;
}

bool is_ample(const Fan& fan, const IntVector& b) {
  for (const auto& sigma : fan.max_cones()) {
    auto m = m_sigma(fan, b, sigma);
    for (std::size_t j = 0; j < fan.n(); ++j) {
      if (std::binary_search(sigma.begin(), sigma.end(), j)) continue;
      if (fan.pairing(m, j) <= -Rational(b[j])) return false;
    }
  }
  return true;
}

std::vector<RatVector> polytope_vertices(const Fan& fan, const IntVector& b) {
  check_length(fan, b);
  const std::size_t n = fan.n(), d = fan.dim();
  std::set<RatVector> out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + std::min(d, n), true);
  do {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) idx.push_back(i);
    RatVector rhs;
    for (auto i : idx) rhs.emplace_back(-b[i]);
    auto m = solve_rational(ray_rows(fan, idx), rhs);
    if (!m.empty() && satisfies_all(fan, b, m)) out.insert(std::move(m));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return {out.begin(), out.end()};
}

std::vector<LatticePoint> polytope_lattice_points(const Fan& fan, const IntVector& b) {
  auto verts = polytope_vertices(fan, b);
  std::vector<LatticePoint> pts;
  if (verts.empty()) return pts;
  const std::size_t d = fan.dim();
  std::vector<std::int64_t> lo(d), hi(d);
  for (std::size_t k = 0; k < d; ++k) {
    Rational mn = verts[0][k], mx = verts[0][k];
    for (const auto& v : verts) {
      mn = std::min(mn, v[k]);
      mx = std::max(mx, v[k]);
    }
    lo[k] = to_int64(ceil(mn));
    hi[k] = to_int64(floor(mx));
    if (lo[k] > hi[k]) return pts;
  }
  // Running pairings keep the inner loop on machine integers.
  std::vector<std::int64_t> bound(fan.n());
  for (std::size_t i = 0; i < fan.n(); ++i) bound[i] = -to_int64(b[i]);
  LatticePoint m(lo);
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < fan.n() && ok; ++i) {
      std::int64_t s = 0;
      for (std::size_t k = 0; k < d; ++k) s += m[k] * fan.ray(i)[k];
      ok = s >= bound[i];
    }
    if (ok) pts.push_back(m);
    std::size_t k = d;
    while (k-- > 0) {
      if (m[k] < hi[k]) {
        ++m[k];
        break;
      }
      m[k] = lo[k];
    }
    if (k == static_cast<std::size_t>(-1)) break;
  }
  return pts;
}

SupportPolytope support_polytope(const Fan& fan, const IntVector& b) {
  return {polytope_vertices(fan, b), polytope_lattice_points(fan, b)};
}

std::vector<PolytopeFace> polytope_faces(const Fan& fan, const IntVector& b) {
  if (!is_ample(fan, b)) fail(ErrorCode::NotAmple, "divisor is not ample");
  const std::size_t d = fan.dim();
  auto pts = polytope_lattice_points(fan, b);
  std::vector<std::pair<Cone, RatVector>> corner;
  for (const auto& sigma : fan.max_cones()) corner.push_back({sigma, m_sigma(fan, b, sigma)});

  std::vector<PolytopeFace> faces;
  for (std::size_t k = 0; k <= d; ++k) {
    for (auto& tau : cones_of_dimension(fan, k)) {
      PolytopeFace f;
      f.dim = static_cast<int>(d - k);
      std::set<RatVector> verts;
      for (const auto& [sigma, m] : corner)
        if (std::includes(sigma.begin(), sigma.end(), tau.begin(), tau.end())) verts.insert(m);
      f.vertices.assign(verts.begin(), verts.end());
      for (const auto& p : pts) {
        bool tight = true;
        for (auto i : tau) {
          std::int64_t s = 0;
          for (std::size_t c = 0; c < d; ++c) s += p[c] * fan.ray(i)[c];
          if (s != -to_int64(b[i])) {
            tight = false;
            break;
          }
        }
        if (tight) f.lattice_points.push_back(p);
      }
      f.cone = std::move(tau);
      faces.push_back(std::move(f));
    }
  }
  return faces;
}

}  // namespace torica
