#include "torica/fan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <unordered_set>

#include "torica/error.hpp"

namespace torica {

namespace {

std::string cone_text(const Cone& c) {
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < c.size(); ++k) os << (k ? "," : "") << c[k];
  os << '}';
  return os.str();
}

std::int64_t gcd_of(const std::vector<std::int64_t>& v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x);
  return g;
}

RatVector ray_rat(const Fan& f, std::size_t i) {
  RatVector v;
  for (auto x : f.ray(i)) v.emplace_back(static_cast<long>(x));
  return v;
}

Integer cone_det(const Fan& f, const std::vector<std::size_t>& idx) {
  const std::size_t d = f.dim();
  IntMatrix m(d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) m(r, c) = static_cast<long>(f.ray(idx[r])[c]);
  return determinant(m);
}

// Solves the (possibly non-square) system sum_k x_k cols[k] = b for linearly
// independent columns; nullopt if inconsistent or dependent.
std::optional<RatVector> solve_columns(const std::vector<RatVector>& cols,
                                       const RatVector& b) {
  const std::size_t m = b.size(), r = cols.size();
  std::vector<RatVector> aug(m, RatVector(r + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < r; ++k) aug[i][k] = cols[k][i];
    aug[i][r] = b[i];
  }
  std::size_t row = 0;
  std::vector<std::size_t> piv;
  for (std::size_t c = 0; c <= r && row < m; ++c) {
    std::size_t p = row;
    while (p < m && aug[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(aug[row], aug[p]);
    Rational inv = 1 / aug[row][c];
    for (auto& v : aug[row]) v *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || aug[i][c] == 0) continue;
      Rational k = aug[i][c];
      for (std::size_t j = 0; j <= r; ++j) aug[i][j] -= k * aug[row][j];
    }
    piv.push_back(c);
    ++row;
  }
  if (piv.size() != r || (!piv.empty() && piv.back() == r)) return std::nullopt;
  for (std::size_t k = 0; k < r; ++k)
    if (piv[k] != k) return std::nullopt;
  RatVector x(r);
  for (std::size_t k = 0; k < r; ++k) x[k] = aug[k][r];
  return x;
}

// Exact feasibility of {A x = b, x >= 0} by enumerating basic solutions.
bool nonneg_feasible(const std::vector<RatVector>& cols, const RatVector& b) {
  const std::size_t n = cols.size();
  std::size_t max_k = std::min(n, b.size());
  for (std::size_t k = 1; k <= max_k; ++k) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + k, true);
    do {
      std::vector<RatVector> sub;
      for (std::size_t j = 0; j < n; ++j)
        if (pick[j]) sub.push_back(cols[j]);
      auto x = solve_columns(sub, b);
      if (x && std::all_of(x->begin(), x->end(), [](const Rational& v) { return v >= 0; }))
        return true;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return false;
}

bool cone_contains(const Fan& f, const Cone& c, const RatVector& v) {
  std::vector<RatVector> cols;
  for (auto i : c) cols.push_back(ray_rat(f, i));
  auto x = solve_columns(cols, v);
  return x && std::all_of(x->begin(), x->end(), [](const Rational& t) { return t >= 0; });
}

}  // namespace

std::uint64_t cone_mask(const Cone& c) {
  std::uint64_t m = 0;
  for (auto i : c) m |= std::uint64_t{1} << i;
  return m;
}

Cone mask_cone(std::uint64_t mask) {
  Cone c;
  for (std::size_t i = 0; mask; ++i, mask >>= 1)
    if (mask & 1) c.push_back(i);
  return c;
}

Fan::Fan(int dim, std::vector<std::vector<std::int64_t>> rays, std::vector<Cone> max_cones)
    : dim_(dim), rays_(std::move(rays)), max_cones_(std::move(max_cones)) {
  require(dim_ >= 1, ErrorCode::InvalidInput, "fan dimension must be positive");
  require(rays_.size() <= 64, ErrorCode::InvalidInput, "at most 64 rays are supported");
  for (std::size_t i = 0; i < rays_.size(); ++i)
    require(rays_[i].size() == static_cast<std::size_t>(dim_), ErrorCode::InvalidInput,
            "ray " + std::to_string(i) + " has wrong length");
  require(!max_cones_.empty(), ErrorCode::InvalidInput, "fan has no cones");
  for (auto& c : max_cones_) {
    std::sort(c.begin(), c.end());
    for (std::size_t k = 0; k < c.size(); ++k) {
      require(c[k] < rays_.size(), ErrorCode::InvalidInput,
              "cone index " + std::to_string(c[k]) + " out of range");
      require(k == 0 || c[k] != c[k - 1], ErrorCode::InvalidInput,
              "repeated ray in cone " + cone_text(c));
    }
    max_masks_.push_back(cone_mask(c));
  }
}

Integer Fan::pairing(const IntVector& m, std::size_t i) const {
  Integer s = 0;
  for (int k = 0; k < dim_; ++k) s += m[k] * static_cast<long>(rays_[i][k]);
  return s;
}

Rational Fan::pairing(const RatVector& m, std::size_t i) const {
  Rational s = 0;
  for (int k = 0; k < dim_; ++k) s += m[k] * static_cast<long>(rays_[i][k]);
  return s;
}

bool Fan::is_cone(std::uint64_t mask) const {
  for (auto m : max_masks_)
    if ((mask & ~m) == 0) return true;
  return false;
}

bool Fan::is_cone(const Cone& c) const { return is_cone(cone_mask(c)); }

IntMatrix Fan::alpha() const { return IntMatrix::from_rows(rays_, dim_); }

const char* to_string(FanIssueKind k) noexcept {
  switch (k) {
    case FanIssueKind::NonPrimitiveRay: return "NonPrimitiveRay";
    case FanIssueKind::DuplicateRay: return "DuplicateRay";
    case FanIssueKind::DegenerateCone: return "DegenerateCone";
    case FanIssueKind::BadIntersection: return "BadIntersection";
    case FanIssueKind::NotComplete: return "NotComplete";
  }
  return "Unknown";
}

FanReport validate_fan(const Fan& fan, std::uint64_t seed) {
  FanReport rep;
  const std::size_t n = fan.n(), d = fan.dim();
  auto issue = [&](FanIssueKind k, std::vector<std::size_t> where, std::string detail) {
    rep.issues.push_back({k, std::move(where), {}, std::move(detail)});
  };

  for (std::size_t i = 0; i < n; ++i) {
    auto g = gcd_of(fan.ray(i));
    if (g != 1)
      issue(FanIssueKind::NonPrimitiveRay, {i},
            g == 0 ? "ray is zero" : "ray has content " + std::to_string(g));
    for (std::size_t j = i + 1; j < n; ++j)
      if (fan.ray(i) == fan.ray(j))
        issue(FanIssueKind::DuplicateRay, {i, j},
              "rays coincide");
  }

  const auto& cones = fan.max_cones();
  std::vector<bool> good(cones.size(), true);
  for (std::size_t c = 0; c < cones.size(); ++c) {
    if (cones[c].size() != d) {
      issue(FanIssueKind::DegenerateCone, {c},
            "cone does not have " + std::to_string(d) + " rays");
      good[c] = false;
    } else if (cone_det(fan, cones[c]) == 0) {
      issue(FanIssueKind::DegenerateCone, {c},
            "rays of the cone are linearly dependent");
      good[c] = false;
    }
    for (std::size_t c2 = 0; c2 < c; ++c2)
      if (cones[c2] == cones[c]) {
        issue(FanIssueKind::DegenerateCone, {c2, c}, "cone is repeated");
        good[c] = false;
      }
  }

  // Two cones meet properly iff no point of both has a positive coefficient
  // on a ray outside their common face.
  for (std::size_t a = 0; a < cones.size(); ++a) {
    if (!good[a]) continue;
    for (std::size_t b = a + 1; b < cones.size(); ++b) {
      if (!good[b]) continue;
      const auto common = cone_mask(cones[a]) & cone_mask(cones[b]);
      std::vector<RatVector> cols;
      for (auto i : cones[a]) {
        RatVector col = ray_rat(fan, i);
        col.emplace_back((common >> i) & 1 ? 0 : 1);
        cols.push_back(std::move(col));
      }
      for (auto j : cones[b]) {
        RatVector col = ray_rat(fan, j);
        for (auto& v : col) v = -v;
        col.emplace_back(0);
        cols.push_back(std::move(col));
      }
      RatVector rhs(d + 1);
      rhs[d] = 1;
      if (nonneg_feasible(cols, rhs))
        issue(FanIssueKind::BadIntersection, {a, b},
              "cones overlap beyond their common face");
    }
  }

  if (!std::all_of(good.begin(), good.end(), [](bool g) { return g; })) return rep;

  // Wall condition with orientation: every (d-1)-face lies in exactly two
  // maximal cones, on opposite sides of its hyperplane. Together with proper
  // intersections this makes the cones a degree-one cycle on the sphere.
  std::map<std::uint64_t, std::vector<std::pair<std::size_t, std::size_t>>> walls;
  for (std::size_t c = 0; c < cones.size(); ++c)
    for (auto drop : cones[c]) {
      Cone w;
      for (auto i : cones[c])
        if (i != drop) w.push_back(i);
      walls[cone_mask(w)].push_back({c, drop});
    }
  for (const auto& [mask, owners] : walls) {
    Cone w = mask_cone(mask);
    if (owners.size() != 2) {
      rep.issues.push_back({FanIssueKind::NotComplete, w, {},
                            "wall lies in " + std::to_string(owners.size()) +
                                " maximal cone(s), expected 2"});
      continue;
    }
    auto side = [&](std::size_t extra) {
      std::vector<std::size_t> idx(w.begin(), w.end());
      idx.push_back(extra);
      return sgn(cone_det(fan, idx));
    };
    if (side(owners[0].second) == side(owners[1].second))
      rep.issues.push_back({FanIssueKind::NotComplete, w, {},
                            "maximal cones through the wall lie on the same side"});
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coord(-97, 97);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::int64_t> v(d);
    do {
      for (auto& x : v) x = coord(rng);
    } while (std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; }));
    RatVector rv;
    for (auto x : v) rv.emplace_back(static_cast<long>(x));
    bool covered = std::any_of(cones.begin(), cones.end(),
                               [&](const Cone& c) { return cone_contains(fan, c, rv); });
    if (!covered) {
      FanIssue is{FanIssueKind::NotComplete, {}, v, "direction not covered by any cone"};
      rep.issues.push_back(std::move(is));
      break;
    }
  }
  return rep;
}

void require_valid_fan(const Fan& fan) {
  auto rep = validate_fan(fan);
  if (rep.valid()) return;
  const auto& is = rep.issues.front();
  fail(is.kind == FanIssueKind::NonPrimitiveRay ? ErrorCode::NonPrimitiveRay : ErrorCode::InvalidFan,
       std::string(to_string(is.kind)) + " at " + cone_text(is.where) + ": " + is.detail);
}

std::vector<Cone> cones_of_dimension(const Fan& fan, std::size_t k) {
  std::set<Cone> out;
  for (const auto& c : fan.max_cones()) {
    if (k > c.size()) continue;
    std::vector<bool> pick(c.size(), false);
    std::fill(pick.begin(), pick.begin() + k, true);
    do {
      Cone f;
      for (std::size_t j = 0; j < c.size(); ++j)
        if (pick[j]) f.push_back(c[j]);
      out.insert(std::move(f));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return {out.begin(), out.end()};
}

std::vector<Cone> primitive_collections(const Fan& fan) {
  std::vector<std::uint64_t> faces_prev{0};
  std::vector<Cone> out;
  const std::size_t n = fan.n();
  for (std::size_t k = 1; k <= static_cast<std::size_t>(fan.dim()) + 1 && !faces_prev.empty(); ++k) {
    std::vector<std::uint64_t> faces_next;
    std::set<std::uint64_t> seen;
    for (auto f : faces_prev) {
      std::size_t start = 0;
      if (f) start = 64 - static_cast<std::size_t>(__builtin_clzll(f));
      for (std::size_t j = start; j < n; ++j) {
        const std::uint64_t s = f | (std::uint64_t{1} << j);
        if (!seen.insert(s).second) continue;
        if (fan.is_cone(s)) {
          faces_next.push_back(s);
          continue;
        }
        bool minimal = true;
        for (std::uint64_t rest = s; rest && minimal; rest &= rest - 1) {
          const std::uint64_t bit = rest & (~rest + 1);
          if (!fan.is_cone(s & ~bit)) minimal = false;
        }
        if (minimal) out.push_back(mask_cone(s));
      }
    }
    faces_prev = std::move(faces_next);
  }
  std::sort(out.begin(), out.end(), [](const Cone& a, const Cone& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::vector<CoordinateSubspace> z_sigma_components(const Fan& fan) {
  std::vector<CoordinateSubspace> out;
  for (auto& c : primitive_collections(fan)) out.push_back({std::move(c)});
  return out;
}

CodimensionVerdict codim_Z(const Fan& fan) {
  CodimensionVerdict v;
  auto pcs = primitive_collections(fan);
  require(!pcs.empty(), ErrorCode::InvalidFan, "fan has no primitive collections");
  v.codim = pcs.front().size();
  for (const auto& p : pcs) v.codim = std::min(v.codim, p.size());
  const std::size_t d = fan.dim();
  v.origin_case = fan.n() == d + 1 && pcs.size() == 1 && pcs.front().size() == fan.n();
  v.upper_bound = v.origin_case ? fan.n() : d / 2 + 1;
  v.bound_holds = v.codim >= 2 && v.codim <= v.upper_bound;
  return v;
}

std::vector<Exponent> stanley_reisner_generators(const Fan& fan) {
  std::vector<Exponent> out;
  for (const auto& c : primitive_collections(fan)) {
    Exponent e(fan.n(), 0);
    for (auto i : c) e[i] = 1;
    out.push_back(std::move(e));
  }
  return out;
}

WeightedClassification weighted_projective_classification(const Fan& fan) {
  WeightedClassification out;
  const std::size_t d = fan.dim();
  if (fan.n() != d + 1) return out;
  IntMatrix cols = fan.alpha().transpose();
  auto snf = smith_normal_form(cols);
  Integer index = 1;
  for (const auto& t : snf.invariants()) index *= t;
  auto ker = kernel_basis_rational(cols);
  require(ker.size() == 1, ErrorCode::InvalidFan, "rays of a d+1 ray fan do not span");
  for (const auto& x : ker.front()) {
    require(x > 0, ErrorCode::InvalidFan, "ray relation is not positive; fan is not complete");
    out.weights.push_back(to_int64(x.get_num()));
  }
  out.index = index;
  out.kind = index == 1 ? WeightedKind::IsWeightedProjective : WeightedKind::FiniteCoverOfFan;
  return out;
}

namespace {

std::vector<Cone> all_facets_of_simplex(std::size_t n_rays) {
  std::vector<Cone> cones;
  for (std::size_t skip = n_rays; skip-- > 0;) {
    Cone c;
    for (std::size_t i = 0; i < n_rays; ++i)
      if (i != skip) c.push_back(i);
    cones.push_back(std::move(c));
  }
  std::sort(cones.begin(), cones.end());
  return cones;
}

}  // namespace

Fan projective_space(int d) {
  require(d >= 1, ErrorCode::InvalidInput, "projective space needs d >= 1");
  return weighted_projective(std::vector<std::int64_t>(d + 1, 1));
}

Fan weighted_projective(const std::vector<std::int64_t>& w) {
  require(w.size() >= 2, ErrorCode::InvalidWeights, "need at least two weights");
  std::int64_t g = 0;
  for (auto x : w) {
    require(x > 0, ErrorCode::InvalidWeights, "weights must be positive");
    g = std::gcd(g, x);
  }
  require(g == 1, ErrorCode::InvalidWeights, "weights must be coprime");
  const std::size_t n = w.size(), d = n - 1;

  std::vector<std::vector<std::int64_t>> rays(n, std::vector<std::int64_t>(d, 0));
  auto unit = std::find(w.rbegin(), w.rend(), 1);
  if (unit != w.rend()) {
    // The ray with weight 1 absorbs the relation; the others are the basis.
    const std::size_t k = n - 1 - static_cast<std::size_t>(unit - w.rbegin());
    std::size_t axis = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      rays[i][axis] = 1;
      for (std::size_t c = 0; c < d; ++c) rays[k][c] -= w[i] * rays[i][c];
      ++axis;
    }
  } else {
    // N = Z^n / Z w. A unimodular U with U w = +-e_1 identifies N with the
    // last d coordinates; Hermite form then picks a readable basis.
    IntMatrix col(n, 1);
    for (std::size_t i = 0; i < n; ++i) col(i, 0) = static_cast<long>(w[i]);
    auto snf = smith_normal_form(col);
    std::vector<IntVector> coords(d, IntVector(n));
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t i = 0; i < n; ++i) coords[r][i] = snf.U(r + 1, i);
    detail::hermite_rows(coords, n);
    require(coords.size() == d, ErrorCode::InternalInvariant, "lattice realization lost rank");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t r = 0; r < d; ++r) rays[i][r] = to_int64(coords[r][i]);
  }
  for (std::size_t i = 0; i < n; ++i)
    require(gcd_of(rays[i]) == 1, ErrorCode::InvalidWeights,
            "weights are not well-formed: ray " + std::to_string(i) + " is not primitive");
  return Fan(static_cast<int>(d), std::move(rays), all_facets_of_simplex(n));
}

Fan product_of_fans(const Fan& a, const Fan& b) {
  const std::size_t da = a.dim(), db = b.dim();
  std::vector<std::vector<std::int64_t>> rays;
  for (const auto& r : a.rays()) {
    auto v = r;
    v.resize(da + db, 0);
    rays.push_back(std::move(v));
  }
  for (const auto& r : b.rays()) {
    std::vector<std::int64_t> v(da, 0);
    v.insert(v.end(), r.begin(), r.end());
    rays.push_back(std::move(v));
  }
  std::vector<Cone> cones;
  for (const auto& s : a.max_cones())
    for (const auto& t : b.max_cones()) {
      Cone c = s;
      for (auto j : t) c.push_back(j + a.n());
      cones.push_back(std::move(c));
    }
  return Fan(static_cast<int>(da + db), std::move(rays), std::move(cones));
}

}  // namespace torica
