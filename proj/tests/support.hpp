#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <map>
#include <string>
#include <vector>

#include "torica/coxring.hpp"
#include "torica/error.hpp"
#include "torica/fan.hpp"
#include "torica/io.hpp"
#include "torica/lattice.hpp"

namespace torica::oracle {

inline std::string data_path(const std::string& name) {
  return std::string(TORICA_TEST_DATA) + "/" + name;
}

inline Fan load_fan(const std::string& name) { return fan_from_json(read_file(data_path(name))); }

inline GradedPolynomial load_poly(const ToricVariety& X, const std::string& name) {
  return polynomial_from_json(X, read_file(data_path(name)));
}

inline Fan hirzebruch1() {
  return Fan(2, {{1, 0}, {0, 1}, {-1, 1}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

inline Fan cover3() {
  return Fan(2, {{2, -1}, {-1, 2}, {-1, -1}}, {{0, 1}, {1, 2}, {0, 2}});
}

inline Fan p1xp1() { return product_of_fans(projective_space(1), projective_space(1)); }

/// sum_i c z_i^{k_i} over the indices with k_i > 0.
inline GradedPolynomial fermat(const ToricVariety& X, const std::vector<int>& powers,
                               const std::vector<std::int64_t>& b) {
  GradedPolynomial::Terms t;
  for (std::size_t i = 0; i < powers.size(); ++i) {
    if (!powers[i]) continue;
    Exponent a(X.n(), 0);
    a[i] = powers[i];
    t[a] = 1;
  }
  return make_polynomial(X, X.class_of(b), t);
}

/// Dense Gaussian elimination over Q; independent of SparseEchelon.
inline std::size_t dense_rank(std::vector<std::vector<Rational>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const Rational k = m[r][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] -= k * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

/// All exponents with entries summing to at most `bound` whose degree is beta,
/// found by exhaustive search rather than the library's enumeration.
inline std::vector<Exponent> brute_monomials(const ToricVariety& X, const DivisorClass& beta,
                                             int bound) {
  std::vector<Exponent> out;
  Exponent a(X.n(), 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i == X.n()) {
      if (X.degree_of(a) == beta) out.push_back(a);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      a[i] = k;
      self(self, i + 1, left - k);
    }
    a[i] = 0;
  };
  rec(rec, 0, bound);
  return out;
}

/// dim of the span of z^c * g_i in degree gamma, built densely from a
/// brute-force monomial list.
inline std::size_t dense_ideal_dim(const ToricVariety& X, const std::vector<GradedPolynomial>& gens,
                                   const DivisorClass& gamma, int bound) {
  const auto basis = brute_monomials(X, gamma, bound);
  std::map<Exponent, std::size_t> col;
  for (std::size_t k = 0; k < basis.size(); ++k) col[basis[k]] = k;
  std::vector<std::vector<Rational>> rows;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    for (const auto& c : brute_monomials(X, gamma - g.degree(), bound)) {
      std::vector<Rational> row(basis.size());
      for (const auto& [a, x] : g.terms()) {
        Exponent e = a;
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += c[i];
        row[col.at(e)] += x;
      }
      rows.push_back(std::move(row));
    }
  }
  return dense_rank(std::move(rows));
}


// gcd of all k x k minors.
inline Integer determinantal_divisor(const IntMatrix& a, std::size_t k) {
  Integer g = 0;
  const std::size_t r = a.rows(), c = a.cols();
  for (std::uint64_t rm = 0; rm < (1ull << r); ++rm) {
    if (static_cast<std::size_t>(__builtin_popcountll(rm)) != k) continue;
    for (std::uint64_t cm = 0; cm < (1ull << c); ++cm) {
      if (static_cast<std::size_t>(__builtin_popcountll(cm)) != k) continue;
      IntMatrix s(k, k);
      std::size_t ii = 0;
      for (std::size_t i = 0; i < r; ++i) {
        if (!(rm >> i & 1)) continue;
        std::size_t jj = 0;
        for (std::size_t j = 0; j < c; ++j)
          if (cm >> j & 1) s(ii, jj++) = a(i, j);
        ++ii;
      }
      g = gcd(g, determinant(s));
    }
  }
  return g;
}

// Lattice points by scanning a box, independent of the polytope code.
inline std::size_t box_count(const Fan& fan, const IntVector& b, int radius) {
  std::size_t count = 0;
  IntVector m(fan.dim(), 0);
  auto rec = [&](auto&& self, int k) -> void {
    if (k == fan.dim()) {
      for (std::size_t i = 0; i < fan.n(); ++i)
        if (fan.pairing(m, i) < -b[i]) return;
      ++count;
      return;
    }
    for (int x = -radius; x <= radius; ++x) {
      m[k] = x;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
  return count;
}

// Smallest subset of rays that is not contained in a maximal cone.
inline std::size_t brute_codim(const Fan& fan) {
  std::size_t best = fan.n() + 1;
  for (std::uint64_t s = 1; s < (1ull << fan.n()); ++s) {
    bool face = false;
    for (const auto& c : fan.max_cones())
      if ((s & ~cone_mask(c)) == 0) face = true;
    if (!face) best = std::min<std::size_t>(best, __builtin_popcountll(s));
  }
  return best;
}

inline Fan hirzebruch(int a) {
  return Fan(2, {{1, 0}, {0, 1}, {-1, a}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

/// Projective spaces, Hirzebruch surfaces, the index-3 cover and random
/// weighted projective spaces (some times a projective line or plane).
inline std::vector<Fan> fan_corpus() {
  std::vector<Fan> out;
  std::mt19937_64 rng(99);
  for (int d = 1; d <= 4; ++d) out.push_back(projective_space(d));
  for (int a = 0; a <= 6; ++a) out.push_back(hirzebruch(a));
  out.push_back(cover3());
  while (out.size() < 110) {
    std::vector<std::int64_t> w;
    const int k = 2 + static_cast<int>(rng() % 3);
    for (int i = 0; i < k; ++i) w.push_back(1 + static_cast<std::int64_t>(rng() % 5));
    std::int64_t g = 0;
    for (auto x : w) g = std::gcd(g, x);
    for (auto& x : w) x /= g;
    Fan f;
    try {
      f = weighted_projective(w);
    } catch (const Error&) {
      continue;  // not well-formed
    }
    if (rng() % 3 == 0) f = product_of_fans(f, projective_space(1 + static_cast<int>(rng() % 2)));
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace torica::oracle
