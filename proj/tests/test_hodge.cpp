#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "torica/error.hpp"
#include "torica/hodge.hpp"

using namespace torica;

namespace {

using Ints = std::vector<std::int64_t>;

// Exponents with entries in [0, k-2] summing to t: the Fermat Jacobian ring
// is a tensor product of Q[z]/(z^{k-1}).
std::size_t fermat_count(std::size_t nvars, int k, int t) {
  std::vector<std::size_t> ways(t + 1, 0);
  ways[0] = 1;
  for (std::size_t v = 0; v < nvars; ++v) {
    std::vector<std::size_t> next(t + 1, 0);
    for (int s = 0; s <= t; ++s)
      for (int e = 0; e <= k - 2 && s + e <= t; ++e) next[s + e] += ways[s];
    ways = next;
  }
  return t < 0 ? 0 : ways[t];
}

GradedPolynomial binary_form(const ToricVariety& X, const std::vector<long>& c) {
  GradedPolynomial::Terms t;
  const int k = static_cast<int>(c.size()) - 1;
  for (int j = 0; j <= k; ++j)
    if (c[j]) t[Exponent{k - j, j}] = c[j];
  return make_polynomial(X, X.class_of(Ints{k, 0}), t);
}

long discriminant(const std::vector<long>& c) {
  if (c.size() == 3) return c[1] * c[1] - 4 * c[0] * c[2];
  const long a = c[0], b = c[1], cc = c[2], d = c[3];
  return b * b * cc * cc - 4 * a * cc * cc * cc - 4 * b * b * b * d - 27 * a * a * d * d +
         18 * a * b * cc * d;
}

// dim J1(f)_gamma = dim (z1...zn S_gamma  cap  J0(f)_{gamma+beta0}), by dense ranks.
std::size_t dense_j1_dim(const ToricVariety& X, const GradedPolynomial& f, const DivisorClass& gamma,
                         int bound) {
  const auto top = gamma + X.anticanonical();
  const auto basis = oracle::brute_monomials(X, top, bound);
  std::map<Exponent, std::size_t> col;
  for (std::size_t k = 0; k < basis.size(); ++k) col[basis[k]] = k;
  std::vector<std::vector<Rational>> mult, log;
  for (auto a : oracle::brute_monomials(X, gamma, bound)) {
    for (auto& x : a) ++x;
    std::vector<Rational> row(basis.size());
    row[col.at(a)] = 1;
    mult.push_back(row);
  }
  for (std::size_t i = 0; i < X.n(); ++i) {
    auto g = multiply_monomial(X, partial_derivative(X, f, i), [&] {
      Exponent e(X.n(), 0);
      e[i] = 1;
      return e;
    }());
    if (g.is_zero()) continue;
    for (const auto& c : oracle::brute_monomials(X, top - g.degree(), bound)) {
      std::vector<Rational> row(basis.size());
      for (const auto& [a, x] : g.terms()) {
        Exponent e = a;
        for (std::size_t k = 0; k < e.size(); ++k) e[k] += c[k];
        row[col.at(e)] += x;
      }
      log.push_back(row);
    }
  }
  const std::size_t rm = oracle::dense_rank(mult), rl = oracle::dense_rank(log);
  auto both = mult;
  both.insert(both.end(), log.begin(), log.end());
  return rm + rl - oracle::dense_rank(both);
}

}  // namespace

TEST(Jacobian, FermatDimensions) {
  const ToricVariety P2(projective_space(2));
  const auto cubic = oracle::load_poly(P2, "cubic.json");
  HodgeEngine e(P2, cubic);
  EXPECT_EQ(e.jacobian_dim(P2.class_of(Ints{3, 0, 0}), JacobianVariant::J), 9u);
  const ToricVariety P4(projective_space(4));
  HodgeEngine q(P4, oracle::load_poly(P4, "quintic.json"));
  EXPECT_EQ(q.jacobian_dim(P4.class_of(Ints{5, 0, 0, 0, 0}), JacobianVariant::J), 25u);
  EXPECT_EQ(q.jacobian_dim(P4.class_of(Ints{-1, 0, 0, 0, 0}), JacobianVariant::J), 0u);
}

TEST(Jacobian, FermatRingMatchesTensorProductCount) {
  for (int d : {1, 2, 3}) {
    for (int k : {2, 3, 4}) {
      const ToricVariety X(projective_space(d));
      Ints b(d + 1, 0);
      b[0] = k;
      HodgeEngine e(X, oracle::fermat(X, std::vector<int>(d + 1, k), b));
      for (int t = 0; t <= (d + 1) * (k - 2) + 1; ++t) {
        Ints g(d + 1, 0);
        g[0] = t;
        EXPECT_EQ(e.dim_R(X.class_of(g)), fermat_count(d + 1, k, t)) << d << " " << k << " " << t;
      }
    }
  }
}

TEST(Jacobian, AgreesWithDenseOracle) {
  std::mt19937_64 rng(4);
  const std::vector<std::pair<Fan, Ints>> cases{{oracle::p1xp1(), {2, 0, 3, 0}},
                                                {weighted_projective({1, 1, 2}), {4, 0, 0}},
                                                {oracle::hirzebruch1(), {1, 1, 1, 1}},
                                                {projective_space(2), {4, 0, 0}}};
  for (const auto& [fan, b] : cases) {
    const ToricVariety X(fan);
    const auto f = random_polynomial(X, X.class_of(b), rng());
    HodgeEngine e(X, f);
    for (long k = 0; k <= 3; ++k) {
      const auto g = f.degree().scaled(k) - X.anticanonical();
      EXPECT_EQ(e.jacobian_dim(g, JacobianVariant::J), oracle::dense_ideal_dim(X, e.partials(), g, 14));
      EXPECT_EQ(e.jacobian_dim(g, JacobianVariant::J1), dense_j1_dim(X, f, g, 16));
    }
  }
}

TEST(Jacobian, PolynomialLiesInItsJacobianIdeal) {
  std::mt19937_64 rng(12);
  const std::vector<std::pair<Fan, Ints>> cases{
      {projective_space(2), {3, 0, 0}}, {oracle::p1xp1(), {3, 0, 3, 0}},
      {weighted_projective({1, 1, 2}), {4, 0, 0}}, {oracle::cover3(), {3, 0, 0}},
      {oracle::hirzebruch1(), {1, 1, 1, 1}}};
  int cases_run = 0;
  for (int t = 0; t < 100; ++t) {
    const auto& [fan, b] = cases[t % cases.size()];
    const ToricVariety X(fan);
    HodgeEngine e(X, random_polynomial(X, X.class_of(b), rng()));
    EXPECT_TRUE(e.f_in_jacobian());
    ++cases_run;
  }
  EXPECT_GE(cases_run, 100);
}

TEST(Certificates, BinaryFormsMatchDiscriminant) {
  const ToricVariety X(projective_space(1));
  std::mt19937_64 rng(21);
  int zero_disc = 0;
  for (int t = 0; t < 80; ++t) {
    const std::size_t k = 2 + t % 2;
    std::vector<long> c(k + 1);
    for (auto& x : c) x = static_cast<long>(rng() % 5) - 2;
    c[0] = c[0] ? c[0] : 1;
    c[k] = c[k] ? c[k] : 1;
    if (t % 4 == 0) {
      // Force a double root at [1:-1] times a linear or quadratic factor.
      c = k == 2 ? std::vector<long>{1, 2, 1} : std::vector<long>{1, 1, -1, -1};
    }
    const auto f = binary_form(X, c);
    Budget budget;
    const bool qs = certify_quasi_smooth(X, f, budget).quasi_smooth;
    const bool nd = certify_nondegenerate(X, f, X.representative(f.degree()), budget).nondegenerate;
    const bool distinct = discriminant(c) != 0;
    zero_disc += !distinct;
    EXPECT_EQ(qs, distinct);
    EXPECT_EQ(nd, distinct);
  }
  EXPECT_GT(zero_disc, 0);
}

TEST(Certificates, SingularAndDegenerateControls) {
  const ToricVariety P2(projective_space(2));
  HodgeEngine s(P2, oracle::load_poly(P2, "singular_cubic.json"));
  const auto& qs = s.quasi_smooth();
  EXPECT_FALSE(qs.quasi_smooth);
  try {
    s.primitive_hodge(1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotQuasiSmooth);
  }
  const ToricVariety Q(oracle::p1xp1());
  GradedPolynomial::Terms t{{Exponent{2, 0, 2, 0}, 1}, {Exponent{0, 2, 0, 2}, 1}};
  HodgeEngine d(Q, make_polynomial(Q, Q.class_of(Ints{2, 0, 2, 0}), t));
  EXPECT_FALSE(d.nondegenerate().nondegenerate);
}

TEST(Certificates, NondegenerateImpliesQuasiSmooth) {
  const std::vector<std::pair<Fan, Ints>> cases{{projective_space(2), {3, 0, 0}},
                                                {oracle::p1xp1(), {2, 0, 2, 0}},
                                                {weighted_projective({1, 1, 2}), {4, 0, 0}},
                                                {oracle::hirzebruch1(), {1, 1, 1, 1}}};
  std::mt19937_64 rng(30);
  for (int t = 0; t < 12; ++t) {
    const auto& [fan, b] = cases[t % cases.size()];
    const ToricVariety X(fan);
    HodgeEngine e(X, random_polynomial(X, X.class_of(b), rng()));
    if (e.nondegenerate().nondegenerate) EXPECT_TRUE(e.quasi_smooth().quasi_smooth);
  }
}

TEST(Certificates, BudgetExhaustionIsReported) {
  const ToricVariety P2(projective_space(2));
  HodgeOptions o;
  o.budget = 2;
  HodgeEngine e(P2, oracle::load_poly(P2, "cubic.json"), o);
  try {
    e.nondegenerate();
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::BudgetExceeded);
    EXPECT_NE(std::string(err.what()).find("nondegeneracy"), std::string::npos);
  }
}

TEST(Hodge, CubicCurveCorrectionBranch) {
  const ToricVariety P2(projective_space(2));
  HodgeEngine e(P2, oracle::load_poly(P2, "cubic.json"));
  EXPECT_EQ(e.primitive_hodge(1), 1u);
  EXPECT_EQ(e.primitive_hodge(0), 1u);
  EXPECT_EQ(e.gr_hodge_complement(2), 1u);
  EXPECT_EQ(e.moduli_tangent_dim(), 1u);
  EXPECT_EQ(e.primitive_hodge(5), 0u);
}

TEST(Hodge, WeightBoundAndConsistency) {
  const ToricVariety Q(oracle::p1xp1());
  HodgeEngine e(Q, oracle::load_poly(Q, "p1xp1_33.json"));
  for (int p = 0; p <= 1; ++p) EXPECT_EQ(e.primitive_hodge(p), e.primitive_hodge_via_R1(p));
  for (int p = 0; p <= 2; ++p)
    EXPECT_LE(e.dim_R1(e.shifted(2 - p)), e.dim_R0(e.polynomial().degree().scaled(2 - p)));
  EXPECT_EQ(e.affine_hodge_gr(2), 1u);
}

TEST(Hodge, AutomorphismDimensions) {
  EXPECT_EQ(aut_dimension(ToricVariety(projective_space(2))), 8u);
  EXPECT_EQ(aut_dimension(ToricVariety(oracle::p1xp1())), 6u);
  EXPECT_EQ(aut_dimension(ToricVariety(weighted_projective({1, 1, 2}))), 7u);
}

TEST(Hodge, SkipChecksWatermarksResults) {
  const ToricVariety P2(projective_space(2));
  HodgeOptions o;
  o.skip_checks = true;
  HodgeEngine e(P2, oracle::load_poly(P2, "singular_cubic.json"), o);
  EXPECT_FALSE(e.unchecked());
  (void)e.primitive_hodge(1);
  EXPECT_TRUE(e.unchecked());
}

TEST(Hodge, NonAmpleClassRejected) {
  const ToricVariety Q(oracle::p1xp1());
  HodgeEngine e(Q, random_polynomial(Q, Q.class_of(Ints{3, 0, 0, 0}), 1));
  EXPECT_FALSE(e.ample());
  try {
    e.primitive_hodge(0);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::NotAmple);
  }
}
