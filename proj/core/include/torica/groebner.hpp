#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "torica/arith.hpp"

namespace torica {

/// Degree reverse lexicographic order; `operator()(a, b)` is true when a > b,
/// so ordered containers list the leading term first.
struct DegRevLexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse polynomial over Q in a fixed number of variables.
class MultiPoly {
 public:
  using Terms = std::map<Exponent, Rational, DegRevLexGreater>;

  explicit MultiPoly(std::size_t nvars = 0) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const Rational& c);
  static MultiPoly variable(std::size_t nvars, std::size_t i);
  static MultiPoly monomial(const Exponent& a, const Rational& c);

  std::size_t nvars() const noexcept { return nvars_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;

  const Exponent& leading_exponent() const { return terms_.begin()->first; }
  const Rational& leading_coefficient() const { return terms_.begin()->second; }

  void add_term(const Exponent& a, const Rational& c);
  /// this -= c * x^shift * g
  void subtract_multiple(const Rational& c, const Exponent& shift, const MultiPoly& g);
  MultiPoly monic() const;

  MultiPoly operator+(const MultiPoly& rhs) const;
  MultiPoly operator-(const MultiPoly& rhs) const;
  MultiPoly operator*(const MultiPoly& rhs) const;
  MultiPoly scaled(const Rational& c) const;
  /// Adds `extra` variables at the end.
  MultiPoly extended(std::size_t extra) const;

  bool operator==(const MultiPoly& rhs) const { return nvars_ == rhs.nvars_ && terms_ == rhs.terms_; }

  std::string to_string() const;

 private:
  std::size_t nvars_;
  Terms terms_;
};

inline constexpr std::uint64_t kDefaultGroebnerBudget = 1'000'000;

/// Counts reduction steps; shared across the calls of one certificate run.
class Budget {
 public:
  explicit Budget(std::uint64_t limit = kDefaultGroebnerBudget) : limit_(limit) {}
  /// Throws BudgetExceeded once the limit is passed.
  void spend(std::uint64_t steps = 1);
  std::uint64_t used() const noexcept { return used_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

struct GroebnerBasis {
  std::vector<MultiPoly> generators;  // reduced, monic, sorted by leading term
  bool is_unit() const { return generators.size() == 1 && generators[0].is_constant(); }
};

GroebnerBasis buchberger(const std::vector<MultiPoly>& gens, Budget& budget);
GroebnerBasis buchberger(const std::vector<MultiPoly>& gens);

/// Full reduction of f by g (any generating set; unique when g is a GB).
MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& g, Budget& budget);
MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& g);

bool ideal_contains_one(const std::vector<MultiPoly>& gens, Budget& budget);
bool ideal_contains_one(const std::vector<MultiPoly>& gens);

/// g in rad(gens), decided as 1 in <gens, 1 - y g> with one extra variable.
bool radical_membership(const MultiPoly& g, const std::vector<MultiPoly>& gens, Budget& budget);
bool radical_membership(const MultiPoly& g, const std::vector<MultiPoly>& gens);

}  // namespace torica
