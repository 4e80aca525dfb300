#include "torica/groebner.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

#include "torica/error.hpp"

namespace torica {

namespace {

int total_degree(const Exponent& a) {
  int s = 0;
  for (int x : a) s += x;
  return s;
}

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponent lcm_of(const Exponent& a, const Exponent& b) {
  Exponent c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = std::max(a[i], b[i]);
  return c;
}

Exponent difference(const Exponent& a, const Exponent& b) {
  Exponent c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

bool coprime(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

void check_same_ring(const std::vector<MultiPoly>& gens) {
  for (const auto& g : gens)
    require(g.nvars() == gens.front().nvars(), ErrorCode::InvalidInput,
            "polynomials live in different rings");
}

// Top reduction followed by tail reduction.
MultiPoly reduce_full(MultiPoly f, const std::vector<MultiPoly>& g, Budget& budget) {
  MultiPoly r(f.nvars());
  while (!f.is_zero()) {
    const Exponent lt = f.leading_exponent();
    const Rational lc = f.leading_coefficient();
    const MultiPoly* red = nullptr;
    for (const auto& h : g)
      if (!h.is_zero() && divides(h.leading_exponent(), lt)) {
        red = &h;
        break;
      }
    if (red) {
      budget.spend();
      f.subtract_multiple(lc / red->leading_coefficient(),
                          difference(lt, red->leading_exponent()), *red);
    } else {
      r.add_term(lt, lc);
      f.add_term(lt, -lc);
    }
  }
  return r;
}

}  // namespace

bool DegRevLexGreater::operator()(const Exponent& a, const Exponent& b) const {
  const int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t i) {
  Exponent a(nvars, 0);
  a.at(i) = 1;
  return monomial(a, 1);
}

MultiPoly MultiPoly::monomial(const Exponent& a, const Rational& c) {
  MultiPoly p(a.size());
  p.add_term(a, c);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0;
}

void MultiPoly::add_term(const Exponent& a, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(a, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiPoly::subtract_multiple(const Rational& c, const Exponent& shift, const MultiPoly& g) {
  Exponent e(nvars_);
  for (const auto& [a, x] : g.terms_) {
    for (std::size_t i = 0; i < nvars_; ++i) e[i] = a[i] + shift[i];
    add_term(e, -c * x);
  }
}

MultiPoly MultiPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(1 / leading_coefficient());
}

MultiPoly MultiPoly::operator+(const MultiPoly& rhs) const {
  MultiPoly out = *this;
  for (const auto& [a, c] : rhs.terms_) out.add_term(a, c);
  return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& rhs) const {
  MultiPoly out = *this;
  for (const auto& [a, c] : rhs.terms_) out.add_term(a, -c);
  return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& rhs) const {
  MultiPoly out(nvars_);
  for (const auto& [a, c] : terms_) out.subtract_multiple(-c, a, rhs);
  return out;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
  MultiPoly out(nvars_);
  if (c == 0) return out;
  for (const auto& [a, x] : terms_) out.terms_.emplace(a, x * c);
  return out;
}

MultiPoly MultiPoly::extended(std::size_t extra) const {
  MultiPoly out(nvars_ + extra);
  for (const auto& [a, c] : terms_) {
    Exponent e = a;
    e.resize(nvars_ + extra, 0);
    out.terms_.emplace(std::move(e), c);
  }
  return out;
}

std::string MultiPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, c] : terms_) {
    Rational mag = c < 0 ? Rational(-c) : c;
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    const bool unit = total_degree(a) == 0;
    if (mag != 1 || unit) os << mag.get_str() << (unit ? "" : "*");
    bool first_var = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      os << (first_var ? "" : "*") << 'x' << i + 1;
      if (a[i] > 1) os << '^' << a[i];
      first_var = false;
    }
  }
  return os.str();
}

void Budget::spend(std::uint64_t steps) {
  used_ += steps;
  if (used_ > limit_)
    fail(ErrorCode::BudgetExceeded,
         "Groebner budget of " + std::to_string(limit_) + " reduction steps exhausted");
}

MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& g, Budget& budget) {
  return reduce_full(f, g, budget);
}

MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& g) {
  Budget b;
  return normal_form(f, g, b);
}

GroebnerBasis buchberger(const std::vector<MultiPoly>& gens, Budget& budget) {
  GroebnerBasis out;
  if (gens.empty()) return out;
  check_same_ring(gens);
  const std::size_t nv = gens.front().nvars();

  std::vector<MultiPoly> g;
  for (const auto& p : gens) {
    if (p.is_zero()) continue;
    if (p.is_constant()) {
      out.generators = {MultiPoly::constant(nv, 1)};
      return out;
    }
    g.push_back(p.monic());
  }
  if (g.empty()) return out;

  // Pending pairs ordered by the lcm of their leading terms (normal strategy).
  struct Pair {
    Exponent lcm;
    std::size_t i, j;
  };
  auto pair_less = [](const Pair& a, const Pair& b) {
    if (a.lcm != b.lcm) return DegRevLexGreater{}(b.lcm, a.lcm);
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  };
  std::set<Pair, decltype(pair_less)> queue(pair_less);
  std::set<std::pair<std::size_t, std::size_t>> pending;
  auto add_pairs_for = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
      if (g[i].is_zero()) continue;
      queue.insert({lcm_of(g[i].leading_exponent(), g[k].leading_exponent()), i, k});
      pending.insert({i, k});
    }
  };
  for (std::size_t k = 0; k < g.size(); ++k) add_pairs_for(k);

  while (!queue.empty()) {
    const Pair p = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({p.i, p.j});
    const auto& fi = g[p.i];
    const auto& fj = g[p.j];
    if (coprime(fi.leading_exponent(), fj.leading_exponent())) continue;
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == p.i || k == p.j || g[k].is_zero()) continue;
      if (!divides(g[k].leading_exponent(), p.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) {
        return std::make_pair(std::min(a, b), std::max(a, b));
      };
      chain = !pending.count(key(p.i, k)) && !pending.count(key(p.j, k));
    }
    if (chain) continue;

    MultiPoly s(nv);
    s.subtract_multiple(-1, difference(p.lcm, fi.leading_exponent()), fi);
    s.subtract_multiple(1, difference(p.lcm, fj.leading_exponent()), fj);
    budget.spend();
    MultiPoly r = reduce_full(std::move(s), g, budget);
    if (r.is_zero()) continue;
    if (r.is_constant()) {
      out.generators = {MultiPoly::constant(nv, 1)};
      return out;
    }
    g.push_back(r.monic());
    add_pairs_for(g.size() - 1);
  }

  // Minimalize, then inter-reduce.
  std::vector<MultiPoly> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& a = g[j].leading_exponent();
      const auto& b = g[i].leading_exponent();
      if (divides(a, b) && (a != b || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MultiPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    minimal[i] = reduce_full(minimal[i], others, budget).monic();
  }
  std::sort(minimal.begin(), minimal.end(), [](const MultiPoly& a, const MultiPoly& b) {
    return DegRevLexGreater{}(b.leading_exponent(), a.leading_exponent());
  });
  out.generators = std::move(minimal);
  return out;
}

GroebnerBasis buchberger(const std::vector<MultiPoly>& gens) {
  Budget b;
  return buchberger(gens, b);
}

bool ideal_contains_one(const std::vector<MultiPoly>& gens, Budget& budget) {
  return buchberger(gens, budget).is_unit();
}

bool ideal_contains_one(const std::vector<MultiPoly>& gens) {
  Budget b;
  return ideal_contains_one(gens, b);
}

bool radical_membership(const MultiPoly& g, const std::vector<MultiPoly>& gens, Budget& budget) {
  const std::size_t nv = g.nvars();
  std::vector<MultiPoly> ext;
  for (const auto& p : gens) {
    require(p.nvars() == nv, ErrorCode::InvalidInput, "polynomials live in different rings");
    ext.push_back(p.extended(1));
  }
  // 1 - y g
  MultiPoly r = MultiPoly::constant(nv + 1, 1) - MultiPoly::variable(nv + 1, nv) * g.extended(1);
  ext.push_back(std::move(r));
  return ideal_contains_one(ext, budget);
}

bool radical_membership(const MultiPoly& g, const std::vector<MultiPoly>& gens) {
  Budget b;
  return radical_membership(g, gens, b);
}

}  // namespace torica
