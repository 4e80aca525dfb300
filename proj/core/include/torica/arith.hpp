#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace torica {

using Integer = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Exponent vector of a monomial z^a; also used for lattice points of M.
using Exponent = std::vector<int>;

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

/// Non-negative residue of a modulo m (m > 0).
inline Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline Integer floor(const Rational& q) {
  return floor_div(q.get_num(), q.get_den());
}

inline Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline std::int64_t to_int64(const Integer& v) {
  // mpz_get_si truncates silently; callers only convert values that are
  // known to be small (lattice-point coordinates, exponents).
  return static_cast<std::int64_t>(v.get_si());
}

inline bool fits_int(const Integer& v) { return v.fits_sint_p(); }

/// "p/q" or "p"; the form used in all JSON output.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline std::string to_string(const Integer& v) { return v.get_str(); }

/// Parses "p", "-p", "p/q"; throws Error(InvalidInput) on garbage.
Rational parse_rational(const std::string& text);

}  // namespace torica
