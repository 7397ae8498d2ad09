#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qstir {

using Int = boost::multiprecision::cpp_int;

/// Exponent pair of a monomial q^deg_q * t^deg_t.  The map ordering of
/// BiPoly (lexicographic by (deg_q, deg_t) ascending) doubles as the
/// canonical serialization order.
struct Mono {
  int deg_q = 0;
  int deg_t = 0;
  friend auto operator<=>(const Mono&, const Mono&) = default;
};

/// Sparse bivariate polynomial over arbitrary-precision integers in the
/// variables q and t.  Canonical form: no stored coefficient is zero, so
/// equality is term-map equality.
class BiPoly {
 public:
  BiPoly() = default;
  BiPoly(long long c) { if (c != 0) terms_[{0, 0}] = c; }  // NOLINT (implicit)
  explicit BiPoly(Int c) { if (c != 0) terms_[{0, 0}] = std::move(c); }

  static BiPoly monomial(int deg_q, int deg_t, Int c = 1);
  static BiPoly var_q() { return monomial(1, 0); }
  static BiPoly var_t() { return monomial(0, 1); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of q^dq * t^dt (zero if absent).
  Int coeff(int deg_q, int deg_t) const;
  /// Value of a constant polynomial; throws std::domain_error otherwise.
  Int constant_value() const;
  int deg_q() const;
  int deg_t() const;
  const std::map<Mono, Int>& terms() const { return terms_; }

  void add_term(int deg_q, int deg_t, const Int& c);

  BiPoly& operator+=(const BiPoly& rhs);
  BiPoly& operator-=(const BiPoly& rhs);
  BiPoly& operator*=(const BiPoly& rhs);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  BiPoly operator-() const;
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

  /// Substitute t -> 1+q; the result is t-free.
  BiPoly subst_t_one_plus_q() const;
  /// Substitute an integer for q, leaving a polynomial in t.
  BiPoly eval_q(const Int& q0) const;
  /// Full evaluation at integer q0, t0.
  Int eval(const Int& q0, const Int& t0) const;

  /// Human form with terms in canonical order, e.g. "3 + 3q + q^2".
  std::string str() const;

 private:
  std::map<Mono, Int> terms_;
};

/// [n]_q = 1 + q + ... + q^{n-1}.
BiPoly q_int(int n);
/// [n]_q! = [1]_q [2]_q ... [n]_q.
BiPoly q_factorial(int n);
/// Gaussian binomial coefficient; with square, in the variable q^2.
/// Computed by the Pascal-type recurrence; returns 0 unless 0 <= k <= n.
BiPoly gauss_binomial(int n, int k, bool square = false);
/// [k]_{q,t}: (q^{k-2}+q^{k-4}+...+1) t for k even,
/// q^{k-1} + (q^{k-3}+...+1) t for k odd, and 0 for k = 0.
BiPoly qt_int(int k);

}  // namespace qstir
