#include "qstir/bipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace qstir {

BiPoly BiPoly::monomial(int deg_q, int deg_t, Int c) {
  BiPoly p;
  if (c != 0) p.terms_[{deg_q, deg_t}] = std::move(c);
  return p;
}

bool BiPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first == Mono{0, 0});
}

Int BiPoly::coeff(int deg_q, int deg_t) const {
  auto it = terms_.find({deg_q, deg_t});
  return it == terms_.end() ? Int(0) : it->second;
}

Int BiPoly::constant_value() const {
  if (!is_constant()) throw std::domain_error("BiPoly: not a constant: " + str());
  return coeff(0, 0);
}

int BiPoly::deg_q() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.deg_q);
  return d;
}

int BiPoly::deg_t() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.deg_t);
  return d;
}

void BiPoly::add_term(int deg_q, int deg_t, const Int& c) {
  if (c == 0) return;
  Mono m{deg_q, deg_t};
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m.deg_q, m.deg_t, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m.deg_q, m.deg_t, -c);
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_)
      out.add_term(ma.deg_q + mb.deg_q, ma.deg_t + mb.deg_t, ca * cb);
  return out;
}

BiPoly& BiPoly::operator*=(const BiPoly& rhs) { return *this = *this * rhs; }

BiPoly BiPoly::operator-() const {
  BiPoly out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

BiPoly BiPoly::subst_t_one_plus_q() const {
  // Powers of (1+q) by degree, grown on demand.
  std::vector<BiPoly> pow1q{BiPoly(1)};
  const BiPoly one_plus_q = BiPoly(1) + BiPoly::var_q();
  BiPoly out;
  for (const auto& [m, c] : terms_) {
    while (static_cast<int>(pow1q.size()) <= m.deg_t)
      pow1q.push_back(pow1q.back() * one_plus_q);
    out += BiPoly::monomial(m.deg_q, 0, c) * pow1q[m.deg_t];
  }
  return out;
}

BiPoly BiPoly::eval_q(const Int& q0) const {
  BiPoly out;
  for (const auto& [m, c] : terms_) {
    Int v = c;
    for (int i = 0; i < m.deg_q; ++i) v *= q0;
    out.add_term(0, m.deg_t, v);
  }
  return out;
}

Int BiPoly::eval(const Int& q0, const Int& t0) const {
  Int out = 0;
  for (const auto& [m, c] : terms_) {
    Int v = c;
    for (int i = 0; i < m.deg_q; ++i) v *= q0;
    for (int i = 0; i < m.deg_t; ++i) v *= t0;
    out += v;
  }
  return out;
}

std::string BiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Int a = c;
    if (first) {
      if (a < 0) { os << "-"; a = -a; }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    const bool has_var = m.deg_q > 0 || m.deg_t > 0;
    if (a != 1 || !has_var) os << a.str();
    if (m.deg_q >= 1) os << "q";
    if (m.deg_q >= 2) os << "^" << m.deg_q;
    if (m.deg_t >= 1) os << "t";
    if (m.deg_t >= 2) os << "^" << m.deg_t;
  }
  return os.str();
}

BiPoly q_int(int n) {
  BiPoly p;
  for (int i = 0; i < n; ++i) p.add_term(i, 0, 1);
  return p;
}

BiPoly q_factorial(int n) {
  BiPoly p(1);
  for (int i = 1; i <= n; ++i) p *= q_int(i);
  return p;
}

BiPoly gauss_binomial(int n, int k, bool square) {
  if (k < 0 || n < 0 || k > n) return BiPoly();
  // [n,k]_q = [n-1,k]_q + q^{n-k} [n-1,k-1]_q, row by row.
  std::vector<BiPoly> row{BiPoly(1)};  // row for n' = 0
  for (int np = 1; np <= n; ++np) {
    std::vector<BiPoly> next(std::min(np, k) + 1);
    next[0] = BiPoly(1);
    for (int j = 1; j < static_cast<int>(next.size()); ++j) {
      BiPoly carry = j - 1 < static_cast<int>(row.size()) ? row[j - 1] : BiPoly();
      next[j] = BiPoly::monomial(np - j, 0) * carry;
      if (j < static_cast<int>(row.size())) next[j] += row[j];
    }
    row = std::move(next);
  }
  BiPoly result = row[k];
  if (!square) return result;
  BiPoly doubled;
  for (const auto& [m, c] : result.terms()) doubled.add_term(2 * m.deg_q, 0, c);
  return doubled;
}

BiPoly qt_int(int k) {
  BiPoly p;
  if (k <= 0) return p;
  if (k % 2 == 0) {
    for (int e = 0; e <= k - 2; e += 2) p.add_term(e, 1, 1);
  } else {
    p.add_term(k - 1, 0, 1);
    for (int e = 0; e <= k - 3; e += 2) p.add_term(e, 1, 1);
  }
  return p;
}

}  // namespace qstir
