#include "qstir/stirling.hpp"

#include <sstream>
#include <algorithm>
#include <stdexcept>

namespace qstir {

const BiPoly PolyTable::zero_;

const BiPoly& PolyTable::at(int n, int k) const {
  if (n < 0 || k < 0 || n > n_max_ || k > n) return zero_;
  return rows_[n][k];
}

namespace {

// Shared recurrence driver: T[n,k] = T[n-1,k-1] + step(n,k) * T[n-1,k].
template <typename Step>
PolyTable build_poly_table(int n_max, Step step) {
  PolyTable t(std::max(n_max, 0));
  const PolyTable& read = t;
  t.ref(0, 0) = BiPoly(1);
  for (int n = 1; n <= n_max; ++n)
    for (int k = 1; k <= n; ++k)
      t.ref(n, k) = read.at(n - 1, k - 1) + step(n, k) * read.at(n - 1, k);
  return t;
}

}  // namespace

PolyTable stirling2_q_table(int n_max) {
  return build_poly_table(n_max, [](int, int k) { return q_int(k); });
}

PolyTable stirling1_q_table(int n_max) {
  return build_poly_table(n_max, [](int n, int) { return q_int(n - 1); });
}

PolyTable stirling2_qt_table(int n_max) {
  return build_poly_table(n_max, [](int, int k) { return qt_int(k); });
}

PolyTable stirling1_qt_table(int n_max) {
  return build_poly_table(n_max, [](int n, int) { return -qt_int(n - 1); });
}

BiPoly stirling2_q(int n, int k) { return stirling2_q_table(n).at(n, k); }
BiPoly stirling1_q(int n, int k) { return stirling1_q_table(n).at(n, k); }
BiPoly stirling2_qt(int n, int k) { return stirling2_qt_table(n).at(n, k); }
BiPoly stirling1_qt_signed(int n, int k) { return stirling1_qt_table(n).at(n, k); }

Int CountTable::row_sum(int n) const {
  Int s = 0;
  for (int k = 0; k <= n && k <= n_max_; ++k) s += at(n, k);
  return s;
}

namespace {

template <typename Step>
CountTable build_count_table(int n_max, Step step) {
  CountTable t(std::max(n_max, 0));
  t.ref(0, 0) = 1;
  for (int n = 1; n <= n_max; ++n)
    for (int k = 1; k <= n; ++k)
      t.ref(n, k) = t.at(n - 1, k - 1) + step(n, k) * t.at(n - 1, k);
  return t;
}

}  // namespace

CountTable allowable_count_second_table(int n_max) {
  return build_count_table(n_max, [](int, int k) { return Int((k + 1) / 2); });
}

CountTable allowable_count_first_table(int n_max) {
  return build_count_table(n_max, [](int n, int) { return Int(n / 2); });
}

CountTable classical_stirling2_table(int n_max) {
  return build_count_table(n_max, [](int, int k) { return Int(k); });
}

CountTable classical_stirling1_table(int n_max) {
  return build_count_table(n_max, [](int n, int) { return Int(n - 1); });
}

Int allowable_count_second(int n, int k) {
  return allowable_count_second_table(n).at(n, k);
}

Int allowable_count_first(int n, int k) {
  return allowable_count_first_table(n).at(n, k);
}

Int allowable_bell(int n) { return allowable_count_second_table(n).row_sum(n); }

Int rowsum_first(int n) { return allowable_count_first_table(n).row_sum(n); }

Int classical_bell(int n) { return classical_stirling2_table(n).row_sum(n); }

XPoly falling_factorial_qt(int k) {
  XPoly p{BiPoly(1)};
  for (int m = 0; m < k; ++m) {
    const BiPoly root = qt_int(m);
    XPoly next(p.size() + 1);
    for (std::size_t d = 0; d < p.size(); ++d) {
      next[d + 1] += p[d];
      next[d] -= root * p[d];
    }
    p = std::move(next);
  }
  return p;
}

bool Report::all_pass() const {
  for (const Check& c : checks)
    if (!c.pass) return false;
  return true;
}

void Report::add(std::string name, bool pass, std::string detail) {
  checks.push_back({std::move(name), pass, std::move(detail)});
}

void Report::merge(const Report& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

namespace {

bool xpoly_equal(const XPoly& a, const XPoly& b, int* bad_index) {
  const std::size_t len = std::max(a.size(), b.size());
  for (std::size_t d = 0; d < len; ++d) {
    const BiPoly& ca = d < a.size() ? a[d] : BiPoly();
    const BiPoly& cb = d < b.size() ? b[d] : BiPoly();
    if (!(ca == cb)) {
      if (bad_index) *bad_index = static_cast<int>(d);
      return false;
    }
  }
  return true;
}

XPoly subst_coeffs(const XPoly& p) {
  XPoly out;
  out.reserve(p.size());
  for (const BiPoly& c : p) out.push_back(c.subst_t_one_plus_q());
  return out;
}

}  // namespace

Report verify_generating_identities(int n_max) {
  Report rep;
  rep.title = "generating polynomial identities (x)_{n,q,t} / x^n";
  const PolyTable sqt = stirling1_qt_table(n_max);
  const PolyTable Sqt = stirling2_qt_table(n_max);
  for (int n = 0; n <= n_max; ++n) {
    const XPoly falling = falling_factorial_qt(n);

    XPoly rhs1(n + 1);
    for (int k = 0; k <= n; ++k) rhs1[k] = sqt.at(n, k);
    int bad = -1;
    bool ok = xpoly_equal(falling, rhs1, &bad);
    std::ostringstream d1;
    if (!ok) d1 << "coefficient of x^" << bad << " differs";
    rep.add("(x)_{" + std::to_string(n) + ",q,t} = sum_k s_{q,t}[n,k] x^k", ok,
            d1.str());

    XPoly rhs2;
    for (int k = 0; k <= n; ++k) {
      const XPoly fk = falling_factorial_qt(k);
      if (rhs2.size() < fk.size()) rhs2.resize(fk.size());
      for (std::size_t d = 0; d < fk.size(); ++d) rhs2[d] += Sqt.at(n, k) * fk[d];
    }
    XPoly lhs2(n + 1);
    lhs2[n] = BiPoly(1);
    ok = xpoly_equal(lhs2, rhs2, &bad);
    std::ostringstream d2;
    if (!ok) d2 << "coefficient of x^" << bad << " differs";
    rep.add("x^" + std::to_string(n) + " = sum_k S_{q,t}[n,k] (x)_{k,q,t}", ok,
            d2.str());

    // q-specialization t -> 1+q of both identities.
    ok = xpoly_equal(subst_coeffs(falling), subst_coeffs(rhs1), &bad) &&
         xpoly_equal(lhs2, subst_coeffs(rhs2), &bad);
    rep.add("t -> 1+q specialization, n = " + std::to_string(n), ok);
  }
  return rep;
}

}  // namespace qstir
