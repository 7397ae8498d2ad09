#pragma once

#include <string>
#include <vector>

#include "qstir/bipoly.hpp"

namespace qstir {

/// Triangular table of polynomial values for 0 <= k <= n <= n_max, built
/// bottom-up from a recurrence; 0 outside the range.
class PolyTable {
 public:
  explicit PolyTable(int n_max) : n_max_(n_max), rows_(n_max + 1) {
    for (int n = 0; n <= n_max; ++n) rows_[n].resize(n + 1);
  }
  int n_max() const { return n_max_; }
  /// Zero outside 0 <= k <= n <= n_max.
  const BiPoly& at(int n, int k) const;
  BiPoly& ref(int n, int k) { return rows_[n][k]; }

 private:
  int n_max_;
  std::vector<std::vector<BiPoly>> rows_;
  static const BiPoly zero_;
};

/// S_q[n,k] = S_q[n-1,k-1] + [k]_q S_q[n-1,k], S_q[n,0] = delta_{n,0}.
PolyTable stirling2_q_table(int n_max);
/// Unsigned c_q[n,k] = c_q[n-1,k-1] + [n-1]_q c_q[n-1,k], c_q[n,0] = delta_{n,0}.
PolyTable stirling1_q_table(int n_max);
/// S_{q,t}[n,k] = S_{q,t}[n-1,k-1] + [k]_{q,t} S_{q,t}[n-1,k].
PolyTable stirling2_qt_table(int n_max);
/// Signed s_{q,t}[n,k] = s_{q,t}[n-1,k-1] - [n-1]_{q,t} s_{q,t}[n-1,k].
PolyTable stirling1_qt_table(int n_max);

/// Single-entry conveniences (each builds the table up to n).
BiPoly stirling2_q(int n, int k);
BiPoly stirling1_q(int n, int k);
BiPoly stirling2_qt(int n, int k);
BiPoly stirling1_qt_signed(int n, int k);

/// Triangular integer table with the same shape conventions.
class CountTable {
 public:
  explicit CountTable(int n_max) : n_max_(n_max), rows_(n_max + 1) {
    for (int n = 0; n <= n_max; ++n) rows_[n].assign(n + 1, Int(0));
  }
  int n_max() const { return n_max_; }
  Int at(int n, int k) const {
    return n < 0 || k < 0 || n > n_max_ || k > n ? Int(0) : rows_[n][k];
  }
  Int& ref(int n, int k) { return rows_[n][k]; }
  Int row_sum(int n) const;

 private:
  int n_max_;
  std::vector<std::vector<Int>> rows_;
};

/// a(n,k) = a(n-1,k-1) + ceil(k/2) a(n-1,k), a(n,0) = delta_{n,0}.
CountTable allowable_count_second_table(int n_max);
/// d(n,k) = d(n-1,k-1) + ceil((n-1)/2) d(n-1,k), d(n,0) = delta_{n,0}.
CountTable allowable_count_first_table(int n_max);
/// Classical S(n,k) (q = 1).
CountTable classical_stirling2_table(int n_max);
/// Classical unsigned c(n,k) (q = 1).
CountTable classical_stirling1_table(int n_max);

Int allowable_count_second(int n, int k);
Int allowable_count_first(int n, int k);
/// a(n) = sum_k a(n,k).
Int allowable_bell(int n);
/// r(n) = sum_k d(n,k).
Int rowsum_first(int n);
/// Classical Bell number b(n).
Int classical_bell(int n);

/// Dense polynomial in x with BiPoly coefficients, index = degree.
using XPoly = std::vector<BiPoly>;

/// (x)_{k,q,t} = prod_{m=0}^{k-1} (x - [m]_{q,t}), monic of degree k.
XPoly falling_factorial_qt(int k);

/// One line per identity check.
struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::string title;
  std::vector<Check> checks;
  bool all_pass() const;
  void add(std::string name, bool pass, std::string detail = "");
  void merge(const Report& other);
};

/// Generating-polynomial identities, exact coefficient equality for every
/// n <= n_max: (x)_{n,q,t} = sum_k s_{q,t}[n,k] x^k and
/// x^n = sum_k S_{q,t}[n,k] (x)_{k,q,t}, plus their t -> 1+q specializations.
Report verify_generating_identities(int n_max);

}  // namespace qstir
