#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qstir/rookboard.hpp"
#include "qstir/stirling.hpp"
#include "qstir/tables.hpp"

using namespace qstir;

namespace {

BiPoly qpoly(std::initializer_list<long long> coeffs) {
  BiPoly p;
  int d = 0;
  for (long long c : coeffs) p.add_term(d++, 0, c);
  return p;
}

}  // namespace

TEST_CASE("q-Stirling numbers of the second kind") {
  CHECK(stirling2_q(4, 2) == qpoly({3, 3, 1}));
  CHECK(stirling2_q(5, 3) == qpoly({6, 8, 7, 3, 1}));
  CHECK(stirling2_q(6, 6) == BiPoly(1));
  CHECK(stirling2_q(0, 0) == BiPoly(1));
  CHECK(stirling2_q(3, 0).is_zero());
  CHECK(stirling2_q(2, 5).is_zero());
}

TEST_CASE("q-Stirling numbers of the first kind") {
  CHECK(stirling1_q(4, 2) == qpoly({3, 4, 3, 1}));
  CHECK(stirling1_q(5, 5) == BiPoly(1));
  // c_q[n,1] = [n-1]_q! by unrolling the recurrence.
  CHECK(stirling1_q(5, 1) == q_int(1) * q_int(2) * q_int(3) * q_int(4));
  CHECK(stirling1_q(5, 1) == q_factorial(4));
}

TEST_CASE("(q,t)-Stirling numbers of the second kind") {
  BiPoly f4;  // 1 + t + t^2 + t^3
  for (int j = 0; j <= 3; ++j) f4.add_term(0, j, 1);
  CHECK(stirling2_qt(5, 2) == f4);

  BiPoly f5;  // 1 + 2t + 3t^2 + q^2 + 3q^2 t + q^4
  f5.add_term(0, 0, 1);
  f5.add_term(0, 1, 2);
  f5.add_term(0, 2, 3);
  f5.add_term(2, 0, 1);
  f5.add_term(2, 1, 3);
  f5.add_term(4, 0, 1);
  CHECK(stirling2_qt(5, 3) == f5);

  for (int n = 0; n <= 8; ++n)
    for (int k = 0; k <= n; ++k)
      CHECK(stirling2_qt(n, k).subst_t_one_plus_q() == stirling2_q(n, k));
}

TEST_CASE("signed (q,t)-Stirling numbers of the first kind") {
  BiPoly f6;  // q^2 + q^2 t + t^2 + 2t, sign +1
  f6.add_term(2, 0, 1);
  f6.add_term(2, 1, 1);
  f6.add_term(0, 2, 1);
  f6.add_term(0, 1, 2);
  CHECK(stirling1_qt_signed(4, 2) == f6);
  CHECK(stirling1_qt_signed(6, 6) == BiPoly(1));

  // Oracle: (-1)^{n-k} sum of wt over the allowable placements.
  for (int n = 1; n <= 7; ++n)
    for (int k = 1; k <= n; ++k) {
      BiPoly sum;
      for (const auto& t : enumerate_allowable_rooks(n, n - k)) sum += wt_rook(t);
      if ((n - k) % 2 != 0) sum = -sum;
      CHECK(stirling1_qt_signed(n, k) == sum);
    }
  // In particular s_{q,t}[3,1] is the single placement of weight t.
  CHECK(stirling1_qt_signed(3, 1) == BiPoly::var_t());
}

TEST_CASE("count tables reproduce Tables 3 and 4") {
  // clang-format off
  const std::vector<std::vector<long long>> table3 = {
      {1},
      {0, 1},
      {0, 1, 1},
      {0, 1, 2, 1},
      {0, 1, 3, 4, 1},
      {0, 1, 4, 11, 6, 1},
      {0, 1, 5, 26, 23, 9, 1},
      {0, 1, 6, 57, 72, 50, 12, 1},
      {0, 1, 7, 120, 201, 222, 86, 16, 1},
      {0, 1, 8, 247, 522, 867, 480, 150, 20, 1},
      {0, 1, 9, 502, 1291, 3123, 2307, 1080, 230, 25, 1}};
  const std::vector<long long> table3_a = {1, 1, 2, 4, 9, 23, 65, 199, 654, 2296, 8569};
  const std::vector<long long> table3_b = {1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975};
  const std::vector<std::vector<long long>> table4 = {
      {1},
      {0, 1},
      {0, 1, 1},
      {0, 1, 2, 1},
      {0, 2, 5, 4, 1},
      {0, 4, 12, 13, 6, 1},
      {0, 12, 40, 51, 31, 9, 1},
      {0, 36, 132, 193, 144, 58, 12, 1},
      {0, 144, 564, 904, 769, 376, 106, 16, 1},
      {0, 576, 2400, 4180, 3980, 2273, 800, 170, 20, 1},
      {0, 2880, 12576, 23300, 24080, 15345, 6273, 1650, 270, 25, 1}};
  const std::vector<long long> table4_r = {1, 1, 2, 4, 12, 36, 144, 576, 2880, 14400, 86400};
  // clang-format on

  const CountTable a_tab = allowable_count_second_table(10);
  const CountTable d_tab = allowable_count_first_table(10);
  for (int n = 0; n <= 10; ++n) {
    for (int k = 0; k <= n; ++k) {
      CHECK(a_tab.at(n, k) == table3[n][k]);
      CHECK(d_tab.at(n, k) == table4[n][k]);
    }
    CHECK(a_tab.row_sum(n) == table3_a[n]);
    CHECK(classical_bell(n) == table3_b[n]);
    CHECK(d_tab.row_sum(n) == table4_r[n]);
  }
  CHECK(allowable_count_second(10, 5) == 3123);
  CHECK(allowable_bell(6) == 65);
  CHECK(classical_bell(6) == 203);
  CHECK(allowable_count_first(10, 4) == 24080);
  CHECK(rowsum_first(10) == 86400);
}

TEST_CASE("(q,t) falling factorials") {
  const XPoly k0 = falling_factorial_qt(0);
  REQUIRE(k0.size() == 1);
  CHECK(k0[0] == BiPoly(1));

  const XPoly k2 = falling_factorial_qt(2);  // x^2 - x
  REQUIRE(k2.size() == 3);
  CHECK(k2[0].is_zero());
  CHECK(k2[1] == BiPoly(-1));
  CHECK(k2[2] == BiPoly(1));

  const XPoly k3 = falling_factorial_qt(3);  // x^3 - (1+t)x^2 + t x
  REQUIRE(k3.size() == 4);
  CHECK(k3[0].is_zero());
  CHECK(k3[1] == BiPoly::var_t());
  CHECK(k3[2] == -(BiPoly(1) + BiPoly::var_t()));
  CHECK(k3[3] == BiPoly(1));
}

TEST_CASE("generating identities hold exactly") {
  const Report rep = verify_generating_identities(8);
  for (const Check& c : rep.checks) {
    INFO(c.name, ": ", c.detail);
    CHECK(c.pass);
  }
}

TEST_CASE("table rendering") {
  const RenderedTable sq = make_table(TableKind::S_q, 4);
  CHECK(sq.rows[4][3] == "3 + 3q + q^2");
  CHECK(sq.rows[2][4] == "");  // above the diagonal
  const RenderedTable a = make_table(TableKind::a, 10);
  CHECK(a.rows[10][6] == "3123");       // a(10,5)
  CHECK(a.rows[10][12] == "8569");      // a(10)
  CHECK(a.rows[10][13] == "115975");    // b(10)
  const RenderedTable d = make_table(TableKind::d, 10);
  CHECK(d.rows[10][5] == "24080");      // d(10,4)
  CHECK(d.rows[10][12] == "86400");     // r(10)
  CHECK(d.rows[10][13] == "3628800");   // 10!
  const std::string csv = to_csv(make_table(TableKind::bell, 3));
  CHECK(csv == "n,a(n),b(n)\n0,1,1\n1,1,1\n2,2,2\n3,4,5\n");
  CHECK_THROWS_AS(parse_table_kind("nope"), std::invalid_argument);
}
