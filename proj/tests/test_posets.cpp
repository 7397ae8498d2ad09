#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include "qstir/poset.hpp"
#include "qstir/stirling.hpp"

using namespace qstir;

namespace {

std::set<std::string> unmatched_labels(const GradedPoset& p, const Matching& m) {
  std::set<std::string> out;
  for (int u : m.unmatched) out.insert(p.label(u));
  return out;
}

}  // namespace

TEST_CASE("Pi construction") {
  const GradedPoset p52 = build_pi(5, 2);
  CHECK(p52.size() == 15);
  CHECK(p52.rank_genfn() == stirling2_q(5, 2));
  CHECK(p52.top_rank == (5 - 2) * (2 - 1));

  const GradedPoset pnn = build_pi(4, 4);
  CHECK(pnn.size() == 1);
  CHECK(pnn.top_rank == 0);
  CHECK(pnn.covers.empty());

  const GradedPoset p53 = build_pi(5, 3);
  CHECK(p53.top_rank == 4);
  const auto top = p53.rank_layer(4);
  REQUIRE(top.size() == 1);
  CHECK(p53.label(top[0]) == "12333");

  // Rank gen fn equals the recurrence on a sweep.
  const PolyTable Sq = stirling2_q_table(7);
  for (int n = 1; n <= 7; ++n)
    for (int k = 1; k <= n; ++k)
      CHECK(build_pi(n, k).rank_genfn() == Sq.at(n, k));

  CHECK_THROWS_AS(build_pi(9, 4, /*max_elements=*/10), std::length_error);
}

TEST_CASE("Gamma construction") {
  const GradedPoset g42 = build_gamma(4, 2);
  CHECK(g42.size() == 11);
  CHECK(g42.rank_genfn() == stirling1_q(4, 2));

  const GradedPoset g0 = build_gamma(5, 0);
  CHECK(g0.size() == 1);
  CHECK(g0.top_rank == 0);

  CHECK(build_gamma(5, 2).top_rank == 4 * 2 - 3);

  const PolyTable cq = stirling1_q_table(7);
  for (int m = 1; m <= 7; ++m)
    for (int n = 0; n <= m - 1; ++n)
      CHECK(build_gamma(m, n).rank_genfn() == cq.at(m, m - n));
}

TEST_CASE("Pi matching") {
  const GradedPoset p53 = build_pi(5, 3);
  const Matching m53 = match_pi(p53);
  CHECK(validate_matching(p53, m53).empty());
  CHECK(unmatched_labels(p53, m53) ==
        std::set<std::string>{"11123", "11233", "12333"});
  CHECK(unmatched_genfn(p53, m53) ==
        BiPoly(1) + BiPoly::monomial(2, 0) + BiPoly::monomial(4, 0));

  const GradedPoset p52 = build_pi(5, 2);
  const Matching m52 = match_pi(p52);
  CHECK(m52.pairs.size() == 7);  // (15 - 1)/2 matched pairs
  CHECK(unmatched_labels(p52, m52) == std::set<std::string>{"11112"});
  CHECK(unmatched_genfn(p52, m52) == gauss_binomial(3, 0, true));

  const GradedPoset pnn = build_pi(5, 5);
  const Matching mnn = match_pi(pnn);
  CHECK(unmatched_labels(pnn, mnn) == std::set<std::string>{"12345"});
}

TEST_CASE("Gamma matching") {
  const GradedPoset g42 = build_gamma(4, 2);
  const Matching m42 = match_gamma(g42);
  CHECK(validate_matching(g42, m42).empty());
  REQUIRE(m42.unmatched.size() == 1);
  CHECK(g42.rank[m42.unmatched[0]] == 2);

  const GradedPoset g0 = build_gamma(6, 0);
  const Matching m0 = match_gamma(g0);
  CHECK(m0.unmatched.size() == 1);
  CHECK(g0.rank[m0.unmatched[0]] == 0);

  const GradedPoset g52 = build_gamma(5, 2);
  CHECK(unmatched_genfn(g52, match_gamma(g52)) == BiPoly::monomial(2, 0));
}

TEST_CASE("unmatched generating function closed forms") {
  for (int n = 1; n <= 8; ++n)
    for (int k = 1; k <= n; ++k) {
      const GradedPoset p = build_pi(n, k);
      CHECK(unmatched_genfn(p, match_pi(p)) ==
            gauss_binomial(n - 1 - k / 2, (k - 1) / 2, true));
    }
  for (int m = 1; m <= 8; ++m)
    for (int n = 0; n <= m - 1; ++n) {
      const GradedPoset g = build_gamma(m, n);
      CHECK(unmatched_genfn(g, match_gamma(g)) ==
            BiPoly::monomial(n * (n - 1), 0) * gauss_binomial(m / 2, n, true));
    }
}

TEST_CASE("acyclicity") {
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= n; ++k) {
      const GradedPoset p = build_pi(n, k);
      CHECK(check_acyclic(p, match_pi(p)).acyclic);
    }
  for (int m = 1; m <= 6; ++m)
    for (int n = 0; n <= m - 1; ++n) {
      const GradedPoset g = build_gamma(m, n);
      CHECK(check_acyclic(g, match_gamma(g)).acyclic);
    }
}

TEST_CASE("adversarial crosswise matching has a cycle") {
  // Two bottoms a,b and two tops c,d with all four covers; matching
  // (a,c), (b,d) orients a->c, c->b, b->d, d->a.
  const std::vector<std::pair<int, int>> covers{{0, 2}, {0, 3}, {1, 2}, {1, 3}};
  const std::vector<std::pair<int, int>> pairs{{0, 2}, {1, 3}};
  const AcyclicityResult res = check_acyclic_digraph(4, covers, pairs);
  CHECK_FALSE(res.acyclic);
  CHECK(res.cycle.size() == 4);
  // Sanity: the honest matching (a,c) alone is acyclic.
  CHECK(check_acyclic_digraph(4, covers, {{0, 2}}).acyclic);
}

TEST_CASE("Fibonacci totals") {
  CHECK(fibonacci_unmatched_total(1) == 1);
  CHECK(fibonacci_unmatched_total(4) == 5);
  Int prev = 1, cur = 1;
  for (int n = 1; n <= 8; ++n) {
    CHECK(fibonacci_unmatched_total(n) == cur);
    const Int next = prev + cur;
    prev = cur;
    cur = next;
  }
  CHECK(fibonacci_unmatched_total(10) == 89);
}

TEST_CASE("Pi Boolean decomposition") {
  const GradedPoset p52 = build_pi(5, 2);
  const BooleanDecomposition d52 = decompose_pi(p52);
  CHECK(validate_decomposition(p52, d52).empty());
  std::multiset<int> dims;
  std::set<std::string> bases;
  for (const auto& iv : d52.intervals) {
    dims.insert(iv.dim);
    bases.insert(p52.label(iv.base));
  }
  CHECK(dims == std::multiset<int>{0, 1, 2, 3});
  CHECK(bases == std::set<std::string>{"11112", "11121", "11211", "12111"});
  BiPoly fig4;  // 1 + t + t^2 + t^3
  for (int j = 0; j <= 3; ++j) fig4.add_term(0, j, 1);
  CHECK(decomposition_genfn(p52, d52) == fig4);

  const GradedPoset pnn = build_pi(6, 6);
  const BooleanDecomposition dnn = decompose_pi(pnn);
  REQUIRE(dnn.intervals.size() == 1);
  CHECK(dnn.intervals[0].dim == 0);

  const GradedPoset p53 = build_pi(5, 3);
  const BooleanDecomposition d53 = decompose_pi(p53);
  CHECK(validate_decomposition(p53, d53).empty());
  CHECK(decomposition_genfn(p53, d53) == stirling2_qt(5, 3));
}

TEST_CASE("Gamma Boolean decomposition") {
  const GradedPoset g42 = build_gamma(4, 2);
  const BooleanDecomposition d42 = decompose_gamma(g42);
  CHECK(validate_decomposition(g42, d42).empty());
  std::multiset<int> dims;
  for (const auto& iv : d42.intervals) dims.insert(iv.dim);
  CHECK(dims == std::multiset<int>{0, 1, 1, 1, 2});  // one rook off row 1 in three of them, two in one

  const GradedPoset g0 = build_gamma(4, 0);
  REQUIRE(decompose_gamma(g0).intervals.size() == 1);

  const GradedPoset g52 = build_gamma(5, 2);
  const BooleanDecomposition d52 = decompose_gamma(g52);
  CHECK(decomposition_genfn(g52, d52).subst_t_one_plus_q() == stirling1_q(5, 3));

  // Decomposition/matching consistency across a sweep.
  for (int m = 1; m <= 6; ++m)
    for (int n = 0; n <= m - 1; ++n) {
      const GradedPoset g = build_gamma(m, n);
      const Matching match = match_gamma(g);
      for (const auto& iv : decompose_gamma(g).intervals) {
        if (iv.dim == 0) {
          CHECK_FALSE(match.is_matched(iv.base));
        } else {
          for (int x : iv.members) CHECK(match.is_matched(x));
        }
      }
    }
}

TEST_CASE("DOT export") {
  const GradedPoset p = build_pi(4, 2);
  const Matching m = match_pi(p);
  std::ostringstream os;
  export_dot(os, p, &m);
  const std::string dot = os.str();
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("1122") != std::string::npos);
  std::size_t red = 0, pos = 0;
  while ((pos = dot.find("color=red", pos)) != std::string::npos) {
    ++red;
    pos += 9;
  }
  CHECK(red == m.pairs.size());
}
