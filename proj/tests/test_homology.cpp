#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "qstir/homology.hpp"
#include "qstir/stirling.hpp"

using namespace qstir;

TEST_CASE("boundary map on words") {
  const RGWord w({1, 2, 2, 3, 4, 4});
  const auto terms = boundary_pi(w);  // 121344 - 122343
  REQUIRE(terms.size() == 2);
  CHECK(terms[0].first.str() == "121344");
  CHECK(terms[0].second == 1);
  CHECK(terms[1].first.str() == "122343");
  CHECK(terms[1].second == -1);

  // Allowable words have no repeated even entries, so zero boundary.
  CHECK(boundary_pi(RGWord({1, 2, 1, 3, 1})).empty());

  // Boundary of boundary cancels after expanding by hand.
  std::map<std::string, int> dd;
  for (const auto& [term, sign] : boundary_pi(w))
    for (const auto& [term2, sign2] : boundary_pi(term))
      dd[term2.str()] += sign * sign2;
  for (const auto& [label, coeff] : dd) CHECK(coeff == 0);
}

TEST_CASE("boundary map on placements") {
  const RookPlacement all_shaded(4, {{1, 1}, {2, 2}});
  CHECK(boundary_gamma(all_shaded).empty());

  const RookPlacement one_unshaded(4, {{1, 2}});  // below = 1, unshaded
  const auto terms = boundary_gamma(one_unshaded);
  REQUIRE(terms.size() == 1);
  CHECK(terms[0].second == 1);
  CHECK(terms[0].first == RookPlacement(4, {{2, 2}}));

  // Exhaustive boundary-of-boundary check over Gamma(6,3).
  std::map<std::vector<int>, int> dd;
  for (const auto& t : enumerate_rooks(6, 3)) {
    dd.clear();
    for (const auto& [term, sign] : boundary_gamma(t))
      for (const auto& [term2, sign2] : boundary_gamma(term)) {
        std::vector<int> key;
        for (const Square& s : term2.rooks()) {
          key.push_back(s.col);
          key.push_back(s.row);
        }
        dd[key] += sign * sign2;
      }
    for (const auto& [key, coeff] : dd) CHECK(coeff == 0);
  }
}

TEST_CASE("complex assembly and matrix shapes") {
  const GradedPoset p53 = build_pi(5, 3);
  const ChainComplex cc = build_complex(p53);  // also checks dd = 0
  REQUIRE(cc.boundary.size() == 5);
  CHECK(cc.boundary[1].rows() == 6);
  CHECK(cc.boundary[1].cols() == 8);
  CHECK(cc.boundary[2].rows() == 8);
  CHECK(cc.boundary[2].cols() == 7);
  CHECK(cc.boundary[3].rows() == 7);
  CHECK(cc.boundary[3].cols() == 3);
  CHECK(cc.boundary[4].rows() == 3);
  CHECK(cc.boundary[4].cols() == 1);

  const GradedPoset pnn = build_pi(4, 4);
  const ChainComplex single = build_complex(pnn);
  CHECK(single.boundary.size() == 1);

  const GradedPoset g42 = build_gamma(4, 2);
  const ChainComplex gcc = build_complex(g42);
  CHECK(gcc.boundary[1].rows() == 3);  // 3 + 4q + 3q^2 + q^3
  CHECK(gcc.boundary[1].cols() == 4);
  CHECK(gcc.boundary[2].rows() == 4);
  CHECK(gcc.boundary[2].cols() == 3);
  CHECK(gcc.boundary[3].rows() == 3);
  CHECK(gcc.boundary[3].cols() == 1);
}

TEST_CASE("Smith normal form on frozen matrices") {
  IntMatrix a(2, 2);
  a.at(0, 0) = 2; a.at(0, 1) = 4;
  a.at(1, 0) = 4; a.at(1, 1) = 8;
  const SmithResult sa = smith_normal_form(a);
  CHECK(sa.rank == 1);
  CHECK(sa.invariant_factors == std::vector<Int>{2});

  IntMatrix b(2, 2);
  b.at(0, 0) = 1; b.at(0, 1) = 2;
  b.at(1, 0) = 3; b.at(1, 1) = 4;
  const SmithResult sb = smith_normal_form(b);
  CHECK(sb.rank == 2);
  CHECK(sb.invariant_factors == std::vector<Int>{1, 2});

  IntMatrix c(3, 3);  // diag(2,6,12)-equivalent with tangled rows
  c.at(0, 0) = 2; c.at(0, 1) = 4;  c.at(0, 2) = 4;
  c.at(1, 0) = -6; c.at(1, 1) = 6; c.at(1, 2) = 12;
  c.at(2, 0) = 10; c.at(2, 1) = 4; c.at(2, 2) = 16;
  const SmithResult sc = smith_normal_form(c);
  CHECK(sc.rank == 3);
  CHECK(sc.invariant_factors == std::vector<Int>{2, 2, 156});
  // Invariant factor products match the determinantal divisors: check d1|d2|d3.
  CHECK(sc.invariant_factors[1] % sc.invariant_factors[0] == 0);
  CHECK(sc.invariant_factors[2] % sc.invariant_factors[1] == 0);

  CHECK(matrix_rank(b) == 2);
  CHECK(matrix_rank(a) == 1);
  IntMatrix z(3, 2);
  CHECK(matrix_rank(z) == 0);
  CHECK(smith_normal_form(z).rank == 0);
}

TEST_CASE("homology of the Stirling posets") {
  const GradedPoset p53 = build_pi(5, 3);
  const HomologyResult h53 = homology(build_complex(p53));
  CHECK(h53.dims == std::vector<int>{1, 0, 1, 0, 1});  // 1 + q^2 + q^4
  for (const auto& t : h53.torsion) CHECK(t.empty());
  CHECK(h53.basis_verified);
  std::set<std::string> basis_labels;
  for (const auto& layer : h53.basis)
    for (int x : layer) basis_labels.insert(p53.label(x));
  CHECK(basis_labels == std::set<std::string>{"11123", "11233", "12333"});

  const GradedPoset g42 = build_gamma(4, 2);
  const HomologyResult h42 = homology(build_complex(g42));
  CHECK(h42.dims == std::vector<int>{0, 0, 1, 0});  // dim H_2 = 1
  CHECK(h42.basis_verified);

  const GradedPoset pnn = build_pi(5, 5);
  const HomologyResult hnn = homology(build_complex(pnn));
  CHECK(hnn.dims == std::vector<int>{1});
}

TEST_CASE("homology gen fns match the closed forms on a sweep") {
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= n; ++k) {
      const GradedPoset p = build_pi(n, k);
      const HomologyResult h = homology(build_complex(p));
      BiPoly genfn;
      for (std::size_t r = 0; r < h.dims.size(); ++r)
        genfn.add_term(static_cast<int>(r), 0, h.dims[r]);
      CHECK(genfn == gauss_binomial(n - 1 - k / 2, (k - 1) / 2, true));
      CHECK(h.basis_verified);
    }
  for (int m = 1; m <= 6; ++m)
    for (int n = 0; n <= m - 1; ++n) {
      const GradedPoset g = build_gamma(m, n);
      const HomologyResult h = homology(build_complex(g));
      BiPoly genfn;
      for (std::size_t r = 0; r < h.dims.size(); ++r)
        genfn.add_term(static_cast<int>(r), 0, h.dims[r]);
      CHECK(genfn ==
            BiPoly::monomial(n * (n - 1), 0) * gauss_binomial(m / 2, n, true));
      CHECK(h.basis_verified);
    }
}

TEST_CASE("SNF and Bareiss ranks agree on random matrices") {
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> dim(1, 7), entry(-3, 3);
  for (int trial = 0; trial < 300; ++trial) {
    IntMatrix m(dim(rng), dim(rng));
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c) m.at(r, c) = entry(rng);
    const SmithResult s = smith_normal_form(m);
    CHECK(s.rank == matrix_rank(m));
    for (std::size_t i = 1; i < s.invariant_factors.size(); ++i) {
      CHECK(s.invariant_factors[i] % s.invariant_factors[i - 1] == 0);
      CHECK(s.invariant_factors[i - 1] > 0);
    }
  }
}
