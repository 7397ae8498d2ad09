#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "qstir/rgword.hpp"

using namespace qstir;

namespace {

RGWord w(std::initializer_list<int> letters) { return RGWord(std::vector<int>(letters)); }

// Classical Stirling numbers of the second kind, independent of the library.
long long classical_s2(int n, int k) {
  if (n == 0 && k == 0) return 1;
  if (n <= 0 || k <= 0) return 0;
  return classical_s2(n - 1, k - 1) + k * classical_s2(n - 1, k);
}

}  // namespace

TEST_CASE("validation") {
  CHECK(RGWord::is_valid({1, 2, 2, 1, 3, 2, 3}));
  CHECK_FALSE(RGWord::is_valid({2, 1}));
  CHECK_FALSE(RGWord::is_valid({1, 3}));
  CHECK_FALSE(RGWord::is_valid({}));
  CHECK_THROWS_AS(RGWord({1, 3}), std::invalid_argument);
}

TEST_CASE("enumeration of R(4,2)") {
  const auto words = enumerate_rg(4, 2);
  std::vector<std::string> got;
  for (const auto& x : words) got.push_back(x.str());
  CHECK(got == std::vector<std::string>{"1112", "1121", "1122", "1211", "1212",
                                        "1221", "1222"});
}

TEST_CASE("enumeration counts and edge cases") {
  CHECK(enumerate_rg(6, 3).size() == static_cast<std::size_t>(classical_s2(6, 3)));
  CHECK(classical_s2(6, 3) == 90);
  const auto ones = enumerate_rg(5, 1);
  REQUIRE(ones.size() == 1);
  CHECK(ones[0].str() == "11111");
  CHECK(enumerate_rg(4, 5).empty());
  CHECK(enumerate_rg(4, 0).empty());
  CHECK_THROWS_AS(enumerate_rg(25, 3), std::length_error);
  // Lexicographic order and Prop 2.1 on a bigger instance.
  const auto words = enumerate_rg(6, 3);
  CHECK(std::is_sorted(words.begin(), words.end()));
  for (const auto& x : words) {
    CHECK(x.letter(1) == 1);
    int prev_first = 0;
    for (int j = 1; j <= x.max_letter(); ++j) {
      int first = 0;
      for (int i = 1; i <= x.size() && first == 0; ++i)
        if (x.letter(i) == j) first = i;
      CHECK(first > prev_first);
      prev_first = first;
    }
  }
}

TEST_CASE("allowable words") {
  const auto a42 = enumerate_allowable(4, 2);
  std::vector<std::string> got;
  for (const auto& x : a42) got.push_back(x.str());
  CHECK(got == std::vector<std::string>{"1112", "1121", "1211"});
  const auto ann = enumerate_allowable(4, 4);
  REQUIRE(ann.size() == 1);
  CHECK(ann[0].str() == "1234");
  CHECK(enumerate_allowable(5, 3).size() == 11);
  CHECK(is_allowable(w({1, 2, 1, 1})));
  CHECK_FALSE(is_allowable(w({1, 2, 2, 1})));
}

TEST_CASE("wt statistic") {
  CHECK(wt(w({1, 2, 2, 1, 3, 2, 3})) == BiPoly::monomial(4, 0));
  CHECK(wt(w({1, 2, 2, 2})) == BiPoly::monomial(2, 0));
  CHECK(wt(w({1, 1, 1, 1, 1})) == BiPoly(1));
}

TEST_CASE("wt' statistic on allowable words") {
  CHECK(wt_prime(w({1, 2, 1, 1, 1})) == BiPoly::monomial(0, 3));  // (1+q)^3
  CHECK(wt_prime(w({1, 2, 3, 3, 3})) == BiPoly::monomial(4, 0));  // q^2 q^2
  CHECK(wt_prime(w({1, 2, 3, 4, 3})) == BiPoly::monomial(2, 1));  // q^2 (1+q)
  CHECK_THROWS_AS(wt_prime(w({1, 2, 2, 1})), std::invalid_argument);
}

TEST_CASE("A and B statistics") {
  CHECK(stat_A(w({1, 2, 3, 3, 3})) == 4);
  CHECK(stat_B(w({1, 2, 3, 3, 3})) == 0);
  CHECK(stat_A(w({1, 2, 3, 4, 5})) == 0);
  CHECK(stat_B(w({1, 2, 3, 4, 5})) == 0);
  CHECK(stat_B(w({1, 2, 1, 1, 1})) == 3);
  // wt' = q^A t^B on every allowable word up to n = 7.
  for (int n = 1; n <= 7; ++n)
    for (int k = 1; k <= n; ++k)
      for (const auto& x : enumerate_allowable(n, k))
        CHECK(wt_prime(x) == BiPoly::monomial(stat_A(x), stat_B(x)));
}

TEST_CASE("weakly increasing predicate") {
  CHECK(is_weakly_increasing(w({1, 1, 1, 2})));
  CHECK_FALSE(is_weakly_increasing(w({1, 2, 1, 1})));
  int count = 0;
  for (const auto& x : enumerate_allowable(4, 2))
    if (is_weakly_increasing(x)) ++count;
  CHECK(count == 1);  // only 1112; matches S_q[4,2] at q = -1
}

TEST_CASE("partition codec") {
  const RGWord word = w({1, 2, 2, 1, 3, 2, 3});
  const SetPartition part = word_to_partition(word);
  CHECK(part.str() == "14/236/57");
  CHECK(partition_to_word(part) == word);

  const SetPartition singletons({{1}, {2}, {3}, {4}});
  CHECK(partition_to_word(singletons).str() == "1234");
  CHECK(word_to_partition(w({1, 1, 1, 2})).str() == "123/4");

  CHECK_THROWS_AS(SetPartition({{2, 3}, {1}}), std::invalid_argument);
  CHECK_THROWS_AS(SetPartition({{1, 3}, {2}, {3}}), std::invalid_argument);
  CHECK_THROWS_AS(SetPartition({{1}, {3}}), std::invalid_argument);

  // Round trip over all of R(n,k) for n <= 8.
  for (int n = 1; n <= 8; ++n)
    for (int k = 1; k <= n; ++k)
      for (const auto& x : enumerate_rg(n, k))
        CHECK(partition_to_word(word_to_partition(x)) == x);
}

TEST_CASE("wt equals the closed power formula") {
  for (int n = 1; n <= 8; ++n)
    for (int k = 1; k <= n; ++k)
      for (const auto& x : enumerate_rg(n, k)) {
        int sum = 0;
        for (int v : x.letters()) sum += v;
        CHECK(wt(x) == BiPoly::monomial(sum - n - k * (k - 1) / 2, 0));
      }
}

TEST_CASE("serialization of wide words") {
  std::vector<int> letters(12);
  for (int i = 0; i < 12; ++i) letters[i] = i + 1;
  CHECK(RGWord(letters).str() == "1,2,3,4,5,6,7,8,9,10,11,12");
  std::vector<std::vector<int>> blocks(12);
  for (int i = 0; i < 12; ++i) blocks[i] = {i + 1};
  CHECK(SetPartition(blocks).str() == "1/2/3/4/5/6/7/8/9/10/11/12");
}
