#include "qstir/rgword.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qstir {

RGWord::RGWord(std::vector<int> letters) : letters_(std::move(letters)) {
  if (!is_valid(letters_)) {
    std::ostringstream os;
    os << "not an RG-word:";
    for (int x : letters_) os << " " << x;
    throw std::invalid_argument(os.str());
  }
  prefix_max_.reserve(letters_.size());
  int m = 0;
  for (int x : letters_) prefix_max_.push_back(m = std::max(m, x));
}

bool RGWord::is_valid(const std::vector<int>& letters) {
  if (letters.empty()) return false;
  if (letters.front() != 1) return false;
  int m = 0;
  for (int x : letters) {
    if (x < 1 || x > m + 1) return false;
    m = std::max(m, x);
  }
  // Growth by at most one plus surjectivity of 1..m are the same thing here:
  // the max only ever steps up by one.
  return true;
}

std::string RGWord::str() const {
  std::ostringstream os;
  const bool digits = max_letter() <= 9;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (!digits && i > 0) os << ",";
    os << letters_[i];
  }
  return os.str();
}

SetPartition::SetPartition(std::vector<std::vector<int>> blocks)
    : blocks_(std::move(blocks)) {
  std::set<int> seen;
  int prev_min = 0;
  for (auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("set partition: empty block");
    std::vector<int> sorted = b;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != b)
      throw std::invalid_argument("set partition: block not ascending");
    if (b.front() <= prev_min)
      throw std::invalid_argument("set partition: blocks not in standard form");
    prev_min = b.front();
    for (int x : b) {
      if (x < 1 || !seen.insert(x).second)
        throw std::invalid_argument("set partition: repeated or bad element");
      n_ = std::max(n_, x);
    }
  }
  if (static_cast<int>(seen.size()) != n_)
    throw std::invalid_argument("set partition: ground set has gaps");
}

std::string SetPartition::str() const {
  std::ostringstream os;
  const bool digits = n_ <= 9;
  for (std::size_t j = 0; j < blocks_.size(); ++j) {
    if (j > 0) os << "/";
    for (std::size_t i = 0; i < blocks_[j].size(); ++i) {
      if (!digits && i > 0) os << ",";
      os << blocks_[j][i];
    }
  }
  return os.str();
}

namespace {

void extend_rg(std::vector<int>& prefix, int cur_max, int n, int k,
               std::vector<RGWord>& out) {
  const int pos = static_cast<int>(prefix.size());
  if (pos == n) {
    if (cur_max == k) out.emplace_back(prefix);
    return;
  }
  // Reachability cut: the letters still unused must fit in what remains.
  const int hi = std::min(k, cur_max + 1);
  for (int x = 1; x <= hi; ++x) {
    const int new_max = std::max(cur_max, x);
    if (k - new_max > n - pos - 1) continue;
    prefix.push_back(x);
    extend_rg(prefix, new_max, n, k, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<RGWord> enumerate_rg(int n, int k, int max_n) {
  if (n < 1) throw std::invalid_argument("enumerate_rg: n must be positive");
  if (n > max_n)
    throw std::length_error("enumerate_rg: n exceeds the enumeration bound");
  std::vector<RGWord> out;
  if (k <= 0 || k > n) return out;
  std::vector<int> prefix;
  prefix.reserve(n);
  extend_rg(prefix, 0, n, k, out);
  return out;
}

std::vector<RGWord> enumerate_allowable(int n, int k, int max_n) {
  std::vector<RGWord> out;
  for (auto& w : enumerate_rg(n, k, max_n))
    if (is_allowable(w)) out.push_back(std::move(w));
  return out;
}

bool is_allowable(const RGWord& w) {
  std::vector<int> count(w.max_letter() + 1, 0);
  for (int x : w.letters())
    if (x % 2 == 0 && ++count[x] > 1) return false;
  return true;
}

bool is_weakly_increasing(const RGWord& w) {
  for (int i = 2; i <= w.size(); ++i)
    if (w.letter(i - 1) > w.letter(i)) return false;
  return true;
}

BiPoly wt(const RGWord& w) {
  int deg = 0;
  for (int i = 2; i <= w.size(); ++i)
    if (w.prefix_max(i - 1) >= w.letter(i)) deg += w.letter(i) - 1;
  return BiPoly::monomial(deg, 0);
}

BiPoly wt_prime(const RGWord& w) {
  if (!is_allowable(w))
    throw std::invalid_argument("wt_prime: word is not allowable: " + w.str());
  return BiPoly::monomial(stat_A(w), stat_B(w));
}

int stat_A(const RGWord& w) {
  int a = 0;
  for (int i = 2; i <= w.size(); ++i)
    if (w.prefix_max(i - 1) >= w.letter(i)) a += w.letter(i) - 1;
  return a;
}

int stat_B(const RGWord& w) {
  int b = 0;
  for (int i = 2; i <= w.size(); ++i)
    if (w.prefix_max(i - 1) > w.letter(i)) ++b;
  return b;
}

SetPartition word_to_partition(const RGWord& w) {
  std::vector<std::vector<int>> blocks(w.max_letter());
  for (int i = 1; i <= w.size(); ++i) blocks[w.letter(i) - 1].push_back(i);
  return SetPartition(std::move(blocks));
}

RGWord partition_to_word(const SetPartition& p) {
  std::vector<int> letters(p.ground_size(), 0);
  int j = 0;
  for (const auto& block : p.blocks()) {
    ++j;
    for (int x : block) letters[x - 1] = j;
  }
  return RGWord(std::move(letters));
}

}  // namespace qstir
