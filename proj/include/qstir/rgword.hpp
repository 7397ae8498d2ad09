#pragma once

#include <string>
#include <vector>

#include "qstir/bipoly.hpp"

namespace qstir {

/// Enumerations of words/placements are exponential in n; calls beyond this
/// bound fail fast unless the caller raises it explicitly.
inline constexpr int kDefaultMaxN = 20;

/// Restricted growth word w_1..w_n: w_1 = 1, w_i <= max(w_1..w_{i-1}) + 1,
/// and every letter 1..k occurs, where k is the maximum letter.
/// Construction validates; letter access is 1-based to match the usual
/// set-partition indexing.
class RGWord {
 public:
  explicit RGWord(std::vector<int> letters);

  static bool is_valid(const std::vector<int>& letters);

  int size() const { return static_cast<int>(letters_.size()); }
  int max_letter() const { return prefix_max_.empty() ? 0 : prefix_max_.back(); }
  int letter(int i) const { return letters_[i - 1]; }
  /// m_i = max(w_1..w_i); m_0 = 0.
  int prefix_max(int i) const { return i == 0 ? 0 : prefix_max_[i - 1]; }
  const std::vector<int>& letters() const { return letters_; }

  /// Digit string when the max letter fits one digit, comma-separated
  /// otherwise (e.g. "1221323" vs "1,2,...,10").
  std::string str() const;

  friend bool operator==(const RGWord& a, const RGWord& b) {
    return a.letters_ == b.letters_;
  }
  friend bool operator<(const RGWord& a, const RGWord& b) {
    return a.letters_ < b.letters_;
  }

 private:
  std::vector<int> letters_;
  std::vector<int> prefix_max_;
};

/// Set partition of {1..n} in standard form: blocks ordered by minima,
/// elements within a block ascending.
class SetPartition {
 public:
  explicit SetPartition(std::vector<std::vector<int>> blocks);

  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int ground_size() const { return n_; }

  /// Slash form "14/236/57"; elements comma-separated once n > 9.
  std::string str() const;

 private:
  std::vector<std::vector<int>> blocks_;
  int n_ = 0;
};

/// All RG-words of length n with maximum letter k, lexicographic.
/// Empty when the range is void (k <= 0 or k > n); throws std::length_error
/// past the enumeration bound.
std::vector<RGWord> enumerate_rg(int n, int k, int max_n = kDefaultMaxN);

/// The allowable subset A(n,k): every even letter occurs exactly once.
std::vector<RGWord> enumerate_allowable(int n, int k, int max_n = kDefaultMaxN);

bool is_allowable(const RGWord& w);
bool is_weakly_increasing(const RGWord& w);

/// wt(w) = prod_i wt_i, with wt_i = q^{w_i-1} when m_{i-1} >= w_i and 1
/// otherwise; a pure power of q.
BiPoly wt(const RGWord& w);

/// wt'(w) = q^{A(w)} t^{B(w)} on allowable words, t standing in for 1+q.
/// Throws std::invalid_argument on non-allowable input.
BiPoly wt_prime(const RGWord& w);

/// A(w) = sum of (w_i - 1) over positions with m_{i-1} >= w_i.
int stat_A(const RGWord& w);
/// B(w) = number of positions with m_{i-1} > w_i.
int stat_B(const RGWord& w);

/// Mutually inverse codecs: element i lies in block w_i.
SetPartition word_to_partition(const RGWord& w);
RGWord partition_to_word(const SetPartition& p);

}  // namespace qstir
