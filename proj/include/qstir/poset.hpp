#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qstir/bipoly.hpp"
#include "qstir/rgword.hpp"
#include "qstir/rookboard.hpp"

namespace qstir {

/// Ceiling on materialized poset elements; build operations throw
/// std::length_error instead of truncating.
inline constexpr std::size_t kDefaultMaxElements = 200000;

/// Rank-stratified Hasse diagram over dense integer handles.  Payloads are
/// RG-words for the second-kind poset Pi(n,k) and rook placements for the
/// first-kind poset Gamma(m,n); every cover raises rank by exactly one.
struct GradedPoset {
  enum class Kind { pi, gamma };

  Kind kind;
  int param_a = 0;  // n for pi, m (board length) for gamma
  int param_b = 0;  // k for pi, n (rook count) for gamma

  std::vector<std::variant<RGWord, RookPlacement>> elements;
  std::vector<int> rank;
  std::vector<std::pair<int, int>> covers;  // (lower, upper)
  std::vector<std::vector<int>> upper_covers;
  std::vector<std::vector<int>> lower_covers;
  int top_rank = 0;

  std::size_t size() const { return elements.size(); }
  const RGWord& word(int i) const { return std::get<RGWord>(elements[i]); }
  const RookPlacement& placement(int i) const {
    return std::get<RookPlacement>(elements[i]);
  }
  std::string label(int i) const;
  bool has_cover(int lower, int upper) const;
  std::optional<int> find(const std::vector<int>& key) const;
  /// Element ids of the given rank, ascending.
  std::vector<int> rank_layer(int r) const;
  /// Sum of q^{rank(x)} over all elements.
  BiPoly rank_genfn() const;

  /// Canonical lookup key: letters for words, flattened (col,row) pairs for
  /// placements.
  static std::vector<int> key_of(const RGWord& w);
  static std::vector<int> key_of(const RookPlacement& t);

  std::map<std::vector<int>, int> index;
};

/// The Stirling poset of the second kind on R(n,k): covers increment one
/// letter, rank is the wt-degree; total rank (n-k)(k-1).
GradedPoset build_pi(int n, int k, std::size_t max_elements = kDefaultMaxElements);

/// The Stirling poset of the first kind on placements of n rooks on the
/// length-m staircase: covers move one rook west or north, rank is below(T).
GradedPoset build_gamma(int m, int n,
                        std::size_t max_elements = kDefaultMaxElements);

/// Partial matching on the Hasse diagram: pairs of cover edges with each
/// element in at most one pair.
struct Matching {
  std::vector<int> partner;                 // -1 when unmatched
  std::vector<std::pair<int, int>> pairs;   // (lower, upper)
  std::vector<int> unmatched;               // ascending element ids

  bool is_matched(int i) const { return partner[i] >= 0; }
};

/// Morse matching on Pi(n,k): scan for the first i >= 2 where
/// w_{i-1} > w_i, or w_{i-1} = w_i with both even; pair downward
/// (decrement) when w_i is even, upward (increment) when odd.  Weakly
/// increasing allowable words stay unmatched.
Matching match_pi(const GradedPoset& poset);

/// Morse matching on Gamma(m,n): the first rook (left to right) not in a
/// shaded first-row square moves down one square if unshaded, up one if
/// shaded but below the first row.
Matching match_gamma(const GradedPoset& poset);

/// Structural matching validity; empty result means valid.
std::vector<std::string> validate_matching(const GradedPoset& poset,
                                           const Matching& m);

struct AcyclicityResult {
  bool acyclic = true;
  std::vector<int> cycle;  // element ids along a directed cycle, on failure
};

/// Orient matched covers upward and all others downward; report a directed
/// cycle if one exists.
AcyclicityResult check_acyclic(const GradedPoset& poset, const Matching& m);

/// Low-level variant over an arbitrary cover list; `partner` follows the
/// Matching convention.  Lets tests feed adversarial instances.
AcyclicityResult check_acyclic_digraph(
    std::size_t num_elements, const std::vector<std::pair<int, int>>& covers,
    const std::vector<std::pair<int, int>>& matched_pairs);

/// Sum of q^{rank} over unmatched elements.
BiPoly unmatched_genfn(const GradedPoset& poset, const Matching& m);

/// Total number of unmatched elements over Pi(n,k) for k = 1..n
/// (the Fibonacci number F_n).
Int fibonacci_unmatched_total(int n,
                              std::size_t max_elements = kDefaultMaxElements);

/// Decomposition of the poset into Boolean intervals [base, top], the base
/// allowable, of dimension j (interval has 2^j elements).
struct BooleanInterval {
  int base = 0;
  int top = 0;
  int dim = 0;
  std::vector<int> members;  // all 2^dim element ids, subset order
};

struct BooleanDecomposition {
  std::vector<BooleanInterval> intervals;
};

/// Intervals [w, alpha(w)] over allowable words, alpha incrementing the
/// entries indexed by Inv(w) = {i : w_j > w_i for some j < i}.
BooleanDecomposition decompose_pi(const GradedPoset& poset);

/// Intervals [T, alpha(T)] over allowable placements, alpha shifting every
/// rook outside the first row up by one.
BooleanDecomposition decompose_gamma(const GradedPoset& poset);

/// Structural checks: disjoint cover of the poset, 2^dim members realizing
/// the Boolean covers, only the base allowable.  Empty result means valid.
std::vector<std::string> validate_decomposition(const GradedPoset& poset,
                                                const BooleanDecomposition& d);

/// Sum of q^{rank(base)} t^{dim} over the intervals.
BiPoly decomposition_genfn(const GradedPoset& poset,
                           const BooleanDecomposition& d);

/// DOT export of the Hasse diagram: matched covers bold, red and
/// directed upward; plain covers undirected; optional decomposition shown
/// as clusters.
void export_dot(std::ostream& os, const GradedPoset& poset,
                const Matching* matching = nullptr,
                const BooleanDecomposition* decomposition = nullptr);

}  // namespace qstir
