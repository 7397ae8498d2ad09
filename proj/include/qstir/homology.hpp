#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qstir/bipoly.hpp"
#include "qstir/poset.hpp"

namespace qstir {

/// Dense integer matrix (row-major, arbitrary-precision entries).
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {}
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int r, int c) { return a_[std::size_t(r) * cols_ + c]; }
  const Int& at(int r, int c) const { return a_[std::size_t(r) * cols_ + c]; }
  bool is_zero() const;
  /// Nonzero entries as (row, col, value) triples.
  std::vector<std::tuple<int, int, Int>> triples() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

struct SmithResult {
  int rank = 0;
  std::vector<Int> invariant_factors;  // positive, each dividing the next
};

/// Smith normal form by unimodular row/column operations, pivoting on the
/// smallest nonzero entry.
SmithResult smith_normal_form(IntMatrix m);

/// Rank over the rationals (fraction-free elimination).
int matrix_rank(IntMatrix m);

/// Signed boundary of a word: decrement each repeated even entry in turn,
/// signs alternating left to right over E(w).
std::vector<std::pair<RGWord, int>> boundary_pi(const RGWord& w);

/// Signed boundary of a placement: move each unshaded rook down one square
/// in turn, signs alternating left to right over N(T).
std::vector<std::pair<RookPlacement, int>> boundary_gamma(const RookPlacement& t);

/// Chain complex supported on a Stirling poset: chain group i has the
/// rank-i elements as basis, boundary[i] maps rank i to rank i-1.
struct ChainComplex {
  const GradedPoset* poset = nullptr;
  std::vector<std::vector<int>> layers;  // element ids per rank
  std::vector<IntMatrix> boundary;       // boundary[0] has zero rows
};

/// Assemble the boundary matrices and verify boundary-of-boundary vanishes;
/// throws std::logic_error naming the offending rank otherwise.
ChainComplex build_complex(const GradedPoset& poset);

struct HomologyResult {
  std::vector<int> dims;                 // dim H_i per rank
  std::vector<std::vector<Int>> torsion; // invariant factors > 1 per rank
  std::vector<std::vector<int>> basis;   // generator element ids per rank
  bool basis_verified = false;
};

/// Integer homology via Smith normal form.  The basis is the claimed one
/// (boundary-free elements: E(w) or N(T) empty), verified to consist of
/// cycles that stay independent modulo boundaries, rank by rank.
HomologyResult homology(const ChainComplex& complex);

}  // namespace qstir
