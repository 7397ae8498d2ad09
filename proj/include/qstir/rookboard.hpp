#pragma once

#include <string>
#include <vector>

#include "qstir/bipoly.hpp"
#include "qstir/rgword.hpp"

namespace qstir {

/// Square of a staircase board, 1-based (row 1 at the top).  A length-m
/// board has squares (i,j) with i,j >= 1 and i + j <= m, i.e. m - i squares
/// in row i, left-justified.
struct Square {
  int row = 0;
  int col = 0;
  friend bool operator==(const Square&, const Square&) = default;
};

inline bool square_on_board(int m, Square s) {
  return s.row >= 1 && s.col >= 1 && s.row + s.col <= m;
}

/// Squares strictly south of (i,j) within its column.
inline int squares_below(int m, Square s) { return m - s.row - s.col; }

/// Shading alternates by antidiagonal, the lowest one shaded; equivalently
/// the below-count is even.
inline bool square_shaded(int m, Square s) { return squares_below(m, s) % 2 == 0; }

/// Placement of rooks on a staircase board of given length, at most one
/// rook per column.  Rooks are kept sorted by column (absolute, left-based).
class RookPlacement {
 public:
  RookPlacement(int board_length, std::vector<Square> rooks);

  int board_length() const { return m_; }
  int num_rooks() const { return static_cast<int>(rooks_.size()); }
  const std::vector<Square>& rooks() const { return rooks_; }

  /// "[m: (i,j) ...]" with rooks left to right; used as a stable label.
  std::string str() const;

  friend bool operator==(const RookPlacement& a, const RookPlacement& b) {
    return a.m_ == b.m_ && a.rooks_ == b.rooks_;
  }
  friend bool operator<(const RookPlacement& a, const RookPlacement& b);

 private:
  int m_;
  std::vector<Square> rooks_;
};

/// Total below-count of the placement.
int below(const RookPlacement& t);
/// Number of rooks outside the first row.
int nrow(const RookPlacement& t);
/// All rooks on shaded squares.
bool is_allowable(const RookPlacement& t);

/// q^{below(T)} t^{nrow(T)}; throws std::invalid_argument unless allowable.
BiPoly wt_rook(const RookPlacement& t);

/// Rook word w_1..w_{m-1}: one plus the below-count of the column-i rook,
/// or 0 for an empty column, columns read left to right.
std::vector<int> rook_word(const RookPlacement& t);

/// All placements of n rooks on the length-m staircase board, distinct
/// columns; ordered by column set, then rows within columns, ascending.
std::vector<RookPlacement> enumerate_rooks(int m, int n, int max_m = kDefaultMaxN);
/// The subset with every rook shaded.
std::vector<RookPlacement> enumerate_allowable_rooks(int m, int n,
                                                     int max_m = kDefaultMaxN);

/// ASCII grid: '#' shaded, '.' unshaded, 'R' rook.
std::string render_board(const RookPlacement& t);

}  // namespace qstir
