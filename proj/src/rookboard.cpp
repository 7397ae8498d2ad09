#include "qstir/rookboard.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qstir {

RookPlacement::RookPlacement(int board_length, std::vector<Square> rooks)
    : m_(board_length), rooks_(std::move(rooks)) {
  if (m_ < 1) throw std::invalid_argument("rook placement: board length < 1");
  std::sort(rooks_.begin(), rooks_.end(),
            [](Square a, Square b) { return a.col != b.col ? a.col < b.col : a.row < b.row; });
  for (std::size_t i = 0; i < rooks_.size(); ++i) {
    if (!square_on_board(m_, rooks_[i]))
      throw std::invalid_argument("rook placement: rook off the board");
    if (i > 0 && rooks_[i].col == rooks_[i - 1].col)
      throw std::invalid_argument("rook placement: two rooks share a column");
  }
}

std::string RookPlacement::str() const {
  std::ostringstream os;
  os << "[" << m_ << ":";
  for (const Square& s : rooks_) os << " (" << s.row << "," << s.col << ")";
  os << "]";
  return os.str();
}

bool operator<(const RookPlacement& a, const RookPlacement& b) {
  // Column sets first, then rows: the enumeration order.
  if (a.m_ != b.m_) return a.m_ < b.m_;
  auto key = [](const RookPlacement& t) {
    std::vector<int> k;
    for (const Square& s : t.rooks_) k.push_back(s.col);
    for (const Square& s : t.rooks_) k.push_back(s.row);
    return k;
  };
  return key(a) < key(b);
}

int below(const RookPlacement& t) {
  int total = 0;
  for (const Square& s : t.rooks()) total += squares_below(t.board_length(), s);
  return total;
}

int nrow(const RookPlacement& t) {
  int count = 0;
  for (const Square& s : t.rooks())
    if (s.row > 1) ++count;
  return count;
}

bool is_allowable(const RookPlacement& t) {
  for (const Square& s : t.rooks())
    if (!square_shaded(t.board_length(), s)) return false;
  return true;
}

BiPoly wt_rook(const RookPlacement& t) {
  if (!is_allowable(t))
    throw std::invalid_argument("wt_rook: placement not allowable: " + t.str());
  return BiPoly::monomial(below(t), nrow(t));
}

std::vector<int> rook_word(const RookPlacement& t) {
  std::vector<int> w(t.board_length() - 1, 0);
  for (const Square& s : t.rooks())
    w[s.col - 1] = squares_below(t.board_length(), s) + 1;
  return w;
}

namespace {

// Placements for a fixed column set, rows varying lexicographically.
void fill_rows(int m, const std::vector<int>& cols, std::size_t idx,
               std::vector<Square>& rooks, bool shaded_only,
               std::vector<RookPlacement>& out) {
  if (idx == cols.size()) {
    out.emplace_back(m, rooks);
    return;
  }
  const int col = cols[idx];
  for (int row = 1; row + col <= m; ++row) {
    if (shaded_only && !square_shaded(m, {row, col})) continue;
    rooks.push_back({row, col});
    fill_rows(m, cols, idx + 1, rooks, shaded_only, out);
    rooks.pop_back();
  }
}

void choose_columns(int m, int n, int next, std::vector<int>& cols,
                    bool shaded_only, std::vector<RookPlacement>& out) {
  if (static_cast<int>(cols.size()) == n) {
    std::vector<Square> rooks;
    fill_rows(m, cols, 0, rooks, shaded_only, out);
    return;
  }
  const int needed = n - static_cast<int>(cols.size());
  for (int c = next; c + needed - 1 <= m - 1; ++c) {
    cols.push_back(c);
    choose_columns(m, n, c + 1, cols, shaded_only, out);
    cols.pop_back();
  }
}

std::vector<RookPlacement> enumerate_impl(int m, int n, int max_m, bool shaded_only) {
  if (m < 1) throw std::invalid_argument("enumerate_rooks: board length < 1");
  if (n < 0) throw std::invalid_argument("enumerate_rooks: negative rook count");
  if (m > max_m)
    throw std::length_error("enumerate_rooks: board length exceeds the bound");
  std::vector<RookPlacement> out;
  if (n > m - 1) return out;
  std::vector<int> cols;
  choose_columns(m, n, 1, cols, shaded_only, out);
  return out;
}

}  // namespace

std::vector<RookPlacement> enumerate_rooks(int m, int n, int max_m) {
  return enumerate_impl(m, n, max_m, false);
}

std::vector<RookPlacement> enumerate_allowable_rooks(int m, int n, int max_m) {
  return enumerate_impl(m, n, max_m, true);
}

std::string render_board(const RookPlacement& t) {
  const int m = t.board_length();
  std::ostringstream os;
  for (int row = 1; row <= m - 1; ++row) {
    for (int col = 1; col + row <= m; ++col) {
      const Square s{row, col};
      const bool rook =
          std::find(t.rooks().begin(), t.rooks().end(), s) != t.rooks().end();
      os << (rook ? 'R' : square_shaded(m, s) ? '#' : '.');
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace qstir
