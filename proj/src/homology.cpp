#include "qstir/homology.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace qstir {

bool IntMatrix::is_zero() const {
  for (const Int& x : a_)
    if (x != 0) return false;
  return true;
}

std::vector<std::tuple<int, int, Int>> IntMatrix::triples() const {
  std::vector<std::tuple<int, int, Int>> out;
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (at(r, c) != 0) out.emplace_back(r, c, at(r, c));
  return out;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("matrix multiply: shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a.at(i, k) == 0) continue;
      for (int j = 0; j < b.cols(); ++j)
        if (b.at(k, j) != 0) out.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return out;
}

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

void swap_rows(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int c = 0; c < m.cols(); ++c) std::swap(m.at(a, c), m.at(b, c));
}

void swap_cols(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int r = 0; r < m.rows(); ++r) std::swap(m.at(r, a), m.at(r, b));
}

void add_row_multiple(IntMatrix& m, int dst, int src, const Int& f) {
  if (f == 0) return;
  for (int c = 0; c < m.cols(); ++c) m.at(dst, c) += f * m.at(src, c);
}

void add_col_multiple(IntMatrix& m, int dst, int src, const Int& f) {
  if (f == 0) return;
  for (int r = 0; r < m.rows(); ++r) m.at(r, dst) += f * m.at(r, src);
}

// Smallest-magnitude nonzero entry of the trailing submatrix; a unit entry
// wins immediately since nothing can beat it.
bool find_pivot(const IntMatrix& m, int t, int* pr, int* pc) {
  bool found = false;
  Int best = 0;
  for (int r = t; r < m.rows(); ++r)
    for (int c = t; c < m.cols(); ++c) {
      const Int& x = m.at(r, c);
      if (x == 0) continue;
      if (!found || abs_int(x) < best) {
        best = abs_int(x);
        *pr = r;
        *pc = c;
        found = true;
        if (best == 1) return true;
      }
    }
  return found;
}

}  // namespace

SmithResult smith_normal_form(IntMatrix m) {
  SmithResult res;
  const int bound = std::min(m.rows(), m.cols());
  for (int t = 0; t < bound; ++t) {
    int pr, pc;
    if (!find_pivot(m, t, &pr, &pc)) break;
    swap_rows(m, t, pr);
    swap_cols(m, t, pc);

    for (;;) {
      // Clear row and column t by division steps; remainders become new,
      // smaller pivots.
      bool clean = true;
      for (int r = t + 1; r < m.rows(); ++r) {
        if (m.at(r, t) == 0) continue;
        const Int f = m.at(r, t) / m.at(t, t);
        add_row_multiple(m, r, t, -f);
        if (m.at(r, t) != 0) {
          swap_rows(m, t, r);
          clean = false;
        }
      }
      for (int c = t + 1; c < m.cols(); ++c) {
        if (m.at(t, c) == 0) continue;
        const Int f = m.at(t, c) / m.at(t, t);
        add_col_multiple(m, c, t, -f);
        if (m.at(t, c) != 0) {
          swap_cols(m, t, c);
          clean = false;
        }
      }
      if (!clean) continue;

      // A unit pivot divides everything; skip the trailing scan.
      if (abs_int(m.at(t, t)) == 1) break;

      // Divisibility fix: a non-multiple in the trailing block folds into
      // row t and restarts the clearing loop.
      bool divides = true;
      for (int r = t + 1; r < m.rows() && divides; ++r)
        for (int c = t + 1; c < m.cols() && divides; ++c)
          if (m.at(r, c) % m.at(t, t) != 0) {
            add_row_multiple(m, t, r, 1);
            divides = false;
          }
      if (divides) break;
    }
    if (m.at(t, t) < 0)
      for (int c = t; c < m.cols(); ++c) m.at(t, c) = -m.at(t, c);
    res.invariant_factors.push_back(m.at(t, t));
    ++res.rank;
  }
  return res;
}

int matrix_rank(IntMatrix m) {
  // Bareiss elimination with full pivoting: the division by the previous
  // pivot is exact and keeps entries minor-sized.
  int rank = 0;
  Int prev = 1;
  const int bound = std::min(m.rows(), m.cols());
  for (int t = 0; t < bound; ++t) {
    int pr, pc;
    if (!find_pivot(m, t, &pr, &pc)) break;
    swap_rows(m, t, pr);
    swap_cols(m, t, pc);
    for (int r = t + 1; r < m.rows(); ++r) {
      for (int c = t + 1; c < m.cols(); ++c)
        m.at(r, c) = (m.at(r, c) * m.at(t, t) - m.at(t, c) * m.at(r, t)) / prev;
      m.at(r, t) = 0;
    }
    prev = m.at(t, t);
    ++rank;
  }
  return rank;
}

std::vector<std::pair<RGWord, int>> boundary_pi(const RGWord& w) {
  std::vector<std::pair<RGWord, int>> out;
  int sign = 1;
  std::vector<int> seen(w.max_letter() + 1, 0);
  for (int i = 1; i <= w.size(); ++i) {
    const int x = w.letter(i);
    if (x % 2 == 0 && seen[x] > 0) {
      std::vector<int> letters = w.letters();
      --letters[i - 1];
      out.emplace_back(RGWord(std::move(letters)), sign);
      sign = -sign;
    }
    ++seen[x];
  }
  return out;
}

std::vector<std::pair<RookPlacement, int>> boundary_gamma(const RookPlacement& t) {
  std::vector<std::pair<RookPlacement, int>> out;
  int sign = 1;
  for (std::size_t r = 0; r < t.rooks().size(); ++r) {
    if (square_shaded(t.board_length(), t.rooks()[r])) continue;
    std::vector<Square> rooks = t.rooks();
    ++rooks[r].row;  // down one square
    out.emplace_back(RookPlacement(t.board_length(), std::move(rooks)), sign);
    sign = -sign;
  }
  return out;
}

ChainComplex build_complex(const GradedPoset& poset) {
  ChainComplex cc;
  cc.poset = &poset;
  cc.layers.resize(poset.top_rank + 1);
  std::vector<int> pos_in_layer(poset.size());
  for (std::size_t i = 0; i < poset.size(); ++i) {
    pos_in_layer[i] = static_cast<int>(cc.layers[poset.rank[i]].size());
    cc.layers[poset.rank[i]].push_back(static_cast<int>(i));
  }

  cc.boundary.resize(poset.top_rank + 1);
  cc.boundary[0] = IntMatrix(0, static_cast<int>(cc.layers[0].size()));
  for (int r = 1; r <= poset.top_rank; ++r) {
    IntMatrix mat(static_cast<int>(cc.layers[r - 1].size()),
                  static_cast<int>(cc.layers[r].size()));
    for (int c = 0; c < mat.cols(); ++c) {
      const int elem = cc.layers[r][c];
      auto place_term = [&](const std::vector<int>& key, int sign) {
        auto target = poset.find(key);
        if (!target || poset.rank[*target] != r - 1)
          throw std::logic_error("build_complex: boundary term " +
                                 std::string("missing or off-rank"));
        mat.at(pos_in_layer[*target], c) += sign;
      };
      if (poset.kind == GradedPoset::Kind::pi) {
        for (const auto& [term, sign] : boundary_pi(poset.word(elem)))
          place_term(GradedPoset::key_of(term), sign);
      } else {
        for (const auto& [term, sign] : boundary_gamma(poset.placement(elem)))
          place_term(GradedPoset::key_of(term), sign);
      }
    }
    cc.boundary[r] = std::move(mat);
  }

  for (int r = 2; r <= poset.top_rank; ++r) {
    const IntMatrix composite = multiply(cc.boundary[r - 1], cc.boundary[r]);
    for (const auto& [row, col, value] : composite.triples())
      throw std::logic_error("build_complex: boundary of boundary nonzero on " +
                             poset.label(cc.layers[r][col]));
  }
  return cc;
}

HomologyResult homology(const ChainComplex& complex) {
  const GradedPoset& poset = *complex.poset;
  const int top = poset.top_rank;
  HomologyResult res;
  res.dims.assign(top + 1, 0);
  res.torsion.assign(top + 1, {});
  res.basis.assign(top + 1, {});

  std::vector<int> ranks(top + 2, 0);  // rank of boundary[i]; 0 past the top
  std::vector<SmithResult> snf(top + 1);
  for (int r = 1; r <= top; ++r) {
    snf[r] = smith_normal_form(complex.boundary[r]);
    ranks[r] = snf[r].rank;
  }

  res.basis_verified = true;
  for (int r = 0; r <= top; ++r) {
    const int n_r = static_cast<int>(complex.layers[r].size());
    const int rank_out = r >= 1 ? ranks[r] : 0;
    const int rank_in = r + 1 <= top ? ranks[r + 1] : 0;
    res.dims[r] = n_r - rank_out - rank_in;
    if (r + 1 <= top)
      for (const Int& f : snf[r + 1].invariant_factors)
        if (f > 1) res.torsion[r].push_back(f);

    // Claimed generators: weakly increasing allowable words, resp.
    // placements with every rook in a shaded first-row square.  Both have
    // empty boundary by construction; the rank test below checks the rest.
    std::vector<int> claimed;
    for (int c = 0; c < n_r; ++c) {
      const int elem = complex.layers[r][c];
      bool generator;
      if (poset.kind == GradedPoset::Kind::pi) {
        const RGWord& w = poset.word(elem);
        generator = is_allowable(w) && is_weakly_increasing(w);
      } else {
        const RookPlacement& t = poset.placement(elem);
        generator = true;
        for (const Square& s : t.rooks())
          if (s.row != 1 || !square_shaded(t.board_length(), s))
            generator = false;
      }
      if (generator) {
        res.basis[r].push_back(elem);
        claimed.push_back(c);
      }
    }

    // Cycles: their boundary columns must vanish.
    if (r >= 1)
      for (std::size_t idx = 0; idx < claimed.size(); ++idx)
        for (int row = 0; row < complex.boundary[r].rows(); ++row)
          if (complex.boundary[r].at(row, claimed[idx]) != 0)
            res.basis_verified = false;

    // Independence modulo boundaries: appending the claimed coordinate
    // vectors to the image of the next boundary must raise the rank by one
    // per generator, and together they must account for dim H_r.
    const int in_cols = r + 1 <= top ? complex.boundary[r + 1].cols() : 0;
    IntMatrix aug(n_r, in_cols + static_cast<int>(claimed.size()));
    for (int row = 0; row < n_r; ++row)
      for (int c = 0; c < in_cols; ++c)
        aug.at(row, c) = complex.boundary[r + 1].at(row, c);
    for (std::size_t idx = 0; idx < claimed.size(); ++idx)
      aug.at(claimed[idx], in_cols + static_cast<int>(idx)) = 1;
    if (matrix_rank(std::move(aug)) !=
        rank_in + static_cast<int>(claimed.size()))
      res.basis_verified = false;
    if (static_cast<int>(claimed.size()) != res.dims[r])
      res.basis_verified = false;
  }
  return res;
}

}  // namespace qstir
