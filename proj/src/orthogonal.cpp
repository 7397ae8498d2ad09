#include "qstir/orthogonal.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace qstir {

namespace {

BiPoly signed_unit(int exponent) {
  return BiPoly(exponent % 2 == 0 ? 1 : -1);
}

}  // namespace

BiPoly weight(const PairC& p, int n) {
  const int k = p.w.size();
  return signed_unit(n - k) * wt_rook(p.T) * wt_prime(p.w);
}

BiPoly weight(const PairD& p, int m) {
  const int k = p.w.max_letter();
  return signed_unit(k - m) * wt_prime(p.w) * wt_rook(p.T);
}

void validate_member(const PairC& p, int n, int m) {
  const int k = p.w.size();
  if (k < m || k > n) throw std::invalid_argument("PairC: level out of range");
  if (p.w.max_letter() != m)
    throw std::invalid_argument("PairC: word not in A(k,m)");
  if (!is_allowable(p.w))
    throw std::invalid_argument("PairC: word not allowable");
  if (p.T.board_length() != n)
    throw std::invalid_argument("PairC: board length is not n");
  if (p.T.num_rooks() != n - k)
    throw std::invalid_argument("PairC: rook count is not n-k");
  if (!is_allowable(p.T))
    throw std::invalid_argument("PairC: placement not allowable");
}

void validate_member(const PairD& p, int n, int m) {
  const int k = p.w.max_letter();
  if (k < m || k > n) throw std::invalid_argument("PairD: level out of range");
  if (p.w.size() != n)
    throw std::invalid_argument("PairD: word length is not n");
  if (!is_allowable(p.w))
    throw std::invalid_argument("PairD: word not allowable");
  if (p.T.board_length() != k)
    throw std::invalid_argument("PairD: board length is not k");
  if (p.T.num_rooks() != k - m)
    throw std::invalid_argument("PairD: rook count is not k-m");
  if (!is_allowable(p.T))
    throw std::invalid_argument("PairD: placement not allowable");
}

PairC involution_phi(const PairC& p, int n, int m) {
  if (n <= m)
    throw std::invalid_argument("involution_phi: requires n > m");
  validate_member(p, n, m);
  const int k = p.w.size();

  // Columns are labeled right to left: label = n - col.
  std::optional<int> l1;
  int rb = 0;
  if (!p.T.rooks().empty()) {
    const Square rightmost = p.T.rooks().back();
    l1 = n - rightmost.col;
    rb = squares_below(n, rightmost);
  }

  // First repeating letter, reading left to right; l2 is the letter just
  // before it (always the position index minus one, since the prefix before
  // the first repeat is forced to be 12...).
  std::optional<int> l2;
  int rep_pos = 0, rep_val = 0;
  {
    std::vector<char> seen(m + 1, 0);
    for (int i = 1; i <= k; ++i) {
      const int x = p.w.letter(i);
      if (seen[x]) {
        rep_pos = i;
        rep_val = x;
        l2 = p.w.letter(i - 1);
        break;
      }
      seen[x] = 1;
    }
  }

  PairC out = [&] {
    // Missing values act as +infinity on both sides.
    if (l1 && (!l2 || *l1 <= *l2)) {
      // Rook to letter: drop the rightmost rook, insert rb+1 after
      // position l1 of w.
      std::vector<Square> rooks(p.T.rooks().begin(), p.T.rooks().end() - 1);
      std::vector<int> letters = p.w.letters();
      if (*l1 > k)
        throw std::logic_error("involution_phi: insertion point past the word");
      letters.insert(letters.begin() + *l1, rb + 1);
      return PairC{RookPlacement(n, std::move(rooks)), RGWord(std::move(letters))};
    }
    if (!l2)
      throw std::logic_error("involution_phi: no applicable case (n = m?)");
    // Letter to rook: delete the first repeated letter, place a rook in the
    // right-to-left column l2 with rep_val - 1 squares below it.
    std::vector<int> letters = p.w.letters();
    letters.erase(letters.begin() + (rep_pos - 1));
    std::vector<Square> rooks = p.T.rooks();
    rooks.push_back({*l2 - rep_val + 1, n - *l2});
    return PairC{RookPlacement(n, std::move(rooks)), RGWord(std::move(letters))};
  }();
  validate_member(out, n, m);
  return out;
}

PairD involution_psi(const PairD& p, int n, int m) {
  if (n <= m)
    throw std::invalid_argument("involution_psi: requires n > m");
  validate_member(p, n, m);
  const int k = p.w.max_letter();

  // Last repeated letter and the maximum before it; l1 = 0 when w has no
  // repeats at all.
  int rep_pos = 0, r1 = 0, l1 = 0;
  {
    std::vector<char> seen(k + 1, 0);
    for (int i = 1; i <= n; ++i) {
      const int x = p.w.letter(i);
      if (seen[x]) rep_pos = i;
      seen[x] = 1;
    }
    if (rep_pos > 0) {
      r1 = p.w.letter(rep_pos);
      l1 = p.w.prefix_max(rep_pos - 1);
    }
  }

  // Leftmost rook: column label (right to left on the length-k board) and
  // the squares above it; l2 = 0 when T is empty.
  int l2 = 0, r2 = 0;
  if (!p.T.rooks().empty()) {
    const Square leftmost = p.T.rooks().front();
    l2 = k - leftmost.col;
    r2 = leftmost.row - 1;
  }

  PairD out = [&] {
    if (l1 > l2) {
      // Letter to rook: raise w_i to l1+1, shift the suffix up, and record
      // the old letter as a rook in column l1 of the grown board.
      std::vector<int> letters = p.w.letters();
      letters[rep_pos - 1] = l1 + 1;
      for (int i = rep_pos; i < n; ++i) ++letters[i];
      std::vector<Square> rooks;
      for (const Square& s : p.T.rooks()) rooks.push_back({s.row, s.col + 1});
      rooks.push_back({l1 - r1 + 1, (k + 1) - l1});
      return PairD{RGWord(std::move(letters)),
                   RookPlacement(k + 1, std::move(rooks))};
    }
    // Rook to letter: fold the leftmost rook into the unique entry l2+1,
    // shift the suffix down, and re-coordinatize onto a length k-1 board
    // (dropping the rook's column; the trimmed columns to its left hold no
    // rooks since l2 is the maximal label).
    int target = 0;
    for (int i = 1; i <= n; ++i) {
      if (p.w.letter(i) == l2 + 1) {
        if (target != 0)
          throw std::logic_error("involution_psi: entry l2+1 not unique");
        target = i;
      }
    }
    if (target == 0)
      throw std::logic_error("involution_psi: entry l2+1 missing (n = m?)");
    std::vector<int> letters = p.w.letters();
    letters[target - 1] = l2 - r2;
    for (int i = target; i < n; ++i) --letters[i];
    std::vector<Square> rooks;
    const int dropped_col = k - l2;
    for (const Square& s : p.T.rooks()) {
      if (s.col == dropped_col) continue;
      if (s.col < dropped_col)
        throw std::logic_error("involution_psi: rook left of the leftmost");
      rooks.push_back({s.row, s.col - 1});
    }
    return PairD{RGWord(std::move(letters)),
                 RookPlacement(k - 1, std::move(rooks))};
  }();
  validate_member(out, n, m);
  return out;
}

std::vector<PairC> build_C(int n, int m) {
  std::vector<PairC> out;
  for (int k = std::max(m, 1); k <= n; ++k) {
    const auto placements = enumerate_allowable_rooks(n, n - k);
    const auto words = enumerate_allowable(k, m);
    for (const auto& t : placements)
      for (const auto& w : words) out.push_back({t, w});
  }
  return out;
}

std::vector<PairD> build_D(int n, int m) {
  std::vector<PairD> out;
  for (int k = std::max(m, 1); k <= n; ++k) {
    const auto words = enumerate_allowable(n, k);
    const auto placements = enumerate_allowable_rooks(k, k - m);
    for (const auto& w : words)
      for (const auto& t : placements) out.push_back({w, t});
  }
  return out;
}

namespace {

std::vector<int> placement_key(const RookPlacement& t) {
  std::vector<int> key;
  key.reserve(2 * t.rooks().size());
  for (const Square& s : t.rooks()) {
    key.push_back(s.col);
    key.push_back(s.row);
  }
  return key;
}

}  // namespace

Report verify_orthogonality(int n_max) {
  Report rep;
  rep.title = "orthogonality of the (q,t)-Stirling numbers";

  const PolyTable sqt = stirling1_qt_table(n_max);
  const PolyTable Sqt = stirling2_qt_table(n_max);
  {
    std::ostringstream bad1, bad2;
    bool ok1 = true, ok2 = true;
    for (int n = 0; n <= n_max; ++n) {
      for (int m = 0; m <= n; ++m) {
        const BiPoly delta = m == n ? BiPoly(1) : BiPoly();
        BiPoly sum1, sum2;
        for (int k = m; k <= n; ++k) {
          sum1 += sqt.at(n, k) * Sqt.at(k, m);
          sum2 += Sqt.at(n, k) * sqt.at(k, m);
        }
        if (!(sum1 == delta)) {
          ok1 = false;
          bad1 << " (" << n << "," << m << ")";
        }
        if (!(sum2 == delta)) {
          ok2 = false;
          bad2 << " (" << n << "," << m << ")";
        }
      }
    }
    rep.add("sum_k s_{q,t}[n,k] S_{q,t}[k,m] = delta_{m,n}, n <= " +
                std::to_string(n_max),
            ok1, ok1 ? "" : "failing cells:" + bad1.str());
    rep.add("sum_k S_{q,t}[n,k] s_{q,t}[k,m] = delta_{m,n}, n <= " +
                std::to_string(n_max),
            ok2, ok2 ? "" : "failing cells:" + bad2.str());
  }

  const int sweep_max = std::min(n_max, 7);
  for (int n = 1; n <= sweep_max; ++n) {
    for (int m = 0; m < n; ++m) {
      // phi on C(n,m).
      {
        const auto pairs = build_C(n, m);
        std::map<std::pair<std::vector<int>, std::vector<int>>, int> ids;
        for (std::size_t i = 0; i < pairs.size(); ++i)
          ids[{placement_key(pairs[i].T), pairs[i].w.letters()}] =
              static_cast<int>(i);
        bool ok = true;
        std::string why;
        BiPoly total;
        for (const PairC& p : pairs) {
          total += weight(p, n);
          try {
            const PairC image = involution_phi(p, n, m);
            if (std::abs(image.w.size() - p.w.size()) != 1) {
              ok = false;
              why = "level shift is not 1";
            }
            if (!(weight(image, n) == -weight(p, n))) {
              ok = false;
              why = "weight not negated";
            }
            auto it = ids.find({placement_key(image.T), image.w.letters()});
            if (it == ids.end()) {
              ok = false;
              why = "image outside C";
            }
            const PairC back = involution_phi(image, n, m);
            if (!(back.w == p.w) || !(back.T == p.T)) {
              ok = false;
              why = "phi o phi != id";
            }
          } catch (const std::exception& e) {
            ok = false;
            why = e.what();
          }
          if (!ok) {
            why += " at (T=" + p.T.str() + ", w=" + p.w.str() + ")";
            break;
          }
        }
        if (!total.is_zero()) {
          ok = false;
          why = "total signed weight " + total.str();
        }
        if (ok)
          why = std::to_string(pairs.size() / 2) + " orbits, all of size 2";
        rep.add("phi involution on C(" + std::to_string(n) + "," +
                    std::to_string(m) + "), " + std::to_string(pairs.size()) +
                    " pairs",
                ok, why);
      }
      // psi on D(n,m).
      {
        const auto pairs = build_D(n, m);
        bool ok = true;
        std::string why;
        BiPoly total;
        for (const PairD& p : pairs) {
          total += weight(p, m);
          try {
            const PairD image = involution_psi(p, n, m);
            if (std::abs(image.w.max_letter() - p.w.max_letter()) != 1) {
              ok = false;
              why = "level shift is not 1";
            }
            if (!(weight(image, m) == -weight(p, m))) {
              ok = false;
              why = "weight not negated";
            }
            const PairD back = involution_psi(image, n, m);
            if (!(back.w == p.w) || !(back.T == p.T)) {
              ok = false;
              why = "psi o psi != id";
            }
          } catch (const std::exception& e) {
            ok = false;
            why = e.what();
          }
          if (!ok) {
            why += " at (w=" + p.w.str() + ", T=" + p.T.str() + ")";
            break;
          }
        }
        if (!total.is_zero()) {
          ok = false;
          why = "total signed weight " + total.str();
        }
        if (ok)
          why = std::to_string(pairs.size() / 2) + " orbits, all of size 2";
        rep.add("psi involution on D(" + std::to_string(n) + "," +
                    std::to_string(m) + "), " + std::to_string(pairs.size()) +
                    " pairs",
                ok, why);
      }
    }
  }
  return rep;
}

}  // namespace qstir
