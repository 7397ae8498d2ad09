#include "qstir/poset.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qstir {

std::string GradedPoset::label(int i) const {
  if (kind == Kind::pi) return word(i).str();
  return placement(i).str();
}

bool GradedPoset::has_cover(int lower, int upper) const {
  const auto& ups = upper_covers[lower];
  return std::find(ups.begin(), ups.end(), upper) != ups.end();
}

std::optional<int> GradedPoset::find(const std::vector<int>& key) const {
  auto it = index.find(key);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

std::vector<int> GradedPoset::rank_layer(int r) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (rank[i] == r) out.push_back(static_cast<int>(i));
  return out;
}

BiPoly GradedPoset::rank_genfn() const {
  BiPoly p;
  for (int r : rank) p.add_term(r, 0, 1);
  return p;
}

std::vector<int> GradedPoset::key_of(const RGWord& w) { return w.letters(); }

std::vector<int> GradedPoset::key_of(const RookPlacement& t) {
  std::vector<int> key;
  key.reserve(2 * t.rooks().size());
  for (const Square& s : t.rooks()) {
    key.push_back(s.col);
    key.push_back(s.row);
  }
  return key;
}

namespace {

void finish_covers(GradedPoset& p) {
  p.upper_covers.assign(p.size(), {});
  p.lower_covers.assign(p.size(), {});
  for (auto [lo, hi] : p.covers) {
    if (p.rank[hi] != p.rank[lo] + 1)
      throw std::logic_error("poset: cover does not raise rank by one");
    p.upper_covers[lo].push_back(hi);
    p.lower_covers[hi].push_back(lo);
  }
  p.top_rank = 0;
  for (int r : p.rank) p.top_rank = std::max(p.top_rank, r);
}

}  // namespace

GradedPoset build_pi(int n, int k, std::size_t max_elements) {
  GradedPoset p;
  p.kind = GradedPoset::Kind::pi;
  p.param_a = n;
  p.param_b = k;

  const auto words = enumerate_rg(n, k);
  if (words.size() > max_elements)
    throw std::length_error("build_pi: element ceiling exceeded");
  for (const RGWord& w : words) {
    p.index.emplace(GradedPoset::key_of(w), static_cast<int>(p.elements.size()));
    p.rank.push_back(stat_A(w));  // = deg wt(w)
    p.elements.emplace_back(w);
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::vector<int> letters = p.word(static_cast<int>(i)).letters();
    for (auto& x : letters) {
      ++x;
      if (auto j = p.find(letters))
        p.covers.emplace_back(static_cast<int>(i), *j);
      --x;
    }
  }
  finish_covers(p);
  return p;
}

GradedPoset build_gamma(int m, int n, std::size_t max_elements) {
  GradedPoset p;
  p.kind = GradedPoset::Kind::gamma;
  p.param_a = m;
  p.param_b = n;

  const auto placements = enumerate_rooks(m, n);
  if (placements.size() > max_elements)
    throw std::length_error("build_gamma: element ceiling exceeded");
  for (const RookPlacement& t : placements) {
    p.index.emplace(GradedPoset::key_of(t), static_cast<int>(p.elements.size()));
    p.rank.push_back(below(t));
    p.elements.emplace_back(t);
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    const RookPlacement& t = p.placement(static_cast<int>(i));
    for (std::size_t r = 0; r < t.rooks().size(); ++r) {
      // West and north moves, staying on the board with distinct columns.
      for (const Square moved : {Square{t.rooks()[r].row, t.rooks()[r].col - 1},
                                 Square{t.rooks()[r].row - 1, t.rooks()[r].col}}) {
        if (!square_on_board(m, moved)) continue;
        std::vector<Square> rooks = t.rooks();
        rooks[r] = moved;
        bool clash = false;
        for (std::size_t s = 0; s < rooks.size(); ++s)
          if (s != r && rooks[s].col == moved.col) clash = true;
        if (clash) continue;
        RookPlacement next(m, std::move(rooks));
        if (auto j = p.find(GradedPoset::key_of(next)))
          p.covers.emplace_back(static_cast<int>(i), *j);
      }
    }
  }
  finish_covers(p);
  return p;
}

namespace {

Matching assemble(const GradedPoset& poset, const std::vector<int>& partner) {
  Matching m;
  m.partner = partner;
  for (std::size_t i = 0; i < poset.size(); ++i) {
    const int j = partner[i];
    if (j < 0) {
      m.unmatched.push_back(static_cast<int>(i));
    } else if (poset.rank[i] < poset.rank[j]) {
      m.pairs.emplace_back(static_cast<int>(i), j);
    }
  }
  return m;
}

}  // namespace

Matching match_pi(const GradedPoset& poset) {
  if (poset.kind != GradedPoset::Kind::pi)
    throw std::invalid_argument("match_pi: poset was not built by build_pi");
  std::vector<int> partner(poset.size(), -1);
  for (std::size_t i = 0; i < poset.size(); ++i) {
    const RGWord& w = poset.word(static_cast<int>(i));
    for (int pos = 2; pos <= w.size(); ++pos) {
      const int prev = w.letter(pos - 1);
      const int cur = w.letter(pos);
      const bool trigger =
          prev > cur || (prev == cur && prev % 2 == 0 && cur % 2 == 0);
      if (!trigger) continue;
      std::vector<int> letters = w.letters();
      letters[pos - 1] += cur % 2 == 0 ? -1 : +1;
      auto j = poset.find(letters);
      if (!j)
        throw std::logic_error("match_pi: matched word missing from poset");
      partner[i] = *j;
      break;
    }
  }
  return assemble(poset, partner);
}

Matching match_gamma(const GradedPoset& poset) {
  if (poset.kind != GradedPoset::Kind::gamma)
    throw std::invalid_argument("match_gamma: poset was not built by build_gamma");
  const int m = poset.param_a;
  std::vector<int> partner(poset.size(), -1);
  for (std::size_t i = 0; i < poset.size(); ++i) {
    const RookPlacement& t = poset.placement(static_cast<int>(i));
    for (std::size_t r = 0; r < t.rooks().size(); ++r) {
      const Square s = t.rooks()[r];
      const bool shaded = square_shaded(m, s);
      if (shaded && s.row == 1) continue;  // keep scanning left to right
      std::vector<Square> rooks = t.rooks();
      rooks[r].row += shaded ? -1 : +1;  // up when shaded, down otherwise
      auto j = poset.find(GradedPoset::key_of(RookPlacement(m, std::move(rooks))));
      if (!j)
        throw std::logic_error("match_gamma: matched placement missing");
      partner[i] = *j;
      break;
    }
  }
  return assemble(poset, partner);
}

std::vector<std::string> validate_matching(const GradedPoset& poset,
                                           const Matching& m) {
  std::vector<std::string> issues;
  if (m.partner.size() != poset.size()) {
    issues.push_back("partner array size mismatch");
    return issues;
  }
  std::size_t matched = 0;
  for (std::size_t i = 0; i < poset.size(); ++i) {
    const int j = m.partner[i];
    if (j < 0) continue;
    ++matched;
    if (j >= static_cast<int>(poset.size()) ||
        m.partner[j] != static_cast<int>(i)) {
      issues.push_back("element " + poset.label(static_cast<int>(i)) +
                       ": partner link not mutual");
      continue;
    }
    const int lo = poset.rank[i] < poset.rank[j] ? static_cast<int>(i) : j;
    const int hi = lo == j ? static_cast<int>(i) : j;
    if (!poset.has_cover(lo, hi))
      issues.push_back("pair (" + poset.label(lo) + ", " + poset.label(hi) +
                       ") is not a cover edge");
  }
  if (m.pairs.size() * 2 != matched)
    issues.push_back("pair list inconsistent with partner array");
  if (m.unmatched.size() + matched != poset.size())
    issues.push_back("pairs and unmatched do not partition the elements");
  for (int u : m.unmatched)
    if (m.partner[u] != -1) issues.push_back("unmatched element has a partner");
  return issues;
}

AcyclicityResult check_acyclic_digraph(
    std::size_t num_elements, const std::vector<std::pair<int, int>>& covers,
    const std::vector<std::pair<int, int>>& matched_pairs) {
  std::set<std::pair<int, int>> up(matched_pairs.begin(), matched_pairs.end());
  std::vector<std::vector<int>> adj(num_elements);
  for (auto [lo, hi] : covers) {
    if (up.count({lo, hi}))
      adj[lo].push_back(hi);  // matched: oriented upward
    else
      adj[hi].push_back(lo);  // unmatched: oriented downward
  }

  // Iterative three-color DFS; a back edge yields the witness cycle.
  enum : char { kWhite, kGray, kBlack };
  std::vector<char> color(num_elements, kWhite);
  std::vector<int> parent(num_elements, -1);
  AcyclicityResult res;
  for (std::size_t root = 0; root < num_elements; ++root) {
    if (color[root] != kWhite) continue;
    std::vector<std::pair<int, std::size_t>> stack{{static_cast<int>(root), 0}};
    color[root] = kGray;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < adj[v].size()) {
        const int w = adj[v][next++];
        if (color[w] == kGray) {
          res.acyclic = false;
          res.cycle.push_back(w);
          for (int x = v; x != w; x = parent[x]) res.cycle.push_back(x);
          std::reverse(res.cycle.begin(), res.cycle.end());
          return res;
        }
        if (color[w] == kWhite) {
          color[w] = kGray;
          parent[w] = v;
          stack.emplace_back(w, 0);
        }
      } else {
        color[v] = kBlack;
        stack.pop_back();
      }
    }
  }
  return res;
}

AcyclicityResult check_acyclic(const GradedPoset& poset, const Matching& m) {
  return check_acyclic_digraph(poset.size(), poset.covers, m.pairs);
}

BiPoly unmatched_genfn(const GradedPoset& poset, const Matching& m) {
  BiPoly p;
  for (int u : m.unmatched) p.add_term(poset.rank[u], 0, 1);
  return p;
}

Int fibonacci_unmatched_total(int n, std::size_t max_elements) {
  if (n < 1) throw std::invalid_argument("fibonacci_unmatched_total: n < 1");
  Int total = 0;
  for (int k = 1; k <= n; ++k) {
    const GradedPoset poset = build_pi(n, k, max_elements);
    total += static_cast<int>(match_pi(poset).unmatched.size());
  }
  return total;
}

namespace {

// Common interval construction: member(S) for every subset S of the
// increment set, gray-code independent, plain subset-bit order.
template <typename MakeMember>
BooleanInterval make_interval(const GradedPoset& poset, int base_id, int dim,
                              MakeMember make_member) {
  BooleanInterval iv;
  iv.base = base_id;
  iv.dim = dim;
  iv.members.reserve(std::size_t(1) << dim);
  for (unsigned mask = 0; mask < (1u << dim); ++mask) {
    auto key = make_member(mask);
    auto id = poset.find(key);
    if (!id)
      throw std::logic_error("decompose: interval member missing from poset");
    iv.members.push_back(*id);
  }
  iv.top = iv.members.back();
  return iv;
}

}  // namespace

BooleanDecomposition decompose_pi(const GradedPoset& poset) {
  if (poset.kind != GradedPoset::Kind::pi)
    throw std::invalid_argument("decompose_pi: poset was not built by build_pi");
  BooleanDecomposition d;
  for (std::size_t i = 0; i < poset.size(); ++i) {
    const RGWord& w = poset.word(static_cast<int>(i));
    if (!is_allowable(w)) continue;
    std::vector<int> inv;  // positions with a larger letter to the left
    for (int pos = 2; pos <= w.size(); ++pos)
      if (w.prefix_max(pos - 1) > w.letter(pos)) inv.push_back(pos);
    d.intervals.push_back(make_interval(
        poset, static_cast<int>(i), static_cast<int>(inv.size()),
        [&](unsigned mask) {
          std::vector<int> letters = w.letters();
          for (std::size_t b = 0; b < inv.size(); ++b)
            if (mask & (1u << b)) ++letters[inv[b] - 1];
          return letters;
        }));
  }
  return d;
}

BooleanDecomposition decompose_gamma(const GradedPoset& poset) {
  if (poset.kind != GradedPoset::Kind::gamma)
    throw std::invalid_argument(
        "decompose_gamma: poset was not built by build_gamma");
  const int m = poset.param_a;
  BooleanDecomposition d;
  for (std::size_t i = 0; i < poset.size(); ++i) {
    const RookPlacement& t = poset.placement(static_cast<int>(i));
    if (!is_allowable(t)) continue;
    std::vector<std::size_t> movable;  // rooks outside the first row
    for (std::size_t r = 0; r < t.rooks().size(); ++r)
      if (t.rooks()[r].row > 1) movable.push_back(r);
    d.intervals.push_back(make_interval(
        poset, static_cast<int>(i), static_cast<int>(movable.size()),
        [&](unsigned mask) {
          std::vector<Square> rooks = t.rooks();
          for (std::size_t b = 0; b < movable.size(); ++b)
            if (mask & (1u << b)) --rooks[movable[b]].row;
          return GradedPoset::key_of(RookPlacement(m, std::move(rooks)));
        }));
  }
  return d;
}

std::vector<std::string> validate_decomposition(const GradedPoset& poset,
                                                const BooleanDecomposition& d) {
  std::vector<std::string> issues;
  std::vector<int> owner(poset.size(), -1);
  for (std::size_t iv_id = 0; iv_id < d.intervals.size(); ++iv_id) {
    const BooleanInterval& iv = d.intervals[iv_id];
    const bool base_allowable =
        poset.kind == GradedPoset::Kind::pi
            ? is_allowable(poset.word(iv.base))
            : is_allowable(poset.placement(iv.base));
    if (!base_allowable)
      issues.push_back("interval base " + poset.label(iv.base) +
                       " is not allowable");
    if (iv.members.size() != (std::size_t(1) << iv.dim)) {
      issues.push_back("interval at " + poset.label(iv.base) +
                       ": wrong member count");
      continue;
    }
    if (iv.members.front() != iv.base || iv.members.back() != iv.top)
      issues.push_back("interval at " + poset.label(iv.base) +
                       ": base/top not at subset extremes");
    for (unsigned mask = 0; mask < iv.members.size(); ++mask) {
      const int x = iv.members[mask];
      if (owner[x] != -1)
        issues.push_back("element " + poset.label(x) +
                         " appears in two intervals");
      owner[x] = static_cast<int>(iv_id);
      if (poset.rank[x] != poset.rank[iv.base] + std::popcount(mask))
        issues.push_back("element " + poset.label(x) +
                         ": rank inconsistent with its subset");
      // Boolean covers: adding any one unused increment is a poset cover.
      for (unsigned b = 0; b < static_cast<unsigned>(iv.dim); ++b) {
        if (mask & (1u << b)) continue;
        if (!poset.has_cover(x, iv.members[mask | (1u << b)]))
          issues.push_back("interval at " + poset.label(iv.base) +
                           ": missing Boolean cover");
      }
      // Only the base may be allowable.
      if (mask != 0) {
        const bool member_allowable =
            poset.kind == GradedPoset::Kind::pi
                ? is_allowable(poset.word(x))
                : is_allowable(poset.placement(x));
        if (member_allowable)
          issues.push_back("non-base element " + poset.label(x) +
                           " is allowable");
      }
    }
  }
  for (std::size_t x = 0; x < poset.size(); ++x)
    if (owner[x] == -1)
      issues.push_back("element " + poset.label(static_cast<int>(x)) +
                       " not covered by any interval");
  return issues;
}

BiPoly decomposition_genfn(const GradedPoset& poset,
                           const BooleanDecomposition& d) {
  BiPoly p;
  for (const BooleanInterval& iv : d.intervals)
    p.add_term(poset.rank[iv.base], iv.dim, 1);
  return p;
}

void export_dot(std::ostream& os, const GradedPoset& poset,
                const Matching* matching,
                const BooleanDecomposition* decomposition) {
  os << "digraph poset {\n"
     << "  rankdir=BT;\n"
     << "  node [shape=plaintext];\n";
  auto node = [](int i) { return "e" + std::to_string(i); };
  if (decomposition) {
    for (std::size_t c = 0; c < decomposition->intervals.size(); ++c) {
      os << "  subgraph cluster_" << c << " {\n    style=dotted;\n";
      for (int x : decomposition->intervals[c].members)
        os << "    " << node(x) << " [label=\"" << poset.label(x) << "\"];\n";
      os << "  }\n";
    }
  } else {
    for (std::size_t i = 0; i < poset.size(); ++i)
      os << "  " << node(static_cast<int>(i)) << " [label=\""
         << poset.label(static_cast<int>(i)) << "\"];\n";
  }
  // Same-rank alignment keeps the drawing layered like a Hasse diagram.
  for (int r = 0; r <= poset.top_rank; ++r) {
    os << "  { rank=same;";
    for (int x : poset.rank_layer(r)) os << " " << node(x) << ";";
    os << " }\n";
  }
  std::set<std::pair<int, int>> matched;
  if (matching)
    matched.insert(matching->pairs.begin(), matching->pairs.end());
  for (auto [lo, hi] : poset.covers) {
    if (matched.count({lo, hi}))
      os << "  " << node(lo) << " -> " << node(hi)
         << " [color=red, penwidth=2];\n";
    else
      os << "  " << node(lo) << " -> " << node(hi) << " [dir=none];\n";
  }
  os << "}\n";
}

}  // namespace qstir
