#include "qstir/json.hpp"

#include <nlohmann/json.hpp>

namespace qstir {

using nlohmann::json;

void to_json(json& j, const BiPoly& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms())
    terms.push_back({{"q", m.deg_q}, {"t", m.deg_t}, {"c", c.str()}});
  j = json{{"terms", std::move(terms)}};
}

void to_json(json& j, const RGWord& w) { j = w.str(); }

void to_json(json& j, const SetPartition& p) { j = p.str(); }

void to_json(json& j, const RookPlacement& t) {
  json rooks = json::array();
  for (const Square& s : t.rooks()) rooks.push_back({s.row, s.col});
  j = json{{"m", t.board_length()}, {"rooks", std::move(rooks)}};
}

void to_json(json& j, const Matching& m) {
  j = json{{"pairs", m.pairs}, {"unmatched", m.unmatched}};
}

void to_json(json& j, const BooleanDecomposition& d) {
  json intervals = json::array();
  for (const BooleanInterval& iv : d.intervals)
    intervals.push_back({{"base", iv.base},
                         {"top", iv.top},
                         {"dim", iv.dim},
                         {"members", iv.members}});
  j = json{{"intervals", std::move(intervals)}};
}

void to_json(json& j, const Check& c) {
  j = json{{"name", c.name}, {"pass", c.pass}};
  if (!c.detail.empty()) j["detail"] = c.detail;
}

void to_json(json& j, const Report& r) {
  j = json{{"title", r.title}, {"pass", r.all_pass()}, {"checks", r.checks}};
}

void to_json(json& j, const RenderedTable& t) {
  j = json{{"title", t.title}, {"header", t.header}, {"rows", t.rows}};
}

json poset_to_json(const GradedPoset& poset, const Matching* matching,
                   const BooleanDecomposition* decomposition) {
  json elements = json::array();
  for (std::size_t i = 0; i < poset.size(); ++i)
    elements.push_back({{"id", i},
                        {"rank", poset.rank[i]},
                        {"payload", poset.label(static_cast<int>(i))}});
  json j{{"kind", poset.kind == GradedPoset::Kind::pi ? "pi" : "gamma"},
         {"params", {poset.param_a, poset.param_b}},
         {"elements", std::move(elements)},
         {"covers", poset.covers},
         {"rank_genfn", poset.rank_genfn()}};
  if (matching) j["matching"] = *matching;
  if (decomposition) j["decomposition"] = *decomposition;
  return j;
}

json homology_to_json(const ChainComplex& complex, const HomologyResult& result,
                      bool dump_matrices) {
  const GradedPoset& poset = *complex.poset;
  json ranks = json::array();
  for (std::size_t r = 0; r < result.dims.size(); ++r) {
    json basis = json::array();
    for (int x : result.basis[r]) basis.push_back(poset.label(x));
    json torsion = json::array();
    for (const Int& f : result.torsion[r]) torsion.push_back(f.str());
    ranks.push_back({{"rank", r},
                     {"chain_dim", complex.layers[r].size()},
                     {"dim", result.dims[r]},
                     {"torsion", std::move(torsion)},
                     {"basis", std::move(basis)}});
  }
  json j{{"kind", poset.kind == GradedPoset::Kind::pi ? "pi" : "gamma"},
         {"params", {poset.param_a, poset.param_b}},
         {"ranks", std::move(ranks)},
         {"basis_verified", result.basis_verified}};
  if (dump_matrices) {
    json mats = json::array();
    for (std::size_t r = 1; r < complex.boundary.size(); ++r) {
      json entries = json::array();
      for (const auto& [row, col, value] : complex.boundary[r].triples())
        entries.push_back({row, col, value.str()});
      mats.push_back({{"rank", r},
                      {"rows", complex.boundary[r].rows()},
                      {"cols", complex.boundary[r].cols()},
                      {"entries", std::move(entries)}});
    }
    j["matrices"] = std::move(mats);
  }
  return j;
}

}  // namespace qstir
