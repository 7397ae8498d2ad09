#pragma once

#include <nlohmann/json_fwd.hpp>

#include "qstir/homology.hpp"
#include "qstir/orthogonal.hpp"
#include "qstir/poset.hpp"
#include "qstir/stirling.hpp"
#include "qstir/tables.hpp"

// ADL hooks for nlohmann::json.  BiPoly serializes as
// {"terms":[{"q":Dq,"t":Dt,"c":"C"},...]} with terms in canonical order and
// coefficients as decimal strings; placements as {"m":M,"rooks":[[i,j],...]}.

namespace qstir {

void to_json(nlohmann::json& j, const BiPoly& p);
void to_json(nlohmann::json& j, const RGWord& w);
void to_json(nlohmann::json& j, const SetPartition& p);
void to_json(nlohmann::json& j, const RookPlacement& t);
void to_json(nlohmann::json& j, const Matching& m);
void to_json(nlohmann::json& j, const BooleanDecomposition& d);
void to_json(nlohmann::json& j, const Check& c);
void to_json(nlohmann::json& j, const Report& r);
void to_json(nlohmann::json& j, const RenderedTable& t);

nlohmann::json poset_to_json(const GradedPoset& poset,
                             const Matching* matching = nullptr,
                             const BooleanDecomposition* decomposition = nullptr);

nlohmann::json homology_to_json(const ChainComplex& complex,
                                const HomologyResult& result,
                                bool dump_matrices = false);

}  // namespace qstir
