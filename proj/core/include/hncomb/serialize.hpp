#pragma once

#include "hncomb/coneorder.hpp"
#include "hncomb/posettop.hpp"
#include "hncomb/rootdata.hpp"
#include "hncomb/strata.hpp"
#include "hncomb/vanishing.hpp"

#include "json.hpp"

namespace hncomb {

using OrderedJson = nlohmann::ordered_json;

// Conventions shared by every JSON surface: rationals are strings "p/q" in
// lowest terms, coweights are flat arrays (pairing coordinates then central
// coordinates), and Dynkin vertex indices are 1-based.

OrderedJson rat_to_json(const Rat& value);
Rat rat_from_json(const nlohmann::json& value);

OrderedJson coweight_to_json(const Coweight& cw);
Coweight coweight_from_json(const nlohmann::json& value, const GroupData& group);

OrderedJson subset_to_json(const std::vector<int>& subset);
std::vector<int> subset_from_json(const nlohmann::json& value, int rank);

OrderedJson certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const nlohmann::json& value);

OrderedJson stratum_to_json(const StratumIndex& index);

OrderedJson admissibility_report_to_json(const AdmissibilityReport& report);
OrderedJson cover_report_to_json(const CoverReport& report);

StrangenessTable strangeness_table_from_json(const nlohmann::json& value, const GroupData& group);

FinitePoset poset_from_json(const nlohmann::json& value);

}  // namespace hncomb
