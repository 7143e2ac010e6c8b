#pragma once

// Canonical JSON forms.  Weights are integer arrays in fundamental-weight
// coordinates; characters are arrays of {weight, mult} sorted by weight;
// words serialize as comma-separated 1-based indices.

#include "json.hpp"

#include "liecoh/twisted.hpp"

namespace liecoh {

using json = nlohmann::json;

json weight_json(const Weight& w);
json character_json(const FormalCharacter& f);
FormalCharacter character_from_json(const json& j, int rank);
json graded_json(const GradedCharacter& g);
json twisted_report_json(const TwistedReport& r);
json string_decomposition_json(const StringDecomposition& d);

std::vector<int> subset_to_1based(const std::set<int>& j);

// Canonical single-line dump used everywhere output determinism matters.
std::string dump_canonical(const json& j);

} // namespace liecoh
