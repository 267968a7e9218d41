#pragma once

// JSON / CSV forms of the library's results. Rationals are always written
// as "num/den" strings so no precision is lost in JSON numbers.

#include <string>
#include <vector>

#include <json.hpp>

#include "descartes/realization.hpp"
#include "descartes/survey.hpp"
#include "descartes/vanishing.hpp"

namespace descartes::io {

using nlohmann::json;

json to_json(const RealizationWitness& w);
/// Restores a witness from to_json output; throws DomainError on schema errors.
RealizationWitness witness_from_json(const json& j);

json to_json(const UniversalityCertificate& c);

json to_json(const RealizabilityAtlas& atlas);
/// Restores an atlas from to_json output.
RealizabilityAtlas atlas_from_json(const json& j);
/// One line per pattern: pattern,sigma,c_tilde,orders,witnessed
std::string atlas_summary_csv(const RealizabilityAtlas& atlas);

json to_json(const UniversalityReport& r);

json to_json(const LocusRow& row);
std::string loci_csv(const std::vector<LocusRow>& rows);

json to_json(const std::vector<XkCouple>& couples, std::size_t k);

}  // namespace descartes::io
