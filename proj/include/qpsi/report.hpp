// Report serialization: canonical JSON (sorted keys, shortest round-trip
// floats) and a compact human form.
#pragma once

#include <string>

#include "qpsi/harness.hpp"

namespace qpsi {

std::string to_json(const VerificationReport& rep, bool with_samples = true);
std::string to_json(const OrthogonalityCampaignReport& rep);
std::string to_json(const std::vector<DegenerationOutcome>& outcomes);

std::string to_human(const VerificationReport& rep);
std::string to_human(const OrthogonalityCampaignReport& rep);
std::string to_human(const std::vector<DegenerationOutcome>& outcomes);

}  // namespace qpsi
