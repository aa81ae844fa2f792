#pragma once

// On-disk and report JSON. Family schema:
//   {"sets": [[1,2],[2]], "trivial_lines": 0}
// Atoms are positive integers; inner arrays must be nonempty. Parsing sorts and
// deduplicates each inner array, so serializing a parsed family is canonical.

#include <string>

#include <json.hpp>

#include "eulerhall/bundles.hpp"
#include "eulerhall/dynamics.hpp"
#include "eulerhall/matching.hpp"
#include "eulerhall/obstruction.hpp"

namespace eulerhall {

using Json = nlohmann::ordered_json;

/// Throws InvalidInput naming the offending field ("sets[1][0]", ...).
BundleFamily family_from_json(const Json& j);
BundleFamily parse_family(const std::string& text);
Json family_to_json(const BundleFamily& family);

Json atoms_to_json(std::span<const Atom> atoms);
Json to_json(const MatchingResult& m);  // array of representatives or null
Json to_json(const std::optional<HallViolation>& v);

/// Combined equivalence + verdict report for a family without trivial lines.
Json analysis_to_json(const BundleFamily& family, const EquivalenceReport& eq, const Verdict& verdict);

Json to_json(const CheckOutcome& c);
Json to_json(const LabelingReport& r);

}  // namespace eulerhall
