#pragma once

#include "lps/lattice.hpp"
#include "lps/polytope.hpp"
#include "lps/statistics.hpp"
#include "lps/verifier.hpp"

#include <json.hpp>

#include <string>

namespace lps::io {

using Json = nlohmann::ordered_json;

/// {"dim": d, "vertices": [["p/q" | "k" | k, ...], ...]}. Throws InputError.
Polytope polytopeFromJson(const Json& j);
Json polytopeToJson(const Polytope& p);

/// {"dim": d, "generators": [[ints], ...]}. Throws InputError.
ZonotopeSpec zonotopeFromJson(const Json& j);
Json zonotopeToJson(const ZonotopeSpec& z);

/// Reads and parses a JSON file. Throws InputError.
Json readJsonFile(const std::string& path);

Json rationalVector(const RVector& v);

/// `count,probability` rows with probabilities as exact "p/q" strings
/// (relative frequencies for empirical laws).
std::string distributionCsv(const CountDistribution& d);
Json distributionJson(const CountDistribution& d);
Json comparisonJson(const ComparisonReport& r);
Json momentsJson(const MomentReport& m);
Json verificationJson(const VerificationReport& r);
Json reeveAuditJson(const ReeveAudit& a);

} // namespace lps::io
