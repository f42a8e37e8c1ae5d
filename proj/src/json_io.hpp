#pragma once

#include "classifier.hpp"
#include "coverings.hpp"
#include "exact_angles.hpp"
#include "group_core.hpp"
#include "orbits.hpp"
#include "witnesses.hpp"

#include <json.hpp>

#include <optional>
#include <set>
#include <string>

namespace rotconj {

using json = nlohmann::json;

struct AngleParseOptions {
    /// Route plain decimal numbers through rational recognition instead of
    /// reading them as exact decimals.
    bool numeric = false;
};

json to_json(const AngleValue& a);
json to_json(const RotationVector& rho);
json to_json(const IrrationalBasis& basis);
json to_json(const GroupElement& g);
json to_json(const Verdict& v);
json to_json(const Witness& w);
json to_json(const OrbitClosure& c);
json to_json(const LatticeSolution& s);

AngleValue angle_from_json(const json& j, const AngleParseOptions& opts = {});
/// "1/3", "0.3", "1/4 + 2*alpha - beta/3".
AngleValue angle_from_text(const std::string& text, const AngleParseOptions& opts = {});

/// Accepts a JSON array of angles, a single angle, a comma-separated list of
/// angle objects or expressions, or an object carrying a "rho" array.
std::vector<AngleValue> angles_from_text(const std::string& text, const AngleParseOptions& opts = {});

IrrationalBasis basis_from_json(const json& j);

/// Parses a GroupElement; `expected` is used when the JSON carries no "group".
GroupElement element_from_json(const json& j, std::optional<GroupId> expected = std::nullopt);
GroupElement element_from_text(const std::string& text, std::optional<GroupId> expected = std::nullopt);

json parse_json_text(const std::string& text, const std::string& what);

void collect_symbols(const AngleValue& a, std::set<std::string>& out);

}  // namespace rotconj
