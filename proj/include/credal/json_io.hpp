#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "credal/credence.hpp"
#include "credal/elementary.hpp"
#include "credal/liminal.hpp"
#include "credal/maps.hpp"
#include "credal/piecewise.hpp"

namespace credal {

using Json = nlohmann::ordered_json;

// Wire formats: rationals as "p/q" (or "p"), infinities as "-inf"/"inf",
// ambients as {"kind":"open","a":"0","b":"1"} (kind "closed", "line"), sets
// as {"ambient":{...},"intervals":[["0","1/2"],...]}.  A missing ambient
// falls back to the supplied default (the full line when unspecified).

Json ambient_to_json(const Ambient& ambient);
Ambient ambient_from_json(const Json& j);

Json set_to_json(const ElementarySet& set);
ElementarySet set_from_json(const Json& j, const std::optional<Ambient>& fallback = std::nullopt);

Json piecewise_to_json(const PiecewiseAffine& g);
PiecewiseAffine piecewise_from_json(const Json& j, const std::optional<Ambient>& fallback = std::nullopt);

Json credence_to_json(const Credence& mu);
Credence credence_from_json(const Json& j, const std::optional<Ambient>& fallback = std::nullopt);

Json map_to_json(const MonotoneAffineMap& phi);
MonotoneAffineMap map_from_json(const Json& j, const std::optional<Ambient>& fallback_domain = std::nullopt);

Json decomposition_to_json(const LiminalDecomposition& dec);

Json load_json_file(const std::string& path);
// Accepts a literal JSON object or a path to one.
Json load_json_arg(const std::string& arg);

}  // namespace credal
