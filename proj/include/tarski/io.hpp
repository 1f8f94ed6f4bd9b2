#pragma once

#include "json.hpp"
#include <string>

#include "tarski/filtration.hpp"
#include "tarski/paradox.hpp"
#include "tarski/schreier.hpp"
#include "tarski/stallings.hpp"
#include "tarski/towers.hpp"

namespace tarski {

using nlohmann::json;

json to_json(const CoreGraph& c);
/// Includes alphabet, provenance, radius, and per vertex rep/dist/frontier.
json to_json(const Window& w);
Window window_from_json(const json& j);

json to_json(const TranslatingSets& ts, const Alphabet& alphabet);
TranslatingSets sets_from_json(const json& j, const Alphabet& alphabet);

/// Certificate envelope {kind, provenance, data}.
json certificate(const std::string& kind, const Window& w, json data);

json decomposition_data(const Decomposition& d, const DecompositionReport& r, const Alphabet& alphabet);
Decomposition decomposition_from_json(const json& data, const Alphabet& alphabet);
json hall_data(const TranslatingSets& ts, const HallResult& r, const Alphabet& alphabet);
json doubling_data(const DoublingCert& c);
json lemma6_data(const Lemma6Certificate& c);

json to_json(const MinLengthResult& r, const Alphabet& alphabet);
json to_json(const FindMResult& r, const Alphabet& alphabet);
json to_json(const LowerReport& r, const Alphabet& alphabet);
json to_json(const Tower5Report& r);

}  // namespace tarski
