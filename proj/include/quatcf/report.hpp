#pragma once

#include "quatcf/quad.hpp"

#include <json.hpp>

namespace quatcf {

using Json = nlohmann::json;

// Rationals and quaternions are written as exact strings; keys come out sorted.
Json to_json(const RatInterval& x);
Json to_json(const IdentityReport& rep);
Json to_json(const CFExpansion& exp);
Json to_json(const HeightReport& rep);
Json to_json(const QuadPoly& poly);
Json to_json(const CounterexampleTrace& tr);
Json to_json(const Order& order);

}  // namespace quatcf
