/*
Copyright (c) 2026 fockcheck contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once

#include <json.hpp>

#include "fockcheck/states.hpp"

namespace fockcheck {

// Term lists with factor descriptors; doubles round-trip exactly.
nlohmann::json to_json(const Factor& f);
nlohmann::json to_json(const SectorFunction& f);
nlohmann::json to_json(const FockState& s);

Factor factor_from_json(const nlohmann::json& j);
SectorFunction sector_from_json(const nlohmann::json& j);
FockState state_from_json(const nlohmann::json& j);

}  // namespace fockcheck
