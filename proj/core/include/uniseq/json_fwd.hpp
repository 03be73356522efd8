#pragma once

#include <nlohmann/json_fwd.hpp>

namespace uniseq {

// Reports keep keys in insertion order so they read top-down.
using Json = nlohmann::ordered_json;

} // namespace uniseq
