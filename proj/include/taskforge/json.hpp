#pragma once

#include <json.hpp>

namespace forge {

// Ordered JSON keeps field order stable so every serialized record and
// manifest is byte-deterministic across runs and platforms.
using Json = nlohmann::ordered_json;

}  // namespace forge
