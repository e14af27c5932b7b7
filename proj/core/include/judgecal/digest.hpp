#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

namespace judgecal {

/// Hex-encoded SHA-256 of the input bytes.
std::string sha256_hex(std::string_view data);

/// Stable digest for a provider request. The payload is serialized in
/// canonical form (nlohmann keeps object keys sorted), so permuting key
/// order in the source request never changes the key.
std::string request_key(std::string_view kind, std::string_view model_id,
                        const nlohmann::json& request);

}  // namespace judgecal
