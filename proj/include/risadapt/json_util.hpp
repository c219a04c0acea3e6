#pragma once

#include <string>

#include <json.hpp>

namespace risadapt {

using Json = nlohmann::ordered_json;

// Serializes with floating-point numbers rendered via "%.17g" so every double
// round-trips exactly and files always carry >= 17 significant digits.
// indent < 0 emits compact single-line output.
std::string dump_json(const Json& j, int indent = 2);

// FNV-1a 64-bit over a string, hex-encoded. Used for config hashes.
std::string fnv1a_hex(std::string_view data);

}  // namespace risadapt
