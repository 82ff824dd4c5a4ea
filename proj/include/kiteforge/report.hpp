#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

namespace kiteforge {

using Json = nlohmann::ordered_json;

/// Outcome of a sampled or exhaustive check, serialised as
/// {check, samples, seed, status, witness?}.
struct CheckReport {
  std::string check;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  bool pass = true;
  std::optional<Json> witness;

  Json to_json() const {
    Json j;
    j["check"] = check;
    j["samples"] = samples;
    j["seed"] = seed;
    j["status"] = pass ? "pass" : "fail";
    if (witness) j["witness"] = *witness;
    return j;
  }

  std::string dump() const { return to_json().dump(2); }
};

inline CheckReport passed(std::string check, std::uint64_t samples, std::uint64_t seed) {
  return {std::move(check), samples, seed, true, std::nullopt};
}

inline CheckReport failed(std::string check, std::uint64_t samples, std::uint64_t seed, Json witness) {
  return {std::move(check), samples, seed, false, std::move(witness)};
}

}  // namespace kiteforge
