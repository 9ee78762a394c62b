#pragma once

// Replay check of a recorded trace. Every claim in the trace is re-derived from
// the oracle's column model; the engine is consulted only to re-run the final
// lift of each leaf.

#include <cstddef>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

namespace toroidal {

struct VerifyFailure {
  std::string invariant;
  std::optional<std::size_t> round;
  std::optional<std::size_t> step;
  std::string message;

  nlohmann::json to_json() const;
};

/// Empty when every invariant holds.
std::optional<VerifyFailure> verify_trace(const nlohmann::json& document);

}  // namespace toroidal
