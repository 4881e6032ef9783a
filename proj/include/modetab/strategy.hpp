#pragma once

#include <optional>
#include <string_view>

namespace modetab {

/// How answers of an incomplete table reach their consumers.
///   Batched: every table change is forwarded right away.
///   Local:   answers stay inside the subgoal's SCC until it completes.
enum class Strategy { Batched, Local };

inline std::string_view strategy_name(Strategy s) {
  return s == Strategy::Batched ? "batched" : "local";
}

inline std::optional<Strategy> parse_strategy(std::string_view s) {
  if (s == "batched") return Strategy::Batched;
  if (s == "local") return Strategy::Local;
  return std::nullopt;
}

}  // namespace modetab
