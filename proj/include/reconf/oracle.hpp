#pragma once

#include <cstdint>
#include <optional>

#include "reconf/problems.hpp"

namespace reconf {

enum class ValueMode { Maxmin, Minmax };

struct OracleConfig {
  std::uint64_t state_cap = 1'000'000;
  std::optional<ValueMode> value_mode;  // derived from the problem kind when empty
  // Past state_cap, search only states reachable from start, capped by state_cap.
  bool explore_reachable_only = false;
  bool parallel = true;
};

struct OracleResult {
  Rational value;
  std::optional<ReconfigSequence> witness;
  std::uint64_t explored_states = 0;
};

OracleResult maxmin_value(const ReconfigInstance& instance, const OracleConfig& cfg = {});
OracleResult minmax_value(const ReconfigInstance& instance, const OracleConfig& cfg = {});
// Dispatches on the problem kind.
OracleResult optimal_value(const ReconfigInstance& instance, const OracleConfig& cfg = {});

int alpha(const SimpleGraph& g);
int beta(const SimpleGraph& g);
int omega(const SimpleGraph& g);

}  // namespace reconf
