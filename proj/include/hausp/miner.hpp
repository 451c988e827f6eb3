#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "hausp/bounds.hpp"
#include "hausp/model.hpp"

namespace hausp {

/// Pairs a node bound (gates recursion) with an item bound (gates each child).
///   rsau:    PEAU_Ori / RSAU
///   trsau:   PEAU_Ori / TRSAU
///   advance: VPEAU_Adv / VTRSAU_Adv
enum class StrategyVersion { rsau, trsau, advance };

std::string to_string(StrategyVersion s);
StrategyVersion parse_strategy(const std::string& text);

struct MinerConfig {
  Ratio xi{12, 100};
  StrategyVersion strategy = StrategyVersion::advance;
  RrsPolicy rrs_policy = RrsPolicy::item_global;
  std::optional<std::size_t> max_pattern_length;
  bool trace = false;
  std::ostream* trace_out = nullptr;  // std::cerr when unset

  // Switching a channel off only changes the counters, never the result.
  bool node_pruning = true;
  bool item_pruning = true;
};

struct PruneCounters {
  std::uint64_t peau_node = 0;          // child evaluated, subtree not expanded
  std::uint64_t irrelevant_item = 0;    // child rejected by the item bound
  std::uint64_t unpromising_item = 0;   // labels dropped from rrs numerators

  friend bool operator==(const PruneCounters&, const PruneCounters&) = default;
};

struct MiningStats {
  std::uint64_t candidates_generated = 0;
  std::uint64_t hausps_found = 0;
  PruneCounters prunes;
  std::size_t max_depth = 0;
  double wall_ms = 0.0;
  std::size_t peak_mem_bytes = 0;  // estimate: live extension lists on the recursion path
};

struct MiningResult {
  ResultSet results;
  MiningStats stats;
  Threshold threshold;
};

/// Throws std::invalid_argument when xi is outside (0, 1].
MiningResult mine(const Database& d, const MinerConfig& cfg);

}  // namespace hausp
