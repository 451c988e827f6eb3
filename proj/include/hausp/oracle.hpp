#pragma once

#include <cstddef>
#include <vector>

#include "hausp/bounds.hpp"
#include "hausp/model.hpp"

namespace hausp {

/// Brute-force reference miner. Depends on the core model only; the bound
/// recomputation below walks instances directly and never builds projections.

inline constexpr std::size_t kOracleMaxLength = 8;

struct OracleConfig {
  std::size_t max_pattern_length = 4;
  Ratio xi{12, 100};
};

/// Every distinct pattern with 1..max_len items that occurs somewhere in `d`,
/// in pattern order. Throws std::invalid_argument when max_len is 0 or above
/// kOracleMaxLength.
std::vector<Pattern> enumerate_patterns(const Database& d, std::size_t max_len);

ResultSet oracle_mine(const Database& d, const OracleConfig& cfg);

/// Bound values of `s` recomputed from instances. The reduced family treats
/// `s` as a child of s.prefix(). `s` must occur in `d`.
BoundReport definitional_bounds(const Database& d, const Pattern& s, const Threshold& t, RrsPolicy policy);

}  // namespace hausp
