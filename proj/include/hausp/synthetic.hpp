#pragma once

#include <cstdint>

#include "hausp/model.hpp"

namespace hausp {

/// Parameters of a seeded random quantitative sequence database.
struct SyntheticConfig {
  std::size_t sequences = 1000;
  std::size_t items = 40;           // labels 1..items
  std::size_t max_itemsets = 8;     // per sequence, at least 1
  std::size_t max_itemset_size = 4;
  std::int64_t max_quantity = 5;
  std::int64_t max_eu = 10;
  std::uint64_t seed = 1;
};

/// Same config, same database. Item popularity is skewed towards low labels.
Database generate_synthetic(const SyntheticConfig& cfg);

}  // namespace hausp
