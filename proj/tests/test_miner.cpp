#include <gtest/gtest.h>

#include <random>
#include <sstream>
#include <stdexcept>

#include "hausp/miner.hpp"
#include "hausp/oracle.hpp"
#include "test_support.hpp"

using namespace hausp;
using namespace hausp::testing;

namespace {

MinerConfig config(StrategyVersion s, Ratio xi = Ratio(12, 100)) {
  MinerConfig cfg;
  cfg.strategy = s;
  cfg.xi = xi;
  return cfg;
}

const StrategyVersion kAll[] = {StrategyVersion::rsau, StrategyVersion::trsau, StrategyVersion::advance};

}  // namespace

TEST(Strategy, ParseAndPrint) {
  for (auto s : kAll) EXPECT_EQ(parse_strategy(to_string(s)), s);
  EXPECT_THROW(parse_strategy("fast"), std::invalid_argument);
}

TEST(Example, EveryStrategyFindsTheReferenceSet) {
  Database db = example_db();
  for (auto s : kAll) {
    MiningResult r = mine(db, config(s));
    EXPECT_EQ(r.results, example_reference()) << to_string(s);
    EXPECT_EQ(r.stats.hausps_found, 11u);
    EXPECT_EQ(r.threshold.minau, Ratio(36));
    EXPECT_GE(r.stats.max_depth, 3u);
  }
}

// Frozen counts for this implementation; the ordering between them is the point.
TEST(Example, CandidateCounts) {
  Database db = example_db();
  EXPECT_EQ(mine(db, config(StrategyVersion::rsau)).stats.candidates_generated, 224u);
  EXPECT_EQ(mine(db, config(StrategyVersion::trsau)).stats.candidates_generated, 158u);
  EXPECT_EQ(mine(db, config(StrategyVersion::advance)).stats.candidates_generated, 47u);
}

TEST(Example, PruneCountersMoveWithChannels) {
  Database db = example_db();
  MiningResult r = mine(db, config(StrategyVersion::advance));
  EXPECT_GT(r.stats.prunes.peau_node, 0u);
  EXPECT_GT(r.stats.prunes.irrelevant_item, 0u);
  EXPECT_GT(r.stats.prunes.unpromising_item, 0u);
  EXPECT_EQ(mine(db, config(StrategyVersion::rsau)).stats.prunes.unpromising_item, 0u);
  EXPECT_GT(r.stats.peak_mem_bytes, 0u);
}

TEST(Example, MaxLengthLimitsDepth) {
  Database db = example_db();
  MinerConfig cfg = config(StrategyVersion::advance);
  cfg.max_pattern_length = 1;
  MiningResult r = mine(db, cfg);
  for (const auto& e : r.results) EXPECT_EQ(e.pattern.length(), 1u);
  EXPECT_EQ(r.results.size(), 4u);  // c d e g
  cfg.max_pattern_length = 0;
  EXPECT_THROW(mine(db, cfg), std::invalid_argument);
}

TEST(Example, InvalidThreshold) {
  Database db = example_db();
  EXPECT_THROW(mine(db, config(StrategyVersion::advance, Ratio(0))), std::invalid_argument);
  EXPECT_THROW(mine(db, config(StrategyVersion::advance, Ratio(3, 2))), std::invalid_argument);
}

TEST(Example, FullThresholdFindsNothing) {
  Database db = example_db();
  EXPECT_TRUE(mine(db, config(StrategyVersion::advance, Ratio(1))).results.empty());
}

TEST(Example, TraceWritesOneLinePerCandidate) {
  Database db = example_db();
  std::ostringstream trace;
  MinerConfig cfg = config(StrategyVersion::trsau);
  cfg.trace = true;
  cfg.trace_out = &trace;
  MiningResult r = mine(db, cfg);
  const std::string s = trace.str();
  EXPECT_EQ(static_cast<std::uint64_t>(std::count(s.begin(), s.end(), '\n')), r.stats.candidates_generated);
  EXPECT_NE(s.find("1 2 -1 3 | 21 | 73 |"), std::string::npos);
}

TEST(EmptyDatabase, MinesNothing) {
  Database db;
  EXPECT_TRUE(mine(db, config(StrategyVersion::advance)).results.empty());
}

// Property: all strategies agree with the brute-force miner.
TEST(Property, MatchesOracle) {
  std::mt19937_64 rng(707);
  for (int round = 0; round < 80; ++round) {
    Database db = random_db(rng);
    for (Ratio xi : {Ratio(1, 30), Ratio(1, 8), Ratio(1, 3)}) {
      ResultSet want = oracle_mine(db, OracleConfig{5, xi});
      for (auto s : kAll) {
        MinerConfig cfg = config(s, xi);
        cfg.max_pattern_length = 5;
        ASSERT_EQ(mine(db, cfg).results, want) << "round " << round << " xi " << xi << " " << to_string(s);
      }
    }
  }
}

// Property: switching pruning channels off changes counters only.
TEST(Property, PruningChannelsDoNotChangeResults) {
  std::mt19937_64 rng(808);
  for (int round = 0; round < 40; ++round) {
    Database db = random_db(rng);
    for (auto s : kAll) {
      MinerConfig cfg = config(s, Ratio(1, 10));
      cfg.max_pattern_length = 5;
      MiningResult both = mine(db, cfg);
      for (auto [node, item] : {std::pair{false, true}, std::pair{true, false}, std::pair{false, false}}) {
        cfg.node_pruning = node;
        cfg.item_pruning = item;
        MiningResult r = mine(db, cfg);
        ASSERT_EQ(r.results, both.results);
        EXPECT_GE(r.stats.candidates_generated, both.stats.candidates_generated);
      }
    }
  }
}

// Property: raising the threshold only removes patterns, and the TRSAU version
// never evaluates more candidates than the RSAU version.
TEST(Property, ThresholdMonotonicityAndCandidateOrder) {
  std::mt19937_64 rng(909);
  for (int round = 0; round < 60; ++round) {
    Database db = random_db(rng);
    ResultSet prev;
    bool first = true;
    for (Ratio xi : {Ratio(1, 3), Ratio(1, 8), Ratio(1, 30)}) {
      MiningResult rs = mine(db, config(StrategyVersion::rsau, xi));
      MiningResult ts = mine(db, config(StrategyVersion::trsau, xi));
      EXPECT_LE(ts.stats.candidates_generated, rs.stats.candidates_generated);
      if (!first) {
        for (const auto& e : prev) {
          EXPECT_NE(std::find(rs.results.begin(), rs.results.end(), e), rs.results.end()) << e.pattern.str();
        }
      }
      prev = rs.results;
      first = false;
    }
  }
}
