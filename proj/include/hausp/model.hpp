#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hausp/ratio.hpp"

namespace hausp {

/// Dataset-scoped item label. Labels order items inside an itemset.
using Item = std::int32_t;

/// Unit profit per item. Occurrence-utility datasets carry no table.
using ExternalUtilityTable = std::map<Item, Utility>;

struct QItemOccurrence {
  Item item = 0;
  std::int64_t quantity = 1;
  Utility utility = 0;  // quantity * eu(item), materialized at load

  friend bool operator==(const QItemOccurrence&, const QItemOccurrence&) = default;
};

/// Occurrences with strictly increasing labels; never empty.
struct QItemset {
  std::vector<QItemOccurrence> occurrences;

  Utility utility() const;
  bool has(Item item) const;
  /// Utility of `item` in this itemset, 0 when absent.
  Utility utility_of(Item item) const;
};

struct QSequence {
  std::int64_t sid = 0;
  std::vector<QItemset> itemsets;

  /// Total occurrence count (the sequence "length").
  std::size_t item_count() const;
};

/// Ordered list of itemsets, each a sorted set of labels.
class Pattern {
 public:
  Pattern() = default;
  explicit Pattern(std::vector<std::vector<Item>> itemsets);

  const std::vector<std::vector<Item>>& itemsets() const { return itemsets_; }
  bool empty() const { return itemsets_.empty(); }
  /// Number of items.
  std::size_t length() const { return length_; }
  /// Number of itemsets.
  std::size_t size() const { return itemsets_.size(); }
  Item last_item() const { return itemsets_.back().back(); }

  /// S (+) item: append to the last itemset. Requires item > last_item().
  Pattern i_extend(Item item) const;
  /// S (x) item: append as a new itemset.
  Pattern s_extend(Item item) const;
  /// Pattern without its last item; empty for 1-sequences.
  Pattern prefix() const;
  /// Whether the last item was added by I-extension.
  bool ends_with_i_extension() const { return !empty() && itemsets_.back().size() > 1; }

  /// "1 2 -1 3" style rendering used in result files.
  std::string str() const;

  friend bool operator==(const Pattern&, const Pattern&) = default;
  friend auto operator<=>(const Pattern& a, const Pattern& b) { return a.itemsets_ <=> b.itemsets_; }

 private:
  std::vector<std::vector<Item>> itemsets_;
  std::size_t length_ = 0;
};

/// 1-based itemset indices of an instance, strictly increasing.
using Position = std::vector<std::size_t>;

class Database {
 public:
  Database() = default;
  Database(std::vector<QSequence> sequences, ExternalUtilityTable eu);

  const std::vector<QSequence>& sequences() const { return sequences_; }
  const ExternalUtilityTable& eu() const { return eu_; }
  Utility total_utility() const { return total_utility_; }
  bool empty() const { return sequences_.empty(); }
  std::size_t size() const { return sequences_.size(); }
  /// Largest label present, -1 for an empty database.
  Item max_item() const { return max_item_; }
  /// Distinct labels present, ascending.
  std::vector<Item> items() const;

 private:
  std::vector<QSequence> sequences_;
  ExternalUtilityTable eu_;
  Utility total_utility_ = 0;
  Item max_item_ = -1;
};

struct Threshold {
  Ratio xi;
  Ratio minau;

  /// minau = xi * u(D). Throws std::invalid_argument unless 0 < xi <= 1.
  static Threshold from_xi(const Ratio& xi, const Database& d);
  static Threshold from_xi(double xi, const Database& d);
};

Utility sequence_utility(const QSequence& qs);
Utility database_utility(const Database& d);

/// Exact label match (same labels, same count).
bool matches(const std::vector<Item>& x, const QItemset& y);
/// Subset containment.
bool contains(const std::vector<Item>& x, const QItemset& y);

/// All instances in lexicographic order; empty when the pattern does not occur.
std::vector<Position> find_instances(const Pattern& s, const QSequence& qs);
bool occurs_in(const Pattern& s, const QSequence& qs);

/// Throws std::invalid_argument if `p` is not an instance of `s` in `qs`.
Utility instance_utility(const Pattern& s, const Position& p, const QSequence& qs);

/// Max instance utility divided by |S|; zero when absent.
Ratio pattern_avg_utility_in_seq(const Pattern& s, const QSequence& qs);
Ratio pattern_avg_utility(const Pattern& s, const Database& d);
bool is_hausp(const Pattern& s, const Database& d, const Threshold& t);

/// One mined pattern with its database average utility.
struct ResultEntry {
  Pattern pattern;
  Ratio au;

  friend bool operator==(const ResultEntry&, const ResultEntry&) = default;
};

/// Sorted by pattern, no duplicate patterns.
using ResultSet = std::vector<ResultEntry>;

void sort_results(ResultSet& rs);

/// num / den as an exact ratio.
Ratio ratio_of(Utility num, std::size_t den);

}  // namespace hausp
