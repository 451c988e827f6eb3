#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hausp/model.hpp"

namespace hausp {

/// One occurrence of a q-sequence, flattened in order.
struct SeqArrayEntry {
  std::uint32_t ind = 0;   // 1-based occurrence index
  Item item = 0;
  Utility utility = 0;
  Utility ru = 0;          // utility of everything after this occurrence
  std::uint32_t sind = 0;  // 1-based itemset index
};

/// item -> ascending occurrence indices, for the items of one sequence.
class HeadTable {
 public:
  using Row = std::pair<Item, std::vector<std::uint32_t>>;

  explicit HeadTable(std::vector<Row> rows) : rows_(std::move(rows)) {}
  HeadTable() = default;

  /// nullptr when the item does not occur.
  const std::vector<std::uint32_t>* find(Item item) const;
  const std::vector<Row>& rows() const { return rows_; }
  std::size_t size() const { return rows_.size(); }

 private:
  std::vector<Row> rows_;  // sorted by item
};

struct SeqArray {
  std::int64_t sid = 0;
  std::vector<SeqArrayEntry> entries;
  HeadTable head;
  std::vector<std::uint32_t> itemset_end;  // [sind] -> last ind of that itemset; slot 0 unused

  const SeqArrayEntry& at(std::uint32_t ind) const { return entries[ind - 1]; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(entries.size()); }
};

SeqArray build_seq_array(const QSequence& qs);

struct ExtensionEntry {
  Utility acu = 0;            // best instance utility ending at exind
  std::uint32_t exind = 0;    // occurrence index of the extension item
  std::uint32_t rlen = 0;     // items after exind

  friend bool operator==(const ExtensionEntry&, const ExtensionEntry&) = default;
};

struct ExtensionList {
  std::size_t seq = 0;  // index into the shared sequence arrays
  std::int64_t sid = 0;
  std::vector<ExtensionEntry> entries;  // ascending exind, one per occurrence
};

/// Sequence arrays shared by every projection of one database.
struct SeqIndex {
  std::vector<SeqArray> arrays;
  Item max_item = -1;
};

enum class ExtensionMode { i_extension, s_extension };

class ProjectedDB {
 public:
  ProjectedDB(std::shared_ptr<const SeqIndex> index, Pattern pattern, std::vector<ExtensionList> lists);

  const Pattern& pattern() const { return pattern_; }
  bool is_root() const { return pattern_.empty(); }
  /// No sequence contains the pattern (always false for the root of a non-empty database).
  bool empty() const { return !is_root() && lists_.empty(); }
  /// |S|, constant for every entry.
  std::size_t aclen() const { return pattern_.length(); }

  const std::vector<ExtensionList>& lists() const { return lists_; }
  const SeqIndex& index() const { return *index_; }
  const std::shared_ptr<const SeqIndex>& shared_index() const { return index_; }
  const SeqArray& array(const ExtensionList& l) const { return index_->arrays[l.seq]; }

  /// Sum over containing sequences of max acu / |S|.
  Ratio average_utility() const;
  /// Rough footprint of the extension lists.
  std::size_t bytes() const;

 private:
  std::shared_ptr<const SeqIndex> index_;
  Pattern pattern_;
  std::vector<ExtensionList> lists_;
};

ProjectedDB project_root(const Database& d);

/// Root projections only accept S-extension; I-extension at the root throws
/// std::invalid_argument. Items that occur nowhere give an empty projection.
ProjectedDB extend_projection(const ProjectedDB& p, Item item, ExtensionMode mode);

struct ExtensionItems {
  std::vector<Item> ilist;  // ascending
  std::vector<Item> slist;  // ascending
};

/// For the root: slist holds every item of the database, ilist is empty.
ExtensionItems enumerate_extension_items(const ProjectedDB& p);

/// u_rs at an extension entry.
Utility remaining_utility(const ProjectedDB& p, const ExtensionList& list, const ExtensionEntry& entry);

/// One "sid exind acu rlen" line per extension entry.
std::string dump_extension_lists(const ProjectedDB& p);

}  // namespace hausp
