#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hausp/miner.hpp"
#include "hausp/model.hpp"

namespace hausp {

/// occurrence_utility: `item[utility] ... -1 ... -2 [SUtility:N]` per line.
/// quantity: `name:qty ... -1 ... -2` per line plus an `item eu` table.
enum class DatasetFormat { auto_detect, occurrence_utility, quantity };

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  /// 1-based; 0 when the problem is not tied to a line.
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Item names of a quantity-mode dataset, mapped to labels.
///
/// Names are labelled in table order (1, 2, ...) unless every name is an
/// integer, in which case the integers are the labels. Labels order items
/// inside itemsets, so the table order is also the itemset order.
struct EuTable {
  std::vector<std::pair<std::string, Utility>> rows;  // file order

  static EuTable parse(std::istream& in);
  /// name -> label, and the external utilities keyed by label.
  std::vector<std::pair<std::string, Item>> labels() const;
  ExternalUtilityTable utilities() const;
};

struct ParseOptions {
  DatasetFormat format = DatasetFormat::auto_detect;
  const EuTable* eu = nullptr;              // required for quantity mode
  std::vector<std::string>* warnings = nullptr;
};

Database parse_qsdb(std::istream& in, const ParseOptions& opt = {});
Database parse_qsdb(const std::string& text, const ParseOptions& opt = {});

/// Reads a dataset file (and its eu table for quantity mode). Throws IoError
/// when a file cannot be opened and ParseError for malformed content.
Database load_qsdb(const std::string& path, const std::optional<std::string>& eu_path = std::nullopt,
                   DatasetFormat format = DatasetFormat::auto_detect,
                   std::vector<std::string>* warnings = nullptr);

/// Occurrence-utility format with SUtility trailers.
void write_qsdb(const Database& d, std::ostream& out);
/// Quantity format with integer labels; the table goes to `eu_out`.
void write_qsdb_quantity(const Database& d, std::ostream& out, std::ostream& eu_out);

/// One line per pattern: `1 2 -1 3 -2 #AUTIL: 41/3`.
void write_results(const ResultSet& rs, std::ostream& out);
ResultSet read_results(std::istream& in);
ResultSet load_results(const std::string& path);
void save_results(const ResultSet& rs, const std::string& path);

struct Fingerprint {
  std::size_t sequences = 0;
  std::size_t items = 0;       // distinct labels
  Utility total_utility = 0;
  Ratio avg_len;               // occurrences per sequence
  std::size_t max_len = 0;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const Database& d);

/// Same sequences in the same order with the same labels and occurrence utilities.
bool same_content(const Database& a, const Database& b);

/// k concatenated copies with sids 1..k*|D|. Throws std::invalid_argument for k == 0.
Database duplicate_dataset(const Database& d, std::size_t k);

struct RunReport {
  std::string dataset;
  Fingerprint dataset_fingerprint;
  MinerConfig config;
  Ratio minau;
  MiningStats stats;
  std::string result_path;
};

/// `key=value` lines.
void write_stats(const RunReport& r, std::ostream& out);

}  // namespace hausp
