#include "hausp/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

namespace hausp {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

namespace {

// Dense per-label arrays elsewhere are sized by the largest label.
constexpr Item kMaxLabel = 10'000'000;

bool parse_int(std::string_view s, std::int64_t& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::vector<std::string> split(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

bool skip_line(const std::string& line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#' || line[pos] == '@' || line[pos] == '%';
}

bool is_trailer(const std::string& tok) { return tok.rfind("SUtility:", 0) == 0; }

Item check_label(std::int64_t v, std::size_t line, const std::string& tok) {
  if (v < 0 || v > kMaxLabel) throw ParseError(line, "item label out of range in '" + tok + "'");
  return static_cast<Item>(v);
}

struct Builder {
  std::size_t line = 0;
  std::vector<std::string>* warnings = nullptr;
  QSequence seq;
  QItemset current;

  void close_itemset() {
    if (current.occurrences.empty()) throw ParseError(line, "empty itemset");
    auto by_item = [](const QItemOccurrence& a, const QItemOccurrence& b) { return a.item < b.item; };
    if (!std::is_sorted(current.occurrences.begin(), current.occurrences.end(), by_item)) {
      std::stable_sort(current.occurrences.begin(), current.occurrences.end(), by_item);
      if (warnings != nullptr) warnings->push_back("line " + std::to_string(line) + ": itemset sorted by label");
    }
    for (std::size_t k = 1; k < current.occurrences.size(); ++k) {
      if (current.occurrences[k - 1].item == current.occurrences[k].item) {
        throw ParseError(line, "duplicate item " + std::to_string(current.occurrences[k].item) + " in an itemset");
      }
    }
    seq.itemsets.push_back(std::move(current));
    current = {};
  }
};

DatasetFormat detect(const std::vector<std::string>& lines) {
  for (const auto& line : lines) {
    if (skip_line(line)) continue;
    for (const auto& tok : split(line)) {
      if (is_trailer(tok)) continue;
      if (tok.find('[') != std::string::npos) return DatasetFormat::occurrence_utility;
      if (tok.find(':') != std::string::npos) return DatasetFormat::quantity;
    }
  }
  return DatasetFormat::occurrence_utility;
}

}  // namespace

EuTable EuTable::parse(std::istream& in) {
  EuTable t;
  std::set<std::string> seen;
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (skip_line(line)) continue;
    auto tok = split(line);
    std::int64_t eu = 0;
    if (tok.size() != 2 || !parse_int(tok[1], eu)) throw ParseError(no, "expected 'item eu'");
    if (eu <= 0) throw ParseError(no, "external utility must be positive");
    if (!seen.insert(tok[0]).second) throw ParseError(no, "item '" + tok[0] + "' listed twice");
    t.rows.emplace_back(tok[0], eu);
  }
  return t;
}

std::vector<std::pair<std::string, Item>> EuTable::labels() const {
  std::vector<std::pair<std::string, Item>> out;
  bool numeric = std::all_of(rows.begin(), rows.end(), [](const auto& r) {
    std::int64_t v = 0;
    return parse_int(r.first, v) && v >= 0 && v <= kMaxLabel;
  });
  for (std::size_t k = 0; k < rows.size(); ++k) {
    std::int64_t v = static_cast<std::int64_t>(k + 1);
    if (numeric) parse_int(rows[k].first, v);
    out.emplace_back(rows[k].first, static_cast<Item>(v));
  }
  return out;
}

ExternalUtilityTable EuTable::utilities() const {
  ExternalUtilityTable t;
  auto names = labels();
  for (std::size_t k = 0; k < rows.size(); ++k) t[names[k].second] = rows[k].second;
  return t;
}

Database parse_qsdb(std::istream& in, const ParseOptions& opt) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);

  DatasetFormat fmt = opt.format == DatasetFormat::auto_detect ? detect(lines) : opt.format;
  std::map<std::string, Item> label_of;
  ExternalUtilityTable eu;
  if (fmt == DatasetFormat::quantity) {
    if (opt.eu == nullptr) throw ParseError(0, "quantity format needs an external utility table");
    for (const auto& [name, label] : opt.eu->labels()) label_of[name] = label;
    eu = opt.eu->utilities();
  }

  std::vector<QSequence> seqs;
  for (std::size_t no = 1; no <= lines.size(); ++no) {
    const std::string& text = lines[no - 1];
    if (skip_line(text)) continue;
    Builder b;
    b.line = no;
    b.warnings = opt.warnings;
    bool ended = false;
    std::optional<std::int64_t> declared;
    for (const auto& tok : split(text)) {
      if (ended) {
        std::int64_t v = 0;
        if (!is_trailer(tok) || !parse_int(std::string_view(tok).substr(9), v)) {
          throw ParseError(no, "unexpected token '" + tok + "' after -2");
        }
        declared = v;
        continue;
      }
      if (tok == "-1") {
        b.close_itemset();
        continue;
      }
      if (tok == "-2") {
        if (!b.current.occurrences.empty()) b.close_itemset();
        ended = true;
        continue;
      }
      QItemOccurrence o;
      if (fmt == DatasetFormat::occurrence_utility) {
        auto open = tok.find('[');
        std::int64_t item = 0;
        std::int64_t u = 0;
        if (open == std::string::npos || tok.back() != ']' || !parse_int(std::string_view(tok).substr(0, open), item) ||
            !parse_int(std::string_view(tok).substr(open + 1, tok.size() - open - 2), u)) {
          throw ParseError(no, "malformed token '" + tok + "' (expected item[utility])");
        }
        if (u <= 0) throw ParseError(no, "non-positive utility in '" + tok + "'");
        o.item = check_label(item, no, tok);
        o.utility = u;
      } else {
        auto colon = tok.rfind(':');
        std::int64_t q = 0;
        if (colon == std::string::npos || !parse_int(std::string_view(tok).substr(colon + 1), q)) {
          throw ParseError(no, "malformed token '" + tok + "' (expected item:quantity)");
        }
        if (q <= 0) throw ParseError(no, "non-positive quantity in '" + tok + "'");
        auto it = label_of.find(tok.substr(0, colon));
        if (it == label_of.end()) throw ParseError(no, "unknown item '" + tok.substr(0, colon) + "'");
        o.item = it->second;
        o.quantity = q;
        o.utility = q * eu.at(o.item);
      }
      b.current.occurrences.push_back(o);
    }
    if (!ended) throw ParseError(no, "sequence not terminated by -2");
    if (b.seq.itemsets.empty()) throw ParseError(no, "empty sequence");
    Utility u = sequence_utility(b.seq);
    if (declared && *declared != u) {
      throw ParseError(no, "SUtility:" + std::to_string(*declared) + " does not match computed utility " +
                               std::to_string(u));
    }
    b.seq.sid = static_cast<std::int64_t>(seqs.size() + 1);
    seqs.push_back(std::move(b.seq));
  }
  return Database(std::move(seqs), std::move(eu));
}

Database parse_qsdb(const std::string& text, const ParseOptions& opt) {
  std::istringstream in(text);
  return parse_qsdb(in, opt);
}

namespace {

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  return out;
}

}  // namespace

Database load_qsdb(const std::string& path, const std::optional<std::string>& eu_path, DatasetFormat format,
                   std::vector<std::string>* warnings) {
  std::optional<EuTable> eu;
  if (eu_path) {
    auto in = open_in(*eu_path);
    try {
      eu = EuTable::parse(in);
    } catch (const ParseError& e) {
      throw ParseError(e.line(), *eu_path + ": " + e.what());
    }
  }
  auto in = open_in(path);
  ParseOptions opt;
  opt.format = format;
  opt.eu = eu ? &*eu : nullptr;
  opt.warnings = warnings;
  try {
    return parse_qsdb(in, opt);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path + ": " + e.what());
  }
}

void write_qsdb(const Database& d, std::ostream& out) {
  for (const auto& qs : d.sequences()) {
    for (const auto& y : qs.itemsets) {
      for (const auto& o : y.occurrences) out << o.item << '[' << o.utility << "] ";
      out << "-1 ";
    }
    out << "-2 SUtility:" << sequence_utility(qs) << '\n';
  }
}

void write_qsdb_quantity(const Database& d, std::ostream& out, std::ostream& eu_out) {
  // Without a table every occurrence is its own unit: eu 1, quantity = utility.
  const auto& eu = d.eu();
  for (Item i : d.items()) {
    auto it = eu.find(i);
    eu_out << i << ' ' << (it != eu.end() ? it->second : 1) << '\n';
  }
  for (const auto& qs : d.sequences()) {
    for (const auto& y : qs.itemsets) {
      for (const auto& o : y.occurrences) {
        auto it = eu.find(o.item);
        out << o.item << ':' << (it != eu.end() ? o.quantity : o.utility) << ' ';
      }
      out << "-1 ";
    }
    out << "-2\n";
  }
}

void write_results(const ResultSet& rs, std::ostream& out) {
  for (const auto& r : rs) out << r.pattern.str() << " -2 #AUTIL: " << r.au << '\n';
}

ResultSet read_results(std::istream& in) {
  ResultSet rs;
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto tok = split(line);
    std::vector<std::vector<Item>> sets(1);
    std::size_t k = 0;
    for (; k < tok.size() && tok[k] != "-2"; ++k) {
      std::int64_t v = 0;
      if (!parse_int(tok[k], v)) throw ParseError(no, "bad item '" + tok[k] + "'");
      if (v == -1) {
        sets.emplace_back();
      } else {
        sets.back().push_back(check_label(v, no, tok[k]));
      }
    }
    if (k + 2 >= tok.size() || tok[k + 1] != "#AUTIL:") throw ParseError(no, "expected '-2 #AUTIL: value'");
    try {
      rs.push_back({Pattern(std::move(sets)), Ratio::parse(tok[k + 2])});
    } catch (const std::invalid_argument& e) {
      throw ParseError(no, e.what());
    }
  }
  sort_results(rs);
  return rs;
}

ResultSet load_results(const std::string& path) {
  auto in = open_in(path);
  try {
    return read_results(in);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path + ": " + e.what());
  }
}

void save_results(const ResultSet& rs, const std::string& path) {
  auto out = open_out(path);
  write_results(rs, out);
  if (!out) throw IoError("write failed for '" + path + "'");
}

Fingerprint fingerprint(const Database& d) {
  Fingerprint f;
  f.sequences = d.size();
  f.items = d.items().size();
  f.total_utility = d.total_utility();
  Utility occ = 0;
  for (const auto& qs : d.sequences()) {
    occ += static_cast<Utility>(qs.item_count());
    f.max_len = std::max(f.max_len, qs.item_count());
  }
  f.avg_len = d.empty() ? Ratio(0) : Ratio(occ, static_cast<Utility>(d.size()));
  return f;
}

bool same_content(const Database& a, const Database& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t q = 0; q < a.size(); ++q) {
    const auto& x = a.sequences()[q].itemsets;
    const auto& y = b.sequences()[q].itemsets;
    if (x.size() != y.size()) return false;
    for (std::size_t j = 0; j < x.size(); ++j) {
      const auto& ox = x[j].occurrences;
      const auto& oy = y[j].occurrences;
      if (ox.size() != oy.size()) return false;
      for (std::size_t k = 0; k < ox.size(); ++k) {
        if (ox[k].item != oy[k].item || ox[k].utility != oy[k].utility) return false;
      }
    }
  }
  return true;
}

Database duplicate_dataset(const Database& d, std::size_t k) {
  if (k == 0) throw std::invalid_argument("duplication factor must be positive");
  std::vector<QSequence> seqs;
  seqs.reserve(d.size() * k);
  for (std::size_t c = 0; c < k; ++c) {
    for (const auto& qs : d.sequences()) {
      seqs.push_back(qs);
      seqs.back().sid = static_cast<std::int64_t>(seqs.size());
    }
  }
  return Database(std::move(seqs), d.eu());
}

void write_stats(const RunReport& r, std::ostream& out) {
  const auto& f = r.dataset_fingerprint;
  const auto& s = r.stats;
  out << "dataset=" << r.dataset << '\n'
      << "dataset.sequences=" << f.sequences << '\n'
      << "dataset.items=" << f.items << '\n'
      << "dataset.total_utility=" << f.total_utility << '\n'
      << "dataset.avg_len=" << f.avg_len << '\n'
      << "dataset.max_len=" << f.max_len << '\n'
      << "config.xi=" << r.config.xi << '\n'
      << "config.strategy=" << to_string(r.config.strategy) << '\n'
      << "config.rrs_policy=" << to_string(r.config.rrs_policy) << '\n'
      << "config.max_len="
      << (r.config.max_pattern_length ? std::to_string(*r.config.max_pattern_length) : std::string("none")) << '\n'
      << "minau=" << r.minau << '\n'
      << "candidates_generated=" << s.candidates_generated << '\n'
      << "hausps_found=" << s.hausps_found << '\n'
      << "prunes.peau_node=" << s.prunes.peau_node << '\n'
      << "prunes.irrelevant_item=" << s.prunes.irrelevant_item << '\n'
      << "prunes.unpromising_item=" << s.prunes.unpromising_item << '\n'
      << "max_depth=" << s.max_depth << '\n'
      << "wall_ms=" << std::fixed << std::setprecision(3) << s.wall_ms << '\n'
      << "peak_mem_bytes=" << s.peak_mem_bytes << '\n'
      << "peak_mem_kind=estimate\n"
      << "results=" << r.result_path << '\n';
  out.unsetf(std::ios::floatfield);
}

}  // namespace hausp
