#include "hausp/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hausp {

Utility QItemset::utility() const {
  Utility u = 0;
  for (const auto& o : occurrences) u += o.utility;
  return u;
}

bool QItemset::has(Item item) const {
  auto it = std::lower_bound(occurrences.begin(), occurrences.end(), item,
                             [](const QItemOccurrence& o, Item i) { return o.item < i; });
  return it != occurrences.end() && it->item == item;
}

Utility QItemset::utility_of(Item item) const {
  auto it = std::lower_bound(occurrences.begin(), occurrences.end(), item,
                             [](const QItemOccurrence& o, Item i) { return o.item < i; });
  return it != occurrences.end() && it->item == item ? it->utility : 0;
}

std::size_t QSequence::item_count() const {
  std::size_t n = 0;
  for (const auto& y : itemsets) n += y.occurrences.size();
  return n;
}

Pattern::Pattern(std::vector<std::vector<Item>> itemsets) : itemsets_(std::move(itemsets)) {
  for (const auto& x : itemsets_) {
    if (x.empty()) throw std::invalid_argument("pattern itemset is empty");
    for (std::size_t k = 1; k < x.size(); ++k) {
      if (x[k - 1] >= x[k]) throw std::invalid_argument("pattern itemset labels not increasing");
    }
    length_ += x.size();
  }
}

Pattern Pattern::i_extend(Item item) const {
  if (empty()) throw std::invalid_argument("I-extension of the empty pattern");
  auto sets = itemsets_;
  sets.back().push_back(item);
  return Pattern(std::move(sets));
}

Pattern Pattern::s_extend(Item item) const {
  auto sets = itemsets_;
  sets.push_back({item});
  return Pattern(std::move(sets));
}

Pattern Pattern::prefix() const {
  if (empty()) return {};
  auto sets = itemsets_;
  sets.back().pop_back();
  if (sets.back().empty()) sets.pop_back();
  return Pattern(std::move(sets));
}

std::string Pattern::str() const {
  std::ostringstream os;
  for (std::size_t v = 0; v < itemsets_.size(); ++v) {
    if (v > 0) os << " -1 ";
    for (std::size_t k = 0; k < itemsets_[v].size(); ++k) {
      if (k > 0) os << ' ';
      os << itemsets_[v][k];
    }
  }
  return os.str();
}

Database::Database(std::vector<QSequence> sequences, ExternalUtilityTable eu)
    : sequences_(std::move(sequences)), eu_(std::move(eu)) {
  for (const auto& qs : sequences_) {
    for (const auto& y : qs.itemsets) {
      for (const auto& o : y.occurrences) max_item_ = std::max(max_item_, o.item);
    }
  }
  total_utility_ = database_utility(*this);
}

std::vector<Item> Database::items() const {
  std::set<Item> seen;
  for (const auto& qs : sequences_) {
    for (const auto& y : qs.itemsets) {
      for (const auto& o : y.occurrences) seen.insert(o.item);
    }
  }
  return {seen.begin(), seen.end()};
}

Threshold Threshold::from_xi(const Ratio& xi, const Database& d) {
  if (xi <= Ratio(0) || xi > Ratio(1)) throw std::invalid_argument("xi must lie in (0, 1]");
  Threshold t;
  t.xi = xi;
  // xi * u(D) computed as a single reduced fraction.
  Utility g = std::gcd(d.total_utility(), xi.den());
  t.minau = Ratio(xi.num() * (d.total_utility() / (g == 0 ? 1 : g)), xi.den() / (g == 0 ? 1 : g));
  return t;
}

Threshold Threshold::from_xi(double xi, const Database& d) {
  if (!(xi > 0.0) || xi > 1.0 || !std::isfinite(xi)) throw std::invalid_argument("xi must lie in (0, 1]");
  // Decimal thresholds ("0.12") are taken at face value, not as binary doubles.
  std::ostringstream os;
  os.precision(12);
  os << std::fixed << xi;
  std::string s = os.str();
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return from_xi(Ratio::parse(s), d);
}

Utility sequence_utility(const QSequence& qs) {
  Utility u = 0;
  for (const auto& y : qs.itemsets) u += y.utility();
  return u;
}

Utility database_utility(const Database& d) {
  Utility u = 0;
  for (const auto& qs : d.sequences()) u += sequence_utility(qs);
  return u;
}

bool matches(const std::vector<Item>& x, const QItemset& y) {
  if (x.size() != y.occurrences.size()) return false;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] != y.occurrences[k].item) return false;
  }
  return true;
}

bool contains(const std::vector<Item>& x, const QItemset& y) {
  // Both sides sorted: linear merge.
  std::size_t k = 0;
  for (const auto& o : y.occurrences) {
    if (k < x.size() && x[k] == o.item) ++k;
  }
  return k == x.size();
}

namespace {

void collect_instances(const Pattern& s, const QSequence& qs, std::size_t v, std::size_t from,
                       Position& current, std::vector<Position>& out) {
  const auto& sets = s.itemsets();
  if (v == sets.size()) {
    out.push_back(current);
    return;
  }
  // Leave room for the remaining pattern itemsets.
  std::size_t last = qs.itemsets.size() - (sets.size() - v - 1);
  for (std::size_t j = from; j < last; ++j) {
    if (!contains(sets[v], qs.itemsets[j])) continue;
    current.push_back(j + 1);
    collect_instances(s, qs, v + 1, j + 1, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Position> find_instances(const Pattern& s, const QSequence& qs) {
  std::vector<Position> out;
  if (s.empty() || s.size() > qs.itemsets.size()) return out;
  Position current;
  collect_instances(s, qs, 0, 0, current, out);
  return out;
}

bool occurs_in(const Pattern& s, const QSequence& qs) {
  // Greedy leftmost embedding.
  std::size_t j = 0;
  for (const auto& x : s.itemsets()) {
    while (j < qs.itemsets.size() && !contains(x, qs.itemsets[j])) ++j;
    if (j == qs.itemsets.size()) return false;
    ++j;
  }
  return true;
}

Utility instance_utility(const Pattern& s, const Position& p, const QSequence& qs) {
  const auto& sets = s.itemsets();
  if (p.size() != sets.size()) throw std::invalid_argument("position size differs from pattern size");
  Utility u = 0;
  std::size_t prev = 0;
  for (std::size_t v = 0; v < sets.size(); ++v) {
    std::size_t j = p[v];
    if (j <= prev || j > qs.itemsets.size()) throw std::invalid_argument("position is not increasing or out of range");
    const QItemset& y = qs.itemsets[j - 1];
    if (!contains(sets[v], y)) throw std::invalid_argument("pattern itemset not contained at position");
    for (Item i : sets[v]) u += y.utility_of(i);
    prev = j;
  }
  return u;
}

Ratio pattern_avg_utility_in_seq(const Pattern& s, const QSequence& qs) {
  Utility best = 0;
  bool any = false;
  for (const auto& p : find_instances(s, qs)) {
    best = std::max(best, instance_utility(s, p, qs));
    any = true;
  }
  if (!any) return Ratio(0);
  return Ratio(best, static_cast<Utility>(s.length()));
}

Ratio pattern_avg_utility(const Pattern& s, const Database& d) {
  Ratio sum(0);
  for (const auto& qs : d.sequences()) sum += pattern_avg_utility_in_seq(s, qs);
  return sum;
}

bool is_hausp(const Pattern& s, const Database& d, const Threshold& t) {
  return pattern_avg_utility(s, d) >= t.minau;
}

void sort_results(ResultSet& rs) {
  std::sort(rs.begin(), rs.end(), [](const ResultEntry& a, const ResultEntry& b) { return a.pattern < b.pattern; });
}

Ratio ratio_of(Utility num, std::size_t den) { return Ratio(num, static_cast<Utility>(den)); }

}  // namespace hausp
