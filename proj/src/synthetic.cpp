#include "hausp/synthetic.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace hausp {

Database generate_synthetic(const SyntheticConfig& cfg) {
  if (cfg.items == 0 || cfg.max_itemsets == 0 || cfg.max_itemset_size == 0 || cfg.max_quantity <= 0 ||
      cfg.max_eu <= 0) {
    throw std::invalid_argument("synthetic config fields must be positive");
  }
  std::mt19937_64 rng(cfg.seed);
  ExternalUtilityTable eu;
  std::uniform_int_distribution<std::int64_t> eu_dist(1, cfg.max_eu);
  for (std::size_t i = 1; i <= cfg.items; ++i) eu[static_cast<Item>(i)] = eu_dist(rng);

  // Zipf-like weights 1/i.
  std::vector<double> weights;
  for (std::size_t i = 1; i <= cfg.items; ++i) weights.push_back(1.0 / static_cast<double>(i));
  std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
  std::uniform_int_distribution<std::size_t> n_sets(1, cfg.max_itemsets);
  std::uniform_int_distribution<std::size_t> n_items(1, std::min(cfg.max_itemset_size, cfg.items));
  std::uniform_int_distribution<std::int64_t> qty(1, cfg.max_quantity);

  std::vector<QSequence> seqs;
  seqs.reserve(cfg.sequences);
  for (std::size_t s = 0; s < cfg.sequences; ++s) {
    QSequence qs;
    qs.sid = static_cast<std::int64_t>(s + 1);
    std::size_t sets = n_sets(rng);
    for (std::size_t j = 0; j < sets; ++j) {
      std::set<Item> labels;
      std::size_t want = n_items(rng);
      while (labels.size() < want) labels.insert(static_cast<Item>(pick(rng) + 1));
      QItemset y;
      for (Item i : labels) {
        std::int64_t q = qty(rng);
        y.occurrences.push_back({i, q, q * eu.at(i)});
      }
      qs.itemsets.push_back(std::move(y));
    }
    seqs.push_back(std::move(qs));
  }
  return Database(std::move(seqs), std::move(eu));
}

}  // namespace hausp
