#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "hausp/io.hpp"
#include "hausp/model.hpp"
#include "hausp/projection.hpp"

namespace hausp::testing {

inline std::string data_path(const std::string& name) { return std::string(HAUSP_TEST_DATA) + "/" + name; }

// Example database labels.
inline constexpr Item a = 1, c = 2, b = 3, d = 4, e = 5, f = 6, g = 7;

inline Database example_db() { return load_qsdb(data_path("example.txt")); }

inline Pattern P(std::vector<std::vector<Item>> sets) { return Pattern(std::move(sets)); }

struct RandomDbShape {
  std::size_t max_sequences = 8;
  std::size_t max_itemsets = 6;
  std::size_t max_itemset_size = 4;
  std::size_t max_alphabet = 6;
  std::int64_t max_quantity = 9;
  std::int64_t max_eu = 9;
};

// Small random quantitative database; every count is drawn from [1, max].
inline Database random_db(std::mt19937_64& rng, const RandomDbShape& shape = {}) {
  auto pick = [&](std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  };
  const auto alphabet = static_cast<Item>(pick(1, static_cast<std::int64_t>(shape.max_alphabet)));
  ExternalUtilityTable eu;
  for (Item i = 1; i <= alphabet; ++i) eu[i] = pick(1, shape.max_eu);
  std::vector<QSequence> seqs;
  const auto n = pick(1, static_cast<std::int64_t>(shape.max_sequences));
  for (std::int64_t s = 0; s < n; ++s) {
    QSequence qs;
    qs.sid = s + 1;
    const auto sets = pick(1, static_cast<std::int64_t>(shape.max_itemsets));
    for (std::int64_t j = 0; j < sets; ++j) {
      const auto want = pick(1, std::min<std::int64_t>(static_cast<std::int64_t>(shape.max_itemset_size), alphabet));
      std::vector<Item> labels;
      for (Item i = 1; i <= alphabet; ++i) labels.push_back(i);
      std::shuffle(labels.begin(), labels.end(), rng);
      labels.resize(static_cast<std::size_t>(want));
      std::sort(labels.begin(), labels.end());
      QItemset y;
      for (Item i : labels) {
        const auto q = pick(1, shape.max_quantity);
        y.occurrences.push_back({i, q, q * eu.at(i)});
      }
      qs.itemsets.push_back(std::move(y));
    }
    seqs.push_back(std::move(qs));
  }
  return Database(std::move(seqs), std::move(eu));
}

// Independent embedding search: best instance utility of `s` in `qs`, or -1.
// Walks itemsets directly and never uses the library's instance routines.
inline Utility naive_best_utility(const Pattern& s, const QSequence& qs) {
  const auto& want = s.itemsets();
  std::function<Utility(std::size_t, std::size_t)> go = [&](std::size_t v, std::size_t from) -> Utility {
    if (v == want.size()) return 0;
    Utility best = -1;
    for (std::size_t j = from; j < qs.itemsets.size(); ++j) {
      Utility u = 0;
      bool ok = true;
      for (Item i : want[v]) {
        bool found = false;
        for (const auto& o : qs.itemsets[j].occurrences) {
          if (o.item == i) {
            u += o.utility;
            found = true;
          }
        }
        ok = ok && found;
      }
      if (!ok) continue;
      Utility rest = go(v + 1, j + 1);
      if (rest >= 0) best = std::max(best, u + rest);
    }
    return best;
  };
  return go(0, 0);
}

inline Ratio naive_au(const Pattern& s, const Database& d) {
  Ratio sum(0);
  for (const auto& qs : d.sequences()) {
    Utility u = naive_best_utility(s, qs);
    if (u >= 0) sum += Ratio(u, static_cast<Utility>(s.length()));
  }
  return sum;
}

// Example database at xi = 0.12 (minau 36), every pattern length; computed once with
// the brute-force miner and frozen here.
inline ResultSet example_reference() {
  return {
      {P({{a}, {e}}), Ratio(36)},
      {P({{a, c}, {e}}), Ratio(116, 3)},
      {P({{c}}), Ratio(48)},
      {P({{c}, {d}}), Ratio(36)},
      {P({{c}, {d}, {e}}), Ratio(38)},
      {P({{c}, {e}}), Ratio(57)},
      {P({{d}}), Ratio(48)},
      {P({{d}, {f}}), Ratio(39)},
      {P({{e}}), Ratio(66)},
      {P({{g}}), Ratio(40)},
      {P({{g}, {e}}), Ratio(38)},
  };
}

// Depth-first walk over every non-empty projection up to max_len items.
inline void for_each_node(const Database& db, std::size_t max_len,
                          const std::function<void(const ProjectedDB& parent, const ProjectedDB& node)>& visit) {
  std::function<void(const ProjectedDB&, const ProjectedDB&)> go = [&](const ProjectedDB& parent,
                                                                       const ProjectedDB& node) {
    visit(parent, node);
    if (node.pattern().length() >= max_len) return;
    ExtensionItems items = enumerate_extension_items(node);
    for (Item i : items.ilist) {
      ProjectedDB child = extend_projection(node, i, ExtensionMode::i_extension);
      if (!child.empty()) go(node, child);
    }
    for (Item i : items.slist) {
      ProjectedDB child = extend_projection(node, i, ExtensionMode::s_extension);
      if (!child.empty()) go(node, child);
    }
  };
  ProjectedDB root = project_root(db);
  for (Item i : enumerate_extension_items(root).slist) {
    ProjectedDB child = extend_projection(root, i, ExtensionMode::s_extension);
    if (!child.empty()) go(root, child);
  }
}

}  // namespace hausp::testing
