#include "hausp/projection.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hausp {

const std::vector<std::uint32_t>* HeadTable::find(Item item) const {
  auto it = std::lower_bound(rows_.begin(), rows_.end(), item,
                             [](const Row& r, Item i) { return r.first < i; });
  return it != rows_.end() && it->first == item ? &it->second : nullptr;
}

SeqArray build_seq_array(const QSequence& qs) {
  SeqArray a;
  a.sid = qs.sid;
  a.itemset_end.push_back(0);
  std::map<Item, std::vector<std::uint32_t>> head;
  std::uint32_t ind = 0;
  std::uint32_t sind = 0;
  for (const auto& y : qs.itemsets) {
    ++sind;
    for (const auto& o : y.occurrences) {
      ++ind;
      a.entries.push_back({ind, o.item, o.utility, 0, sind});
      head[o.item].push_back(ind);
    }
    a.itemset_end.push_back(ind);
  }
  Utility ru = 0;
  for (auto it = a.entries.rbegin(); it != a.entries.rend(); ++it) {
    it->ru = ru;
    ru += it->utility;
  }
  a.head = HeadTable({head.begin(), head.end()});
  return a;
}

ProjectedDB::ProjectedDB(std::shared_ptr<const SeqIndex> index, Pattern pattern,
                         std::vector<ExtensionList> lists)
    : index_(std::move(index)), pattern_(std::move(pattern)), lists_(std::move(lists)) {}

Ratio ProjectedDB::average_utility() const {
  if (is_root()) return Ratio(0);
  Utility sum = 0;
  for (const auto& l : lists_) {
    Utility best = 0;
    for (const auto& e : l.entries) best = std::max(best, e.acu);
    sum += best;
  }
  return ratio_of(sum, aclen());
}

std::size_t ProjectedDB::bytes() const {
  std::size_t n = sizeof(*this);
  for (const auto& l : lists_) n += sizeof(l) + l.entries.size() * sizeof(ExtensionEntry);
  return n;
}

ProjectedDB project_root(const Database& d) {
  auto index = std::make_shared<SeqIndex>();
  index->max_item = d.max_item();
  index->arrays.reserve(d.size());
  for (const auto& qs : d.sequences()) index->arrays.push_back(build_seq_array(qs));
  return ProjectedDB(std::move(index), Pattern{}, {});
}

namespace {

std::vector<ExtensionEntry> seed_entries(const SeqArray& a, const std::vector<std::uint32_t>& occ) {
  std::vector<ExtensionEntry> out;
  out.reserve(occ.size());
  for (std::uint32_t ind : occ) out.push_back({a.at(ind).utility, ind, a.size() - ind});
  return out;
}

// Appended occurrence must share the itemset of a parent entry and come after it.
std::vector<ExtensionEntry> i_extend_entries(const SeqArray& a, const std::vector<ExtensionEntry>& parent,
                                             const std::vector<std::uint32_t>& occ) {
  std::vector<ExtensionEntry> out;
  auto it = occ.begin();
  for (const auto& e : parent) {
    it = std::upper_bound(it, occ.end(), e.exind);
    if (it == occ.end()) break;
    const auto& cand = a.at(*it);
    if (cand.sind != a.at(e.exind).sind) continue;
    out.push_back({e.acu + cand.utility, cand.ind, a.size() - cand.ind});
  }
  return out;
}

// Appended occurrence must lie in a strictly later itemset than some parent entry;
// acu keeps the best compatible predecessor.
std::vector<ExtensionEntry> s_extend_entries(const SeqArray& a, const std::vector<ExtensionEntry>& parent,
                                             const std::vector<std::uint32_t>& occ) {
  std::vector<ExtensionEntry> out;
  std::size_t k = 0;
  Utility best = -1;
  for (std::uint32_t ind : occ) {
    const auto& cand = a.at(ind);
    while (k < parent.size() && a.at(parent[k].exind).sind < cand.sind) {
      best = std::max(best, parent[k].acu);
      ++k;
    }
    if (best < 0) continue;
    out.push_back({best + cand.utility, ind, a.size() - ind});
  }
  return out;
}

}  // namespace

ProjectedDB extend_projection(const ProjectedDB& p, Item item, ExtensionMode mode) {
  const SeqIndex& index = p.index();
  std::vector<ExtensionList> lists;
  if (p.is_root()) {
    if (mode != ExtensionMode::s_extension) {
      throw std::invalid_argument("the root can only be S-extended");
    }
    for (std::size_t q = 0; q < index.arrays.size(); ++q) {
      const SeqArray& a = index.arrays[q];
      const auto* occ = a.head.find(item);
      if (occ == nullptr) continue;
      lists.push_back({q, a.sid, seed_entries(a, *occ)});
    }
    return ProjectedDB(p.shared_index(), Pattern{}.s_extend(item), std::move(lists));
  }

  if (mode == ExtensionMode::i_extension && item <= p.pattern().last_item()) {
    throw std::invalid_argument("I-extension item must follow the last pattern item");
  }
  for (const auto& l : p.lists()) {
    const SeqArray& a = p.array(l);
    const auto* occ = a.head.find(item);
    if (occ == nullptr) continue;
    auto entries = mode == ExtensionMode::i_extension ? i_extend_entries(a, l.entries, *occ)
                                                      : s_extend_entries(a, l.entries, *occ);
    if (entries.empty()) continue;
    lists.push_back({l.seq, l.sid, std::move(entries)});
  }
  Pattern child = mode == ExtensionMode::i_extension ? p.pattern().i_extend(item) : p.pattern().s_extend(item);
  return ProjectedDB(p.shared_index(), std::move(child), std::move(lists));
}

ExtensionItems enumerate_extension_items(const ProjectedDB& p) {
  const SeqIndex& index = p.index();
  ExtensionItems out;
  std::size_t universe = static_cast<std::size_t>(index.max_item + 1);
  std::vector<char> in_i(universe, 0);
  std::vector<char> in_s(universe, 0);

  if (p.is_root()) {
    for (const auto& a : index.arrays) {
      for (const auto& row : a.head.rows()) in_s[static_cast<std::size_t>(row.first)] = 1;
    }
  } else {
    for (const auto& l : p.lists()) {
      const SeqArray& a = p.array(l);
      for (const auto& e : l.entries) {
        std::uint32_t end = a.itemset_end[a.at(e.exind).sind];
        for (std::uint32_t ind = e.exind + 1; ind <= end; ++ind) {
          in_i[static_cast<std::size_t>(a.at(ind).item)] = 1;
        }
      }
      // Everything after the first entry's itemset is S-reachable.
      std::uint32_t from = a.itemset_end[a.at(l.entries.front().exind).sind] + 1;
      for (std::uint32_t ind = from; ind <= a.size(); ++ind) {
        in_s[static_cast<std::size_t>(a.at(ind).item)] = 1;
      }
    }
  }
  for (std::size_t i = 0; i < universe; ++i) {
    if (in_i[i]) out.ilist.push_back(static_cast<Item>(i));
    if (in_s[i]) out.slist.push_back(static_cast<Item>(i));
  }
  return out;
}

Utility remaining_utility(const ProjectedDB& p, const ExtensionList& list, const ExtensionEntry& entry) {
  return p.array(list).at(entry.exind).ru;
}

std::string dump_extension_lists(const ProjectedDB& p) {
  std::ostringstream os;
  for (const auto& l : p.lists()) {
    for (const auto& e : l.entries) os << l.sid << ' ' << e.exind << ' ' << e.acu << ' ' << e.rlen << '\n';
  }
  return os.str();
}

}  // namespace hausp
