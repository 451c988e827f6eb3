#include "hausp/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace hausp {

namespace {

void check_length(std::size_t max_len) {
  if (max_len == 0 || max_len > kOracleMaxLength) {
    throw std::invalid_argument("oracle max length must be in 1.." + std::to_string(kOracleMaxLength) +
                                " (enumeration is exponential; use the miner for longer patterns)");
  }
}

bool occurs_anywhere(const Pattern& s, const Database& d) {
  for (const auto& qs : d.sequences()) {
    if (occurs_in(s, qs)) return true;
  }
  return false;
}

}  // namespace

std::vector<Pattern> enumerate_patterns(const Database& d, std::size_t max_len) {
  check_length(max_len);
  std::set<Pattern> found;
  std::vector<Pattern> frontier;
  for (Item i : d.items()) frontier.push_back(Pattern().s_extend(i));
  const std::vector<Item> alphabet = d.items();
  while (!frontier.empty()) {
    std::vector<Pattern> next;
    for (const auto& s : frontier) {
      if (!found.insert(s).second) continue;
      if (s.length() == max_len) continue;
      for (Item i : alphabet) {
        if (i > s.last_item()) {
          Pattern x = s.i_extend(i);
          if (occurs_anywhere(x, d)) next.push_back(std::move(x));
        }
        Pattern y = s.s_extend(i);
        if (occurs_anywhere(y, d)) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

ResultSet oracle_mine(const Database& d, const OracleConfig& cfg) {
  check_length(cfg.max_pattern_length);
  Threshold t = Threshold::from_xi(cfg.xi, d);
  ResultSet out;
  for (const auto& s : enumerate_patterns(d, cfg.max_pattern_length)) {
    Ratio au = pattern_avg_utility(s, d);
    if (au >= t.minau) out.push_back({s, au});
  }
  return out;
}

namespace {

// Flat view of one q-sequence: occurrences in order.
struct Occ {
  std::size_t itemset = 0;  // 1-based
  Item item = 0;
  Utility utility = 0;
};

std::vector<Occ> flatten(const QSequence& qs) {
  std::vector<Occ> v;
  for (std::size_t j = 0; j < qs.itemsets.size(); ++j) {
    for (const auto& o : qs.itemsets[j].occurrences) v.push_back({j + 1, o.item, o.utility});
  }
  return v;
}

std::size_t flat_index(const std::vector<Occ>& v, std::size_t itemset, Item item) {
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].itemset == itemset && v[k].item == item) return k;
  }
  throw std::logic_error("occurrence not found");
}

// Extension occurrence (flat index) -> best instance utility ending there.
std::map<std::size_t, Utility> extension_points(const Pattern& s, const QSequence& qs, const std::vector<Occ>& v) {
  std::map<std::size_t, Utility> best;
  for (const auto& pos : find_instances(s, qs)) {
    std::size_t k = flat_index(v, pos.back(), s.last_item());
    Utility u = instance_utility(s, pos, qs);
    auto [it, fresh] = best.emplace(k, u);
    if (!fresh) it->second = std::max(it->second, u);
  }
  return best;
}

Utility sum_between(const std::vector<Occ>& v, std::size_t from, std::size_t to, const std::vector<char>& keep) {
  Utility u = 0;
  for (std::size_t k = from + 1; k < to && k < v.size(); ++k) {
    if (keep[k]) u += v[k].utility;
  }
  return u;
}

struct SeqView {
  const QSequence* qs = nullptr;
  std::vector<Occ> flat;
  std::map<std::size_t, Utility> ext;  // of the pattern under study
};

// Which occurrences of each sequence count towards rrs for pattern `s`.
struct Admission {
  std::vector<std::vector<char>> keep;  // per containing sequence, per occurrence
  std::size_t distinct = 0;
};

Admission admit(const std::vector<SeqView>& views, const Threshold& t, RrsPolicy policy) {
  std::map<Item, Utility> total;
  for (const auto& sv : views) {
    std::size_t first = sv.ext.begin()->first;
    for (std::size_t k = first + 1; k < sv.flat.size(); ++k) total[sv.flat[k].item] += sv.flat[k].utility;
  }
  auto reaches = [&](Utility u) { return Ratio(u) >= t.minau; };
  Admission a;
  std::set<Item> labels;
  for (const auto& sv : views) {
    std::vector<char> keep(sv.flat.size(), 0);
    std::size_t first = sv.ext.begin()->first;
    for (std::size_t k = 0; k < sv.flat.size(); ++k) {
      bool ok = policy == RrsPolicy::item_global ? total.count(sv.flat[k].item) && reaches(total[sv.flat[k].item])
                                                 : reaches(sv.flat[k].utility);
      keep[k] = ok ? 1 : 0;
      if (ok && k > first) labels.insert(sv.flat[k].item);
    }
    a.keep.push_back(std::move(keep));
  }
  a.distinct = labels.size();
  return a;
}

std::vector<SeqView> views_of(const Database& d, const Pattern& s) {
  std::vector<SeqView> out;
  for (const auto& qs : d.sequences()) {
    SeqView sv;
    sv.qs = &qs;
    sv.flat = flatten(qs);
    sv.ext = extension_points(s, qs, sv.flat);
    if (!sv.ext.empty()) out.push_back(std::move(sv));
  }
  return out;
}

// Best acu + u_rrs per sequence and the cut position used to count |rrs|_d.
struct Cuts {
  std::vector<Utility> best;       // -1 when no extension point has a remaining sequence
  std::vector<std::size_t> cut;    // flat index of the cut extension point
};

Cuts cuts_of(const std::vector<SeqView>& views, const Admission& a) {
  Cuts c;
  for (std::size_t q = 0; q < views.size(); ++q) {
    const auto& sv = views[q];
    const std::size_t n = sv.flat.size();
    Utility best = -1;
    for (const auto& [k, acu] : sv.ext) {
      if (k + 1 < n) best = std::max(best, acu + sum_between(sv.flat, k, n, a.keep[q]));
    }
    std::size_t cut = sv.ext.rbegin()->first;
    for (const auto& [k, acu] : sv.ext) {
      Utility tail = sum_between(sv.flat, k, n, a.keep[q]);
      bool ok = true;
      for (const auto& [k2, acu2] : sv.ext) {
        if (k2 > k && k2 + 1 < n && acu2 + tail > std::max<Utility>(best, 0)) ok = false;
      }
      if (ok) {
        cut = k;
        break;
      }
    }
    c.best.push_back(best);
    c.cut.push_back(cut);
  }
  return c;
}

// Labels whose admitted utility after the cuts of the chosen sequences reaches minau.
std::size_t distinct_after_cuts(const std::vector<SeqView>& views, const Admission& a, const Cuts& c,
                                const std::vector<std::size_t>& which, const Threshold& t) {
  std::map<Item, Utility> total;
  for (std::size_t q : which) {
    const auto& sv = views[q];
    for (std::size_t k = c.cut[q] + 1; k < sv.flat.size(); ++k) {
      if (a.keep[q][k]) total[sv.flat[k].item] += sv.flat[k].utility;
    }
  }
  std::size_t n = 0;
  for (const auto& [item, u] : total) {
    if (u > 0 && Ratio(u) >= t.minau) ++n;
  }
  return n;
}

}  // namespace

BoundReport definitional_bounds(const Database& d, const Pattern& s, const Threshold& t, RrsPolicy policy) {
  if (s.empty()) throw std::invalid_argument("pattern must not be empty");
  BoundReport b;
  const auto len = static_cast<Utility>(s.length());

  // Prefix-extension family of s itself.
  std::vector<SeqView> node = views_of(d, s);
  if (node.empty()) throw std::invalid_argument("pattern does not occur in the database");
  Admission na = admit(node, t, policy);
  Cuts nc = cuts_of(node, na);
  std::vector<std::size_t> all_node(node.size());
  for (std::size_t q = 0; q < node.size(); ++q) all_node[q] = q;
  b.rrs_distinct = distinct_after_cuts(node, na, nc, all_node, t);
  const auto vden = len + static_cast<Utility>(b.rrs_distinct);
  for (std::size_t q = 0; q < node.size(); ++q) {
    const auto& sv = node[q];
    std::vector<char> all(sv.flat.size(), 1);
    Utility best_rs = -1;
    for (const auto& [k, acu] : sv.ext) {
      if (k + 1 == sv.flat.size()) continue;  // empty remaining sequence
      best_rs = std::max(best_rs, acu + sum_between(sv.flat, k, sv.flat.size(), all));
    }
    if (best_rs < 0) continue;
    b.peau_ori += Ratio(best_rs, len);
    b.peau_inc += Ratio(best_rs, len + 1);
    b.peau_rev += Ratio(nc.best[q], len + 1);
    b.vpeau_adv += Ratio(nc.best[q], vden);
  }

  // Reduced family: s against its prefix.
  Pattern prefix = s.prefix();
  if (prefix.empty()) {
    Ratio u(0);
    for (const auto& sv : node) u += Ratio(sequence_utility(*sv.qs));
    b.rsau = b.trsau = b.vtrsau_adv = u;
    return b;
  }
  const auto plen = static_cast<Utility>(prefix.length());
  std::vector<SeqView> parent = views_of(d, prefix);
  Admission pa = admit(parent, t, policy);
  Cuts pc = cuts_of(parent, pa);
  std::vector<std::size_t> which;
  {
    std::size_t q = 0;
    for (const auto& cv : node) {
      while (parent[q].qs != cv.qs) ++q;
      which.push_back(q);
    }
  }
  const auto pden = plen + static_cast<Utility>(distinct_after_cuts(parent, pa, pc, which, t));
  for (std::size_t c = 0; c < node.size(); ++c) {
    const std::size_t q = which[c];
    const auto& pv = parent[q];
    const std::size_t n = pv.flat.size();
    const std::size_t child_first = node[c].ext.begin()->first;
    std::vector<char> all(n, 1);
    auto num = [&](std::size_t k, Utility acu) { return acu + sum_between(pv.flat, k, n, all); };

    Utility best = 0;
    bool any = false;
    for (const auto& [k, acu] : pv.ext) {
      if (k + 1 == n) continue;
      best = any ? std::max(best, num(k, acu)) : num(k, acu);
      any = true;
    }
    Utility tight = best;
    auto first = *pv.ext.begin();
    if (first.first + 1 != n && num(first.first, first.second) == best) {
      std::size_t m = first.first;
      for (const auto& [k, acu] : pv.ext) {
        if (k < child_first) m = k;
      }
      tight = best - sum_between(pv.flat, m, child_first, all);
      for (const auto& [k, acu] : pv.ext) {
        if (k > m && k + 1 != n) tight = std::max(tight, num(k, acu));
      }
    }
    b.rsau += Ratio(best, plen);
    b.trsau += Ratio(tight, plen);

    Utility adv = 0;
    for (const auto& [k, acu] : pv.ext) {
      if (k + 1 == n) continue;
      std::size_t start = std::min(std::max(k + 1, child_first), pc.cut[q] + 1);
      // admitted utility at flat positions >= start
      adv = std::max(adv, acu + (start == 0 ? 0 : sum_between(pv.flat, start - 1, n, pa.keep[q])));
    }
    b.vtrsau_adv += Ratio(adv, pden);
  }
  return b;
}

}  // namespace hausp
