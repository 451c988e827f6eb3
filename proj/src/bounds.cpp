#include "hausp/bounds.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>
#include <sstream>
#include <stdexcept>

namespace hausp {

std::string to_string(RrsPolicy policy) {
  return policy == RrsPolicy::item_global ? "global" : "occurrence";
}

RrsPolicy parse_rrs_policy(const std::string& text) {
  if (text == "global") return RrsPolicy::item_global;
  if (text == "occurrence") return RrsPolicy::per_occurrence;
  throw std::invalid_argument("unknown rrs policy '" + text + "' (expected global|occurrence)");
}

namespace {

bool reaches(Utility u, const Ratio& minau) { return Ratio(u) >= minau; }

}  // namespace

Utility RrsView::after(std::size_t list_pos, std::uint32_t ind) const {
  std::uint32_t first = first_.at(list_pos);
  if (ind < first) throw std::out_of_range("rrs lookup before the first extension position");
  return suffix_[list_pos].at(ind - first);
}

bool RrsView::admits(const SeqArrayEntry& occ) const {
  if (policy_ == RrsPolicy::per_occurrence) return reaches(occ.utility, minau_);
  auto label = static_cast<std::size_t>(occ.item);
  return label < admitted_label_.size() && admitted_label_[label];
}

namespace {

// Earliest entry c with max(acu of later entries) + after(c) <= best. The last
// entry always qualifies.
std::uint32_t cut_entry(const std::vector<ExtensionEntry>& entries, Utility best,
                        const std::function<Utility(std::uint32_t)>& after) {
  std::vector<Utility> later(entries.size(), -1);
  for (std::size_t k = entries.size() - 1; k > 0; --k) {
    later[k - 1] = later[k];
    if (entries[k].rlen > 0) later[k - 1] = std::max(later[k - 1], entries[k].acu);
  }
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (later[k] < 0 || later[k] + after(entries[k].exind) <= best) return entries[k].exind;
  }
  return entries.back().exind;
}

}  // namespace

RrsView compute_rrs(const ProjectedDB& p, const Threshold& t, RrsPolicy policy) {
  RrsView v;
  v.policy_ = policy;
  v.minau_ = t.minau;
  const auto universe = static_cast<std::size_t>(p.index().max_item + 1);
  const auto& lists = p.lists();

  // Pass 1: per-label totals over each sequence's largest remaining sequence.
  std::vector<Utility> total(universe, 0);
  std::vector<char> seen(universe, 0);
  std::vector<char> seen_admitted(universe, 0);
  for (const auto& l : lists) {
    const SeqArray& a = p.array(l);
    for (std::uint32_t ind = l.entries.front().exind + 1; ind <= a.size(); ++ind) {
      const auto& occ = a.at(ind);
      auto label = static_cast<std::size_t>(occ.item);
      total[label] += occ.utility;
      seen[label] = 1;
      if (policy == RrsPolicy::per_occurrence && reaches(occ.utility, t.minau)) seen_admitted[label] = 1;
      ++v.visits_;
    }
  }
  if (policy == RrsPolicy::item_global) {
    v.admitted_label_.assign(universe, 0);
    for (std::size_t i = 0; i < universe; ++i) {
      if (seen[i] && reaches(total[i], t.minau)) {
        v.admitted_label_[i] = 1;
        seen_admitted[i] = 1;
      }
    }
  }
  for (std::size_t i = 0; i < universe; ++i) {
    if (seen_admitted[i]) {
      ++v.admitted_labels_;
    } else if (seen[i]) {
      ++v.rejected_labels_;
    }
  }

  // Pass 2: admitted suffix sums, walking each remaining sequence backwards.
  v.first_.reserve(lists.size());
  v.suffix_.reserve(lists.size());
  for (const auto& l : lists) {
    const SeqArray& a = p.array(l);
    std::uint32_t first = l.entries.front().exind;
    std::vector<Utility> suffix(a.size() - first + 1, 0);
    Utility acc = 0;
    for (std::uint32_t ind = a.size(); ind > first; --ind) {
      suffix[ind - first] = acc;
      const auto& occ = a.at(ind);
      if (v.admits(occ)) acc += occ.utility;
      ++v.visits_;
    }
    suffix[0] = acc;
    v.first_.push_back(first);
    v.suffix_.push_back(std::move(suffix));
  }

  // Pass 3: best numerator and cut per sequence, then labels reaching minau after the cuts.
  std::fill(total.begin(), total.end(), 0);
  for (std::size_t k = 0; k < lists.size(); ++k) {
    const auto& l = lists[k];
    const SeqArray& a = p.array(l);
    auto after = [&](std::uint32_t ind) { return v.after(k, ind); };
    Utility best = 0;
    for (const auto& e : l.entries) {
      if (e.rlen > 0) best = std::max(best, e.acu + after(e.exind));
    }
    std::uint32_t cut = cut_entry(l.entries, best, after);
    v.best_.push_back(best);
    v.cut_.push_back(cut);
    for (std::uint32_t ind = cut + 1; ind <= a.size(); ++ind) {
      const auto& occ = a.at(ind);
      if (v.admits(occ)) total[static_cast<std::size_t>(occ.item)] += occ.utility;
      ++v.visits_;
    }
  }
  for (std::size_t i = 0; i < universe; ++i) {
    if (total[i] > 0 && reaches(total[i], t.minau)) ++v.distinct_count_;
  }
  return v;
}

namespace {

struct ListNumerators {
  bool any = false;          // some entry with a non-empty remaining sequence
  Utility best_rs = 0;       // max acu + u_rs
};

ListNumerators numerators(const ProjectedDB& p, std::size_t list_pos) {
  ListNumerators n;
  const auto& l = p.lists()[list_pos];
  const SeqArray& a = p.array(l);
  for (const auto& e : l.entries) {
    if (e.rlen == 0) continue;
    Utility rs = e.acu + a.at(e.exind).ru;
    n.best_rs = n.any ? std::max(n.best_rs, rs) : rs;
    n.any = true;
  }
  return n;
}

template <class T>
Ratio sum_over(const std::vector<T>& v, Ratio T::*field) {
  Ratio s(0);
  for (const auto& x : v) s += x.*field;
  return s;
}

}  // namespace

std::vector<SequencePeau> sequence_peau(const ProjectedDB& p, const RrsView& rrs) {
  std::vector<SequencePeau> out;
  if (p.is_root()) return out;
  const auto len = static_cast<Utility>(p.aclen());
  const auto adv_den = len + static_cast<Utility>(rrs.distinct_count());
  for (std::size_t k = 0; k < p.lists().size(); ++k) {
    auto n = numerators(p, k);
    SequencePeau s;
    s.sid = p.lists()[k].sid;
    if (n.any) {
      s.peau_ori = Ratio(n.best_rs, len);
      s.peau_inc = Ratio(n.best_rs, len + 1);
      s.peau_rev = Ratio(rrs.best(k), len + 1);
      s.vpeau_adv = Ratio(rrs.best(k), adv_den);
    }
    out.push_back(s);
  }
  return out;
}

namespace {

// TRSAU numerator in one sequence.
//
// When the parent's best acu + u_rs sits at its first entry, the utility between
// the last parent entry before the child's first extension occurrence and that
// occurrence is removed. Entries after that parent entry keep their own
// numerator as a floor, since instances may restart there.
Utility tight_rs(const SeqArray& a, const std::vector<ExtensionEntry>& parent, std::uint32_t child_first,
                 Utility best) {
  auto num_at = [&](const ExtensionEntry& e) { return e.acu + a.at(e.exind).ru; };
  const ExtensionEntry& first = parent.front();
  if (first.rlen == 0 || num_at(first) != best) return best;
  std::size_t m = 0;
  for (std::size_t k = 0; k < parent.size() && parent[k].exind < child_first; ++k) m = k;
  const auto& from = a.at(parent[m].exind);
  const auto& to = a.at(child_first);
  Utility value = best - (from.ru - to.utility - to.ru);
  for (std::size_t k = m + 1; k < parent.size(); ++k) {
    if (parent[k].rlen > 0) value = std::max(value, num_at(parent[k]));
  }
  return value;
}

// VTRSAU_Adv numerator in one sequence: for each parent entry e, acu(e) plus
// the admitted utility from min(max(e + 1, child_first), cut + 1) onwards.
Utility tight_rrs(const RrsView& rrs, std::size_t list_pos, const std::vector<ExtensionEntry>& parent,
                  std::uint32_t child_first) {
  Utility best = 0;
  const std::uint32_t cut = rrs.cut(list_pos);
  for (const auto& e : parent) {
    if (e.rlen == 0) continue;
    std::uint32_t start = std::min(std::max(e.exind + 1, child_first), cut + 1);
    best = std::max(best, e.acu + rrs.after(list_pos, start - 1));
  }
  return best;
}

}  // namespace

std::vector<SequenceReduced> sequence_reduced(const ProjectedDB& parent, const ProjectedDB& child,
                                              const RrsView& parent_rrs) {
  std::vector<SequenceReduced> out;
  if (child.pattern().prefix() != parent.pattern()) {
    throw std::invalid_argument("child projection is not an extension of the parent");
  }
  if (parent.is_root()) {
    for (const auto& cl : child.lists()) {
      const auto& front = child.array(cl).entries.front();
      Ratio u(front.utility + front.ru);
      out.push_back({cl.sid, u, u, u});
    }
    return out;
  }
  const auto len = static_cast<Utility>(parent.aclen());
  const auto& plists = parent.lists();
  // Without a view for this parent only the rs-based values are meaningful.
  const bool with_rrs = parent_rrs.list_count() == plists.size();

  std::vector<std::size_t> pos;  // parent list for each child list
  pos.reserve(child.lists().size());
  std::size_t k = 0;
  for (const auto& cl : child.lists()) {
    while (k < plists.size() && plists[k].seq < cl.seq) ++k;
    if (k == plists.size() || plists[k].seq != cl.seq) {
      throw std::invalid_argument("child projection is not an extension of the parent");
    }
    pos.push_back(k);
  }

  // Labels reaching minau after the parent's cuts, over the child's sequences only.
  Utility adv_den = len;
  if (with_rrs) {
    std::unordered_map<Item, Utility> total;
    for (std::size_t c = 0; c < pos.size(); ++c) {
      const SeqArray& a = parent.array(plists[pos[c]]);
      for (std::uint32_t ind = parent_rrs.cut(pos[c]) + 1; ind <= a.size(); ++ind) {
        const auto& occ = a.at(ind);
        if (parent_rrs.admits(occ)) total[occ.item] += occ.utility;
      }
    }
    for (const auto& [item, u] : total) {
      if (reaches(u, parent_rrs.minau())) ++adv_den;
    }
  }

  for (std::size_t c = 0; c < pos.size(); ++c) {
    const auto& cl = child.lists()[c];
    const auto& pl = plists[pos[c]];
    const SeqArray& a = parent.array(pl);
    auto n = numerators(parent, pos[c]);
    std::uint32_t child_first = cl.entries.front().exind;
    SequenceReduced r;
    r.sid = cl.sid;
    r.rsau = Ratio(n.best_rs, len);
    r.trsau = Ratio(tight_rs(a, pl.entries, child_first, n.best_rs), len);
    if (with_rrs) r.vtrsau_adv = Ratio(tight_rrs(parent_rrs, pos[c], pl.entries, child_first), adv_den);
    out.push_back(r);
  }
  return out;
}

Ratio peau_ori(const ProjectedDB& p) {
  Ratio s(0);
  if (p.is_root()) return s;
  for (std::size_t k = 0; k < p.lists().size(); ++k) {
    auto n = numerators(p, k);
    if (n.any) s += Ratio(n.best_rs, static_cast<Utility>(p.aclen()));
  }
  return s;
}

Ratio peau_inc(const ProjectedDB& p) {
  Ratio s(0);
  if (p.is_root()) return s;
  for (std::size_t k = 0; k < p.lists().size(); ++k) {
    auto n = numerators(p, k);
    if (n.any) s += Ratio(n.best_rs, static_cast<Utility>(p.aclen() + 1));
  }
  return s;
}

Ratio peau_rev(const ProjectedDB& p, const RrsView& rrs) {
  return sum_over(sequence_peau(p, rrs), &SequencePeau::peau_rev);
}

Ratio vpeau_adv(const ProjectedDB& p, const RrsView& rrs) {
  return sum_over(sequence_peau(p, rrs), &SequencePeau::vpeau_adv);
}

Ratio rsau(const ProjectedDB& parent, const ProjectedDB& child) {
  return sum_over(sequence_reduced(parent, child, RrsView{}), &SequenceReduced::rsau);
}

Ratio trsau(const ProjectedDB& parent, const ProjectedDB& child) {
  return sum_over(sequence_reduced(parent, child, RrsView{}), &SequenceReduced::trsau);
}

Ratio vtrsau_adv(const ProjectedDB& parent, const ProjectedDB& child, const RrsView& parent_rrs) {
  return sum_over(sequence_reduced(parent, child, parent_rrs), &SequenceReduced::vtrsau_adv);
}

BoundReport report_bounds(const ProjectedDB& parent, const ProjectedDB& node, const Threshold& t,
                          RrsPolicy policy) {
  BoundReport b;
  RrsView node_rrs = compute_rrs(node, t, policy);
  auto peau = sequence_peau(node, node_rrs);
  b.peau_ori = sum_over(peau, &SequencePeau::peau_ori);
  b.peau_inc = sum_over(peau, &SequencePeau::peau_inc);
  b.peau_rev = sum_over(peau, &SequencePeau::peau_rev);
  b.vpeau_adv = sum_over(peau, &SequencePeau::vpeau_adv);
  b.rrs_distinct = node_rrs.distinct_count();
  RrsView parent_rrs = parent.is_root() ? RrsView{} : compute_rrs(parent, t, policy);
  auto red = sequence_reduced(parent, node, parent_rrs);
  b.rsau = sum_over(red, &SequenceReduced::rsau);
  b.trsau = sum_over(red, &SequenceReduced::trsau);
  b.vtrsau_adv = sum_over(red, &SequenceReduced::vtrsau_adv);
  return b;
}

std::string trace_line(const Pattern& s, const Ratio& au, const BoundReport& b) {
  std::ostringstream os;
  os << s.str() << " | " << au << " | " << b.peau_ori << " | " << b.vpeau_adv << " | " << b.rsau << " | "
     << b.trsau << " | " << b.vtrsau_adv;
  return os.str();
}

}  // namespace hausp
