#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hausp/model.hpp"
#include "hausp/projection.hpp"

namespace hausp {

/// Which remaining-sequence occurrences count towards the remaining rising
/// sequence (rrs).
///
/// item_global admits every occurrence of a label whose utility, summed over the
/// remaining sequences after each sequence's first extension position, reaches
/// minau. per_occurrence admits an occurrence when its own utility reaches minau;
/// it is cheaper but the Advance pruning tests are not safe under it.
enum class RrsPolicy { item_global, per_occurrence };

std::string to_string(RrsPolicy policy);
RrsPolicy parse_rrs_policy(const std::string& text);

/// rrs utilities for one projection at one threshold.
///
/// Besides the admitted suffix sums, each sequence gets a cut entry: the
/// earliest extension entry c such that no later entry's acu plus the admitted
/// utility after c beats the sequence's best acu + u_rrs. |rrs|_d counts the
/// admitted labels whose utility after the cuts, summed over the projection,
/// reaches minau.
class RrsView {
 public:
  RrsView() = default;

  /// Admitted utility strictly after occurrence `ind` of the sequence behind
  /// `list_pos` (an index into the projection's lists). `ind` must not precede
  /// the list's first extension entry.
  Utility after(std::size_t list_pos, std::uint32_t ind) const;
  bool admits(const SeqArrayEntry& occ) const;

  /// max acu + u_rrs over entries with a non-empty remaining sequence; 0 if none.
  Utility best(std::size_t list_pos) const { return best_.at(list_pos); }
  /// exind of the cut entry.
  std::uint32_t cut(std::size_t list_pos) const { return cut_.at(list_pos); }

  /// |rrs|_d.
  std::size_t distinct_count() const { return distinct_count_; }
  /// Labels admitted into rrs numerators.
  std::size_t admitted_labels() const { return admitted_labels_; }
  /// Labels present in some remaining sequence but not admitted.
  std::size_t rejected_labels() const { return rejected_labels_; }
  RrsPolicy policy() const { return policy_; }
  const Ratio& minau() const { return minau_; }
  /// Occurrences inspected while building the view; linear in remaining-sequence length.
  std::uint64_t visits() const { return visits_; }
  /// Number of projection lists covered; 0 for a default-constructed view.
  std::size_t list_count() const { return first_.size(); }

 private:
  friend RrsView compute_rrs(const ProjectedDB& p, const Threshold& t, RrsPolicy policy);

  RrsPolicy policy_ = RrsPolicy::item_global;
  Ratio minau_;
  std::vector<char> admitted_label_;            // item_global only
  std::vector<std::uint32_t> first_;            // per list: first entry exind
  std::vector<std::vector<Utility>> suffix_;    // per list: admitted utility after first_ + k
  std::vector<Utility> best_;
  std::vector<std::uint32_t> cut_;
  std::size_t distinct_count_ = 0;
  std::size_t admitted_labels_ = 0;
  std::size_t rejected_labels_ = 0;
  std::uint64_t visits_ = 0;
};

RrsView compute_rrs(const ProjectedDB& p, const Threshold& t, RrsPolicy policy);

/// Per-sequence values of the prefix-extension family for one projection.
struct SequencePeau {
  std::int64_t sid = 0;
  Ratio peau_ori;
  Ratio peau_inc;
  Ratio peau_rev;
  Ratio vpeau_adv;
};

/// Per-sequence values of the reduced family for a child given its parent.
struct SequenceReduced {
  std::int64_t sid = 0;
  Ratio rsau;        // parent's PEAU_Ori in this sequence
  Ratio trsau;
  Ratio vtrsau_adv;
};

std::vector<SequencePeau> sequence_peau(const ProjectedDB& p, const RrsView& rrs);

/// `parent_rrs` may be default-constructed, in which case vtrsau_adv is left 0.
std::vector<SequenceReduced> sequence_reduced(const ProjectedDB& parent, const ProjectedDB& child,
                                              const RrsView& parent_rrs);

Ratio peau_ori(const ProjectedDB& p);
Ratio peau_inc(const ProjectedDB& p);
Ratio peau_rev(const ProjectedDB& p, const RrsView& rrs);
Ratio vpeau_adv(const ProjectedDB& p, const RrsView& rrs);

/// Reduced bounds of `child`, one extension step below `parent`. For a root
/// parent every value is the summed utility of the sequences containing the child.
Ratio rsau(const ProjectedDB& parent, const ProjectedDB& child);
Ratio trsau(const ProjectedDB& parent, const ProjectedDB& child);
Ratio vtrsau_adv(const ProjectedDB& parent, const ProjectedDB& child, const RrsView& parent_rrs);

struct BoundReport {
  Ratio peau_ori;
  Ratio peau_inc;
  Ratio peau_rev;
  Ratio vpeau_adv;
  Ratio rsau;
  Ratio trsau;
  Ratio vtrsau_adv;
  std::size_t rrs_distinct = 0;  // |rrs|_d of the node

  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

/// All seven values for `node`; the reduced family treats `node` as a child of `parent`.
BoundReport report_bounds(const ProjectedDB& parent, const ProjectedDB& node, const Threshold& t,
                          RrsPolicy policy);

/// "pattern | au | peau_ori | vpeau_adv | rsau | trsau | vtrsau_adv"
std::string trace_line(const Pattern& s, const Ratio& au, const BoundReport& b);

}  // namespace hausp
