#include "hausp/miner.hpp"

#include <chrono>
#include <iostream>
#include <stdexcept>

#include "hausp/projection.hpp"

namespace hausp {

std::string to_string(StrategyVersion s) {
  switch (s) {
    case StrategyVersion::rsau: return "rsau";
    case StrategyVersion::trsau: return "trsau";
    case StrategyVersion::advance: return "advance";
  }
  return "?";
}

StrategyVersion parse_strategy(const std::string& text) {
  if (text == "rsau") return StrategyVersion::rsau;
  if (text == "trsau") return StrategyVersion::trsau;
  if (text == "advance") return StrategyVersion::advance;
  throw std::invalid_argument("unknown strategy '" + text + "' (expected rsau|trsau|advance)");
}

namespace {

class Search {
 public:
  Search(const MinerConfig& cfg, const Threshold& t, MiningResult& out)
      : cfg_(cfg), t_(t), out_(out), trace_(cfg.trace_out != nullptr ? *cfg.trace_out : std::cerr) {}

  void run(const Database& d) {
    ProjectedDB root = project_root(d);
    live_bytes_ = root.bytes();
    grow(root, RrsView{}, 0);
  }

 private:
  bool advance() const { return cfg_.strategy == StrategyVersion::advance; }
  bool below(const Ratio& v) const { return v < t_.minau; }

  // Every I-extension, then every S-extension, in label order.
  void grow(const ProjectedDB& p, const RrsView& rrs, std::size_t depth) {
    if (cfg_.max_pattern_length && p.pattern().length() >= *cfg_.max_pattern_length) return;
    out_.stats.max_depth = std::max(out_.stats.max_depth, depth);
    ExtensionItems items = enumerate_extension_items(p);
    for (Item i : items.ilist) extend(p, rrs, i, ExtensionMode::i_extension, depth);
    for (Item i : items.slist) extend(p, rrs, i, ExtensionMode::s_extension, depth);
  }

  Ratio item_bound(const ProjectedDB& parent, const ProjectedDB& child, const RrsView& parent_rrs) const {
    auto red = sequence_reduced(parent, child, parent_rrs);
    Ratio s(0);
    for (const auto& r : red) {
      switch (cfg_.strategy) {
        case StrategyVersion::rsau: s += r.rsau; break;
        case StrategyVersion::trsau: s += r.trsau; break;
        case StrategyVersion::advance: s += r.vtrsau_adv; break;
      }
    }
    return s;
  }

  void extend(const ProjectedDB& parent, const RrsView& parent_rrs, Item item, ExtensionMode mode,
              std::size_t depth) {
    ProjectedDB child = extend_projection(parent, item, mode);
    if (child.empty()) return;
    if (!below(item_bound(parent, child, parent_rrs))) {
      evaluate(parent, child, depth);
    } else {
      ++out_.stats.prunes.irrelevant_item;
      if (!cfg_.item_pruning) evaluate(parent, child, depth);
    }
  }

  // Record the child if it qualifies, recurse when its node bound allows.
  void evaluate(const ProjectedDB& parent, const ProjectedDB& child, std::size_t depth) {
    ++out_.stats.candidates_generated;
    Ratio au = child.average_utility();
    if (!below(au)) {
      out_.results.push_back({child.pattern(), au});
      ++out_.stats.hausps_found;
    }
    if (cfg_.trace) {
      trace_ << trace_line(child.pattern(), au, report_bounds(parent, child, t_, cfg_.rrs_policy)) << '\n';
    }

    RrsView rrs;
    Ratio node;
    if (advance()) {
      rrs = compute_rrs(child, t_, cfg_.rrs_policy);
      out_.stats.prunes.unpromising_item += rrs.rejected_labels();
      node = vpeau_adv(child, rrs);
    } else {
      node = peau_ori(child);
    }
    if (below(node)) {
      ++out_.stats.prunes.peau_node;
      if (cfg_.node_pruning) return;
    }
    std::size_t bytes = child.bytes();
    live_bytes_ += bytes;
    out_.stats.peak_mem_bytes = std::max(out_.stats.peak_mem_bytes, live_bytes_);
    grow(child, rrs, depth + 1);
    live_bytes_ -= bytes;
  }

  const MinerConfig& cfg_;
  const Threshold& t_;
  MiningResult& out_;
  std::ostream& trace_;
  std::size_t live_bytes_ = 0;
};

}  // namespace

MiningResult mine(const Database& d, const MinerConfig& cfg) {
  auto start = std::chrono::steady_clock::now();
  MiningResult out;
  out.threshold = Threshold::from_xi(cfg.xi, d);
  if (cfg.max_pattern_length && *cfg.max_pattern_length == 0) {
    throw std::invalid_argument("max pattern length must be positive");
  }
  Search(cfg, out.threshold, out).run(d);
  sort_results(out.results);
  out.stats.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace hausp
