#include "zsl/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

#include "zsl/classify.hpp"

namespace zsl {

void validate_enum_config(const EnumConfig& cfg) {
  if (cfg.max_length < 1) throw std::invalid_argument("EnumConfig.max_length must be >= 1");
  if (cfg.group.order() > effective_order_cap())
    throw Error(Errc::OrderCapExceeded,
                "group of order " + std::to_string(cfg.group.order()) + " too large for enumeration masks");
}

std::vector<Shard> make_shards(const EnumConfig& cfg) {
  const int64_t n = cfg.group.order();
  std::vector<Shard> shards;
  for (int64_t i = 1; i < n; ++i) {
    shards.push_back({i, -1});
    if (cfg.max_length < 2) continue;
    for (int64_t j = cfg.squarefree_only ? i + 1 : i; j < n; ++j) shards.push_back({i, j});
  }
  return shards;
}

namespace {

struct Dfs {
  const Group& g;
  const EnumConfig& cfg;
  const EnumVisitor& visit;
  std::vector<int64_t> neg;
  std::vector<int64_t> idxs;

  Dfs(const EnumConfig& c, const EnumVisitor& v) : g(c.group), cfg(c), visit(v) {
    neg.resize(static_cast<size_t>(g.order()));
    for (int64_t k = 0; k < g.order(); ++k) neg[static_cast<size_t>(k)] = neg_index(g, k);
  }

  SumsetMask extend(const SumsetMask& mask, int64_t cand) const {
    SumsetMask child = mask;
    mask.for_each([&](int64_t k) { child.set(add_indices(g, k, cand)); });
    child.set(cand);
    return child;
  }

  void descend(const SumsetMask& mask, int64_t next_min, int64_t depth) {
    if (depth >= cfg.max_length) return;
    for (int64_t cand = next_min; cand < g.order(); ++cand) {
      if (mask.test(neg[static_cast<size_t>(cand)])) continue;  // extension gains a zero sum
      const SumsetMask child = extend(mask, cand);
      idxs.push_back(cand);
      visit(idxs, child);
      descend(child, cfg.squarefree_only ? cand + 1 : cand, depth + 1);
      idxs.pop_back();
    }
  }
};

}  // namespace

void enumerate_shard(const EnumConfig& cfg, const Shard& shard, const EnumVisitor& visit) {
  Dfs dfs(cfg, visit);
  SumsetMask first(cfg.group.order());
  first.set(shard.first);
  dfs.idxs.push_back(shard.first);
  if (shard.second < 0) {
    visit(dfs.idxs, first);
    return;
  }
  if (first.test(dfs.neg[static_cast<size_t>(shard.second)])) return;  // (first, second) not zero-sum free
  const SumsetMask pair_mask = dfs.extend(first, shard.second);
  dfs.idxs.push_back(shard.second);
  visit(dfs.idxs, pair_mask);
  dfs.descend(pair_mask, cfg.squarefree_only ? shard.second + 1 : shard.second, 2);
}

namespace {

struct CollectAgg {
  std::vector<std::pair<std::vector<int64_t>, SumsetMask>> items;
  void visit(std::span<const int64_t> idx, const SumsetMask& m) {
    items.emplace_back(std::vector<int64_t>(idx.begin(), idx.end()), m);
  }
  void absorb(CollectAgg&& o) {
    items.insert(items.end(), std::make_move_iterator(o.items.begin()), std::make_move_iterator(o.items.end()));
  }
};

}  // namespace

void enumerate_zero_sum_free(const EnumConfig& cfg, const EnumVisitor& visit) {
  validate_enum_config(cfg);
  if (std::max(1, cfg.workers) == 1) {
    for (const Shard& s : make_shards(cfg)) enumerate_shard(cfg, s, visit);
    return;
  }
  CollectAgg all = enumerate_fold(cfg, CollectAgg{});
  for (const auto& [idx, mask] : all.items) visit(idx, mask);
}

namespace {

struct MaxLenAgg {
  int64_t max_length = 0;
  std::vector<int64_t> witness;
  void visit(std::span<const int64_t> idx, const SumsetMask&) {
    if (static_cast<int64_t>(idx.size()) > max_length) {
      max_length = static_cast<int64_t>(idx.size());
      witness.assign(idx.begin(), idx.end());
    }
  }
  void absorb(MaxLenAgg&& o) {
    if (o.max_length > max_length) {
      max_length = o.max_length;
      witness = std::move(o.witness);
    }
  }
};

}  // namespace

DavenportScan davenport_scan(const Group& g, int workers) {
  EnumConfig cfg{g, g.order() - 1, false, workers};
  const MaxLenAgg agg = enumerate_fold(cfg, MaxLenAgg{});
  DavenportScan out;
  out.max_length = agg.max_length;
  out.davenport = agg.max_length + 1;
  if (!agg.witness.empty()) out.witness = Sequence::from_indices(g, agg.witness);
  return out;
}

int64_t davenport_constant(const Group& g, int workers) { return davenport_scan(g, workers).davenport; }

namespace {

struct FgAgg {
  struct Entry {
    int64_t f = 0;
    std::vector<int64_t> witness;
  };
  std::vector<std::optional<Entry>> best;  // indexed by r
  void visit(std::span<const int64_t> idx, const SumsetMask& m) {
    const size_t r = idx.size();
    const int64_t f = m.count();
    auto& e = best[r];
    if (!e || f < e->f) e = Entry{f, std::vector<int64_t>(idx.begin(), idx.end())};
  }
  void absorb(FgAgg&& o) {
    for (size_t r = 0; r < best.size(); ++r) {
      if (!o.best[r]) continue;
      // strict improvement only: on ties the earlier shard is lexicographically least
      if (!best[r] || o.best[r]->f < best[r]->f) best[r] = std::move(o.best[r]);
    }
  }
};

}  // namespace

std::vector<FgTableEntry> fg_table(const Group& g, int64_t r_max, int workers) {
  if (r_max < 1) throw std::invalid_argument("fg_table needs r_max >= 1");
  EnumConfig cfg{g, std::min(r_max, g.order() - 1), false, workers};
  FgAgg seed;
  seed.best.resize(static_cast<size_t>(cfg.max_length) + 1);
  const FgAgg agg = enumerate_fold(cfg, seed);
  std::vector<FgTableEntry> table;
  for (int64_t r = 1; r <= r_max; ++r) {
    FgTableEntry e;
    e.r = r;
    if (r < static_cast<int64_t>(agg.best.size()) && agg.best[static_cast<size_t>(r)]) {
      e.fg = agg.best[static_cast<size_t>(r)]->f;
      e.witness = Sequence::from_indices(g, agg.best[static_cast<size_t>(r)]->witness);
    }
    table.push_back(std::move(e));
  }
  return table;
}

namespace {

struct AuditAgg {
  const Group* group = nullptr;
  int64_t checked = 0;
  int64_t extremal = 0;
  std::vector<std::vector<int64_t>> violations;
  void visit(std::span<const int64_t> idx, const SumsetMask& m) {
    ++checked;
    const int64_t r = static_cast<int64_t>(idx.size());
    if (m.count() > 2 * r - 1) return;
    ++extremal;
    const Sequence s = Sequence::from_indices(*group, idx);
    if (match_theorem_forms(s).tag == FormTag::NotExtremal)
      violations.emplace_back(idx.begin(), idx.end());
  }
  void absorb(AuditAgg&& o) {
    checked += o.checked;
    extremal += o.extremal;
    violations.insert(violations.end(), std::make_move_iterator(o.violations.begin()),
                      std::make_move_iterator(o.violations.end()));
  }
};

}  // namespace

AuditReport audit_classification(const Group& g, int workers) {
  EnumConfig cfg{g, g.order() - 1, false, workers};
  AuditAgg seed;
  seed.group = &g;
  const AuditAgg agg = enumerate_fold(cfg, seed);
  AuditReport report{g, agg.checked, agg.extremal, {}};
  for (const auto& idx : agg.violations) report.violations.push_back(Sequence::from_indices(g, idx));
  return report;
}

namespace {

constexpr uint64_t kFnvPrime = 1099511628211ULL;

struct StatsAgg {
  int64_t sequences = 0;
  int64_t max_length = 0;
  uint64_t digest = 1469598103934665603ULL;
  void visit(std::span<const int64_t> idx, const SumsetMask& m) {
    ++sequences;
    max_length = std::max(max_length, static_cast<int64_t>(idx.size()));
    for (int64_t v : idx) digest = (digest ^ static_cast<uint64_t>(v)) * kFnvPrime;
    for (uint64_t w : m.words()) digest = (digest ^ w) * kFnvPrime;
  }
  void absorb(StatsAgg&& o) {
    sequences += o.sequences;
    max_length = std::max(max_length, o.max_length);
    digest = (digest * kFnvPrime) ^ o.digest;
  }
};

}  // namespace

EnumStats enumeration_stats(const EnumConfig& cfg) {
  const StatsAgg agg = enumerate_fold(cfg, StatsAgg{});
  return EnumStats{agg.sequences, agg.max_length, agg.digest};
}

}  // namespace zsl
