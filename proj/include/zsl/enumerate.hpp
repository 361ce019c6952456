#pragma once

// Exhaustive enumeration of zero-sum free sequences as nondecreasing element
// index tuples, with incremental sum-set masks along the recursion stack.
// Appending g to S is rejected in O(1): a zero sum appears iff -g is already
// a subsequence sum. Accepted children update the mask in O(|G|).
//
// The search forest is partitioned into shards by the first one or two index
// choices. Shards are independent, each yields its sequences in lexicographic
// order, and the shard list itself is ordered lexicographically, so any
// fold that absorbs shard results in list order is deterministic no matter
// how many workers ran the shards.

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

#include "zsl/sumset.hpp"

namespace zsl {

struct EnumConfig {
  Group group;
  int64_t max_length = 0;  // required >= 1
  bool squarefree_only = false;
  int workers = 1;
};

using EnumVisitor = std::function<void(std::span<const int64_t>, const SumsetMask&)>;

/// One unit of the search forest: all sequences starting with `first`
/// (second < 0) restricted to length 1, or all sequences whose first two
/// indices are (first, second).
struct Shard {
  int64_t first = -1;
  int64_t second = -1;
};

/// Shards in lexicographic order of the sequences they own.
std::vector<Shard> make_shards(const EnumConfig& cfg);

/// Runs one shard; the visitor sees each sequence exactly once, in
/// lexicographic index-tuple order, together with its sum-set mask.
void enumerate_shard(const EnumConfig& cfg, const Shard& shard, const EnumVisitor& visit);

/// Throws OrderCapExceeded / std::invalid_argument on a bad config.
void validate_enum_config(const EnumConfig& cfg);

/// Every zero-sum free multiset of length <= max_length, exactly once, in
/// lexicographic order regardless of cfg.workers (parallel runs buffer
/// per-shard results and replay them in shard order).
void enumerate_zero_sum_free(const EnumConfig& cfg, const EnumVisitor& visit);

/// Parallel fold: one aggregate per shard, absorbed in shard order.
/// Agg needs visit(span<const int64_t>, const SumsetMask&) and absorb(Agg&&).
template <class Agg>
Agg enumerate_fold(const EnumConfig& cfg, const Agg& seed) {
  validate_enum_config(cfg);
  const std::vector<Shard> shards = make_shards(cfg);
  std::vector<Agg> results(shards.size(), seed);
  const int workers = std::max(1, cfg.workers);
  if (workers == 1) {
    for (size_t i = 0; i < shards.size(); ++i)
      enumerate_shard(cfg, shards[i],
                      [&](std::span<const int64_t> idx, const SumsetMask& m) { results[i].visit(idx, m); });
  } else {
    std::atomic<size_t> next{0};
    auto work = [&] {
      for (;;) {
        const size_t i = next.fetch_add(1);
        if (i >= shards.size()) return;
        enumerate_shard(cfg, shards[i],
                        [&](std::span<const int64_t> idx, const SumsetMask& m) { results[i].visit(idx, m); });
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  Agg acc = seed;
  for (Agg& r : results) acc.absorb(std::move(r));
  return acc;
}

/// D(G): 1 + the maximum length of a zero-sum free sequence, by brute force.
int64_t davenport_constant(const Group& g, int workers = 1);

struct DavenportScan {
  int64_t davenport = 0;
  int64_t max_length = 0;
  std::optional<Sequence> witness;  // lexicographically least of maximum length
};
DavenportScan davenport_scan(const Group& g, int workers = 1);

/// f_G(r) = min f(S) over zero-sum free S with |S| = r; absent = none exist.
struct FgTableEntry {
  int64_t r = 0;
  std::optional<int64_t> fg;
  std::optional<Sequence> witness;  // lexicographically least achiever
};
std::vector<FgTableEntry> fg_table(const Group& g, int64_t r_max, int workers = 1);

/// Classification audit: every zero-sum free S with f(S) <= 2|S|-1 must
/// match one of the four structural forms; anything else is a violation.
struct AuditReport {
  Group group;
  int64_t checked = 0;   // zero-sum free sequences enumerated
  int64_t extremal = 0;  // of those, f(S) <= 2|S|-1
  std::vector<Sequence> violations;
};
AuditReport audit_classification(const Group& g, int workers = 1);

/// Count / max length / order-sensitive digest of a full enumeration; the
/// digest doubles as a cross-worker determinism check.
struct EnumStats {
  int64_t sequences = 0;
  int64_t max_length = 0;
  uint64_t digest = 0;
};
EnumStats enumeration_stats(const EnumConfig& cfg);

}  // namespace zsl
