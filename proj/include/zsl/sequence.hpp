#pragma once

// Multiset sequences over a group. A sequence is a free-monoid word whose
// order never matters, so it is stored as a sorted (element index, mult >= 1)
// count table. By default the identity element is rejected at construction:
// a sequence containing 0 is never zero-sum free, and every consumer here
// analyzes candidate zero-sum free inputs.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zsl/group.hpp"

namespace zsl {

class Sequence {
 public:
  explicit Sequence(Group g) : group_(std::move(g)) {}

  /// counts: (element index, multiplicity) pairs; merged, validated, sorted.
  static Sequence from_counts(Group g, std::vector<std::pair<int64_t, int64_t>> counts,
                              bool allow_zero = false);
  /// Multiset from a nondecreasing-or-not list of element indices.
  static Sequence from_indices(Group g, std::span<const int64_t> indices, bool allow_zero = false);

  const Group& group() const { return group_; }
  const std::vector<std::pair<int64_t, int64_t>>& counts() const { return counts_; }

  int64_t length() const { return length_; }
  bool empty() const { return counts_.empty(); }
  int64_t multiplicity(int64_t element_index) const;
  std::vector<int64_t> support() const;
  int64_t support_size() const { return static_cast<int64_t>(counts_.size()); }

  bool operator==(const Sequence& other) const {
    return group_ == other.group_ && counts_ == other.counts_;
  }

 private:
  Group group_;
  std::vector<std::pair<int64_t, int64_t>> counts_;  // sorted by element index
  int64_t length_ = 0;
};

/// Grammar: whitespace-separated terms "elem" or "elem^mult" with mult >= 1.
Sequence parse_sequence(const Group& g, std::string_view text, bool allow_zero = false);

/// Canonical literal, terms sorted by element index, "^1" omitted.
std::string format_sequence(const Sequence& s);

/// Sum of all terms with multiplicity; the empty sequence sums to zero.
Element sigma(const Sequence& s);

/// Maximum multiplicity, 0 for the empty sequence.
int64_t h_max(const Sequence& s);

Sequence concat(const Sequence& s, const Sequence& t);

/// True iff v_g(T) <= v_g(S) for every g.
bool is_subsequence(const Sequence& t, const Sequence& s);

/// S with the terms of T deleted; requires T | S.
Sequence remove_sub(const Sequence& s, const Sequence& t);

}  // namespace zsl
