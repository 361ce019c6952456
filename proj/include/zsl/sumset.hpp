#pragma once

// The set of subsequence sums as a |G|-bit mask, computed by dynamic
// programming: appending one copy of g to S turns the mask M into
// M | (M + g) | {g}, where M + g is the index permutation induced by
// addition. Bit k corresponds to element_at(k); popcount is f(S).

#include <cstdint>
#include <span>
#include <vector>

#include "zsl/sequence.hpp"

namespace zsl {

class SumsetMask {
 public:
  SumsetMask() = default;
  explicit SumsetMask(int64_t universe)
      : universe_(universe), words_(static_cast<size_t>((universe + 63) / 64), 0) {}

  int64_t universe() const { return universe_; }

  bool test(int64_t i) const { return (words_[static_cast<size_t>(i >> 6)] >> (i & 63)) & 1; }
  void set(int64_t i) { words_[static_cast<size_t>(i >> 6)] |= uint64_t{1} << (i & 63); }

  bool zero_member() const { return !words_.empty() && (words_[0] & 1); }

  int64_t count() const;
  bool any() const;

  bool operator==(const SumsetMask&) const = default;
  bool is_subset_of(const SumsetMask& other) const;

  void or_with(const SumsetMask& other);

  /// Sorted indices of the set bits.
  std::vector<int64_t> indices() const;

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (size_t w = 0; w < words_.size(); ++w) {
      uint64_t bits = words_[w];
      while (bits) {
        const int b = std::countr_zero(bits);
        fn(static_cast<int64_t>(w * 64 + static_cast<size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  const std::vector<uint64_t>& words() const { return words_; }

 private:
  int64_t universe_ = 0;
  std::vector<uint64_t> words_;
};

/// mask | (mask shifted by g) | {g}; perm must be translation_permutation(G, g).
SumsetMask extend_sums(const SumsetMask& mask, std::span<const int64_t> perm, int64_t g_index);

/// Exact set of sums over nonempty subsequences of S.
SumsetMask subsequence_sums(const Sequence& s);

/// f(S) = |Sigma(S)|.
int64_t f_value(const Sequence& s);

/// True iff no nonempty subsequence sums to zero; true for the empty sequence.
bool is_zero_sum_free(const Sequence& s);

/// Direct enumeration of all nonempty submultisets; |S| <= 20.
/// Test oracle: an independent path that must agree with subsequence_sums.
SumsetMask naive_sums_oracle(const Sequence& s);

}  // namespace zsl
