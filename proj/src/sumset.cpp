#include "zsl/sumset.hpp"

#include <bit>

namespace zsl {

int64_t SumsetMask::count() const {
  int64_t n = 0;
  for (uint64_t w : words_) n += std::popcount(w);
  return n;
}

bool SumsetMask::any() const {
  for (uint64_t w : words_)
    if (w) return true;
  return false;
}

bool SumsetMask::is_subset_of(const SumsetMask& other) const {
  for (size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

void SumsetMask::or_with(const SumsetMask& other) {
  for (size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
}

std::vector<int64_t> SumsetMask::indices() const {
  std::vector<int64_t> out;
  out.reserve(static_cast<size_t>(count()));
  for_each([&](int64_t i) { out.push_back(i); });
  return out;
}

SumsetMask extend_sums(const SumsetMask& mask, std::span<const int64_t> perm, int64_t g_index) {
  SumsetMask out = mask;
  mask.for_each([&](int64_t k) { out.set(perm[static_cast<size_t>(k)]); });
  out.set(g_index);
  return out;
}

SumsetMask subsequence_sums(const Sequence& s) {
  const Group& g = s.group();
  SumsetMask mask(g.order());
  for (auto [idx, mult] : s.counts()) {
    const std::vector<int64_t> perm = translation_permutation(g, idx);
    for (int64_t j = 0; j < mult; ++j) mask = extend_sums(mask, perm, idx);
  }
  return mask;
}

int64_t f_value(const Sequence& s) { return subsequence_sums(s).count(); }

bool is_zero_sum_free(const Sequence& s) { return !subsequence_sums(s).zero_member(); }

SumsetMask naive_sums_oracle(const Sequence& s) {
  if (s.length() > 20)
    throw Error(Errc::TooLargeForOracle, "|S| = " + std::to_string(s.length()) + " > 20");
  const Group& g = s.group();
  SumsetMask mask(g.order());
  const auto& counts = s.counts();

  // Walk every choice vector (j_1,...,j_m), 0 <= j_i <= mult_i, by element
  // arithmetic only; record the sum of each nonempty choice.
  std::vector<int64_t> choice(counts.size(), 0);
  const auto record = [&] {
    bool nonempty = false;
    Element total = zero(g);
    for (size_t i = 0; i < counts.size(); ++i) {
      if (choice[i] == 0) continue;
      nonempty = true;
      total = add(g, total, scalar_mul(g, choice[i], element_at(g, counts[i].first)));
    }
    if (nonempty) mask.set(index_of(g, total));
  };
  while (true) {
    record();
    size_t i = 0;
    while (i < counts.size() && choice[i] == counts[i].second) {
      choice[i] = 0;
      ++i;
    }
    if (i == counts.size()) break;
    ++choice[i];
  }
  return mask;
}

}  // namespace zsl
