#include "zsl/sequence.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>

namespace zsl {

Sequence Sequence::from_counts(Group g, std::vector<std::pair<int64_t, int64_t>> counts,
                               bool allow_zero) {
  std::map<int64_t, int64_t> merged;
  for (auto [idx, mult] : counts) {
    if (idx < 0 || idx >= g.order())
      throw Error(Errc::IndexOutOfRange, "element index " + std::to_string(idx) + " outside group " + g.literal());
    if (mult < 1) throw Error(Errc::ParseError, "multiplicity must be >= 1");
    if (idx == 0 && !allow_zero)
      throw Error(Errc::ZeroElementRejected, "sequence contains the identity element");
    merged[idx] += mult;
  }
  Sequence s(std::move(g));
  s.counts_.assign(merged.begin(), merged.end());
  for (auto [idx, mult] : s.counts_) s.length_ += mult;
  return s;
}

Sequence Sequence::from_indices(Group g, std::span<const int64_t> indices, bool allow_zero) {
  std::vector<std::pair<int64_t, int64_t>> counts;
  counts.reserve(indices.size());
  for (int64_t idx : indices) counts.emplace_back(idx, 1);
  return from_counts(std::move(g), std::move(counts), allow_zero);
}

int64_t Sequence::multiplicity(int64_t element_index) const {
  auto it = std::lower_bound(counts_.begin(), counts_.end(), element_index,
                             [](const auto& p, int64_t v) { return p.first < v; });
  return (it != counts_.end() && it->first == element_index) ? it->second : 0;
}

std::vector<int64_t> Sequence::support() const {
  std::vector<int64_t> out;
  out.reserve(counts_.size());
  for (auto [idx, mult] : counts_) out.push_back(idx);
  return out;
}

Sequence parse_sequence(const Group& g, std::string_view text, bool allow_zero) {
  std::vector<std::pair<int64_t, int64_t>> counts;
  size_t pos = 0;
  const auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    // element literal: parenthesized tuple or bare token up to ws/'^'
    std::string_view elem_text;
    if (text[pos] == '(') {
      const size_t close = text.find(')', pos);
      if (close == std::string_view::npos)
        throw Error(Errc::ParseError, "unbalanced parentheses in sequence literal");
      elem_text = text.substr(pos, close - pos + 1);
      pos = close + 1;
    } else {
      const size_t start = pos;
      while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) && text[pos] != '^') ++pos;
      elem_text = text.substr(start, pos - start);
    }
    const Element e = parse_element(g, elem_text);

    int64_t mult = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      const size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start) throw Error(Errc::ParseError, "missing multiplicity after '^'");
      std::from_chars(text.data() + start, text.data() + pos, mult);
      if (mult < 1) throw Error(Errc::ParseError, "multiplicity must be >= 1");
    }
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])))
      throw Error(Errc::ParseError, "unexpected character in sequence literal");
    counts.emplace_back(index_of(g, e), mult);
    skip_ws();
  }
  return Sequence::from_counts(g, std::move(counts), allow_zero);
}

std::string format_sequence(const Sequence& s) {
  std::string out;
  for (auto [idx, mult] : s.counts()) {
    if (!out.empty()) out += ' ';
    out += format_element(s.group(), element_at(s.group(), idx));
    if (mult > 1) {
      out += '^';
      out += std::to_string(mult);
    }
  }
  return out;
}

Element sigma(const Sequence& s) {
  Element total = zero(s.group());
  for (auto [idx, mult] : s.counts())
    total = add(s.group(), total, scalar_mul(s.group(), mult, element_at(s.group(), idx)));
  return total;
}

int64_t h_max(const Sequence& s) {
  int64_t best = 0;
  for (auto [idx, mult] : s.counts()) best = std::max(best, mult);
  return best;
}

static void check_same_group(const Sequence& s, const Sequence& t) {
  if (!(s.group() == t.group()))
    throw Error(Errc::RankMismatch, "sequences belong to different groups");
}

Sequence concat(const Sequence& s, const Sequence& t) {
  check_same_group(s, t);
  std::vector<std::pair<int64_t, int64_t>> counts = s.counts();
  counts.insert(counts.end(), t.counts().begin(), t.counts().end());
  return Sequence::from_counts(s.group(), std::move(counts), /*allow_zero=*/true);
}

bool is_subsequence(const Sequence& t, const Sequence& s) {
  check_same_group(s, t);
  for (auto [idx, mult] : t.counts())
    if (s.multiplicity(idx) < mult) return false;
  return true;
}

Sequence remove_sub(const Sequence& s, const Sequence& t) {
  check_same_group(s, t);
  if (!is_subsequence(t, s))
    throw Error(Errc::NotASubsequence, "'" + format_sequence(t) + "' does not divide '" + format_sequence(s) + "'");
  std::vector<std::pair<int64_t, int64_t>> counts;
  for (auto [idx, mult] : s.counts()) {
    const int64_t rest = mult - t.multiplicity(idx);
    if (rest > 0) counts.emplace_back(idx, rest);
  }
  return Sequence::from_counts(s.group(), std::move(counts), /*allow_zero=*/true);
}

}  // namespace zsl
