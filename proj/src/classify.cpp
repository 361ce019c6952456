#include "zsl/classify.hpp"

#include <algorithm>
#include <unordered_map>

namespace zsl {

const char* to_string(FormTag tag) {
  switch (tag) {
    case FormTag::SmoothForm: return "SmoothForm";
    case FormTag::PowerTimesSingleton: return "PowerTimesSingleton";
    case FormTag::TwoBlockDoubled: return "TwoBlockDoubled";
    case FormTag::TwoBlockDoubledPlusDiff: return "TwoBlockDoubledPlusDiff";
    case FormTag::NotExtremal: return "NotExtremal";
    case FormTag::NotZeroSumFree: return "NotZeroSumFree";
  }
  return "?";
}

std::optional<SmoothCertificate> smooth_certificate(const Sequence& s, const Element& base) {
  const Group& g = s.group();
  if (s.empty()) return std::nullopt;
  const int64_t ord = element_order(g, base);
  if (ord < 2) return std::nullopt;  // base = 0 cannot host n < ord(g)

  // minimal positive t with t*base = x, for every multiple x of base
  std::unordered_map<int64_t, int64_t> dlog;
  Element h = base;
  for (int64_t t = 1; t < ord; ++t) {
    dlog.emplace(index_of(g, h), t);
    h = add(g, h, base);
  }

  std::vector<int64_t> coeffs;
  coeffs.reserve(static_cast<size_t>(s.length()));
  int64_t n = 0;
  for (auto [idx, mult] : s.counts()) {
    auto it = dlog.find(idx);
    if (it == dlog.end()) return std::nullopt;
    for (int64_t j = 0; j < mult; ++j) coeffs.push_back(it->second);
    n += it->second * mult;
    if (n >= ord) return std::nullopt;
  }
  std::sort(coeffs.begin(), coeffs.end());
  if (coeffs.front() != 1) return std::nullopt;

  // The definition demands Sigma(S) = {base, ..., n*base} as a set equality,
  // independent of the coefficient bound; verify by mask comparison.
  SumsetMask expect(g.order());
  h = base;
  for (int64_t t = 1; t <= n; ++t) {
    expect.set(index_of(g, h));
    h = add(g, h, base);
  }
  if (!(subsequence_sums(s) == expect)) return std::nullopt;
  return SmoothCertificate{base, std::move(coeffs), n};
}

std::optional<SmoothCertificate> find_smooth_base(const Sequence& s) {
  for (auto [idx, mult] : s.counts()) {
    auto cert = smooth_certificate(s, element_at(s.group(), idx));
    if (cert) return cert;
  }
  return std::nullopt;
}

Verdict match_theorem_forms(const Sequence& s) {
  const Group& g = s.group();
  Verdict v;
  if (subsequence_sums(s).zero_member()) {
    v.tag = FormTag::NotZeroSumFree;
    return v;
  }
  if (auto cert = find_smooth_base(s)) {
    v.tag = FormTag::SmoothForm;
    v.a = cert->base;
    v.certificate = std::move(cert);
    return v;
  }
  const auto& counts = s.counts();
  if (counts.size() == 2) {
    auto [i0, m0] = counts[0];
    auto [i1, m1] = counts[1];
    if (m0 == 1 || m1 == 1) {
      // a^k b: a carries the larger multiplicity, ties to the smaller index
      const bool a_first = (m0 >= m1);
      v.tag = FormTag::PowerTimesSingleton;
      v.a = element_at(g, a_first ? i0 : i1);
      v.b = element_at(g, a_first ? i1 : i0);
      v.k = a_first ? m0 : m1;
      v.l = 1;
      const Sequence power = Sequence::from_counts(g, {{index_of(g, *v.a), v.k}});
      v.singleton_in_power_sums = subsequence_sums(power).test(index_of(g, *v.b));
      return v;
    }
    const Element e0 = element_at(g, i0), e1 = element_at(g, i1);
    if (m0 >= 2 && m1 >= 2 && scalar_mul(g, 2, e0) == scalar_mul(g, 2, e1)) {
      const bool a_first = (m0 >= m1);
      v.tag = FormTag::TwoBlockDoubled;
      v.a = a_first ? e0 : e1;
      v.b = a_first ? e1 : e0;
      v.k = a_first ? m0 : m1;
      v.l = a_first ? m1 : m0;
      return v;
    }
  }
  if (counts.size() == 3) {
    // a^k b^l (a-b): one multiplicity-1 element equal to the difference
    for (int c = 0; c < 3; ++c) {
      if (counts[c].second != 1) continue;
      const int p = (c + 1) % 3, q = (c + 2) % 3;
      auto [ip, mp] = counts[p];
      auto [iq, mq] = counts[q];
      if (mp < 2 || mq < 2) continue;
      const Element ep = element_at(g, ip), eq = element_at(g, iq);
      if (!(scalar_mul(g, 2, ep) == scalar_mul(g, 2, eq))) continue;
      const bool p_is_a = (mp > mq) || (mp == mq && ip < iq);
      const Element a = p_is_a ? ep : eq, b = p_is_a ? eq : ep;
      // 2a = 2b makes a-b its own inverse, so orientation cannot change it
      if (index_of(g, add(g, a, neg(g, b))) != counts[c].first) continue;
      v.tag = FormTag::TwoBlockDoubledPlusDiff;
      v.a = a;
      v.b = b;
      v.k = p_is_a ? mp : mq;
      v.l = p_is_a ? mq : mp;
      return v;
    }
  }
  v.tag = FormTag::NotExtremal;
  return v;
}

}  // namespace zsl
