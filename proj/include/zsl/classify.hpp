#pragma once

// Structural certificates for zero-sum free sequences: g-smoothness (the
// sum set is an interval {g, 2g, ..., ng} of multiples of one base) and the
// four extremal shapes a sequence with f(S) <= 2|S|-1 can take.

#include <optional>
#include <string>

#include "zsl/sumset.hpp"

namespace zsl {

/// Witness that S = (n_1 g)(n_2 g)...(n_l g) with n_1 = 1,
/// n = sum n_i < ord(g) and Sigma(S) = {g, ..., ng}.
struct SmoothCertificate {
  Element base;
  std::vector<int64_t> coefficients;  // ascending, front() == 1
  int64_t n = 0;                      // sum of coefficients
};

enum class FormTag {
  SmoothForm,               // S is a-smooth for some a
  PowerTimesSingleton,      // S = a^k b, a != b
  TwoBlockDoubled,          // S = a^k b^l, k >= l >= 2, 2a = 2b, a != b
  TwoBlockDoubledPlusDiff,  // S = a^k b^l (a-b), k >= l >= 2, 2a = 2b
  NotExtremal,
  NotZeroSumFree,
};

const char* to_string(FormTag tag);

struct Verdict {
  FormTag tag = FormTag::NotExtremal;
  std::optional<Element> a;
  std::optional<Element> b;
  int64_t k = 0;
  int64_t l = 0;
  std::optional<SmoothCertificate> certificate;
  // PowerTimesSingleton only: whether b already lies in Sigma(a^k).
  std::optional<bool> singleton_in_power_sums;
};

/// Certificate that S is base-smooth, or nullopt. Coefficients are the
/// minimal positive t with t*base = element, so n_1 = 1 iff base occurs in S.
std::optional<SmoothCertificate> smooth_certificate(const Sequence& s, const Element& base);

/// Tries each support element in increasing index order; first success.
std::optional<SmoothCertificate> find_smooth_base(const Sequence& s);

/// First matching form in the order smooth, a^k b, a^k b^l, a^k b^l (a-b);
/// NotZeroSumFree if 0 is a subsequence sum, NotExtremal if nothing matches.
/// Orientation: a is the element of larger multiplicity, ties to smaller index.
Verdict match_theorem_forms(const Sequence& s);

}  // namespace zsl
