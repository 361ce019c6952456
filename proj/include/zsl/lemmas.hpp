#pragma once

// Registered exhaustive checks, one per supporting statement of the
// classification. Each scan enumerates every instance in the group matching
// the statement's hypothesis shape (support pattern, multiplicities, side
// conditions such as 2a = 2b or an order-2 element, smoothness exclusions)
// and tests the asserted equality or bound.
//
//   2.1.2     squarefree zero-sum free S: f = 1 (|S|=1), f = 3 (|S|=2),
//             f >= 5 (|S|=3, >= 6 when no support element has order 2),
//             f >= 2|S| (|S| >= 4)
//   2.2       f(a^2 b^2) = 8 when 2a != 2b, a != 2b, b != 2a
//   2.3       f(a^k b) = 2k + 1 when a^k b is not a-smooth
//   2.4       f(S) >= 2|S| - 1 when S contains an element of order 2
//   2.5i      f(a^k b^l) >= 2(k+l) when k >= l >= 2, 2a != 2b, not smooth
//   2.5ii     f(a^k b^l) = 2(k+l) - 1 when k >= l >= 2, 2a = 2b, not smooth
//             (both 2.5 scans also check f = n(k-s+1)+ls+s-1 whenever the
//             minimal relation nb = sa exists)
//   remark-2.5  a^k b^l with k >= l >= 2 is never both smooth and 2a = 2b
//   2.6       f(a^k b^l (b-a)) = 2(k+l) + 1 when ord(b-a) = 2, k >= l >= 1
//   2.7       f(S_1 a) = 2 f(S_1) + 1 when S_1 is g-smooth and S_1 a is not
//   2.8       f(a^k b c) >= 2k + 4 when k >= 2, not a-smooth
//   cor-2.1   f(a^k b c d) >= 2k + 6 when k >= 1, not a-smooth
//   2.9       f(a^k b^l x) >= 2(k+l+1) + 1 when 2a = 2b, x != a-b, k >= l >= 1
//   2.10      f(a^k b^2 x) = 2k + 5 iff 2a = 2b and x = b-a, when k >= 2 and
//             S is neither a-smooth nor b-smooth
//   theorem-b f(S) >= 2|S| - 1 when <supp(S)> is not cyclic

#include <string>
#include <string_view>
#include <vector>

#include "zsl/enumerate.hpp"

namespace zsl {

struct LemmaReport {
  std::string id;
  Group group;
  int64_t checked = 0;  // instances matching the hypothesis shape
  int64_t violations_total = 0;
  std::vector<std::string> violations;      // first few, as readable one-liners
  std::optional<int64_t> equality_cases;    // 2.10: instances attaining f = 2k+5
  bool passed() const { return violations_total == 0; }
};

const std::vector<std::string>& registered_lemma_ids();

LemmaReport lemma_bound_scan(const Group& g, std::string_view lemma_id, int workers = 1);

/// Every registered lemma plus the classification audit.
struct VerifyAllReport {
  Group group;
  AuditReport audit;
  std::vector<LemmaReport> lemmas;  // registry order
  int64_t violations_total = 0;
};
VerifyAllReport verify_all(const Group& g, int workers = 1);

}  // namespace zsl
