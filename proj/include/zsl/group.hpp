#pragma once

// Exact arithmetic and dense indexing for finite abelian groups presented as
// products of cyclic factors Z_{d1} x ... x Z_{dr}.
//
// Indexing contract: element (c1,...,cr) maps to the mixed-radix index
// c1*(d2*...*dr) + c2*(d3*...*dr) + ... + cr, i.e. the first modulus is the
// outermost digit. This is the bit-position contract for sum-set masks and
// for every file format produced by the tools.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zsl/errors.hpp"

namespace zsl {

/// One group element as a reduced coordinate vector, coords[i] in [0, d_i).
struct Element {
  std::vector<int64_t> coords;

  bool operator==(const Element&) const = default;
  auto operator<=>(const Element&) const = default;
};

class Group {
 public:
  int rank() const { return static_cast<int>(moduli_.size()); }
  int64_t order() const { return order_; }
  int64_t exponent() const { return exponent_; }
  const std::vector<int64_t>& moduli() const { return moduli_; }
  // radix weights: index = sum coords[i] * weight[i]
  const std::vector<int64_t>& weights() const { return weights_; }

  /// Display form, e.g. "2x4". Input order of moduli is preserved.
  std::string literal() const;

  bool operator==(const Group& other) const { return moduli_ == other.moduli_; }

  friend Group make_group(std::vector<int64_t> moduli, std::optional<int64_t> order_cap);

 private:
  Group() = default;
  std::vector<int64_t> moduli_;
  std::vector<int64_t> weights_;
  int64_t order_ = 0;
  int64_t exponent_ = 0;
};

/// Order cap: explicit override, else ZSL_ORDER_CAP, else 4096.
int64_t effective_order_cap(std::optional<int64_t> override = {});

Group make_group(std::vector<int64_t> moduli, std::optional<int64_t> order_cap = {});

/// Accepts "Z4xZ9", "4x9", "z2X4" (case-insensitive, 'Z' optional).
Group parse_group(std::string_view text, std::optional<int64_t> order_cap = {});

/// Validates rank and reduces coordinates into [0, d_i).
Element make_element(const Group& g, std::vector<int64_t> raw_coords);

Element zero(const Group& g);
Element add(const Group& g, const Element& a, const Element& b);
Element neg(const Group& g, const Element& a);
Element scalar_mul(const Group& g, int64_t t, const Element& a);

/// Smallest t >= 1 with t*a = 0; divides the exponent.
int64_t element_order(const Group& g, const Element& a);

int64_t index_of(const Group& g, const Element& a);
Element element_at(const Group& g, int64_t index);

/// Closure of the generators under the group operation; sorted element indices
/// (always contains index 0).
std::vector<int64_t> subgroup_generated(const Group& g, std::span<const Element> gens);
std::vector<int64_t> subgroup_generated_indices(const Group& g, std::span<const int64_t> gen_indices);

/// True iff some member's order equals the subgroup's size.
bool is_cyclic_subgroup(const Group& g, std::span<const Element> gens);
bool is_cyclic_subgroup_indices(const Group& g, std::span<const int64_t> gen_indices);

/// "(a,b,...)" with rank matching the group, or a bare integer for rank-1
/// groups. Coordinates are reduced modulo the factor sizes.
Element parse_element(const Group& g, std::string_view text);
std::string format_element(const Group& g, const Element& a);

// Index-space arithmetic (used by the mask engine and the enumerator).
int64_t add_indices(const Group& g, int64_t a, int64_t b);
int64_t neg_index(const Group& g, int64_t a);

/// perm[k] = index of (element_at(k) + g); the shift table for mask updates.
std::vector<int64_t> translation_permutation(const Group& g, int64_t g_index);

}  // namespace zsl
