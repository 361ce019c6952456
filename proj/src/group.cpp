#include "zsl/group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <queue>

namespace zsl {

const char* to_string(Errc code) {
  switch (code) {
    case Errc::EmptyModuli: return "EmptyModuli";
    case Errc::ModulusTooSmall: return "ModulusTooSmall";
    case Errc::OrderCapExceeded: return "OrderCapExceeded";
    case Errc::RankMismatch: return "RankMismatch";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::ParseError: return "ParseError";
    case Errc::ElementOutOfGroup: return "ElementOutOfGroup";
    case Errc::ZeroElementRejected: return "ZeroElementRejected";
    case Errc::NotASubsequence: return "NotASubsequence";
    case Errc::TooLargeForOracle: return "TooLargeForOracle";
    case Errc::UnknownLemmaId: return "UnknownLemmaId";
  }
  return "UnknownError";
}

int64_t effective_order_cap(std::optional<int64_t> override) {
  if (override) return *override;
  static const int64_t env_cap = [] {
    if (const char* s = std::getenv("ZSL_ORDER_CAP")) {
      int64_t v = 0;
      auto [p, ec] = std::from_chars(s, s + std::string_view(s).size(), v);
      if (ec == std::errc() && *p == '\0' && v >= 2) return v;
    }
    return int64_t{4096};
  }();
  return env_cap;
}

Group make_group(std::vector<int64_t> moduli, std::optional<int64_t> order_cap) {
  if (moduli.empty()) throw Error(Errc::EmptyModuli, "group needs at least one cyclic factor");
  const int64_t cap = effective_order_cap(order_cap);
  int64_t order = 1;
  int64_t exponent = 1;
  for (int64_t d : moduli) {
    if (d < 2) throw Error(Errc::ModulusTooSmall, "modulus " + std::to_string(d) + " < 2");
    if (order > cap / d) throw Error(Errc::OrderCapExceeded, "group order exceeds cap " + std::to_string(cap));
    order *= d;
    exponent = std::lcm(exponent, d);  // lcm divides the running product, no overflow
  }
  Group g;
  g.moduli_ = std::move(moduli);
  g.order_ = order;
  g.exponent_ = exponent;
  g.weights_.assign(g.moduli_.size(), 1);
  for (int i = static_cast<int>(g.moduli_.size()) - 2; i >= 0; --i)
    g.weights_[i] = g.weights_[i + 1] * g.moduli_[i + 1];
  return g;
}

std::string Group::literal() const {
  std::string out;
  for (size_t i = 0; i < moduli_.size(); ++i) {
    if (i) out += 'x';
    out += std::to_string(moduli_[i]);
  }
  return out;
}

Group parse_group(std::string_view text, std::optional<int64_t> order_cap) {
  std::vector<int64_t> moduli;
  size_t pos = 0;
  while (pos < text.size()) {
    // one factor: optional 'z'/'Z', then digits
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos < text.size() && (text[pos] == 'z' || text[pos] == 'Z')) ++pos;
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw Error(Errc::ParseError, "bad group literal: '" + std::string(text) + "'");
    int64_t d = 0;
    std::from_chars(text.data() + start, text.data() + pos, d);
    moduli.push_back(d);
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == text.size()) break;
    if (text[pos] != 'x' && text[pos] != 'X')
      throw Error(Errc::ParseError, "bad group literal: '" + std::string(text) + "'");
    ++pos;
  }
  return make_group(std::move(moduli), order_cap);
}

static int64_t mod_reduce(int64_t v, int64_t d) {
  int64_t r = v % d;
  return r < 0 ? r + d : r;
}

Element make_element(const Group& g, std::vector<int64_t> raw) {
  if (static_cast<int>(raw.size()) != g.rank())
    throw Error(Errc::RankMismatch, "element has rank " + std::to_string(raw.size()) +
                                        ", group has rank " + std::to_string(g.rank()));
  for (size_t i = 0; i < raw.size(); ++i) raw[i] = mod_reduce(raw[i], g.moduli()[i]);
  return Element{std::move(raw)};
}

static void check_rank(const Group& g, const Element& a) {
  if (static_cast<int>(a.coords.size()) != g.rank())
    throw Error(Errc::RankMismatch, "element rank does not match group rank");
}

Element zero(const Group& g) { return Element{std::vector<int64_t>(g.rank(), 0)}; }

Element add(const Group& g, const Element& a, const Element& b) {
  check_rank(g, a);
  check_rank(g, b);
  Element out = a;
  for (int i = 0; i < g.rank(); ++i) out.coords[i] = mod_reduce(a.coords[i] + b.coords[i], g.moduli()[i]);
  return out;
}

Element neg(const Group& g, const Element& a) {
  check_rank(g, a);
  Element out = a;
  for (int i = 0; i < g.rank(); ++i) out.coords[i] = mod_reduce(-a.coords[i], g.moduli()[i]);
  return out;
}

Element scalar_mul(const Group& g, int64_t t, const Element& a) {
  check_rank(g, a);
  Element out = a;
  for (int i = 0; i < g.rank(); ++i) {
    const int64_t d = g.moduli()[i];
    out.coords[i] = mod_reduce(static_cast<int64_t>((static_cast<__int128>(mod_reduce(t, d)) * a.coords[i]) % d), d);
  }
  return out;
}

int64_t element_order(const Group& g, const Element& a) {
  check_rank(g, a);
  int64_t ord = 1;
  for (int i = 0; i < g.rank(); ++i) {
    const int64_t d = g.moduli()[i];
    const int64_t c = a.coords[i];
    ord = std::lcm(ord, d / std::gcd(d, c == 0 ? d : c));
  }
  return ord;
}

int64_t index_of(const Group& g, const Element& a) {
  check_rank(g, a);
  int64_t k = 0;
  for (int i = 0; i < g.rank(); ++i) k += a.coords[i] * g.weights()[i];
  return k;
}

Element element_at(const Group& g, int64_t index) {
  if (index < 0 || index >= g.order())
    throw Error(Errc::IndexOutOfRange, "index " + std::to_string(index) + " not in [0, " +
                                           std::to_string(g.order()) + ")");
  Element out{std::vector<int64_t>(g.rank())};
  for (int i = 0; i < g.rank(); ++i) {
    out.coords[i] = index / g.weights()[i];
    index %= g.weights()[i];
  }
  return out;
}

std::vector<int64_t> subgroup_generated_indices(const Group& g, std::span<const int64_t> gen_indices) {
  std::vector<char> member(static_cast<size_t>(g.order()), 0);
  member[0] = 1;
  std::queue<int64_t> todo;
  todo.push(0);
  while (!todo.empty()) {
    const int64_t x = todo.front();
    todo.pop();
    for (int64_t gen : gen_indices) {
      const int64_t y = add_indices(g, x, gen);
      if (!member[static_cast<size_t>(y)]) {
        member[static_cast<size_t>(y)] = 1;
        todo.push(y);
      }
    }
  }
  std::vector<int64_t> out;
  for (int64_t k = 0; k < g.order(); ++k)
    if (member[static_cast<size_t>(k)]) out.push_back(k);
  return out;
}

std::vector<int64_t> subgroup_generated(const Group& g, std::span<const Element> gens) {
  std::vector<int64_t> idx;
  idx.reserve(gens.size());
  for (const Element& e : gens) idx.push_back(index_of(g, e));
  return subgroup_generated_indices(g, idx);
}

bool is_cyclic_subgroup_indices(const Group& g, std::span<const int64_t> gen_indices) {
  const std::vector<int64_t> sub = subgroup_generated_indices(g, gen_indices);
  const int64_t size = static_cast<int64_t>(sub.size());
  for (int64_t k : sub)
    if (element_order(g, element_at(g, k)) == size) return true;
  return false;
}

bool is_cyclic_subgroup(const Group& g, std::span<const Element> gens) {
  std::vector<int64_t> idx;
  idx.reserve(gens.size());
  for (const Element& e : gens) idx.push_back(index_of(g, e));
  return is_cyclic_subgroup_indices(g, idx);
}

Element parse_element(const Group& g, std::string_view text) {
  // trim
  size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  text = text.substr(b, e - b);
  if (text.empty()) throw Error(Errc::ParseError, "empty element literal");

  auto parse_int = [&](std::string_view s) {
    size_t i = 0, j = s.size();
    while (i < j && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    while (j > i && std::isspace(static_cast<unsigned char>(s[j - 1]))) --j;
    int64_t v = 0;
    auto [p, ec] = std::from_chars(s.data() + i, s.data() + j, v);
    if (ec != std::errc() || p != s.data() + j || i == j)
      throw Error(Errc::ParseError, "bad integer in element literal: '" + std::string(s) + "'");
    return v;
  };

  std::vector<int64_t> coords;
  if (text.front() == '(') {
    if (text.back() != ')') throw Error(Errc::ParseError, "unbalanced parentheses in element literal");
    std::string_view body = text.substr(1, text.size() - 2);
    size_t pos = 0;
    while (true) {
      size_t comma = body.find(',', pos);
      coords.push_back(parse_int(body.substr(pos, comma == std::string_view::npos ? comma : comma - pos)));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
  } else {
    coords.push_back(parse_int(text));
  }
  if (static_cast<int>(coords.size()) != g.rank())
    throw Error(Errc::ElementOutOfGroup, "element literal '" + std::string(text) + "' has rank " +
                                             std::to_string(coords.size()) + ", group " + g.literal() +
                                             " has rank " + std::to_string(g.rank()));
  return make_element(g, std::move(coords));
}

std::string format_element(const Group& g, const Element& a) {
  check_rank(g, a);
  if (g.rank() == 1) return std::to_string(a.coords[0]);
  std::string out = "(";
  for (int i = 0; i < g.rank(); ++i) {
    if (i) out += ',';
    out += std::to_string(a.coords[i]);
  }
  out += ')';
  return out;
}

int64_t add_indices(const Group& g, int64_t a, int64_t b) {
  int64_t k = 0;
  for (int i = 0; i < g.rank(); ++i) {
    const int64_t w = g.weights()[i];
    const int64_t d = g.moduli()[i];
    const int64_t ca = a / w, cb = b / w;
    a %= w;
    b %= w;
    int64_t c = ca + cb;
    if (c >= d) c -= d;
    k += c * w;
  }
  return k;
}

int64_t neg_index(const Group& g, int64_t a) {
  int64_t k = 0;
  for (int i = 0; i < g.rank(); ++i) {
    const int64_t w = g.weights()[i];
    const int64_t d = g.moduli()[i];
    const int64_t c = a / w;
    a %= w;
    k += (c == 0 ? 0 : d - c) * w;
  }
  return k;
}

std::vector<int64_t> translation_permutation(const Group& g, int64_t g_index) {
  if (g_index < 0 || g_index >= g.order()) throw Error(Errc::IndexOutOfRange, "bad element index");
  std::vector<int64_t> perm(static_cast<size_t>(g.order()));
  for (int64_t k = 0; k < g.order(); ++k) perm[static_cast<size_t>(k)] = add_indices(g, k, g_index);
  return perm;
}

}  // namespace zsl
