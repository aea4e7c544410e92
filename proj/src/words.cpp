#include "dpc/words.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

namespace dpc {

namespace {

void check_n(int n) {
  if (n < 1 || n > 32) throw std::invalid_argument("word length must be in [1,32]");
}

void check_same_n(int a, int b) {
  if (a != b) throw std::invalid_argument("word length mismatch");
}

std::uint32_t low_mask(int n) { return n == 32 ? 0xffffffffu : (1u << n) - 1; }

}  // namespace

TernaryWord make_ternary(int n, int star, std::uint32_t bits) {
  check_n(n);
  if (star < 0 || star >= n) throw std::invalid_argument("star position out of range");
  return TernaryWord{n, star, (bits & low_mask(n)) & ~(1u << star)};
}

Edge make_edge(int n, std::uint32_t x, std::uint32_t y) {
  check_n(n);
  const std::uint32_t d = x ^ y;
  if (d == 0 || (d & (d - 1)) != 0) throw std::invalid_argument("edge endpoints must differ in one position");
  const int dir = std::countr_zero(d);
  return Edge{n, dir, x & ~d};
}

std::string to_string(const BinaryWord& w) {
  std::string s(w.n, '0');
  for (int j = 0; j < w.n; ++j)
    if ((w.bits >> j) & 1) s[j] = '1';
  return s;
}

std::string to_string(const TernaryWord& w) {
  std::string s(w.n, '0');
  for (int j = 0; j < w.n; ++j)
    if ((w.bits >> j) & 1) s[j] = '1';
  s[w.star] = '*';
  return s;
}

BinaryWord parse_binary(const std::string& text) {
  const int n = static_cast<int>(text.size());
  check_n(n);
  std::uint32_t bits = 0;
  for (int j = 0; j < n; ++j) {
    if (text[j] == '1')
      bits |= 1u << j;
    else if (text[j] != '0')
      throw std::invalid_argument("binary word may contain only 0 and 1: " + text);
  }
  return BinaryWord{n, bits};
}

TernaryWord parse_ternary(const std::string& text) {
  const int n = static_cast<int>(text.size());
  check_n(n);
  std::uint32_t bits = 0;
  int star = -1;
  for (int j = 0; j < n; ++j) {
    if (text[j] == '1') {
      bits |= 1u << j;
    } else if (text[j] == '*') {
      if (star >= 0) throw std::invalid_argument("more than one * in word: " + text);
      star = j;
    } else if (text[j] != '0') {
      throw std::invalid_argument("star word may contain only 0, 1 and *: " + text);
    }
  }
  if (star < 0) throw std::invalid_argument("star word needs exactly one *: " + text);
  return TernaryWord{n, star, bits};
}

int hamming(const BinaryWord& a, const BinaryWord& b) {
  check_same_n(a.n, b.n);
  return std::popcount(a.bits ^ b.bits);
}

int hamming(const TernaryWord& a, const TernaryWord& b) {
  check_same_n(a.n, b.n);
  if (a.star == b.star) return std::popcount(a.bits ^ b.bits);
  const std::uint32_t off = ~((1u << a.star) | (1u << b.star));
  return 2 + std::popcount((a.bits ^ b.bits) & off);
}

int hamming(const BinaryWord& a, const TernaryWord& b) {
  check_same_n(a.n, b.n);
  return 1 + std::popcount((a.bits ^ b.bits) & ~(1u << b.star));
}

int hamming(const TernaryWord& a, const BinaryWord& b) { return hamming(b, a); }

bool lex_less(const TernaryWord& a, const TernaryWord& b) {
  check_same_n(a.n, b.n);
  for (int j = 0; j < a.n; ++j) {
    const int ra = j == a.star ? 0 : 1 + int((a.bits >> j) & 1);
    const int rb = j == b.star ? 0 : 1 + int((b.bits >> j) & 1);
    if (ra != rb) return ra < rb;
  }
  return false;
}

bool lex_less(const BinaryWord& a, const BinaryWord& b) {
  check_same_n(a.n, b.n);
  for (int j = 0; j < a.n; ++j) {
    const int ra = int((a.bits >> j) & 1);
    const int rb = int((b.bits >> j) & 1);
    if (ra != rb) return ra < rb;
  }
  return false;
}

TernaryWord edge_to_word(const Edge& e) { return TernaryWord{e.n, e.direction, e.base}; }

Edge word_to_edge(const TernaryWord& w) { return Edge{w.n, w.star, w.bits}; }

int edge_distance(const Edge& a, const Edge& b) {
  check_same_n(a.n, b.n);
  const std::uint32_t x0 = a.base, x1 = a.base | (1u << a.direction);
  const std::uint32_t y0 = b.base, y1 = b.base | (1u << b.direction);
  int cross = std::popcount(x0 ^ y0);
  cross = std::min(cross, std::popcount(x0 ^ y1));
  cross = std::min(cross, std::popcount(x1 ^ y0));
  cross = std::min(cross, std::popcount(x1 ^ y1));
  return a.direction == b.direction ? cross : cross + 2;
}

std::vector<Edge> all_edges(int n) {
  check_n(n);
  std::vector<Edge> out;
  out.reserve(std::size_t(n) << (n - 1));
  for (int dir = 0; dir < n; ++dir)
    for (std::uint32_t base = 0; base < (1u << n); ++base)
      if (((base >> dir) & 1) == 0) out.push_back(Edge{n, dir, base});
  return out;
}

std::vector<TernaryWord> space(int n) {
  check_n(n);
  if (n > 20) throw std::invalid_argument("space enumeration capped at n = 20");
  std::vector<TernaryWord> out;
  out.reserve(space_size(n));
  for (int star = 0; star < n; ++star)
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits)
      if (((bits >> star) & 1) == 0) out.push_back(TernaryWord{n, star, bits});
  return out;
}

std::uint64_t space_size(int n) { return std::uint64_t(n) << (n - 1); }

std::vector<TernaryWord> ball(const BinaryWord& z, int radius) {
  check_n(z.n);
  if (radius < 1 || radius > 2) throw std::invalid_argument("ball radius must be 1 or 2");
  const int n = z.n;
  std::vector<TernaryWord> out;
  for (int i = 0; i < n; ++i) {
    const std::uint32_t base = z.bits & ~(1u << i);
    out.push_back(TernaryWord{n, i, base});  // distance 1
    if (radius == 2) {
      for (int j = 0; j < n; ++j)
        if (j != i) out.push_back(TernaryWord{n, i, base ^ (1u << j)});
    }
  }
  return out;
}

std::vector<TernaryWord> ball(const TernaryWord& z, int radius) {
  check_n(z.n);
  if (radius < 1 || radius > 2) throw std::invalid_argument("ball radius must be 1 or 2");
  const int n = z.n;
  std::vector<TernaryWord> out;
  out.push_back(z);
  for (int j = 0; j < n; ++j)
    if (j != z.star) out.push_back(TernaryWord{n, z.star, z.bits ^ (1u << j)});
  if (radius == 2) {
    for (int j = 0; j < n; ++j) {
      if (j == z.star) continue;
      for (int k = j + 1; k < n; ++k)
        if (k != z.star) out.push_back(TernaryWord{n, z.star, z.bits ^ (1u << j) ^ (1u << k)});
    }
    // moved star: both values of the old star coordinate stay at distance 2
    for (int j = 0; j < n; ++j) {
      if (j == z.star) continue;
      const std::uint32_t base = z.bits & ~(1u << j);
      out.push_back(TernaryWord{n, j, base});
      out.push_back(TernaryWord{n, j, base | (1u << z.star)});
    }
  }
  return out;
}

std::vector<TernaryWord> anticode_around(const TernaryWord& z) {
  const auto [n, star, bits] = z;
  const BinaryWord z0{n, bits};
  const BinaryWord z1{n, bits | (1u << star)};
  std::unordered_set<std::uint64_t> seen;
  std::vector<TernaryWord> out;
  auto take = [&](const std::vector<TernaryWord>& words) {
    for (const auto& w : words)
      if (seen.insert(key(w)).second) out.push_back(w);
  };
  take(ball(z, 1));
  take(ball(z0, 1));
  take(ball(z1, 1));
  return out;
}

std::vector<TernaryWord> square_anticode(int n) {
  if (n < 2) throw std::invalid_argument("square anticode needs n >= 2");
  check_n(n);
  return {make_ternary(n, 0, 0), make_ternary(n, 1, 0),
          make_ternary(n, 0, 2), make_ternary(n, 1, 1)};
}

int diameter(const std::vector<TernaryWord>& words) {
  int d = 0;
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j)
      d = std::max(d, hamming(words[i], words[j]));
  return d;
}

namespace {

std::uint32_t permute_bits(const std::vector<int>& perm, std::uint32_t bits) {
  std::uint32_t out = 0;
  while (bits != 0) {
    const int j = std::countr_zero(bits);
    bits &= bits - 1;
    out |= 1u << perm[j];
  }
  return out;
}

void check_perm(const Automorphism& t) {
  const int n = static_cast<int>(t.perm.size());
  check_same_n(n, t.shift.n);
  std::uint32_t seen = 0;
  for (int j = 0; j < n; ++j) {
    if (t.perm[j] < 0 || t.perm[j] >= n) throw std::invalid_argument("permutation entry out of range");
    seen |= 1u << t.perm[j];
  }
  if (seen != low_mask(n)) throw std::invalid_argument("permutation is not a bijection");
}

}  // namespace

Automorphism identity_automorphism(int n) {
  check_n(n);
  Automorphism t;
  t.perm.resize(n);
  for (int j = 0; j < n; ++j) t.perm[j] = j;
  t.shift = BinaryWord{n, 0};
  return t;
}

Automorphism inverse(const Automorphism& t) {
  check_perm(t);
  const int n = static_cast<int>(t.perm.size());
  Automorphism r;
  r.perm.resize(n);
  for (int j = 0; j < n; ++j) r.perm[t.perm[j]] = j;
  r.shift = BinaryWord{n, permute_bits(r.perm, t.shift.bits)};
  return r;
}

Automorphism compose(const Automorphism& outer, const Automorphism& inner) {
  check_perm(outer);
  check_perm(inner);
  const int n = static_cast<int>(outer.perm.size());
  check_same_n(n, static_cast<int>(inner.perm.size()));
  Automorphism r;
  r.perm.resize(n);
  for (int j = 0; j < n; ++j) r.perm[j] = outer.perm[inner.perm[j]];
  r.shift = BinaryWord{n, permute_bits(outer.perm, inner.shift.bits) ^ outer.shift.bits};
  return r;
}

BinaryWord apply(const Automorphism& t, const BinaryWord& w) {
  check_perm(t);
  check_same_n(static_cast<int>(t.perm.size()), w.n);
  return BinaryWord{w.n, permute_bits(t.perm, w.bits) ^ t.shift.bits};
}

TernaryWord apply(const Automorphism& t, const TernaryWord& w) {
  check_perm(t);
  check_same_n(static_cast<int>(t.perm.size()), w.n);
  const std::uint32_t bits = permute_bits(t.perm, w.bits) ^ t.shift.bits;
  return make_ternary(w.n, t.perm[w.star], bits);
}

}  // namespace dpc
