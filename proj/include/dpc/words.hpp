// words.hpp -- the binary cube F^n, the star-word space X^n (words over
// {0,1,*} with exactly one *), cube edges, and code automorphisms.
//
// Words are bit-packed: coordinate i (1-based in rendered text, first
// character first) lives at bit i-1.  A star word keeps a 0 bit under the
// star so that equal words are bitwise equal.

#ifndef DPC_WORDS_HPP
#define DPC_WORDS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace dpc {

struct BinaryWord {
  int n = 0;
  std::uint32_t bits = 0;
  friend bool operator==(const BinaryWord&, const BinaryWord&) = default;
};

struct TernaryWord {
  int n = 0;
  int star = 0;  // 0-based coordinate of the * symbol
  std::uint32_t bits = 0;
  friend bool operator==(const TernaryWord&, const TernaryWord&) = default;
};

// Clears the bit under the star (canonical form).
TernaryWord make_ternary(int n, int star, std::uint32_t bits);

// A distance-1 pair {base, base ^ (1 << direction)} in F^n.
struct Edge {
  int n = 0;
  int direction = 0;
  std::uint32_t base = 0;  // bit at `direction` is 0
  friend bool operator==(const Edge&, const Edge&) = default;
};

Edge make_edge(int n, std::uint32_t x, std::uint32_t y);  // endpoints at distance 1

// Unique key within a fixed n; usable as a hash-set element.
inline std::uint64_t key(const TernaryWord& w) {
  return (std::uint64_t(std::uint32_t(w.star)) << 32) | w.bits;
}

std::string to_string(const BinaryWord& w);
std::string to_string(const TernaryWord& w);
BinaryWord parse_binary(const std::string& text);
TernaryWord parse_ternary(const std::string& text);

// The star differs from 0 and from 1; two stars in the same position agree.
int hamming(const BinaryWord& a, const BinaryWord& b);
int hamming(const TernaryWord& a, const TernaryWord& b);
int hamming(const BinaryWord& a, const TernaryWord& b);
int hamming(const TernaryWord& a, const BinaryWord& b);

// Order matching the rendered text (* < 0 < 1 per coordinate).
bool lex_less(const TernaryWord& a, const TernaryWord& b);
bool lex_less(const BinaryWord& a, const BinaryWord& b);

TernaryWord edge_to_word(const Edge& e);
Edge word_to_edge(const TernaryWord& w);

// Distance between edges carried over from the star words: parallel edges
// take the minimum cross distance, non-parallel edges add 2.
int edge_distance(const Edge& a, const Edge& b);

std::vector<Edge> all_edges(int n);
std::vector<TernaryWord> space(int n);         // all of X^n
std::uint64_t space_size(int n);               // n * 2^(n-1)

// Radius 1 or 2 around a binary or a star word.
std::vector<TernaryWord> ball(const BinaryWord& z, int radius);
std::vector<TernaryWord> ball(const TernaryWord& z, int radius);

// B_z together with the balls of the two binary neighbours of z; 3n-2 words.
std::vector<TernaryWord> anticode_around(const TernaryWord& z);

// {*0..0, 0*0..0, *10..0, 1*0..0}: the four-word diameter 2 anticode.
std::vector<TernaryWord> square_anticode(int n);

int diameter(const std::vector<TernaryWord>& words);

// Coordinate permutation plus translation; the star absorbs the shift.
struct Automorphism {
  std::vector<int> perm;  // coordinate j moves to position perm[j]
  BinaryWord shift;
};

Automorphism identity_automorphism(int n);
Automorphism inverse(const Automorphism& t);
Automorphism compose(const Automorphism& outer, const Automorphism& inner);
BinaryWord apply(const Automorphism& t, const BinaryWord& w);
TernaryWord apply(const Automorphism& t, const TernaryWord& w);

}  // namespace dpc

#endif
