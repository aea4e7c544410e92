// cosets.hpp -- extended Hamming codes of length n = 2^m over a column
// assignment, their even and odd cosets, and the distance-1 pairing that
// matches an even coset into an odd one.
//
// A column map lists the syndrome column of every coordinate: position i
// (0-based) carries the field element columns[i].  The identity map uses
// the canonical enumeration, columns[i] = i.

#ifndef DPC_COSETS_HPP
#define DPC_COSETS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "dpc/gf2m.hpp"
#include "dpc/words.hpp"

namespace dpc {

struct ColumnMap {
  Field field;
  std::vector<fe_t> columns;    // size n = 2^m, pairwise distinct
  std::vector<int> position_of; // inverse lookup, value -> position

  static ColumnMap identity(const Field& field);
  static ColumnMap from_values(const Field& field, std::vector<fe_t> values);

  int n() const { return static_cast<int>(columns.size()); }
};

// (sum of bits mod 2, sum of columns over the set bits).
std::pair<int, fe_t> syndrome(const BinaryWord& w, const ColumnMap& cm);

// All words with a fixed parity and syndrome; cardinality 2^n / 2n.
// Members enumerate by an information set: member(i) assigns the bits of i
// to the non-pivot positions in increasing order and solves for the rest,
// so the order is deterministic.
class Coset {
 public:
  Coset(ColumnMap cm, int parity, fe_t syn);

  std::uint64_t size() const { return std::uint64_t(1) << gens_.size(); }
  int n() const { return cm_.n(); }
  int parity() const { return parity_; }
  fe_t coset_syndrome() const { return syndrome_; }
  const ColumnMap& columns() const { return cm_; }

  std::uint32_t member_bits(std::uint64_t index) const;
  BinaryWord member(std::uint64_t index) const { return BinaryWord{n(), member_bits(index)}; }
  std::vector<BinaryWord> members() const;  // full enumeration

  bool contains_bits(std::uint32_t w) const;
  bool contains(const BinaryWord& w) const;

 private:
  ColumnMap cm_;
  int parity_;
  fe_t syndrome_;
  std::uint32_t particular_ = 0;
  std::vector<std::uint32_t> gens_;
};

// The unique word of the odd coset Q at Hamming distance 1 from p, found by
// syndrome arithmetic; throws unless P is even and Q is odd.
BinaryWord coset_mate(const BinaryWord& p, const Coset& P, const Coset& Q);

// The star word sitting between p and its mate.
TernaryWord mate_word(const BinaryWord& p, const Coset& P, const Coset& Q);

}  // namespace dpc

#endif
