// construct.hpp -- builders for the code families.
//
//  * build_d3: perfect distance-3 star-word codes of length 2^m, one
//    matched coset pair per syndrome value, wired by an operator f with
//    f and f+Id both bijective.
//  * build_d5: diameter perfect distance-5 codes from a bijective APN
//    operator, pairing the extended Hamming code with an odd coset over
//    the f-twisted columns.
//  * conference_code: the 12-word distance-4 code of length 6 read off the
//    6x6 conference matrix under both sign substitutions.
//  * build_preparata: binary codes with Preparata parameters (length 2n,
//    cardinality 2^(2n-2)/n^2, distance 6).
//
// Codes above 2^20 words are never materialized; the *CodeView classes
// expose membership tests and indexed streaming instead.

#ifndef DPC_CONSTRUCT_HPP
#define DPC_CONSTRUCT_HPP

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "dpc/code.hpp"
#include "dpc/cosets.hpp"
#include "dpc/operators.hpp"

namespace dpc {

Code build_d3(const Field& field, const MOperator& f);
Code build_d5(const Field& field, const MOperator& f, fe_t q_syndrome = 0);
Code conference_code();
Code build_preparata(const Field& field, const MOperator& f);

// The same set written in (u, u+v) style: (a + w(b), a + b + w(b)) with
// w(b) = b + mate(b); used to cross-check build_preparata.
std::vector<BinaryWord> preparata_uuv_words(const Field& field, const MOperator& f);

// Keeps the words matching every (position, value) fixing, then deletes the
// fixed coordinates.  A word whose star sits on a fixed position never
// matches.  A result with fewer than two words is flagged in meta.notes.
Code shorten(const Code& code, const std::vector<std::pair<int, int>>& fixed);

// The automorphism (pi_z, z) of a build_d3 code sending 0^n to the
// even-weight word z: pi_z moves position i to the position of
// alpha_i + s + f(s) where s is the syndrome of z.
Automorphism shift_automorphism(const Field& field, const MOperator& f, const BinaryWord& z);
Automorphism shift_automorphism(const Code& d3_code, const BinaryWord& z);

// Length admissible for a perfect distance-3 code: n divides 2^(n-1).
bool d3_length_admissible(int n);
// Length admissible for a diameter perfect distance-4 code: 3n-2 = 4^m.
bool d4_length_admissible(int n);

// The 6x6 conference matrix behind conference_code (entries 0, +1, -1).
const std::vector<std::vector<int>>& conference_matrix6();

class D3CodeView {
 public:
  D3CodeView(const Field& field, const MOperator& f);
  int n() const { return n_; }
  std::uint64_t size() const { return std::uint64_t(1) << (n_ - 1); }
  TernaryWord word_at(std::uint64_t index) const;  // block-major over syndromes
  bool contains(const TernaryWord& w) const;
  TernaryWord sample(std::mt19937_64& rng) const;

 private:
  Field field_;
  MOperator f_;
  int n_;
  std::vector<Coset> blocks_;
  std::uint64_t per_block_;
};

class D5CodeView {
 public:
  D5CodeView(const Field& field, const MOperator& f, fe_t q_syndrome = 0);
  int n() const { return n_; }
  std::uint64_t size() const { return even_.size(); }
  TernaryWord word_at(std::uint64_t index) const;
  bool contains(const TernaryWord& w) const;
  TernaryWord sample(std::mt19937_64& rng) const;

 private:
  Field field_;
  MOperator f_;
  int n_;
  Coset even_;
  Coset odd_;
};

}  // namespace dpc

#endif
