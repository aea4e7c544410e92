// code.hpp -- a finite set of words with construction metadata, and the
// text file format used to exchange codes.
//
// File format: '#'-prefixed header lines `# key: value` (family, m,
// modulus, generator, operator, syndrome), then one word per line in
// lexicographic order, coordinate 1 first.

#ifndef DPC_CODE_HPP
#define DPC_CODE_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dpc/gf2m.hpp"
#include "dpc/words.hpp"

namespace dpc {

enum class Alphabet { Binary, Ternary };

struct CodeMeta {
  std::string family;  // d3 | d5 | d4conf | preparata | shorten
  std::optional<FieldSpec> field;
  std::string op_literal;     // parseable operator literal, empty if none
  std::string op_provenance;  // human-facing tag, defaults to the literal
  std::optional<fe_t> q_syndrome;
  std::vector<int> block_direction;  // d3 only: beta -> star direction (0-based)
  std::string notes;
};

struct Code {
  Alphabet alphabet = Alphabet::Ternary;
  int n = 0;
  std::vector<TernaryWord> twords;
  std::vector<BinaryWord> bwords;
  int claimed_distance = 0;
  std::uint64_t claimed_cardinality = 0;
  CodeMeta meta;

  std::size_t size() const {
    return alphabet == Alphabet::Ternary ? twords.size() : bwords.size();
  }
};

// 3, 5, 4, 6 for the shipped families; 0 when unknown.
int claimed_distance_for_family(const std::string& family);

void write_code_file(const Code& code, std::ostream& out);
void write_code_file(const Code& code, const std::string& path);
Code read_code_file(std::istream& in);
Code read_code_file(const std::string& path);

}  // namespace dpc

#endif
