#include "dpc/construct.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

#include "dpc/errors.hpp"

namespace dpc {

namespace {

constexpr std::uint64_t kMaterializeCap = std::uint64_t(1) << 20;

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

MOperator operator_from_meta(const Code& code) {
  require(code.meta.field.has_value(), "code metadata lacks a field");
  require(!code.meta.op_literal.empty(), "code metadata lacks an operator");
  const Field field{*code.meta.field};
  return parse_operator(code.meta.op_literal, field);
}

}  // namespace

Code build_d3(const Field& field, const MOperator& f) {
  require(f.m() == field.m(), "operator size does not match the field");
  require(is_bijective(f), "d3 construction needs a bijective operator");
  require(is_f_plus_id_bijective(f), "d3 construction needs f + Id bijective");
  const int n = static_cast<int>(field.size());
  const std::uint64_t cardinality = std::uint64_t(1) << (n - 1);
  if (cardinality > kMaterializeCap)
    throw ResourceLimitError("d3 code too large to materialize; use D3CodeView");

  const ColumnMap cm = ColumnMap::identity(field);
  Code code;
  code.alphabet = Alphabet::Ternary;
  code.n = n;
  code.claimed_distance = 3;
  code.claimed_cardinality = cardinality;
  code.meta.family = "d3";
  code.meta.field = field.spec();
  code.meta.op_literal = f.literal();
  code.meta.op_provenance = f.provenance();
  code.twords.reserve(cardinality);
  for (fe_t beta = 0; beta < field.size(); ++beta) {
    const Coset even(cm, 0, beta);
    const Coset odd(cm, 1, f(beta));
    code.meta.block_direction.push_back(static_cast<int>(beta ^ f(beta)));
    for (std::uint64_t i = 0; i < even.size(); ++i)
      code.twords.push_back(mate_word(even.member(i), even, odd));
  }
  return code;
}

Code build_d5(const Field& field, const MOperator& f, fe_t q_syndrome) {
  require(f.m() == field.m(), "operator size does not match the field");
  require(is_bijective(f), "d5 construction needs a bijective operator");
  require(is_apn(f), "d5 construction needs an APN operator");
  const int n = static_cast<int>(field.size());
  const Coset even(ColumnMap::identity(field), 0, 0);
  const Coset odd(ColumnMap::from_values(field, f.table()), 1, q_syndrome);
  if (even.size() > kMaterializeCap)
    throw ResourceLimitError("d5 code too large to materialize; use D5CodeView");

  Code code;
  code.alphabet = Alphabet::Ternary;
  code.n = n;
  code.claimed_distance = 5;
  code.claimed_cardinality = even.size();
  code.meta.family = "d5";
  code.meta.field = field.spec();
  code.meta.op_literal = f.literal();
  code.meta.op_provenance = f.provenance();
  code.meta.q_syndrome = q_syndrome;
  code.twords.reserve(even.size());
  for (std::uint64_t i = 0; i < even.size(); ++i)
    code.twords.push_back(mate_word(even.member(i), even, odd));
  return code;
}

const std::vector<std::vector<int>>& conference_matrix6() {
  static const std::vector<std::vector<int>> rows = {
      {0, 1, 1, 1, 1, 1},   {1, 0, 1, -1, -1, 1}, {1, 1, 0, 1, -1, -1},
      {1, -1, 1, 0, 1, -1}, {1, -1, -1, 1, 0, 1}, {1, 1, -1, -1, 1, 0}};
  return rows;
}

Code conference_code() {
  const auto& rows = conference_matrix6();
  Code code;
  code.alphabet = Alphabet::Ternary;
  code.n = 6;
  code.claimed_distance = 4;
  code.claimed_cardinality = 12;
  code.meta.family = "d4conf";
  for (const auto& row : rows) {
    int star = -1;
    std::uint32_t minus = 0, plus = 0;
    for (int j = 0; j < 6; ++j) {
      if (row[j] == 0) star = j;
      if (row[j] == -1) minus |= 1u << j;
      if (row[j] == 1) plus |= 1u << j;
    }
    code.twords.push_back(make_ternary(6, star, minus));  // 0->*, 1->0, -1->1
    code.twords.push_back(make_ternary(6, star, plus));   // 0->*, 1->1, -1->0
  }
  return code;
}

Code build_preparata(const Field& field, const MOperator& f) {
  require(f.m() == field.m(), "operator size does not match the field");
  require(is_bijective(f), "preparata construction needs a bijective operator");
  require(is_apn(f), "preparata construction needs an APN operator");
  require(satisfies_preparata_property(f), "operator fails the six-term condition");
  const int n = static_cast<int>(field.size());
  if (2 * n > 32) throw ResourceLimitError("preparata code wider than 32 bits; desk scale stops at m = 3");

  const Coset even(ColumnMap::identity(field), 0, 0);
  const Coset odd(ColumnMap::from_values(field, f.table()), 1, 0);
  std::vector<std::uint32_t> mates(even.size());
  for (std::uint64_t i = 0; i < even.size(); ++i)
    mates[i] = coset_mate(even.member(i), even, odd).bits;

  Code code;
  code.alphabet = Alphabet::Binary;
  code.n = 2 * n;
  code.claimed_distance = 6;
  code.claimed_cardinality = even.size() * even.size();
  code.meta.family = "preparata";
  code.meta.field = field.spec();
  code.meta.op_literal = f.literal();
  code.meta.op_provenance = f.provenance();
  code.bwords.reserve(code.claimed_cardinality);
  for (std::uint64_t ai = 0; ai < even.size(); ++ai) {
    const std::uint32_t a = even.member_bits(ai);
    for (std::uint64_t bi = 0; bi < even.size(); ++bi) {
      const std::uint32_t b = even.member_bits(bi);
      const std::uint32_t qb = mates[bi];
      code.bwords.push_back(BinaryWord{2 * n, (a ^ b ^ qb) | ((a ^ qb) << n)});
    }
  }
  return code;
}

std::vector<BinaryWord> preparata_uuv_words(const Field& field, const MOperator& f) {
  const int n = static_cast<int>(field.size());
  const Coset even(ColumnMap::identity(field), 0, 0);
  const Coset odd(ColumnMap::from_values(field, f.table()), 1, 0);
  std::vector<BinaryWord> out;
  out.reserve(even.size() * even.size());
  for (std::uint64_t bi = 0; bi < even.size(); ++bi) {
    const std::uint32_t b = even.member_bits(bi);
    const std::uint32_t w = b ^ coset_mate(even.member(bi), even, odd).bits;
    for (std::uint64_t ai = 0; ai < even.size(); ++ai) {
      const std::uint32_t a = even.member_bits(ai);
      out.push_back(BinaryWord{2 * n, (a ^ w) | ((a ^ b ^ w) << n)});
    }
  }
  return out;
}

Code shorten(const Code& code, const std::vector<std::pair<int, int>>& fixed) {
  require(code.alphabet == Alphabet::Ternary, "shorten works on star-word codes");
  std::uint32_t fixed_mask = 0, fixed_bits = 0;
  for (const auto& [pos, value] : fixed) {
    require(pos >= 0 && pos < code.n, "fixed position out of range");
    require(value == 0 || value == 1, "fixed value must be 0 or 1");
    require((fixed_mask & (1u << pos)) == 0, "fixed positions must be distinct");
    fixed_mask |= 1u << pos;
    if (value) fixed_bits |= 1u << pos;
  }
  const int k = code.n - static_cast<int>(fixed.size());
  require(k >= 1, "shortening must keep at least one coordinate");

  // new index of each kept position
  std::vector<int> new_index(code.n, -1);
  int next = 0;
  for (int j = 0; j < code.n; ++j)
    if ((fixed_mask >> j & 1) == 0) new_index[j] = next++;

  Code out;
  out.alphabet = Alphabet::Ternary;
  out.n = k;
  out.claimed_distance = code.claimed_distance;
  out.meta.family = "shorten";
  out.meta.field = code.meta.field;
  out.meta.op_literal = code.meta.op_literal;
  out.meta.op_provenance = code.meta.op_provenance;
  for (const auto& w : code.twords) {
    if (fixed_mask & (1u << w.star)) continue;
    if ((w.bits & fixed_mask) != fixed_bits) continue;
    std::uint32_t bits = 0;
    for (std::uint32_t rest = w.bits & ~fixed_mask; rest != 0; rest &= rest - 1)
      bits |= 1u << new_index[std::countr_zero(rest)];
    out.twords.push_back(make_ternary(k, new_index[w.star], bits));
  }
  out.claimed_cardinality = out.twords.size();
  if (out.twords.size() < 2) out.meta.notes = "degenerate: fewer than 2 words";
  return out;
}

Automorphism shift_automorphism(const Field& field, const MOperator& f, const BinaryWord& z) {
  require(f.m() == field.m(), "operator size does not match the field");
  require(z.n == static_cast<int>(field.size()), "word length does not match the field");
  require((std::popcount(z.bits) & 1) == 0, "shift automorphism needs an even-weight word");
  fe_t s = 0;
  for (std::uint32_t bits = z.bits; bits != 0; bits &= bits - 1)
    s ^= fe_t(std::countr_zero(bits));  // identity columns: position value = element
  const fe_t delta = s ^ f(s);
  Automorphism t;
  t.perm.resize(z.n);
  for (int i = 0; i < z.n; ++i) t.perm[i] = static_cast<int>(fe_t(i) ^ delta);
  t.shift = z;
  return t;
}

Automorphism shift_automorphism(const Code& d3_code, const BinaryWord& z) {
  require(d3_code.meta.family == "d3", "shift automorphism is defined for d3 codes");
  const Field field{*d3_code.meta.field};
  return shift_automorphism(field, operator_from_meta(d3_code), z);
}

bool d3_length_admissible(int n) {
  if (n < 2) return false;
  // 2^(n-1) mod n without overflow
  std::uint64_t r = 1;
  for (int i = 0; i < n - 1; ++i) r = (r * 2) % std::uint64_t(n);
  return r == 0;
}

bool d4_length_admissible(int n) {
  if (n < 2) return false;
  const std::uint64_t target = 3ull * n - 2;
  for (std::uint64_t p = 4; p <= target; p *= 4)
    if (p == target) return true;
  return false;
}

D3CodeView::D3CodeView(const Field& field, const MOperator& f)
    : field_(field), f_(f), n_(static_cast<int>(field.size())) {
  require(is_bijective(f_), "d3 construction needs a bijective operator");
  require(is_f_plus_id_bijective(f_), "d3 construction needs f + Id bijective");
  const ColumnMap cm = ColumnMap::identity(field_);
  blocks_.reserve(field_.size());
  for (fe_t beta = 0; beta < field_.size(); ++beta) blocks_.emplace_back(cm, 0, beta);
  per_block_ = blocks_.front().size();
}

TernaryWord D3CodeView::word_at(std::uint64_t index) const {
  const fe_t beta = static_cast<fe_t>(index / per_block_);
  if (beta >= field_.size()) throw std::out_of_range("code index out of range");
  const std::uint32_t p = blocks_[beta].member_bits(index % per_block_);
  const int dir = static_cast<int>(beta ^ f_(beta));
  return TernaryWord{n_, dir, p & ~(1u << dir)};
}

bool D3CodeView::contains(const TernaryWord& w) const {
  if (w.n != n_) return false;
  const std::uint32_t x0 = w.bits, x1 = w.bits | (1u << w.star);
  const std::uint32_t p = (std::popcount(x0) & 1) == 0 ? x0 : x1;
  fe_t beta = 0;
  for (std::uint32_t bits = p; bits != 0; bits &= bits - 1)
    beta ^= fe_t(std::countr_zero(bits));
  return fe_t(w.star) == (beta ^ f_(beta));
}

TernaryWord D3CodeView::sample(std::mt19937_64& rng) const { return word_at(rng() % size()); }

D5CodeView::D5CodeView(const Field& field, const MOperator& f, fe_t q_syndrome)
    : field_(field),
      f_(f),
      n_(static_cast<int>(field.size())),
      even_(ColumnMap::identity(field), 0, 0),
      odd_(ColumnMap::from_values(field, f.table()), 1, q_syndrome) {
  require(is_bijective(f_), "d5 construction needs a bijective operator");
  require(is_apn(f_), "d5 construction needs an APN operator");
}

TernaryWord D5CodeView::word_at(std::uint64_t index) const {
  return mate_word(even_.member(index), even_, odd_);
}

bool D5CodeView::contains(const TernaryWord& w) const {
  if (w.n != n_) return false;
  const std::uint32_t x0 = w.bits, x1 = w.bits | (1u << w.star);
  return (even_.contains_bits(x0) && odd_.contains_bits(x1)) ||
         (even_.contains_bits(x1) && odd_.contains_bits(x0));
}

TernaryWord D5CodeView::sample(std::mt19937_64& rng) const { return word_at(rng() % size()); }

}  // namespace dpc
