#include "dpc/cosets.hpp"

#include <bit>
#include <stdexcept>

#include "dpc/gf2linear.hpp"

namespace dpc {

ColumnMap ColumnMap::identity(const Field& field) {
  std::vector<fe_t> values(field.size());
  for (std::uint32_t i = 0; i < field.size(); ++i) values[i] = i;
  return from_values(field, std::move(values));
}

ColumnMap ColumnMap::from_values(const Field& field, std::vector<fe_t> values) {
  if (values.size() != field.size())
    throw std::invalid_argument("column map needs one column per field element");
  std::vector<int> pos(field.size(), -1);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] >= field.size()) throw std::invalid_argument("column value out of field range");
    if (pos[values[i]] != -1) throw std::invalid_argument("column map is not a bijection");
    pos[values[i]] = static_cast<int>(i);
  }
  return ColumnMap{field, std::move(values), std::move(pos)};
}

std::pair<int, fe_t> syndrome(const BinaryWord& w, const ColumnMap& cm) {
  if (w.n != cm.n()) throw std::invalid_argument("word length does not match the column map");
  fe_t s = 0;
  std::uint32_t bits = w.bits;
  while (bits != 0) {
    const int i = std::countr_zero(bits);
    bits &= bits - 1;
    s ^= cm.columns[i];
  }
  return {std::popcount(w.bits) & 1, s};
}

Coset::Coset(ColumnMap cm, int parity, fe_t syn)
    : cm_(std::move(cm)), parity_(parity), syndrome_(syn) {
  const int n = cm_.n();
  const int m = cm_.field.m();
  if (n > 32) throw std::invalid_argument("coset enumeration capped at n = 32");
  if (parity_ != 0 && parity_ != 1) throw std::invalid_argument("parity must be 0 or 1");
  if (syndrome_ >= cm_.field.size()) throw std::invalid_argument("syndrome out of field range");

  // Row b (b < m) marks positions whose column has bit b; row m is parity.
  std::vector<std::uint32_t> rows(m + 1, 0);
  for (int i = 0; i < n; ++i) {
    for (int b = 0; b < m; ++b)
      if ((cm_.columns[i] >> b) & 1) rows[b] |= 1u << i;
    rows[m] |= 1u << i;
  }
  Gf2System sys(n, rows);
  if (sys.rank() != m + 1) throw std::invalid_argument("column map does not span the syndrome space");
  const std::uint32_t rhs = syndrome_ | (std::uint32_t(parity_) << m);
  particular_ = sys.particular(rhs);
  gens_ = sys.kernel_basis();
}

std::uint32_t Coset::member_bits(std::uint64_t index) const {
  if (index >= size()) throw std::out_of_range("coset member index out of range");
  std::uint32_t w = particular_;
  std::uint64_t idx = index;
  while (idx != 0) {
    const int j = std::countr_zero(idx);
    idx &= idx - 1;
    w ^= gens_[j];
  }
  return w;
}

std::vector<BinaryWord> Coset::members() const {
  if (size() > (std::uint64_t(1) << 22)) throw std::invalid_argument("coset too large to materialize");
  std::vector<BinaryWord> out;
  out.reserve(size());
  for (std::uint64_t i = 0; i < size(); ++i) out.push_back(member(i));
  return out;
}

bool Coset::contains_bits(std::uint32_t w) const {
  const auto [par, syn] = syndrome(BinaryWord{n(), w}, cm_);
  return par == parity_ && syn == syndrome_;
}

bool Coset::contains(const BinaryWord& w) const {
  return w.n == n() && contains_bits(w.bits);
}

BinaryWord coset_mate(const BinaryWord& p, const Coset& P, const Coset& Q) {
  if (P.parity() != 0) throw std::invalid_argument("the source coset must be even");
  if (Q.parity() != 1) throw std::invalid_argument("the target coset must be odd");
  if (p.n != Q.n()) throw std::invalid_argument("word length does not match the cosets");
  const auto [par, syn] = syndrome(p, Q.columns());
  (void)par;
  const int flip = Q.columns().position_of[syn ^ Q.coset_syndrome()];
  return BinaryWord{p.n, p.bits ^ (1u << flip)};
}

TernaryWord mate_word(const BinaryWord& p, const Coset& P, const Coset& Q) {
  const BinaryWord q = coset_mate(p, P, Q);
  const int flip = std::countr_zero(p.bits ^ q.bits);
  return TernaryWord{p.n, flip, p.bits & ~(1u << flip)};
}

}  // namespace dpc
