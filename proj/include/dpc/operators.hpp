// operators.hpp -- maps F^m -> F^m used to wire Hamming cosets together:
// GF(2)-linear matrices, multiplication by a primitive element, power and
// inverse maps, and block direct sums, plus brute-force certification of
// the properties the code constructions require.  Every check is a plain
// table scan; this module is the trusted oracle layer.

#ifndef DPC_OPERATORS_HPP
#define DPC_OPERATORS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dpc/gf2m.hpp"

namespace dpc {

class MOperator {
 public:
  enum class Kind { Matrix, PrimitiveMul, Power, Inverse, DirectSum };

  // rows[i] is row i+1 of the matrix; entry (i+1, j+1) sits at bit j.
  static MOperator matrix(std::vector<std::uint32_t> rows);
  static MOperator primitive_mul(const Field& field);
  static MOperator power(const Field& field, std::uint64_t exponent);  // exponent >= 1
  static MOperator inverse_map(const Field& field);                    // fixes zero
  static MOperator direct_sum(const MOperator& lo, const MOperator& hi);

  fe_t operator()(fe_t x) const { return table_[x]; }
  const std::vector<fe_t>& table() const { return table_; }

  int m() const { return m_; }
  std::uint32_t domain_size() const { return 1u << m_; }
  Kind kind() const { return kind_; }
  std::uint64_t exponent() const { return exponent_; }  // Power kind only
  const std::string& literal() const { return literal_; }
  const std::string& provenance() const { return provenance_; }
  void set_provenance(std::string p) { provenance_ = std::move(p); }

 private:
  MOperator() = default;
  int m_ = 0;
  Kind kind_ = Kind::Matrix;
  std::uint64_t exponent_ = 0;
  std::vector<fe_t> table_;
  std::string literal_;
  std::string provenance_;
};

// Grammar: matrix:<rows> | gamma | pow:<k> | inv | sum(<op>,<op>).
// gamma, pow and inv take their field from `field`; matrix and sum are
// sized by their own rows and must be used for sum operands.
MOperator parse_operator(const std::string& literal, const Field& field);

// x^(2^l + 1); requires gcd(l, m) = 1.
MOperator gold_map(const Field& field, int l);

bool is_bijective(const MOperator& f);
bool is_f_plus_id_bijective(const MOperator& f);
bool is_additive(const MOperator& f);

// Differential uniformity 2: every nonzero input difference produces each
// output difference 0 or 2 times.  Table scan, m <= 12.
bool is_apn(const MOperator& f);

// True when no six pairwise-distinct a,b,c,d,e,t satisfy a+b+c+d = 0,
// a+b+e+t = 0 and f(a)+f(b)+f(c)+f(d)+f(e)+f(t) = 0.  The default scans
// (a,b,c,e); the fast mode pins a = 0, b = 1 and is valid only for
// quadratic power maps (exponent of binary weight 2).
bool satisfies_preparata_property(const MOperator& f, bool fast = false, int threads = 0);

struct OperatorCertificate {
  bool bijective = false;
  bool f_plus_id_bijective = false;
  std::optional<bool> additive;            // empty when the scan cap is exceeded
  std::optional<bool> apn;
  std::optional<bool> preparata_property;
  bool preparata_fast_mode = false;
};

OperatorCertificate certify(const MOperator& f, int threads = 0);

}  // namespace dpc

#endif
