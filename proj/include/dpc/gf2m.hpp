// gf2m.hpp -- arithmetic in GF(2^m) on bit-packed polynomial residues.
//
// An element is a uint32_t whose bit k is the coefficient of x^k; the
// canonical enumeration of the field lists elements by numeric value, so
// the i-th element (1-based) has bit pattern i-1 and the first element
// is zero.  All code constructions and file formats depend on this order.

#ifndef DPC_GF2M_HPP
#define DPC_GF2M_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace dpc {

using fe_t = std::uint32_t;  // field element, low m bits used

struct FieldSpec {
  int m = 0;                   // extension degree, 2 <= m <= 16
  std::uint32_t modulus = 0;   // irreducible polynomial of degree m (bit m set)
  fe_t generator = 2;          // element of multiplicative order 2^m - 1
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

// Shipped modulus per degree; bit pattern 2 ("x") is primitive for every entry.
std::uint32_t default_modulus(int m);
FieldSpec default_field_spec(int m);

// "m=3,mod=0xb,gen=0x2"; mod and gen may be omitted and default per degree.
FieldSpec parse_field_spec(const std::string& text);
std::string format_field_spec(const FieldSpec& spec);

// Trial division by every polynomial of degree 1..m/2.
bool poly_is_irreducible(std::uint32_t poly, int m);

class Field {
 public:
  explicit Field(const FieldSpec& spec);  // throws std::invalid_argument
  static Field with_defaults(int m) { return Field(default_field_spec(m)); }

  int m() const { return spec_.m; }
  std::uint32_t size() const { return 1u << spec_.m; }
  const FieldSpec& spec() const { return spec_; }
  fe_t generator() const { return spec_.generator; }

  std::vector<fe_t> enumerate() const;  // 0, 1, ..., 2^m - 1

  fe_t add(fe_t a, fe_t b) const { return a ^ b; }
  fe_t mul(fe_t a, fe_t b) const;
  fe_t pow(fe_t a, std::uint64_t k) const;
  fe_t inv(fe_t a) const;  // inv(0) = 0
  std::uint64_t order(fe_t a) const;
  bool is_primitive(fe_t a) const;

  friend bool operator==(const Field& a, const Field& b) { return a.spec_ == b.spec_; }

 private:
  FieldSpec spec_;
};

}  // namespace dpc

#endif
