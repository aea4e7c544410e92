#include "dpc/gf2m.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace dpc {

namespace {

// Index by m; taps chosen so that x generates the full multiplicative group.
constexpr std::uint32_t kDefaultModulus[17] = {
    0,       0,       0x7,     0xb,     0x13,   0x25,    0x43,    0x89,
    0x11d,   0x211,   0x409,   0x805,   0x1053, 0x201b,  0x4443,  0x8003,
    0x1100b};

std::uint32_t poly_mod(std::uint32_t a, std::uint32_t d) {
  const int dd = std::bit_width(d) - 1;
  while (a != 0 && std::bit_width(a) - 1 >= dd) {
    a ^= d << (std::bit_width(a) - 1 - dd);
  }
  return a;
}

}  // namespace

std::uint32_t default_modulus(int m) {
  if (m < 2 || m > 16) throw std::invalid_argument("field degree must be in [2,16]");
  return kDefaultModulus[m];
}

FieldSpec default_field_spec(int m) { return FieldSpec{m, default_modulus(m), 2}; }

bool poly_is_irreducible(std::uint32_t poly, int m) {
  if (m < 1 || std::bit_width(poly) != m + 1) return false;
  for (int deg = 1; deg <= m / 2; ++deg) {
    for (std::uint32_t low = 0; low < (1u << deg); ++low) {
      const std::uint32_t divisor = (1u << deg) | low;
      if (poly_mod(poly, divisor) == 0) return false;
    }
  }
  return true;
}

FieldSpec parse_field_spec(const std::string& text) {
  FieldSpec spec;
  bool have_m = false, have_mod = false, have_gen = false;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("field spec item without '=': " + item);
    const std::string key = item.substr(0, eq);
    const std::string val = item.substr(eq + 1);
    if (key == "m") {
      spec.m = std::stoi(val);
      have_m = true;
    } else if (key == "mod") {
      spec.modulus = static_cast<std::uint32_t>(std::stoul(val, nullptr, 0));
      have_mod = true;
    } else if (key == "gen") {
      spec.generator = static_cast<fe_t>(std::stoul(val, nullptr, 0));
      have_gen = true;
    } else {
      throw std::invalid_argument("unknown field spec key: " + key);
    }
  }
  if (!have_m) throw std::invalid_argument("field spec needs m=<int>");
  if (!have_mod) spec.modulus = default_modulus(spec.m);
  if (!have_gen) spec.generator = 2;
  return spec;
}

std::string format_field_spec(const FieldSpec& spec) {
  std::ostringstream os;
  os << "m=" << spec.m << ",mod=0x" << std::hex << spec.modulus << ",gen=0x" << spec.generator;
  return os.str();
}

Field::Field(const FieldSpec& spec) : spec_(spec) {
  if (spec.m < 2 || spec.m > 16) throw std::invalid_argument("field degree must be in [2,16]");
  if (!poly_is_irreducible(spec.modulus, spec.m))
    throw std::invalid_argument("modulus is not an irreducible polynomial of degree m");
  if (spec.generator == 0 || spec.generator >= size())
    throw std::invalid_argument("generator out of range");
  if (!is_primitive(spec.generator))
    throw std::invalid_argument("generator is not primitive");
}

std::vector<fe_t> Field::enumerate() const {
  std::vector<fe_t> all(size());
  for (std::uint32_t i = 0; i < size(); ++i) all[i] = i;
  return all;
}

fe_t Field::mul(fe_t a, fe_t b) const {
  fe_t r = 0;
  const fe_t top = fe_t(1) << spec_.m;
  while (b != 0) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a & top) a ^= spec_.modulus;
  }
  return r;
}

fe_t Field::pow(fe_t a, std::uint64_t k) const {
  if (k == 0) return 1;
  if (a == 0) return 0;
  k %= size() - 1;
  if (k == 0) return 1;
  fe_t r = 1;
  while (k != 0) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

fe_t Field::inv(fe_t a) const {
  if (a == 0) return 0;  // convention: the inverse map fixes zero
  return pow(a, size() - 2);
}

std::uint64_t Field::order(fe_t a) const {
  if (a == 0) throw std::invalid_argument("order of zero is undefined");
  std::uint64_t ord = 1;
  fe_t r = a;
  while (r != 1) {
    r = mul(r, a);
    ++ord;
  }
  return ord;
}

bool Field::is_primitive(fe_t a) const {
  return a != 0 && order(a) == size() - 1;
}

}  // namespace dpc
