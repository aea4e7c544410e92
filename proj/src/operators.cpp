#include "dpc/operators.hpp"

#include <atomic>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "dpc/parallel.hpp"

namespace dpc {

namespace {

int parity(std::uint32_t x) { return std::popcount(x) & 1; }

std::string join_rows(const std::vector<std::uint32_t>& rows) {
  std::ostringstream os;
  os << "matrix:";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) os << ',';
    os << "0x" << std::hex << rows[i];
  }
  return os.str();
}

}  // namespace

MOperator MOperator::matrix(std::vector<std::uint32_t> rows) {
  const int m = static_cast<int>(rows.size());
  if (m < 1 || m > 16) throw std::invalid_argument("matrix operator needs 1..16 rows");
  for (auto r : rows)
    if (r >= (1u << m)) throw std::invalid_argument("matrix row wider than m bits");
  MOperator op;
  op.m_ = m;
  op.kind_ = Kind::Matrix;
  op.table_.resize(1u << m);
  for (std::uint32_t x = 0; x < (1u << m); ++x) {
    fe_t y = 0;
    for (int i = 0; i < m; ++i) y |= fe_t(parity(rows[i] & x)) << i;
    op.table_[x] = y;
  }
  op.literal_ = join_rows(rows);
  op.provenance_ = op.literal_;
  return op;
}

MOperator MOperator::primitive_mul(const Field& field) {
  MOperator op;
  op.m_ = field.m();
  op.kind_ = Kind::PrimitiveMul;
  op.table_.resize(field.size());
  for (std::uint32_t x = 0; x < field.size(); ++x) op.table_[x] = field.mul(field.generator(), x);
  op.literal_ = "gamma";
  op.provenance_ = op.literal_;
  return op;
}

MOperator MOperator::power(const Field& field, std::uint64_t exponent) {
  if (exponent == 0) throw std::invalid_argument("power operator needs exponent >= 1");
  MOperator op;
  op.m_ = field.m();
  op.kind_ = Kind::Power;
  op.exponent_ = exponent;
  op.table_.resize(field.size());
  for (std::uint32_t x = 0; x < field.size(); ++x) op.table_[x] = field.pow(x, exponent);
  op.literal_ = "pow:" + std::to_string(exponent);
  op.provenance_ = op.literal_;
  return op;
}

MOperator MOperator::inverse_map(const Field& field) {
  MOperator op;
  op.m_ = field.m();
  op.kind_ = Kind::Inverse;
  op.table_.resize(field.size());
  for (std::uint32_t x = 0; x < field.size(); ++x) op.table_[x] = field.inv(x);
  op.literal_ = "inv";
  op.provenance_ = op.literal_;
  return op;
}

MOperator MOperator::direct_sum(const MOperator& lo, const MOperator& hi) {
  const int m = lo.m_ + hi.m_;
  if (m > 16) throw std::invalid_argument("direct sum wider than 16 bits");
  MOperator op;
  op.m_ = m;
  op.kind_ = Kind::DirectSum;
  op.table_.resize(1u << m);
  const std::uint32_t lo_mask = (1u << lo.m_) - 1;
  for (std::uint32_t x = 0; x < (1u << m); ++x)
    op.table_[x] = lo.table_[x & lo_mask] | (hi.table_[x >> lo.m_] << lo.m_);
  op.literal_ = "sum(" + lo.literal_ + "," + hi.literal_ + ")";
  op.provenance_ = "sum(" + lo.provenance_ + "," + hi.provenance_ + ")";
  return op;
}

namespace {

bool is_number(const std::string& s) {
  if (s.empty()) return false;
  std::size_t pos = 0;
  try {
    (void)std::stoul(s, &pos, 0);
  } catch (...) {
    return false;
  }
  return pos == s.size();
}

// Splits on commas at parenthesis depth zero.
std::vector<std::string> split_top_level(const std::string& s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

MOperator parse_tokens(std::vector<std::string>& tokens, std::size_t& i, const Field& field);

MOperator parse_sum(const std::string& inner, const Field& field) {
  auto tokens = split_top_level(inner);
  std::size_t i = 0;
  std::vector<MOperator> ops;
  while (i < tokens.size()) ops.push_back(parse_tokens(tokens, i, field));
  if (ops.size() != 2) throw std::invalid_argument("sum(...) takes exactly two operands");
  return MOperator::direct_sum(ops[0], ops[1]);
}

MOperator parse_tokens(std::vector<std::string>& tokens, std::size_t& i, const Field& field) {
  const std::string t = tokens[i];
  if (t.rfind("matrix:", 0) == 0) {
    std::vector<std::uint32_t> rows;
    rows.push_back(static_cast<std::uint32_t>(std::stoul(t.substr(7), nullptr, 0)));
    ++i;
    while (i < tokens.size() && is_number(tokens[i])) {
      rows.push_back(static_cast<std::uint32_t>(std::stoul(tokens[i], nullptr, 0)));
      ++i;
    }
    return MOperator::matrix(std::move(rows));
  }
  if (t.rfind("sum(", 0) == 0 && t.back() == ')') {
    ++i;
    return parse_sum(t.substr(4, t.size() - 5), field);
  }
  if (t == "gamma" || t == "inv" || t.rfind("pow:", 0) == 0)
    throw std::invalid_argument("operand '" + t + "' needs an explicit field; use matrix/sum inside sum(...)");
  throw std::invalid_argument("unknown operator literal: " + t);
}

}  // namespace

MOperator parse_operator(const std::string& literal, const Field& field) {
  if (literal == "gamma") return MOperator::primitive_mul(field);
  if (literal == "inv") return MOperator::inverse_map(field);
  if (literal.rfind("pow:", 0) == 0)
    return MOperator::power(field, std::stoull(literal.substr(4), nullptr, 0));
  if (literal.rfind("matrix:", 0) == 0 || literal.rfind("sum(", 0) == 0) {
    std::vector<std::string> tokens = split_top_level(literal);
    std::size_t i = 0;
    MOperator op = parse_tokens(tokens, i, field);
    if (i != tokens.size()) throw std::invalid_argument("trailing junk in operator literal: " + literal);
    if (op.m() != field.m())
      throw std::invalid_argument("operator acts on " + std::to_string(op.m()) +
                                  " bits but the field has m = " + std::to_string(field.m()));
    return op;
  }
  throw std::invalid_argument("unknown operator literal: " + literal);
}

MOperator gold_map(const Field& field, int l) {
  const int m = field.m();
  if (l < 1 || l >= m || std::gcd(l, m) != 1)
    throw std::invalid_argument("gold map needs 1 <= l < m with gcd(l, m) = 1");
  MOperator op = MOperator::power(field, (std::uint64_t(1) << l) + 1);
  op.set_provenance("gold(m=" + std::to_string(m) + ",l=" + std::to_string(l) + ")");
  return op;
}

bool is_bijective(const MOperator& f) {
  const auto& t = f.table();
  std::vector<bool> seen(t.size(), false);
  for (fe_t y : t) {
    if (seen[y]) return false;
    seen[y] = true;
  }
  return true;
}

bool is_f_plus_id_bijective(const MOperator& f) {
  const auto& t = f.table();
  std::vector<bool> seen(t.size(), false);
  for (std::uint32_t x = 0; x < t.size(); ++x) {
    const fe_t y = t[x] ^ x;
    if (seen[y]) return false;
    seen[y] = true;
  }
  return true;
}

bool is_additive(const MOperator& f) {
  if (f.m() > 12) throw std::invalid_argument("additivity scan capped at m = 12");
  const auto& t = f.table();
  const std::uint32_t n = f.domain_size();
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = x + 1; y < n; ++y)
      if (t[x ^ y] != (t[x] ^ t[y])) return false;
  return true;
}

bool is_apn(const MOperator& f) {
  if (f.m() > 12) throw std::invalid_argument("APN scan capped at m = 12");
  const auto& t = f.table();
  const std::uint32_t n = f.domain_size();
  std::vector<std::uint8_t> count(n);
  for (std::uint32_t a = 1; a < n; ++a) {
    std::fill(count.begin(), count.end(), 0);
    for (std::uint32_t x = 0; x < n; ++x) {
      const fe_t b = t[x] ^ t[x ^ a];
      if (++count[b] > 2) return false;
    }
  }
  return true;
}

namespace {

// Given pairwise-distinct a, b, c the element d = a+b+c is automatically
// distinct from them, and t = a+b+e is distinct from everything once
// e is outside {a, b, c, d}; only those guards are needed.
bool preparata_scan_full(const std::vector<fe_t>& t, std::uint32_t n, int threads) {
  std::atomic<bool> found{false};
  parallel_blocks(n, threads, 1, [&](std::uint64_t a0, std::uint64_t a1) {
    for (std::uint32_t a = std::uint32_t(a0); a < a1 && !found.load(std::memory_order_relaxed); ++a) {
      for (std::uint32_t b = 0; b < n; ++b) {
        if (b == a) continue;
        const std::uint32_t ab = a ^ b;
        const fe_t fab = t[a] ^ t[b];
        for (std::uint32_t c = 0; c < n; ++c) {
          if (c == a || c == b) continue;
          const std::uint32_t d = ab ^ c;
          const fe_t head = fab ^ t[c] ^ t[d];
          for (std::uint32_t e = 0; e < n; ++e) {
            if (e == a || e == b || e == c || e == d) continue;
            if ((head ^ t[e] ^ t[ab ^ e]) == 0) {
              found.store(true, std::memory_order_relaxed);
              return;
            }
          }
        }
      }
    }
  });
  return !found.load();
}

bool preparata_scan_fast(const std::vector<fe_t>& t, std::uint32_t n) {
  // a = 0, b = 1, d = c + 1, t = e + 1
  const fe_t head0 = t[0] ^ t[1];
  for (std::uint32_t c = 2; c < n; ++c) {
    const fe_t head = head0 ^ t[c] ^ t[c ^ 1];
    for (std::uint32_t e = 2; e < n; ++e) {
      if (e == c || e == (c ^ 1)) continue;
      if ((head ^ t[e] ^ t[e ^ 1]) == 0) return false;
    }
  }
  return true;
}

}  // namespace

bool satisfies_preparata_property(const MOperator& f, bool fast, int threads) {
  if (fast) {
    if (f.kind() != MOperator::Kind::Power || std::popcount(f.exponent()) > 2)
      throw std::invalid_argument("fast mode is valid only for quadratic power maps");
    return preparata_scan_fast(f.table(), f.domain_size());
  }
  if (f.m() > 8) throw std::invalid_argument("full scan capped at m = 8; use fast mode for quadratic power maps");
  return preparata_scan_full(f.table(), f.domain_size(), threads);
}

OperatorCertificate certify(const MOperator& f, int threads) {
  OperatorCertificate cert;
  cert.bijective = is_bijective(f);
  cert.f_plus_id_bijective = is_f_plus_id_bijective(f);
  if (f.m() <= 12) cert.additive = is_additive(f);
  if (f.m() <= 12) cert.apn = is_apn(f);
  const bool quadratic_power =
      f.kind() == MOperator::Kind::Power && std::popcount(f.exponent()) <= 2;
  if (f.m() <= 6) {
    cert.preparata_property = satisfies_preparata_property(f, false, threads);
  } else if (quadratic_power) {
    cert.preparata_property = satisfies_preparata_property(f, true);
    cert.preparata_fast_mode = true;
  } else if (f.m() <= 8) {
    cert.preparata_property = satisfies_preparata_property(f, false, threads);
  }
  return cert;
}

}  // namespace dpc
