#include "dpc/verify.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "dpc/errors.hpp"
#include "dpc/gf2linear.hpp"
#include "dpc/parallel.hpp"

namespace dpc {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

int ternary_pair_distance(int star_a, std::uint32_t bits_a, int star_b, std::uint32_t bits_b) {
  if (star_a == star_b) return std::popcount(bits_a ^ bits_b);
  return 2 + std::popcount((bits_a ^ bits_b) & ~((1u << star_a) | (1u << star_b)));
}

}  // namespace

DistanceReport min_distance(const Code& code, int threads) {
  const std::uint64_t count = code.size();
  require(count >= 2, "minimum distance needs at least two words");

  DistanceReport report;
  report.pairs = count * (count - 1) / 2;
  std::mutex merge;
  int best = code.n + 1;
  std::uint64_t best_i = 0, best_j = 0;

  if (code.alphabet == Alphabet::Ternary) {
    std::vector<int> star(count);
    std::vector<std::uint32_t> bits(count);
    for (std::uint64_t i = 0; i < count; ++i) {
      star[i] = code.twords[i].star;
      bits[i] = code.twords[i].bits;
    }
    parallel_blocks(count, threads, 64, [&](std::uint64_t i0, std::uint64_t i1) {
      int local = code.n + 1;
      std::uint64_t li = 0, lj = 0;
      for (std::uint64_t i = i0; i < i1; ++i)
        for (std::uint64_t j = i + 1; j < count; ++j) {
          const int d = ternary_pair_distance(star[i], bits[i], star[j], bits[j]);
          if (d < local) {
            local = d;
            li = i;
            lj = j;
          }
        }
      std::lock_guard<std::mutex> lock(merge);
      if (local < best) {
        best = local;
        best_i = li;
        best_j = lj;
      }
    });
    report.witness_a = to_string(code.twords[best_i]);
    report.witness_b = to_string(code.twords[best_j]);
  } else {
    std::vector<std::uint32_t> bits(count);
    for (std::uint64_t i = 0; i < count; ++i) bits[i] = code.bwords[i].bits;
    parallel_blocks(count, threads, 64, [&](std::uint64_t i0, std::uint64_t i1) {
      int local = code.n + 1;
      std::uint64_t li = 0, lj = 0;
      for (std::uint64_t i = i0; i < i1; ++i)
        for (std::uint64_t j = i + 1; j < count; ++j) {
          const int d = std::popcount(bits[i] ^ bits[j]);
          if (d < local) {
            local = d;
            li = i;
            lj = j;
          }
        }
      std::lock_guard<std::mutex> lock(merge);
      if (local < best) {
        best = local;
        best_i = li;
        best_j = lj;
      }
    });
    report.witness_a = to_string(code.bwords[best_i]);
    report.witness_b = to_string(code.bwords[best_j]);
  }
  report.min_distance = best;
  return report;
}

namespace {

template <class View>
DistanceReport sampled_distance_impl(const View& view, std::uint64_t pairs, std::uint64_t seed) {
  DistanceReport report;
  report.exact = false;
  report.pairs = pairs;
  std::mt19937_64 rng(seed);
  int best = view.n() + 1;
  for (std::uint64_t i = 0; i < pairs; ++i) {
    const TernaryWord a = view.sample(rng);
    const TernaryWord b = view.sample(rng);
    if (a == b) continue;
    const int d = hamming(a, b);
    if (d < best) {
      best = d;
      report.witness_a = to_string(a);
      report.witness_b = to_string(b);
    }
  }
  report.min_distance = best;
  return report;
}

}  // namespace

DistanceReport sampled_distance(const D5CodeView& view, std::uint64_t pairs, std::uint64_t seed) {
  return sampled_distance_impl(view, pairs, seed);
}

DistanceReport sampled_distance(const D3CodeView& view, std::uint64_t pairs, std::uint64_t seed) {
  return sampled_distance_impl(view, pairs, seed);
}

PerfectnessReport is_perfect_d3(const Code& code) {
  require(code.alphabet == Alphabet::Ternary, "perfectness is defined on star-word codes");
  require(code.n <= 16, "perfectness scan capped at n = 16");
  const int n = code.n;
  const std::uint64_t full = std::uint64_t(1) << n;
  // owner[star * 2^n + bits] = covering codeword, or -1
  std::vector<std::int32_t> owner(std::uint64_t(n) * full, -1);

  PerfectnessReport report;
  auto cover = [&](const TernaryWord& y, std::int32_t who) -> bool {
    const std::uint64_t idx = std::uint64_t(y.star) * full + y.bits;
    if (owner[idx] >= 0) {
      report.witness = to_string(code.twords[owner[idx]]) + " and " +
                       to_string(code.twords[who]) + " both cover " + to_string(y);
      return false;
    }
    owner[idx] = who;
    ++report.covered;
    return true;
  };
  for (std::size_t w = 0; w < code.twords.size(); ++w) {
    const TernaryWord& c = code.twords[w];
    if (!cover(c, static_cast<std::int32_t>(w))) return report;
    for (int j = 0; j < n; ++j) {
      if (j == c.star) continue;
      if (!cover(TernaryWord{n, c.star, c.bits ^ (1u << j)}, static_cast<std::int32_t>(w)))
        return report;
    }
  }
  if (report.covered != space_size(n)) {
    report.witness = "covers " + std::to_string(report.covered) + " of " +
                     std::to_string(space_size(n)) + " words";
    return report;
  }
  report.perfect = true;
  return report;
}

DiameterPerfectReport diameter_perfect(const Code& code, const std::vector<TernaryWord>& anticode,
                                       int threads) {
  require(code.alphabet == Alphabet::Ternary, "diameter perfectness is checked on star-word codes");
  DiameterPerfectReport report;
  report.code_size = code.size();
  report.anticode_size = anticode.size();
  report.space = space_size(code.n);
  report.anticode_diameter = diameter(anticode);
  report.code_distance = min_distance(code, threads).min_distance;
  report.applicable = report.anticode_diameter < report.code_distance;
  report.bound_holds = report.code_size * report.anticode_size <= report.space;
  report.equality = report.applicable && report.code_size * report.anticode_size == report.space;
  return report;
}

MatchingReport check_matching(const Code& code, int threads) {
  require(code.alphabet == Alphabet::Ternary, "matching check works on star-word codes");
  require(code.n <= 16, "matching check capped at n = 16");
  const int n = code.n;
  MatchingReport report;
  report.perfect_expected = code.size() == (std::uint64_t(1) << (n - 1));

  std::vector<bool> endpoint(std::uint64_t(1) << n, false);
  report.is_matching = true;
  for (const auto& w : code.twords) {
    for (const std::uint32_t x : {w.bits, w.bits | (1u << w.star)}) {
      if (endpoint[x]) {
        report.is_matching = false;
        report.witness = "endpoint " + to_string(BinaryWord{n, x}) + " covered twice";
        return report;
      }
      endpoint[x] = true;
    }
  }
  report.is_perfect =
      report.is_matching &&
      std::all_of(endpoint.begin(), endpoint.end(), [](bool b) { return b; });

  // parallel edges must sit at distance >= 3 (rule out 1 and 2)
  std::vector<std::vector<std::uint32_t>> by_direction(n);
  for (const auto& w : code.twords) by_direction[w.star].push_back(w.bits);
  report.parallel_ok = true;
  std::mutex merge;
  parallel_blocks(n, threads, 1, [&](std::uint64_t d0, std::uint64_t d1) {
    for (std::uint64_t dir = d0; dir < d1; ++dir) {
      const auto& group = by_direction[dir];
      for (std::size_t i = 0; i < group.size(); ++i)
        for (std::size_t j = i + 1; j < group.size(); ++j) {
          if (std::popcount(group[i] ^ group[j]) < 3) {
            std::lock_guard<std::mutex> lock(merge);
            report.parallel_ok = false;
            report.witness = "parallel words " +
                             to_string(TernaryWord{n, int(dir), group[i]}) + " and " +
                             to_string(TernaryWord{n, int(dir), group[j]}) + " too close";
          }
        }
    }
  });
  return report;
}

namespace {

// Shortened code of one fixing, built from the mate table restricted to the
// subcube; the caller guarantees the walk succeeded.
Code shortened_from_subcube(int n, int k, std::uint32_t fixed_mask, std::uint32_t fixed_bits,
                            const std::vector<int>& free_pos,
                            const std::vector<std::int32_t>& mate) {
  Code out;
  out.alphabet = Alphabet::Ternary;
  out.n = k;
  std::vector<int> new_index(n, -1);
  for (int j = 0; j < k; ++j) new_index[free_pos[j]] = j;
  for (std::uint32_t t = 0; t < (1u << k); ++t) {
    std::uint32_t x = fixed_bits;
    for (int j = 0; j < k; ++j)
      if ((t >> j) & 1) x |= 1u << free_pos[j];
    const std::uint32_t y = static_cast<std::uint32_t>(mate[x]);
    if (y < x) continue;  // each edge once
    const int dir = std::countr_zero(x ^ y);
    std::uint32_t bits = 0;
    for (std::uint32_t rest = (x & ~fixed_mask) & ~(1u << dir); rest != 0; rest &= rest - 1)
      bits |= 1u << new_index[std::countr_zero(rest)];
    out.twords.push_back(make_ternary(k, new_index[dir], bits));
  }
  out.claimed_cardinality = out.twords.size();
  out.claimed_distance = 3;
  return out;
}

}  // namespace

ShortenScanReport shorten_scan(const Code& code, int k, int threads) {
  require(code.alphabet == Alphabet::Ternary, "shorten scan works on star-word codes");
  require(code.n <= 16, "shorten scan capped at n = 16");
  require(k > 1 && k < code.n && (k & (k - 1)) == 0, "k must be a power of two in (1, n)");
  const int n = code.n;
  const int fixed_count = n - k;
  const std::uint64_t full = std::uint64_t(1) << n;

  std::vector<std::int32_t> mate(full, -1);
  for (const auto& w : code.twords) {
    const std::uint32_t a = w.bits, b = w.bits | (1u << w.star);
    require(mate[a] == -1 && mate[b] == -1, "shorten scan needs a matching");
    mate[a] = static_cast<std::int32_t>(b);
    mate[b] = static_cast<std::int32_t>(a);
  }

  // all position sets of size n-k, Gosper order
  std::vector<std::uint32_t> masks;
  for (std::uint32_t mask = (1u << fixed_count) - 1; mask < (1u << n);) {
    masks.push_back(mask);
    const std::uint32_t c = mask & -mask, r = mask + c;
    mask = (((r ^ mask) >> 2) / c) | r;
  }

  ShortenScanReport report;
  report.k = k;
  report.fixings_checked = std::uint64_t(masks.size()) << fixed_count;
  std::mutex merge;

  parallel_blocks(masks.size(), threads, 4, [&](std::uint64_t s0, std::uint64_t s1) {
    std::vector<FixingWitness> local_found;
    std::uint64_t local_count = 0;
    for (std::uint64_t s = s0; s < s1; ++s) {
      const std::uint32_t fixed_mask = masks[s];
      std::vector<int> fixed_pos, free_pos;
      for (int j = 0; j < n; ++j)
        ((fixed_mask >> j) & 1 ? fixed_pos : free_pos).push_back(j);

      for (std::uint32_t v = 0; v < (1u << fixed_count); ++v) {
        std::uint32_t fixed_bits = 0;
        for (int j = 0; j < fixed_count; ++j)
          if ((v >> j) & 1) fixed_bits |= 1u << fixed_pos[j];

        bool closed = true;
        for (std::uint32_t t = 0; t < (1u << k) && closed; ++t) {
          std::uint32_t x = fixed_bits;
          for (int j = 0; j < k; ++j)
            if ((t >> j) & 1) x |= 1u << free_pos[j];
          const std::int32_t y = mate[x];
          closed = y >= 0 && (std::uint32_t(y) & fixed_mask) == fixed_bits;
        }
        if (!closed) continue;

        // the subcube is matched within itself; confirm the shortened code
        const Code sub = shortened_from_subcube(n, k, fixed_mask, fixed_bits, free_pos, mate);
        if (!is_perfect_d3(sub).perfect) continue;
        if (sub.size() >= 2 && min_distance(sub, 1).min_distance < 3) continue;

        ++local_count;
        if (local_found.size() < 32) {
          FixingWitness fw;
          fw.positions = fixed_mask;
          fw.values = fixed_bits;
          fw.pattern.assign(n, '.');
          for (int j = 0; j < n; ++j)
            if ((fixed_mask >> j) & 1) fw.pattern[j] = ((fixed_bits >> j) & 1) ? '1' : '0';
          local_found.push_back(std::move(fw));
        }
      }
    }
    std::lock_guard<std::mutex> lock(merge);
    report.found += local_count;
    for (auto& fw : local_found)
      if (report.examples.size() < 32) report.examples.push_back(std::move(fw));
  });
  return report;
}

NonequivalenceReport nonequivalence_certificate(const Code& a, const Code& b, int threads) {
  require(a.n == b.n, "codes must share one length");
  NonequivalenceReport report;
  for (int k = 2; k < a.n; k *= 2) report.ks.push_back(k);
  for (const int k : report.ks) {
    report.left_profile.push_back(shorten_scan(a, k, threads).found > 0);
    report.right_profile.push_back(shorten_scan(b, k, threads).found > 0);
  }
  report.nonequivalent = report.left_profile != report.right_profile;
  return report;
}

TransitivityReport check_transitivity(const Code& code) {
  require(code.alphabet == Alphabet::Ternary, "transitivity check works on star-word codes");
  require(code.n <= 8, "transitivity walk capped at n = 8");
  require(code.meta.family == "d3", "transitivity check needs d3 construction metadata");
  const Field field{*code.meta.field};
  const MOperator f = parse_operator(code.meta.op_literal, field);

  std::unordered_set<std::uint64_t> words;
  for (const auto& w : code.twords) words.insert(key(w));

  TransitivityReport report;
  // base codeword: the unique word covering 0^n
  const BinaryWord zero{code.n, 0};
  const TernaryWord* base = nullptr;
  for (const auto& w : code.twords)
    if (hamming(zero, w) == 1) base = &w;
  if (base == nullptr) {
    report.witness = "no codeword covers the zero word";
    return report;
  }

  for (const auto& target : code.twords) {
    // even endpoint of the target's edge
    const std::uint32_t x0 = target.bits, x1 = target.bits | (1u << target.star);
    const BinaryWord p{code.n, (std::popcount(x0) & 1) == 0 ? x0 : x1};
    const Automorphism t = shift_automorphism(field, f, p);
    if (!(apply(t, *base) == target)) {
      report.witness = "automorphism for " + to_string(target) + " misses the target";
      return report;
    }
    for (const auto& w : code.twords) {
      if (words.find(key(apply(t, w))) == words.end()) {
        report.witness = "automorphism for " + to_string(target) + " moves " + to_string(w) +
                         " outside the code";
        return report;
      }
    }
    ++report.reached;
  }
  report.transitive = report.reached == code.size();
  return report;
}

ColoringReport check_perfect_coloring(const Code& code) {
  require(code.alphabet == Alphabet::Ternary, "colouring check works on star-word codes");
  require(code.n <= 16, "colouring check capped at n = 16");
  const int n = code.n;
  const std::uint32_t full = 1u << n;

  std::vector<bool> c1(full, false);
  for (std::uint32_t x = 0; x < full; ++x) {
    int best = n + 1;
    for (const auto& w : code.twords) best = std::min(best, hamming(BinaryWord{n, x}, w));
    c1[x] = best == 1;
  }

  ColoringReport report;
  for (std::uint32_t x = 0; x < full; ++x) (c1[x] ? report.c1_size : report.c2_size)++;

  int counts[2][2] = {{-1, -1}, {-1, -1}};  // [part][neighbour part]
  for (std::uint32_t x = 0; x < full; ++x) {
    int to1 = 0;
    for (int j = 0; j < n; ++j)
      if (c1[x ^ (1u << j)]) ++to1;
    const int part = c1[x] ? 0 : 1;
    if (counts[part][0] == -1) {
      counts[part][0] = to1;
      counts[part][1] = n - to1;
    } else if (counts[part][0] != to1) {
      report.witness = "word " + to_string(BinaryWord{n, x}) + " sees " + std::to_string(to1) +
                       " neighbours in C1, expected " + std::to_string(counts[part][0]);
      return report;
    }
  }
  report.c1_to_c1 = counts[0][0];
  report.c1_to_c2 = counts[0][1];
  report.c2_to_c1 = counts[1][0];
  report.c2_to_c2 = counts[1][1];
  report.valid = counts[0][0] == 1 && counts[0][1] == n - 1 && counts[1][0] == n / 2 &&
                 counts[1][1] == n / 2;
  if (!report.valid && report.witness.empty()) report.witness = "uniform but wrong parameters";
  return report;
}

namespace {

// Tomita-style max clique with a greedy colouring bound.
class CliqueSearch {
 public:
  explicit CliqueSearch(std::vector<std::vector<std::uint64_t>> adj, int v)
      : adj_(std::move(adj)), v_(v), words_((v + 63) / 64) {}

  int run() {
    std::vector<std::uint64_t> cand(words_, ~0ull);
    if (v_ % 64 != 0) cand[words_ - 1] = (1ull << (v_ % 64)) - 1;
    expand(cand, 0);
    return best_;
  }

 private:
  static int count(const std::vector<std::uint64_t>& s) {
    int c = 0;
    for (auto w : s) c += std::popcount(w);
    return c;
  }

  void expand(std::vector<std::uint64_t>& cand, int depth) {
    // order candidates by greedy colouring; colour numbers bound the clique
    std::vector<int> order, colour;
    std::vector<std::uint64_t> uncoloured = cand;
    int col = 0;
    while (count(uncoloured) > 0) {
      ++col;
      std::vector<std::uint64_t> cls = uncoloured;
      for (int w = 0; w < words_; ++w) {
        while (cls[w] != 0) {
          const int u = w * 64 + std::countr_zero(cls[w]);
          cls[w] &= cls[w] - 1;
          order.push_back(u);
          colour.push_back(col);
          uncoloured[u / 64] &= ~(1ull << (u % 64));
          for (int t = 0; t < words_; ++t) cls[t] &= ~adj_[u][t];
        }
      }
    }
    for (int idx = static_cast<int>(order.size()) - 1; idx >= 0; --idx) {
      if (depth + colour[idx] <= best_) return;  // bound
      const int u = order[idx];
      std::vector<std::uint64_t> next(words_);
      for (int w = 0; w < words_; ++w) next[w] = cand[w] & adj_[u][w];
      if (count(next) == 0) {
        if (depth + 1 > best_) best_ = depth + 1;
      } else {
        expand(next, depth + 1);
      }
      cand[u / 64] &= ~(1ull << (u % 64));
    }
  }

  std::vector<std::vector<std::uint64_t>> adj_;
  int v_;
  int words_;
  int best_ = 0;
};

}  // namespace

int max_anticode_size(int n, int diameter_bound) {
  require(n >= 2 && n <= 8, "anticode search capped at n = 8");
  require(diameter_bound >= 2 && diameter_bound <= 4, "diameter bound must be 2, 3 or 4");
  const std::vector<TernaryWord> verts = space(n);
  const int v = static_cast<int>(verts.size());
  const int words = (v + 63) / 64;
  std::vector<std::vector<std::uint64_t>> adj(v, std::vector<std::uint64_t>(words, 0));
  for (int i = 0; i < v; ++i)
    for (int j = i + 1; j < v; ++j)
      if (hamming(verts[i], verts[j]) <= diameter_bound) {
        adj[i][j / 64] |= 1ull << (j % 64);
        adj[j][i / 64] |= 1ull << (i % 64);
      }
  return CliqueSearch(std::move(adj), v).run();
}

ApnCodeReport apn_code_distance(const Field& field, const MOperator& f) {
  require(f.m() == field.m(), "operator size does not match the field");
  const int n = static_cast<int>(field.size());
  require(n <= 16, "exact enumeration capped at n = 16");
  const int m = field.m();

  std::vector<std::uint32_t> rows(2 * m + 1, 0);
  for (int i = 0; i < n; ++i) {
    rows[0] |= 1u << i;  // parity
    for (int b = 0; b < m; ++b) {
      if ((fe_t(i) >> b) & 1) rows[1 + b] |= 1u << i;
      if ((f(fe_t(i)) >> b) & 1) rows[1 + m + b] |= 1u << i;
    }
  }
  const Gf2System sys(n, rows);
  const auto basis = sys.kernel_basis();

  ApnCodeReport report;
  report.dimension = static_cast<int>(basis.size());
  report.size = std::uint64_t(1) << basis.size();
  if (basis.empty()) return report;  // only the zero word; no distance

  Code code;
  code.alphabet = Alphabet::Binary;
  code.n = n;
  for (std::uint64_t i = 0; i < report.size; ++i) {
    std::uint32_t w = 0;
    for (std::uint64_t idx = i; idx != 0; idx &= idx - 1)
      w ^= basis[std::countr_zero(idx)];
    code.bwords.push_back(BinaryWord{n, w});
  }
  report.min_distance = min_distance(code, 1).min_distance;
  return report;
}

BinaryWord mate_by_ball_search(const BinaryWord& p, const Coset& Q) {
  int found = 0;
  BinaryWord result{p.n, 0};
  for (int j = 0; j < p.n; ++j) {
    const BinaryWord cand{p.n, p.bits ^ (1u << j)};
    if (Q.contains(cand)) {
      ++found;
      result = cand;
    }
  }
  if (found != 1)
    throw std::logic_error("ball search found " + std::to_string(found) + " mates, expected 1");
  return result;
}

}  // namespace dpc
