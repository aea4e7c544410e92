// verify.hpp -- brute-force checks certifying every claimed code property.
// The distance, perfectness and matching checks work from raw words only
// and never read construction metadata.

#ifndef DPC_VERIFY_HPP
#define DPC_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dpc/code.hpp"
#include "dpc/construct.hpp"
#include "dpc/cosets.hpp"

namespace dpc {

struct DistanceReport {
  int min_distance = -1;
  bool exact = true;
  std::uint64_t pairs = 0;
  std::string witness_a, witness_b;  // a pair attaining the minimum
};

// Exact minimum over all pairs; throws for |C| < 2.
DistanceReport min_distance(const Code& code, int threads = 0);

// Random codeword pairs from a streaming view; an upper bound, not a proof.
DistanceReport sampled_distance(const D5CodeView& view, std::uint64_t pairs, std::uint64_t seed);
DistanceReport sampled_distance(const D3CodeView& view, std::uint64_t pairs, std::uint64_t seed);

struct PerfectnessReport {
  bool perfect = false;
  std::uint64_t covered = 0;
  std::string witness;  // overlapping pair or an uncovered word
};

// Radius-1 balls around the codewords partition X^n.  Ternary, n <= 16.
PerfectnessReport is_perfect_d3(const Code& code);

struct DiameterPerfectReport {
  std::uint64_t code_size = 0, anticode_size = 0, space = 0;
  int anticode_diameter = -1;
  int code_distance = -1;
  bool applicable = false;  // anticode diameter < code distance
  bool bound_holds = false; // |C| * |A| <= |X^n|
  bool equality = false;
};

DiameterPerfectReport diameter_perfect(const Code& code, const std::vector<TernaryWord>& anticode,
                                       int threads = 0);

struct MatchingReport {
  bool is_matching = false;
  bool perfect_expected = false;  // |C| = 2^(n-1)
  bool is_perfect = false;
  bool parallel_ok = false;       // parallel edges at distance >= 3
  std::string witness;
  bool all_ok() const { return is_matching && parallel_ok && (!perfect_expected || is_perfect); }
};

MatchingReport check_matching(const Code& code, int threads = 0);

struct FixingWitness {
  std::uint32_t positions = 0;  // mask of fixed positions
  std::uint32_t values = 0;
  std::string pattern;          // '.' free, '0'/'1' fixed
};

struct ShortenScanReport {
  int k = 0;
  std::uint64_t fixings_checked = 0;
  std::uint64_t found = 0;
  std::vector<FixingWitness> examples;  // capped at 32
};

// Scans every way to fix n-k coordinates and reports the fixings whose
// shortened code is a perfect distance-3 code in X^k.  Requires a matching.
ShortenScanReport shorten_scan(const Code& code, int k, int threads = 0);

struct NonequivalenceReport {
  bool nonequivalent = false;  // false means inconclusive
  std::vector<int> ks;
  std::vector<bool> left_profile, right_profile;  // some fixing found, per k
};

// Compares the shortening profiles; the profile is invariant under
// coordinate permutation and translation, so a difference is a certificate.
NonequivalenceReport nonequivalence_certificate(const Code& a, const Code& b, int threads = 0);

struct TransitivityReport {
  bool transitive = false;
  std::uint64_t reached = 0;
  std::string witness;
};

// Walks every codeword from a fixed base word via constructed shift
// automorphisms and checks each maps the code onto itself.  d3 codes, n <= 8.
TransitivityReport check_transitivity(const Code& code);

struct ColoringReport {
  bool valid = false;
  std::uint64_t c1_size = 0, c2_size = 0;
  int c1_to_c1 = -1, c1_to_c2 = -1, c2_to_c1 = -1, c2_to_c2 = -1;
  std::string witness;
};

// C1 = binary words at distance 1 from the code, C2 = the rest; checks the
// neighbour counts form the equitable partition ((1, n-1), (n/2, n/2)).
ColoringReport check_perfect_coloring(const Code& code);

// Maximum cardinality of a diameter-D anticode in X^n by branch-and-bound
// clique search with a greedy colouring bound.  n <= 8, D in {2, 3, 4}.
int max_anticode_size(int n, int diameter_bound);

struct ApnCodeReport {
  int dimension = 0;
  std::uint64_t size = 0;
  int min_distance = 0;
};

// Exact minimum distance of the binary code cut out by zero parity, zero
// identity syndrome and zero f-syndrome; distance >= 6 whenever f is APN.
ApnCodeReport apn_code_distance(const Field& field, const MOperator& f);

// Oracle for the syndrome-based pairing: scans the n neighbours of p and
// returns the unique one inside Q; throws if the count differs from one.
BinaryWord mate_by_ball_search(const BinaryWord& p, const Coset& Q);

}  // namespace dpc

#endif
