#pragma once

#include <cstdint>
#include <vector>

#include "walklab/common.hpp"

namespace walklab {

// Multiply-shift bucket hash h(a) = ((z*a) mod 2^w) >> (w-s) with z odd.
// Inputs are mapped to their w-bit two's-complement residues first, so negative
// keys are well-defined. Requires 1 <= s <= w <= 63.
struct MulShiftHash {
  std::uint64_t z = 1;  // odd multiplier, w bits
  int w = 63;
  int s = 1;

  std::uint64_t bucket_count() const { return std::uint64_t{1} << s; }
};

MulShiftHash hash_sample(int w, int s, Rng& rng);

std::uint64_t hash_eval(const MulShiftHash& h, std::int64_t a);

// The offset eps in {0,1} with h(a) + h(b) + eps == h(a+b) (mod 2^s). Always exists;
// a+b is taken in w-bit residue arithmetic, consistent with hash_eval's input map.
int hash_linearity_offset(const MulShiftHash& h, std::int64_t a, std::int64_t b);

struct BucketizeResult {
  std::vector<std::vector<std::int64_t>> buckets;  // each sorted ascending
  std::vector<bool> bad;                           // occupancy strictly greater than 3n/R
  std::uint64_t bad_mass = 0;                      // total elements in bad buckets
};

// Splits S into R = 2^s sorted buckets and flags overfull ones.
BucketizeResult hash_bucketize(const MulShiftHash& h, const std::vector<std::int64_t>& values);

// Empirical false-positive rate: fraction of random triples with a + b != c for which
// some eps in {0,1} still gives h(a)+h(b)+eps == h(c) (mod 2^s). Triples are drawn
// from [-range, range]; exact a+b == c draws are rejected and redrawn.
double hash_fp_rate(int w, int s, std::int64_t range, int trials, Rng& rng);

}  // namespace walklab
