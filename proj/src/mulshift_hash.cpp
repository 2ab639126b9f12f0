#include "walklab/mulshift_hash.hpp"

#include <algorithm>

namespace walklab {

namespace {

std::uint64_t word_mask(int w) {
  return w == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << w) - 1;
}

// w-bit two's-complement residue of a signed key.
std::uint64_t to_residue(std::int64_t a, int w) {
  return static_cast<std::uint64_t>(a) & word_mask(w);
}

}  // namespace

MulShiftHash hash_sample(int w, int s, Rng& rng) {
  if (w < 1 || w > 63 || s < 1 || s > w)
    fail(ErrorCode::out_of_range, "need 1 <= s <= w <= 63");
  MulShiftHash h;
  h.w = w;
  h.s = s;
  h.z = (rng.next_u64() & word_mask(w)) | 1;  // odd, w bits
  return h;
}

std::uint64_t hash_eval(const MulShiftHash& h, std::int64_t a) {
  // (z*a) mod 2^w == ((z*a) mod 2^64) mod 2^w, so plain wrapping multiply suffices.
  std::uint64_t prod = h.z * to_residue(a, h.w);
  return (prod & word_mask(h.w)) >> (h.w - h.s);
}

int hash_linearity_offset(const MulShiftHash& h, std::int64_t a, std::int64_t b) {
  std::uint64_t mask = (std::uint64_t{1} << h.s) - 1;
  std::uint64_t sum_res = (to_residue(a, h.w) + to_residue(b, h.w)) & word_mask(h.w);
  std::uint64_t prod = h.z * sum_res;
  std::uint64_t hc = (prod & word_mask(h.w)) >> (h.w - h.s);
  std::uint64_t base = (hash_eval(h, a) + hash_eval(h, b)) & mask;
  if (base == hc) return 0;
  if (((base + 1) & mask) == hc) return 1;
  // Unreachable: the high-s bits of a modular sum differ from the sum of high-s
  // bits by exactly the carry out of the low part.
  fail(ErrorCode::out_of_range, "linearity offset not in {0,1}");
}

BucketizeResult hash_bucketize(const MulShiftHash& h, const std::vector<std::int64_t>& values) {
  std::uint64_t r = h.bucket_count();
  BucketizeResult out;
  out.buckets.assign(r, {});
  for (std::int64_t v : values) out.buckets[hash_eval(h, v)].push_back(v);
  out.bad.assign(r, false);
  // Bad means occupancy strictly greater than 3n/R.
  double threshold = 3.0 * static_cast<double>(values.size()) / static_cast<double>(r);
  for (std::uint64_t t = 0; t < r; ++t) {
    std::sort(out.buckets[t].begin(), out.buckets[t].end());
    if (static_cast<double>(out.buckets[t].size()) > threshold) {
      out.bad[t] = true;
      out.bad_mass += out.buckets[t].size();
    }
  }
  return out;
}

double hash_fp_rate(int w, int s, std::int64_t range, int trials, Rng& rng) {
  if (trials <= 0) fail(ErrorCode::out_of_range, "trials must be positive");
  int hits = 0;
  for (int t = 0; t < trials; ++t) {
    MulShiftHash h = hash_sample(w, s, rng);
    std::int64_t a, b, c;
    do {
      a = rng.next_in(-range, range);
      b = rng.next_in(-range, range);
      c = rng.next_in(-range, range);
    } while (a + b == c);
    std::uint64_t mask = (std::uint64_t{1} << s) - 1;
    std::uint64_t lhs = (hash_eval(h, a) + hash_eval(h, b)) & mask;
    std::uint64_t rhs = hash_eval(h, c);
    if (lhs == rhs || ((lhs + 1) & mask) == rhs) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(trials);
}

}  // namespace walklab
