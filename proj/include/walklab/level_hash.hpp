#pragma once

#include <cstdint>
#include <vector>

#include "walklab/common.hpp"

namespace walklab {

// Family of independent one-bit hash functions h_1..h_max_level used for skip-list
// level assignment: level(key) = length of the maximal all-ones prefix
// h_1(key), h_2(key), ..., so P(level >= l) = 2^-l exactly in the ideal model.
// Each h_t is a degree-(d-1) polynomial over the prime field 2^61 - 1 reduced to
// its low bit, giving d-wise independence (up to the negligible field-size bias).
class LevelHashFamily {
 public:
  // degree d >= 1; callers size it as 4*ceil(log2(domain)) + 1 for d-wise independence.
  LevelHashFamily(int max_level, int degree, std::uint64_t seed);

  int bit(int t, std::uint64_t key) const;  // h_t, t in [1, max_level]
  int level_of(std::uint64_t key) const;    // in [0, max_level]

  int max_level() const { return max_level_; }
  int degree() const { return degree_; }

 private:
  int max_level_;
  int degree_;
  std::vector<std::vector<std::uint64_t>> coeffs_;  // [max_level][degree]
};

}  // namespace walklab
