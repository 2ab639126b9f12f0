#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "walklab/instances.hpp"
#include "walklab/mulshift_hash.hpp"

namespace walklab {

// Instance mappings. Each returns lazy views over the source oracle: after an
// O(n) construction scan at most (to fix shift scalars or index partitions), a
// query on the produced instance issues O(1) queries on the source.

// a + b + c = 0 over one list becomes x + y = z over (S, S, -S).
ThreeListInstance map_3sum_to_3list(const ThreeSumInstance& src);

// Shifts the three lists into disjoint positive bands of a single list so that
// x + y = z hits iff a + b = c across the original lists.
ThreeSumPrimeInstance map_3list_to_3sumprime(const ThreeListInstance& src);

// a -> (2a, 0), b -> (2b, 2), c -> (c, 1); a + b = c becomes the midpoint
// condition on rows 0/1/2.
GeomBaseInstance map_3list_to_geombase(const ThreeListInstance& src);

// Inverse direction: rows 0 and 2 become A and B, row-1 abscissas doubled
// become C.
ThreeListInstance map_geombase_to_3list(const GeomBaseInstance& src);

// Distinct-value a + b + c = 0 becomes collinearity on the cubic curve
// (y, y^3): each value x spawns copies x + k, x - 3k, x + 2k with
// k = 4 * max|x| + 1, large enough that only the balanced offset pattern can
// cancel and no two mapped abscissas collide. Throws duplicate_input if the
// source has repeated values and out_of_range if cubes would overflow.
PointsInstance map_unique_3sum_to_collinearity(const ThreeSumInstance& src);

// Shears (x, y) -> (x + (2X + 1) y, y) with X = max|coordinate| so no two
// distinct points share an abscissa, then dualizes (p, q) -> [y = p x - q].
// Three points collinear iff three mapped lines share a point.
LinesInstance map_collinearity_to_concurrency(const PointsInstance& src);

// Packages strips and the box as a covering instance whose witness predicate
// is box membership; the strips cover the box iff no witness exists.
CoveringInstance map_strips_to_covering(const std::vector<Strip>& strips, const Box& box);

struct ClawResult {
  std::optional<std::int64_t> common;  // a value present in both sequences
  std::int64_t steps = 0;
};

// Linear merge over two ascending sequences; returns the first common value.
// Throws not_sorted as soon as a queried prefix violates ascending order.
ClawResult claw_find(const ValueSeq& x, const ValueSeq& y);

// Family of convolution instances derived from hashing a sorted value list
// into R = 2^s buckets. Member (i, j, k, omega) is an array of length 16R
// laid out in period-8 lanes: position 8u + 1 carries the rank-i element
// (0-based) of bucket (u - omega) mod R, positions 8u + 3 and 8u + 4 carry the
// rank-j and rank-k elements of bucket u mod R, and every other position (or
// any lane whose bucket is overfull or shorter than the requested rank) carries
// the inert filler 2 * max|S| + 1. Lane arithmetic admits x + y = z only for lane
// residues 1 + 3 = 4, and filler can never participate in a hit, so a member
// has an x != y convolution solution iff some a, b in the selected buckets
// satisfy a + b = c with c in the bucket aligned by the carry/wrap offsets.
class ConvFamily {
 public:
  // `sorted_values` must be ascending; h decides the bucket of each value.
  ConvFamily(std::vector<std::int64_t> sorted_values, const MulShiftHash& h);

  std::int64_t bucket_count() const;            // R
  std::int64_t rank_capacity() const;           // ceil(3n / R)
  std::int64_t filler() const;
  std::int64_t length() const;                  // 16R
  bool bucket_bad(std::int64_t t) const;        // occupancy strictly above 3n/R
  const std::vector<std::int64_t>& bucket(std::int64_t t) const;
  std::int64_t bad_bucket_count() const;
  std::int64_t bad_mass() const;                // total elements in bad buckets

  // Element query of member (i, j, k, omega) at 1-based position pos.
  std::int64_t element(std::int64_t i, std::int64_t j, std::int64_t k, int omega,
                       std::int64_t pos) const;
  ConvolutionInstance instance(std::int64_t i, std::int64_t j, std::int64_t k, int omega) const;

  struct Core;  // defined in the implementation file

 private:
  std::shared_ptr<const Core> core_;
};

struct StructuredSearchResult {
  bool found = false;
  std::int64_t a = 0;  // witness with a + b = c, all three input values
  std::int64_t b = 0;
  std::int64_t c = 0;
  bool via_bad_bucket = false;
  std::int64_t bucket_count = 0;
  std::int64_t bad_bucket_count = 0;
  std::int64_t bad_mass = 0;
  std::int64_t family_size = 0;  // members of the derived instance family
  std::uint64_t claw_steps = 0;
  std::uint64_t membership_probes = 0;
};

// Full pipeline for x + y = z over one list: ingest the values into an
// order-maintaining index, hash the sorted list into 2^bucket_bits buckets,
// clear overfull buckets with claw searches (the overfull element may play
// any of the three roles), then scan the aligned bucket family that underlies
// the derived convolution instances. Every candidate is re-verified against
// the input before it is reported, so a witness is always a true solution.
StructuredSearchResult structured_sum_search(const std::vector<std::int64_t>& values,
                                             int bucket_bits, std::uint64_t seed);

// Family of complete tripartite graphs encoding A[i] + A[j] = A[i+j] (1-based,
// i != j) as zero-weight triangles. With n = p^2, graph g on parts of size p
// has weights w(L_s, R_t) = A[(s-1)p + t], w(R_t, S_q) = A[(g-1)p + q - t],
// w(L_s, S_q) = -A[(s+g-2)p + q]; indices outside [1, n] weigh the positive
// filler 3 * max|A| + 1, which cannot lie on a zero triangle. Every zero
// triangle therefore has A[i1] + A[i2] = A[i1 + i2] with i1, i2 in range, and
// the i1 == i2 diagonal is discarded when mapping back.
class TriangleFamily {
 public:
  explicit TriangleFamily(ValueSeq conv_values);  // throws not_square

  std::int64_t graph_count() const;  // p
  std::int64_t part_size() const;    // p
  std::int64_t filler() const;
  TripartiteWeights graph(std::int64_t g) const;  // 1-based g

  // Convolution indices (i1, i2) of a zero triangle, or empty when it falls
  // outside [1, n], collapses to i1 == i2, or fails source verification.
  std::optional<std::pair<std::int64_t, std::int64_t>> map_back(std::int64_t g, std::int64_t s,
                                                                std::int64_t t,
                                                                std::int64_t q) const;

  // Scans all graphs for a mapped-back, verified zero triangle.
  bool solve() const;

 private:
  ValueSeq values_;
  std::int64_t n_ = 0;
  std::int64_t p_ = 0;
  std::int64_t filler_ = 1;
};

// Randomized end-to-end check of one mapping: draws an instance (solutions
// planted in roughly half the draws), solves the source directly, solves the
// mapped instance with the target's solver, and compares.
struct ReductionCheck {
  bool source_answer = false;
  bool mapped_answer = false;
  bool agree = false;
};

// Pairs accepted: (3sum, 3list), (3list, 3sumprime), (3list, geombase),
// (geombase, 3list), (unique3sum, collinear), (collinear, concurrent),
// (strips, covering), (structured3sum, conv), (conv, 0ewt).
// Throws unknown_reduction for anything else.
ReductionCheck run_reduction_check(const std::string& from, const std::string& to, std::int64_t n,
                                   Rng& rng);
std::vector<std::pair<std::string, std::string>> reduction_pairs();

}  // namespace walklab
