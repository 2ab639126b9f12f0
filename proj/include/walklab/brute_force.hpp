#pragma once

#include <cstdint>
#include <optional>
#include <tuple>
#include <vector>

#include "walklab/instances.hpp"

namespace walklab {

// Exact reference deciders. All of them enumerate directly over the input with
// integer (or exact rational) arithmetic; they are the ground truth the mapped
// solvers are compared against.

// Exists (i, j, k), indices unrestricted, with v_i + v_j + v_k = 0.
bool solve_3sum(const std::vector<std::int64_t>& values);

// Exists (i, j, k), indices unrestricted, with v_i + v_j = v_k.
bool solve_3sumprime(const std::vector<std::int64_t>& values);

// Exists a in A, b in B, c in C with a + b = c.
bool solve_3list(const std::vector<std::int64_t>& a,
                 const std::vector<std::int64_t>& b,
                 const std::vector<std::int64_t>& c);

// Points lie on rows y in {0, 1, 2}; exists a non-horizontal line meeting all
// three rows in input points. Points off those rows are rejected.
bool solve_geombase(const std::vector<Point>& points);

// Exists an index triple i < j < k of collinear points (multiset semantics:
// coincident input points count separately).
bool solve_3points_on_line(const std::vector<Point>& points);

// Exists an index triple i < j < k of lines sharing a common point.
bool solve_point_on_3lines(const std::vector<Line>& lines);

// A[1..n] given 0-based; exists 1-based i != j, i + j <= n, with
// A[i] + A[j] = A[i+j].
bool solve_convolution(const std::vector<std::int64_t>& a);

// Exhaustive triangle scan; returns the first zero-weight triangle (s, t, q)
// in lexicographic order, if any.
std::optional<std::tuple<std::int64_t, std::int64_t, std::int64_t>> solve_0ewt(
    const TripartiteWeights& g);

// Exact rational point used as a covering witness.
struct RatPoint {
  // x = xn / d, y = yn / d with d > 0.
  __int128 xn = 0;
  __int128 yn = 0;
  __int128 d = 1;
};

// Searches the candidate set (pairwise intersections of strip/angle boundary
// lines and box edge lines) for a point inside the closed box that lies in no
// open region interior. Empty result means the interiors cover the box.
std::optional<RatPoint> solve_general_covering(const CoveringInstance& inst);

// Direct decision for parallel strips: projects onto the common normal and
// checks that the open projection intervals cover the closed box projection.
// Falls back to the witness search when strips are not pairwise parallel.
bool solve_strips_cover_box(const std::vector<Strip>& strips, const Box& box);

// True if the point is strictly between the strip's boundary lines.
bool point_in_open_strip(const Strip& s, const RatPoint& p);
// True if the point satisfies both half-plane constraints strictly.
bool point_in_open_angle(const Angle& a, const RatPoint& p);
// True if the point is inside the closed box.
bool point_in_closed_box(const Box& b, const RatPoint& p);

}  // namespace walklab
