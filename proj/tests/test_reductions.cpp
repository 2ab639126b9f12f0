#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "doctest.h"
#include "walklab/brute_force.hpp"
#include "walklab/instances.hpp"
#include "walklab/mulshift_hash.hpp"
#include "walklab/reductions.hpp"

using walklab::ConvFamily;
using walklab::Error;
using walklab::ErrorCode;
using walklab::GeomBaseInstance;
using walklab::Lazy;
using walklab::MulShiftHash;
using walklab::Point;
using walklab::PointsInstance;
using walklab::Rng;
using walklab::ThreeListInstance;
using walklab::ThreeSumInstance;
using walklab::TriangleFamily;
using walklab::ValueSeq;

namespace {

ValueSeq vs(std::vector<std::int64_t> v) { return ValueSeq::materialized(std::move(v)); }

ThreeSumInstance three_sum(std::vector<std::int64_t> v) { return {vs(std::move(v))}; }

bool code_is(ErrorCode want, const std::function<void()>& op) {
  try {
    op();
  } catch (const Error& e) {
    return e.code() == want;
  }
  return false;
}

}  // namespace

TEST_CASE("sum-to-three-lists mapping") {
  const ThreeSumInstance src = three_sum({1, 2, -3});
  const ThreeListInstance out = walklab::map_3sum_to_3list(src);
  CHECK(out.a.to_vector() == std::vector<std::int64_t>{1, 2, -3});
  CHECK(out.b.to_vector() == std::vector<std::int64_t>{1, 2, -3});
  CHECK(out.c.to_vector() == std::vector<std::int64_t>{-1, -2, 3});
  CHECK(walklab::solve_3list(out.a.to_vector(), out.b.to_vector(), out.c.to_vector()) ==
        walklab::solve_3sum({1, 2, -3}));

  // Element access is lazy: one source query per mapped element.
  src.values.reset_queries();
  out.c.at(1);
  CHECK(src.values.queries() == 1);
}

TEST_CASE("three-lists to single-list mapping shifts into disjoint bands") {
  Rng rng(64);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 1 + int(rng.next_below(6));
    std::vector<std::int64_t> a, b, c;
    for (int i = 0; i < n; ++i) {
      a.push_back(rng.next_in(-9, 9));
      b.push_back(rng.next_in(-9, 9));
      c.push_back(rng.next_in(-9, 9));
    }
    if (rng.next_below(2) == 0 && n >= 1) c[0] = a[0] + b[0];  // plant
    const ThreeListInstance src{vs(a), vs(b), vs(c)};
    const auto mapped = walklab::map_3list_to_3sumprime(src);
    const std::vector<std::int64_t> flat = mapped.values.to_vector();
    for (std::int64_t v : flat) REQUIRE(v > 0);
    REQUIRE(walklab::solve_3sumprime(flat) == walklab::solve_3list(a, b, c));
  }
}

TEST_CASE("three-lists and three-row geometry translate both ways") {
  Rng rng(65);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 1 + int(rng.next_below(5));
    std::vector<std::int64_t> a, b, c;
    for (int i = 0; i < n; ++i) {
      a.push_back(rng.next_in(-20, 20));
      b.push_back(rng.next_in(-20, 20));
      c.push_back(rng.next_in(-20, 20));
    }
    if (rng.next_below(2) == 0) c[rng.next_below(n)] = a[rng.next_below(n)] + b[rng.next_below(n)];
    const bool truth = walklab::solve_3list(a, b, c);

    const ThreeListInstance src{vs(a), vs(b), vs(c)};
    const GeomBaseInstance geom = walklab::map_3list_to_geombase(src);
    const std::vector<Point> pts = geom.points.to_vector();
    REQUIRE(pts.size() == std::size_t(3 * n));
    REQUIRE(walklab::solve_geombase(pts) == truth);

    // And back: the recovered lists answer the same question.
    const ThreeListInstance back = walklab::map_geombase_to_3list(geom);
    REQUIRE(walklab::solve_3list(back.a.to_vector(), back.b.to_vector(), back.c.to_vector()) ==
            truth);
  }
}

TEST_CASE("distinct-value sums map onto the cubic curve") {
  // {1, -2, 3} answers yes through value reuse: 1 + 1 + (-2) = 0.
  const auto curve = walklab::map_unique_3sum_to_collinearity(three_sum({1, -2, 3}));
  REQUIRE(walklab::solve_3sum({1, -2, 3}));
  CHECK(walklab::solve_3points_on_line(curve.points.to_vector()));

  // {4, 3, 1} has no zero sum even with reuse; the points must stay in general position.
  const auto none = walklab::map_unique_3sum_to_collinearity(three_sum({4, 3, 1}));
  REQUIRE_FALSE(walklab::solve_3sum({4, 3, 1}));
  CHECK_FALSE(walklab::solve_3points_on_line(none.points.to_vector()));

  CHECK(code_is(ErrorCode::duplicate_input, [] {
    walklab::map_unique_3sum_to_collinearity(three_sum({5, 5, 1}));
  }));
  CHECK(code_is(ErrorCode::out_of_range, [] {
    walklab::map_unique_3sum_to_collinearity(three_sum({3000000}));
  }));

  // Lazy: each mapped point touches the source once after construction.
  const ThreeSumInstance src = three_sum({1, -2, 3});
  const auto mapped = walklab::map_unique_3sum_to_collinearity(src);
  src.values.reset_queries();
  mapped.points.at(2);
  CHECK(src.values.queries() <= 2);
}

TEST_CASE("distinct-value sums, randomized against the direct decider") {
  Rng rng(66);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 1 + int(rng.next_below(8));
    std::vector<std::int64_t> v;
    while (int(v.size()) < n) {
      const std::int64_t x = rng.next_in(-60, 60);
      if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
    }
    if (rng.next_below(2) == 0 && n >= 2) {
      const std::int64_t want = -(v[0] + v[1]);
      if (std::find(v.begin(), v.end(), want) == v.end()) v.back() = want;
    }
    std::vector<std::int64_t> uniq = v;
    std::sort(uniq.begin(), uniq.end());
    if (std::unique(uniq.begin(), uniq.end()) != uniq.end()) continue;

    const auto mapped = walklab::map_unique_3sum_to_collinearity(three_sum(v));
    REQUIRE(walklab::solve_3points_on_line(mapped.points.to_vector()) == walklab::solve_3sum(v));
  }
}

TEST_CASE("collinear points become concurrent lines") {
  const std::vector<std::vector<Point>> cases = {
    {{0, 0}, {2, 2}, {5, 5}},                  // generic collinear
    {{0, 0}, {1, 2}, {5, 1}},                  // general position
    {{2, 0}, {2, 9}, {2, -4}, {5, 1}},         // vertical collinear
    {{3, 4}, {3, 4}, {17, -20}},               // coincident pair
    {{3, 4}, {3, 4}},                          // too few
    {{0, 0}, {1, 1}, {2, 3}, {3, 6}, {4, 9}},  // collinear among noncollinear
  };
  for (const auto& pts : cases) {
    const PointsInstance src{walklab::PointSeq::materialized(pts)};
    const auto lines = walklab::map_collinearity_to_concurrency(src);
    REQUIRE(walklab::solve_point_on_3lines(lines.lines.to_vector()) ==
            walklab::solve_3points_on_line(pts));
  }

  Rng rng(67);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 3 + int(rng.next_below(6));
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i) pts.push_back({rng.next_in(-15, 15), rng.next_in(-15, 15)});
    if (rng.next_below(2) == 0) {
      // Plant a collinear triple through the first two points.
      const Point p = pts[0], q = pts[1];
      pts[2] = {2 * q.x - p.x, 2 * q.y - p.y};
    }
    const PointsInstance src{walklab::PointSeq::materialized(pts)};
    const auto lines = walklab::map_collinearity_to_concurrency(src);
    REQUIRE(walklab::solve_point_on_3lines(lines.lines.to_vector()) ==
            walklab::solve_3points_on_line(pts));
  }
}

TEST_CASE("strip arrangements become covering instances verbatim") {
  const walklab::Box box{0, 6, 0, 6};
  const std::vector<walklab::Strip> strips = {
      {walklab::Line{1, 0, -1}, walklab::Line{1, 0, 4}},
      {walklab::Line{1, -1, -9}, walklab::Line{1, -1, 9}},
  };
  const auto inst = walklab::map_strips_to_covering(strips, box);
  CHECK(inst.strips.size() == strips.size());
  CHECK(inst.angles.empty());
  CHECK(inst.box.x_max == 6);
  CHECK(walklab::solve_general_covering(inst).has_value() ==
        !walklab::solve_strips_cover_box(strips, box));
}

TEST_CASE("claw search over two ascending sequences") {
  const auto r1 = walklab::claw_find(vs({1, 4, 9, 12}), vs({2, 3, 9, 40}));
  REQUIRE(r1.common.has_value());
  CHECK(*r1.common == 9);
  CHECK(r1.steps <= 8);

  const auto r2 = walklab::claw_find(vs({1, 4}), vs({2, 3, 5}));
  CHECK_FALSE(r2.common.has_value());

  const auto r3 = walklab::claw_find(vs({}), vs({1}));
  CHECK_FALSE(r3.common.has_value());

  CHECK(code_is(ErrorCode::not_sorted, [] { walklab::claw_find(vs({3, 1}), vs({0, 5})); }));
}

TEST_CASE("bucket family layout, hand checked") {
  // h(a) = (a mod 16) >> 2 splits {1,2,3,5} into buckets [1,2,3] and [5].
  const MulShiftHash h{1, 4, 2};
  const ConvFamily fam({1, 2, 3, 5}, h);
  CHECK(fam.bucket_count() == 4);
  CHECK(fam.rank_capacity() == 3);
  CHECK(fam.filler() == 11);
  CHECK(fam.length() == 64);
  CHECK(fam.bucket(0) == std::vector<std::int64_t>{1, 2, 3});
  CHECK(fam.bucket(1) == std::vector<std::int64_t>{5});
  CHECK(fam.bad_bucket_count() == 0);
  CHECK(fam.bad_mass() == 0);

  // Member (0, 1, 2, omega=0): block 0 carries bucket 0 at lanes 1, 3, 4.
  CHECK(fam.element(0, 1, 2, 0, 1) == 1);
  CHECK(fam.element(0, 1, 2, 0, 3) == 2);
  CHECK(fam.element(0, 1, 2, 0, 4) == 3);
  for (std::int64_t pos : {2, 5, 6, 7, 8}) CHECK(fam.element(0, 1, 2, 0, pos) == 11);
  // Block 1, lane 1 reads bucket (1 - omega): bucket 1 holds only one element.
  CHECK(fam.element(0, 1, 2, 0, 9) == 5);
  CHECK(fam.element(1, 1, 2, 0, 9) == 11);  // rank 1 beyond bucket size
  CHECK(fam.element(0, 0, 0, 0, 11) == 5);  // lane 3 of block 1 reads bucket 1
  // With omega = 1, block 1 lane 1 reads bucket 0 instead.
  CHECK(fam.element(0, 1, 2, 1, 9) == 1);

  // The materialized member solves as a convolution: positions 1, 3, 4 hold 1 + 2 = 3.
  const auto inst = fam.instance(0, 1, 2, 0);
  CHECK(inst.values.size() == 64);
  CHECK(walklab::solve_convolution(inst.values.to_vector()));

  CHECK_THROWS_AS(fam.element(-1, 0, 0, 0, 1), Error);
  CHECK_THROWS_AS(fam.element(0, 0, 0, 2, 1), Error);
  CHECK_THROWS_AS(fam.element(0, 0, 0, 0, 0), Error);
  CHECK_THROWS_AS(fam.element(0, 0, 0, 0, 65), Error);
}

TEST_CASE("overfull buckets are inert in every family member") {
  const MulShiftHash h{1, 4, 2};
  // Six copies of 4 all land in bucket 1 and cross the 3n/R bar.
  const ConvFamily fam({4, 4, 4, 4, 4, 4}, h);
  CHECK(fam.bucket_bad(1));
  CHECK(fam.bad_bucket_count() == 1);
  CHECK(fam.bad_mass() == 6);
  const std::int64_t cap = fam.rank_capacity();
  for (std::int64_t i = 0; i < cap; ++i) {
    CHECK(fam.element(i, 0, 0, 0, 8 * 1 + 1) == fam.filler());  // lane 1, block 1
    CHECK(fam.element(0, i, i, 0, 8 * 1 + 3) == fam.filler());
  }
}

TEST_CASE("structured search agrees with the direct decider") {
  Rng rng(68);
  for (int trial = 0; trial < 250; ++trial) {
    const int n = 1 + int(rng.next_below(24));
    std::vector<std::int64_t> v;
    for (int i = 0; i < n; ++i) v.push_back(rng.next_in(-30, 30));
    if (rng.next_below(2) == 0 && n >= 3) v[2] = v[0] + v[1];
    const int bits = 2 + int(rng.next_below(3));
    const auto res = walklab::structured_sum_search(v, bits, rng.next_u64());
    const bool truth = walklab::solve_3sumprime(v);
    REQUIRE(res.found == truth);
    if (res.found) {
      REQUIRE(res.a + res.b == res.c);
      REQUIRE(std::find(v.begin(), v.end(), res.a) != v.end());
      REQUIRE(std::find(v.begin(), v.end(), res.b) != v.end());
      REQUIRE(std::find(v.begin(), v.end(), res.c) != v.end());
    }
  }
}

TEST_CASE("structured search covers the degenerate zero case") {
  const auto res = walklab::structured_sum_search({14, 0, 25}, 3, 99);
  CHECK(res.found);
  CHECK(res.a + res.b == res.c);
}

TEST_CASE("structured search clears overfull buckets through claws") {
  // 20 copies of 7 overflow one bucket; the only solution 7 + 3 = 10 involves it.
  std::vector<std::int64_t> v(20, 7);
  v.push_back(3);
  v.push_back(10);
  for (std::int64_t x : {101, 205, -57, 330, -411, 502, 113, 617, -790, 808}) v.push_back(x);
  REQUIRE(walklab::solve_3sumprime(v));
  bool clump_was_bad = false;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto res = walklab::structured_sum_search(v, 3, seed);
    REQUIRE(res.found);
    REQUIRE(res.a + res.b == res.c);
    REQUIRE(res.bad_mass >= 0);
    if (res.via_bad_bucket) clump_was_bad = true;
  }
  CHECK(clump_was_bad);
}

TEST_CASE("pipeline answer equals the literal family disjunction when no bucket overflows") {
  Rng rng(70);
  int exercised = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4 + int(rng.next_below(9));
    std::vector<std::int64_t> v;
    for (int i = 0; i < n; ++i) v.push_back(rng.next_in(-40, 40));
    if (rng.next_below(2) == 0) v[n - 1] = v[0] + v[1 + int(rng.next_below(n - 2))];
    const int bits = 2;
    const std::uint64_t seed = rng.next_u64();

    const auto res = walklab::structured_sum_search(v, bits, seed);
    if (res.bad_bucket_count != 0) continue;  // claws involved; not a pure family case
    ++exercised;

    // Rebuild the same family: sorted values, hash drawn with the pipeline's seed schedule.
    std::vector<std::int64_t> sorted = v;
    std::sort(sorted.begin(), sorted.end());
    Rng derive(seed);
    (void)derive.next_u64();  // index seed drawn first
    const MulShiftHash h = walklab::hash_sample(63, bits, derive);
    const ConvFamily fam(sorted, h);
    REQUIRE(fam.bad_bucket_count() == 0);

    bool any = false;
    const std::int64_t cap = fam.rank_capacity();
    for (int omega = 0; omega <= 1 && !any; ++omega)
      for (std::int64_t i = 0; i < cap && !any; ++i)
        for (std::int64_t j = 0; j < cap && !any; ++j)
          for (std::int64_t k = 0; k < cap && !any; ++k)
            any = walklab::solve_convolution(fam.instance(i, j, k, omega).values.to_vector());

    REQUIRE(any == res.found);
    REQUIRE(any == walklab::solve_3sumprime(v));
  }
  CHECK(exercised >= 10);
}

TEST_CASE("triangle family encodes a planted convolution solution") {
  // A[1] + A[2] = A[3]; the tail is far away from any other coincidence.
  std::vector<std::int64_t> a = {1, 2, 3};
  for (int idx = 4; idx <= 16; ++idx) a.push_back(1000000 + 13 * idx);
  const TriangleFamily fam(vs(a));
  CHECK(fam.graph_count() == 4);
  CHECK(fam.part_size() == 4);
  CHECK(fam.filler() == 3 * (1000000 + 13 * 16) + 1);

  // Graph 1 holds the triangle (s=1, t=1, q=3): A[1] + A[2] - A[3].
  const auto g1 = fam.graph(1);
  CHECK(g1.lr(1, 1) + g1.rs(1, 3) + g1.ls(1, 3) == 0);
  const auto back = fam.map_back(1, 1, 1, 3);
  REQUIRE(back.has_value());
  CHECK(back->first == 1);
  CHECK(back->second == 2);
  CHECK(fam.solve());
  CHECK(walklab::solve_convolution(a));

  // Out-of-range weight positions carry the filler.
  const auto g1r = fam.graph(1);
  CHECK(g1r.rs(4, 1) == fam.filler());           // index (1-1)*4 + 1 - 4 = -3 < 1
  CHECK(fam.graph(4).ls(4, 4) == fam.filler());  // index (4+4-2)*4 + 4 = 28 > 16

  CHECK(code_is(ErrorCode::not_square, [] {
    TriangleFamily(vs(std::vector<std::int64_t>(15, 1)));
  }));
}

TEST_CASE("diagonal-only coincidences do not count") {
  // A[1] + A[1] = A[2] is the only additive coincidence; i == j must be discarded.
  const std::vector<std::int64_t> a = {1, 2, 0, 0};
  REQUIRE_FALSE(walklab::solve_convolution(a));
  const TriangleFamily fam(vs(a));
  CHECK_FALSE(fam.solve());

  // The diagonal does produce a raw zero triangle; only the map-back filter rejects it.
  bool raw_triangle = false;
  for (std::int64_t g = 1; g <= fam.graph_count(); ++g)
    raw_triangle = raw_triangle || walklab::solve_0ewt(fam.graph(g)).has_value();
  CHECK(raw_triangle);
}

TEST_CASE("triangle family agrees with the direct decider on random inputs") {
  Rng rng(71);
  for (int trial = 0; trial < 80; ++trial) {
    const std::int64_t p = 2 + std::int64_t(rng.next_below(3));
    const std::int64_t n = p * p;
    std::vector<std::int64_t> a;
    for (std::int64_t i = 0; i < n; ++i) a.push_back(rng.next_in(-12, 12));
    const TriangleFamily fam(vs(a));
    REQUIRE(fam.solve() == walklab::solve_convolution(a));
  }
}

TEST_CASE("triangle weights query the source once each") {
  std::vector<std::int64_t> a(16, 5);
  a[0] = 1;
  const ValueSeq seq = vs(a);
  const TriangleFamily fam(seq);
  const auto g = fam.graph(2);
  seq.reset_queries();
  (void)g.lr(1, 1);
  CHECK(seq.queries() == 1);
  (void)g.ls(2, 3);
  CHECK(seq.queries() == 2);
}

TEST_CASE("registered reduction pairs all agree on random draws") {
  Rng rng(72);
  for (const auto& [from, to] : walklab::reduction_pairs()) {
    for (int trial = 0; trial < 25; ++trial) {
      const std::int64_t n = 4 + std::int64_t(rng.next_below(12));
      const auto check = walklab::run_reduction_check(from, to, n, rng);
      REQUIRE_MESSAGE(check.agree, from, " -> ", to);
      REQUIRE(check.source_answer == check.mapped_answer);
    }
  }
  CHECK_THROWS_AS(walklab::run_reduction_check("3sum", "conv", 8, rng), Error);
}
