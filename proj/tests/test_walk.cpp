#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "walklab/walk.hpp"

using walklab::RepPolicy;
using walklab::WalkConfig;
using walklab::WalkSimulator;

namespace {

WalkConfig make_cfg(int n, int r, RepPolicy policy = RepPolicy::canonical, int q = 0) {
  WalkConfig cfg;
  cfg.n = n;
  cfg.r = r;
  cfg.policy = policy;
  cfg.rep_modulus = q;
  return cfg;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

// No three of these sum to zero (all positive).
const std::vector<std::int64_t> kUnmarked8 = {1, 2, 4, 8, 16, 32, 64, 128};
// Exactly one marked triple: {1, -1, 0} at positions 0, 1, 2.
const std::vector<std::int64_t> kOneTriple8 = {1, -1, 0, 100, 200, 400, 800, 1600};

}  // namespace

TEST_CASE("dimensions, marking, and the initial state") {
  WalkSimulator sim(make_cfg(8, 3), kOneTriple8);
  CHECK(sim.subset_count() == 56);      // C(8, 3)
  CHECK(sim.dimension() == 56 * 5);     // times n - r, record register trivial
  CHECK(sim.rep_modulus() == 1);
  CHECK(sim.marked_subset_count() == 1);

  sim.reset();
  CHECK(sim.norm() == doctest::Approx(1.0).epsilon(1e-12));
  const double expect = 1.0 / double(56 * 5);
  for (double a : sim.amplitudes()) CHECK(a == doctest::Approx(std::sqrt(expect)).epsilon(1e-12));

  WalkSimulator pd(make_cfg(8, 3, RepPolicy::path_dependent), kOneTriple8);
  CHECK(pd.rep_modulus() == 9);  // default Q = n + 1
  CHECK(pd.dimension() == 56 * 5 * 9);
  pd.reset();
  CHECK(pd.norm() == doctest::Approx(1.0).epsilon(1e-12));

  // Marked count is a pure subset property: triples {1,-1,0} within r = 4 supersets.
  WalkSimulator wide(make_cfg(8, 4), kOneTriple8);
  CHECK(wide.marked_subset_count() == 5);  // choose the 4th member freely
}

TEST_CASE("configuration validation") {
  CHECK_THROWS_AS(WalkSimulator(make_cfg(4, 0), {1, 2, 3, 4}), walklab::Error);
  CHECK_THROWS_AS(WalkSimulator(make_cfg(4, 4), {1, 2, 3, 4}), walklab::Error);
  CHECK_THROWS_AS(WalkSimulator(make_cfg(4, 2), {1, 2, 3}), walklab::Error);
  // C(40, 10) alone exceeds the default cap; must fail before enumerating.
  std::vector<std::int64_t> v(40, 1);
  CHECK_THROWS_AS(WalkSimulator(make_cfg(40, 10), v), walklab::Error);
}

TEST_CASE("walk step and phase flip preserve the norm") {
  for (const RepPolicy policy : {RepPolicy::canonical, RepPolicy::path_dependent}) {
    WalkSimulator sim(make_cfg(7, 3, policy), {3, -5, 2, 9, -14, 27, 1000});
    REQUIRE(sim.marked_subset_count() > 0);
    sim.reset();
    for (int i = 0; i < 120; ++i) {
      if (i % 3 == 0) sim.apply_phase_flip();
      sim.apply_walk_step();
      REQUIRE(std::abs(sim.norm() - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("one walk step is exactly unitary on a basis sweep") {
  // Small enough to check the full matrix: C(5,2) * 3 * 6 = 180 columns.
  WalkSimulator sim(make_cfg(5, 2, RepPolicy::path_dependent, 6), {1, -1, 0, 7, 9});
  const std::int64_t dim = sim.dimension();
  REQUIRE(dim == 180);
  std::vector<std::vector<double>> columns;
  for (std::int64_t i = 0; i < dim; ++i) {
    std::vector<double> e(dim, 0.0);
    e[i] = 1.0;
    sim.set_amplitudes(e);
    sim.apply_walk_step();
    columns.push_back(sim.amplitudes());
  }
  for (std::int64_t i = 0; i < dim; ++i) {
    REQUIRE(dot(columns[i], columns[i]) == doctest::Approx(1.0).epsilon(1e-9));
    for (std::int64_t j = i + 1; j < dim; ++j) {
      REQUIRE(std::abs(dot(columns[i], columns[j])) < 1e-9);
    }
  }
}

TEST_CASE("the uniform state is a fixed point of the canonical walk") {
  WalkSimulator sim(make_cfg(8, 3), kUnmarked8);
  REQUIRE(sim.marked_subset_count() == 0);
  sim.reset();
  const std::vector<double> before = sim.amplitudes();
  sim.apply_walk_step();
  const std::vector<double>& after = sim.amplitudes();
  for (std::size_t i = 0; i < before.size(); ++i)
    REQUIRE(after[i] == doctest::Approx(before[i]).epsilon(1e-12));
}

TEST_CASE("success probability is exactly zero without marked subsets") {
  WalkSimulator sim(make_cfg(9, 3), {1, 2, 4, 8, 16, 32, 64, 128, 256});
  REQUIRE(sim.marked_subset_count() == 0);
  sim.run_schedule(3, 4);
  CHECK(sim.success_probability() == 0.0);

  WalkSimulator pd(make_cfg(9, 3, RepPolicy::path_dependent),
                   {1, 2, 4, 8, 16, 32, 64, 128, 256});
  pd.run_schedule(3, 4);
  CHECK(pd.success_probability() == 0.0);
}

TEST_CASE("phase flip negates exactly the marked block") {
  WalkSimulator sim(make_cfg(8, 3), kOneTriple8);
  sim.reset();
  const std::vector<double> before = sim.amplitudes();
  sim.apply_phase_flip();
  const std::vector<double>& after = sim.amplitudes();
  const double p = sim.success_probability();
  CHECK(p == doctest::Approx(1.0 / 56.0).epsilon(1e-12));  // uniform over 56 subsets, 1 marked
  std::size_t flipped = 0;
  for (std::size_t i = 0; i < before.size(); ++i) {
    if (after[i] == -before[i] && before[i] != 0.0) ++flipped;
    else REQUIRE(after[i] == before[i]);
  }
  CHECK(flipped == 5);  // one subset, n - r slots, Q = 1
}

TEST_CASE("amplification beats the stationary baseline on a planted instance") {
  WalkSimulator sim(make_cfg(10, 3), {1, -1, 0, 100, 200, 400, 800, 1600, 3200, 6400});
  REQUIRE(sim.marked_subset_count() == 1);
  const double baseline = 1.0 / 120.0;  // C(10, 3)
  const auto points = sim.sweep(4, 12);
  double best = 0.0;
  for (const auto& pt : points) best = std::max(best, pt.success);
  CHECK(best > 0.5);
  CHECK(best > 10 * baseline);
}

TEST_CASE("sweep points match individually run schedules") {
  WalkSimulator sim(make_cfg(8, 3), kOneTriple8);
  const auto points = sim.sweep(3, 4);
  REQUIRE(points.size() == 12);
  for (const auto& pt : {points[0], points[5], points[11]}) {
    WalkSimulator fresh(make_cfg(8, 3), kOneTriple8);
    fresh.run_schedule(pt.t1, pt.t2);
    REQUIRE(fresh.success_probability() == doctest::Approx(pt.success).epsilon(1e-12));
  }
}

TEST_CASE("vertex relabeling leaves the success trajectory unchanged") {
  const std::vector<std::int64_t> values = {4, -9, 5, 70, 300, -55, 81, 23};
  std::vector<std::int64_t> permuted = {300, 5, 23, -9, 81, 4, -55, 70};
  WalkSimulator a(make_cfg(8, 3), values);
  WalkSimulator b(make_cfg(8, 3), permuted);
  REQUIRE(a.marked_subset_count() == b.marked_subset_count());
  for (const auto& t : {std::pair{1, 3}, std::pair{2, 5}, std::pair{3, 2}}) {
    a.run_schedule(t.first, t.second);
    b.run_schedule(t.first, t.second);
    REQUIRE(a.success_probability() == doctest::Approx(b.success_probability()).epsilon(1e-10));
  }
}

TEST_CASE("path records suppress the canonical amplification") {
  const std::vector<std::int64_t> values = {1, -1, 0, 100, 200, 400, 800, 1600, 3200, 6400};
  WalkSimulator canonical(make_cfg(10, 3), values);
  WalkSimulator recorded(make_cfg(10, 3, RepPolicy::path_dependent), values);
  double best_canonical = 0.0, best_recorded = 0.0;
  for (const auto& pt : canonical.sweep(4, 10)) best_canonical = std::max(best_canonical, pt.success);
  for (const auto& pt : recorded.sweep(4, 10)) best_recorded = std::max(best_recorded, pt.success);
  CHECK(best_canonical > 0.5);
  CHECK(best_recorded < 0.5 * best_canonical);
}

TEST_CASE("default schedule is positive and grows with the gap") {
  const auto s1 = WalkSimulator::default_schedule(8, 3);
  CHECK(s1.first >= 1);
  CHECK(s1.second >= 1);
  const auto s2 = WalkSimulator::default_schedule(64, 4);
  CHECK(s2.second > s1.second);  // (n / r)^{3/2} grows
}
