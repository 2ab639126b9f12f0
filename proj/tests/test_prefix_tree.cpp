#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "doctest.h"
#include "walklab/common.hpp"
#include "walklab/prefix_tree.hpp"

using walklab::CountingPrefixTree;
using walklab::Error;
using walklab::ErrorCode;
using walklab::Rng;
using walklab::UniverseConfig;

namespace {

CountingPrefixTree make_tree(std::int64_t bound, int capacity) {
  return CountingPrefixTree(UniverseConfig{bound, capacity});
}

template <typename Op>
std::optional<ErrorCode> code_of(Op&& op) {
  try {
    op();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("hand-checked order statistics") {
  // Stored multiset {1, 3, 3, 3, 3, 4, 5}.
  CountingPrefixTree t = make_tree(10, 8);
  const std::vector<std::int64_t> values = {3, 5, 3, 1, 4, 3, 3};
  for (std::size_t i = 0; i < values.size(); ++i) t.insert(int(i) + 1, values[i]);

  CHECK(t.total_size() == 7);
  CHECK(t.distinct_size() == 4);
  CHECK(t.select_kth(1) == 1);
  CHECK(t.select_kth(2) == 3);
  CHECK(t.select_kth(4) == 3);
  CHECK(t.select_kth(5) == 3);
  CHECK(t.select_kth(6) == 4);
  CHECK(t.select_kth(7) == 5);
  // Distinct ascending order is 1, 3, 4, 5.
  CHECK(t.select_kth_unique(1) == 1);
  CHECK(t.select_kth_unique(2) == 3);
  CHECK(t.select_kth_unique(3) == 4);
  CHECK(t.select_kth_unique(4) == 5);

  CHECK(code_of([&] { t.select_kth(0); }) == ErrorCode::rank_out_of_range);
  CHECK(code_of([&] { t.select_kth(8); }) == ErrorCode::rank_out_of_range);
  CHECK(code_of([&] { t.select_kth_unique(5); }) == ErrorCode::rank_out_of_range);
}

TEST_CASE("membership and position lookup") {
  CountingPrefixTree t = make_tree(100, 4);
  t.insert(2, -7);
  t.insert(4, -7);
  t.insert(1, 100);

  const auto hit = t.contains(-7);
  CHECK(hit.present);
  CHECK(hit.multiplicity == 2);
  CHECK(hit.positions == std::vector<int>{2, 4});
  CHECK_FALSE(t.contains(6).present);
  CHECK(t.value_at_position(1) == 100);
  CHECK(t.value_at_position(3) == std::nullopt);
  CHECK(code_of([&] { t.value_at_position(0); }) == ErrorCode::out_of_range);
}

TEST_CASE("argument and state errors") {
  CountingPrefixTree t = make_tree(8, 3);
  t.insert(1, 5);
  CHECK(code_of([&] { t.insert(1, 2); }) == ErrorCode::position_occupied);
  CHECK(code_of([&] { t.insert(2, 9); }) == ErrorCode::value_out_of_universe);
  CHECK(code_of([&] { t.insert(2, -9); }) == ErrorCode::value_out_of_universe);
  CHECK(code_of([&] { t.insert(4, 0); }) == ErrorCode::out_of_range);
  CHECK(code_of([&] { t.erase(2, 5); }) == ErrorCode::entry_absent);
  CHECK(code_of([&] { t.erase(1, 4); }) == ErrorCode::entry_absent);
  t.erase(1, 5);
  CHECK(t.total_size() == 0);
}

TEST_CASE("digest depends only on the stored multiset") {
  Rng rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + int(rng.next_below(40));
    const std::int64_t bound = 1 + std::int64_t(rng.next_below(500));
    std::vector<std::int64_t> values;
    for (int i = 0; i < n; ++i) values.push_back(rng.next_in(-bound, bound));

    // Route A: straight inserts in position order.
    CountingPrefixTree a = make_tree(bound, n);
    for (int i = 0; i < n; ++i) a.insert(i + 1, values[i]);

    // Route B: shuffled insert order with interleaved churn (insert then remove).
    CountingPrefixTree b = make_tree(bound, n);
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(order[i], order[rng.next_below(i + 1)]);
    for (int idx : order) {
      b.insert(idx + 1, values[idx]);
      const std::int64_t extra = rng.next_in(-bound, bound);
      std::optional<int> free_pos;
      for (int p = 1; p <= n; ++p) {
        if (!b.value_at_position(p)) {
          free_pos = p;
          break;
        }
      }
      if (free_pos) {
        b.insert(*free_pos, extra);
        b.erase(*free_pos, extra);
      }
    }

    REQUIRE(a.canonical_digest() == b.canonical_digest());
    REQUIRE(a.audit());
    REQUIRE(b.audit());
  }
}

TEST_CASE("emptied tree matches a fresh tree") {
  CountingPrefixTree fresh = make_tree(50, 6);
  CountingPrefixTree used = make_tree(50, 6);
  for (int i = 1; i <= 6; ++i) used.insert(i, i * 7 - 20);
  for (int i = 1; i <= 6; ++i) used.erase(i, i * 7 - 20);
  CHECK(used.total_size() == 0);
  CHECK(used.canonical_digest() == fresh.canonical_digest());
}

TEST_CASE("operations touch at most 2(depth + 2) nodes") {
  Rng rng(77);
  CountingPrefixTree t = make_tree(1000, 64);
  const int limit = 2 * (t.depth() + 2);
  std::map<int, std::int64_t> live;
  for (int step = 0; step < 4000; ++step) {
    const int pos = 1 + int(rng.next_below(64));
    auto it = live.find(pos);
    if (it == live.end()) {
      const std::int64_t v = rng.next_in(-1000, 1000);
      t.insert(pos, v);
      live.emplace(pos, v);
    } else {
      t.erase(pos, it->second);
      live.erase(it);
    }
    CHECK(t.last_op_visits() <= limit);
    if (!live.empty()) {
      t.select_kth(1 + std::int64_t(rng.next_below(live.size())));
      CHECK(t.last_op_visits() <= limit);
    }
  }
  CHECK(t.audit());
}

TEST_CASE("select agrees with a sorted-vector oracle") {
  Rng rng(2718);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + int(rng.next_below(30));
    CountingPrefixTree t = make_tree(20, n);
    std::vector<std::int64_t> values;
    for (int i = 0; i < n; ++i) {
      values.push_back(rng.next_in(-20, 20));
      t.insert(i + 1, values.back());
    }
    std::vector<std::int64_t> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::int64_t> uniq = sorted;
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());

    for (std::int64_t k = 1; k <= std::int64_t(sorted.size()); ++k)
      REQUIRE(t.select_kth(k) == sorted[k - 1]);
    for (std::int64_t k = 1; k <= std::int64_t(uniq.size()); ++k)
      REQUIRE(t.select_kth_unique(k) == uniq[k - 1]);
  }
}

TEST_CASE("audit catches an injected counter error") {
  CountingPrefixTree t = make_tree(31, 5);
  t.insert(1, 12);
  t.insert(2, -3);
  t.insert(3, 12);
  REQUIRE(t.audit());
  t.corrupt_counter_for_test(12, +1);
  CHECK_FALSE(t.audit());
  t.corrupt_counter_for_test(12, -1);
  CHECK(t.audit());
  CHECK(code_of([&] { t.corrupt_counter_for_test(9, 1); }) == ErrorCode::entry_absent);
}
