#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "walklab/common.hpp"

namespace walklab {

struct UniverseConfig {
  std::int64_t value_bound = 0;  // values live in [-value_bound, value_bound]
  int index_capacity = 0;        // positions live in [1, index_capacity]
};

// Complete binary tree over the bounded universe, materialized sparsely: only
// paths to nonempty leaves are allocated, and emptied paths are pruned, so the
// allocated shape is a function of the stored multiset alone. Leaves carry the
// multiplicity and the sorted set of positions holding the value; internal nodes
// carry total multiplicity and the number of distinct nonempty leaves below.
class CountingPrefixTree {
 public:
  explicit CountingPrefixTree(UniverseConfig config);

  // Stores value at position. Throws position_occupied if the position already
  // holds any value, value_out_of_universe / out_of_range on bad arguments.
  void insert(int position, std::int64_t value);

  // Removes the (position, value) entry. Throws entry_absent if not present.
  void erase(int position, std::int64_t value);

  // k-th value in ascending multiset order, 1-based. Throws rank_out_of_range.
  std::int64_t select_kth(std::int64_t k) const;

  // k-th distinct value in ascending order, 1-based. Throws rank_out_of_range.
  std::int64_t select_kth_unique(std::int64_t k) const;

  struct ContainsResult {
    bool present = false;
    std::int64_t multiplicity = 0;
    std::vector<int> positions;
  };
  ContainsResult contains(std::int64_t value) const;

  std::optional<std::int64_t> value_at_position(int position) const;

  std::int64_t total_size() const;
  std::int64_t distinct_size() const;

  // Canonical serialization: version byte, then pre-order (flags byte + little-endian
  // 64-bit counters) over allocated nodes, then per-leaf sorted position lists in
  // value order. Equal multisets produce equal digests regardless of history.
  std::vector<std::uint8_t> canonical_digest() const;

  // Nodes touched by the most recent mutating or query call.
  int last_op_visits() const { return last_op_visits_; }
  int depth() const { return depth_; }

  // Recomputes every counter from the leaves and compares; true when consistent.
  bool audit() const;

  // Test hook: additively corrupts the stored multiplicity at the leaf holding
  // `value` (audit must catch it). Throws entry_absent if the value is not stored.
  void corrupt_counter_for_test(std::int64_t value, std::int64_t delta);

 private:
  struct Node {
    std::int64_t count_total = 0;
    std::int64_t count_unique = 0;
    std::unique_ptr<Node> left;
    std::unique_ptr<Node> right;
    std::vector<int> positions;  // leaves only, sorted
  };

  std::uint64_t key_of(std::int64_t value) const;  // order-preserving offset key
  std::int64_t value_of(std::uint64_t key) const;

  UniverseConfig config_;
  int depth_;  // bits in a key path; leaf sits at this depth
  std::unique_ptr<Node> root_;
  std::vector<std::optional<std::int64_t>> value_by_position_;
  mutable int last_op_visits_ = 0;
};

}  // namespace walklab
