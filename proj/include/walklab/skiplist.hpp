#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "walklab/common.hpp"
#include "walklab/level_hash.hpp"

namespace walklab {

enum class SlStatus {
  ok,
  aborted,            // step budget exhausted; structure left unchanged
  duplicate_index,
  bucket_overflow,
  entry_absent,
  rank_out_of_range,
};

inline const char* sl_status_name(SlStatus s) {
  switch (s) {
    case SlStatus::ok: return "ok";
    case SlStatus::aborted: return "Aborted";
    case SlStatus::duplicate_index: return "DuplicateIndex";
    case SlStatus::bucket_overflow: return "BucketOverflow";
    case SlStatus::entry_absent: return "EntryAbsent";
    case SlStatus::rank_out_of_range: return "RankOutOfRange";
  }
  return "unknown";
}

struct SkipListConfig {
  int index_capacity = 0;        // n; indices live in [0, n)
  int bucket_count = 0;          // r; 0 means r = n
  int value_bits = 32;           // m; width assumed for stored values
  std::uint64_t level_seed = 0;
  // Step budget B = budget_constant * ceil(log2(n + m))^4. The constant is frozen
  // at 1 after calibration (max observed op cost sits far below the bound).
  double budget_constant = 1.0;
};

// Skip list ordered by (value, id) with per-level distance counters and a
// positional bucket table. Levels come from a seeded hash family, counters and
// links are functions of the stored set alone, and bucket entries are kept
// sorted, so the canonical digest is history independent for a fixed seed.
//
// Two keying modes share the implementation: by-index mode stores entries
// (id = index in [0, n), value arbitrary) with bucket h(i) = floor(r*i/n) + 1;
// by-value mode (used for the distinct-values list) stores id = value with
// bucket h(x) = floor(r * u / 2^m) + 1 over the two's-complement residue u.
class IndexableSkipList {
 public:
  enum class Mode { by_index, by_value };

  explicit IndexableSkipList(SkipListConfig config, Mode mode = Mode::by_index);

  SlStatus insert(std::int64_t id, std::int64_t value);
  SlStatus erase(std::int64_t id, std::int64_t value);

  struct FindResult {
    SlStatus status = SlStatus::ok;
    bool found = false;
    std::int64_t id = 0;
    std::int64_t value = 0;
  };
  // First entry with the given value in (value, id) order, or found = false.
  FindResult find_value(std::int64_t value) const;
  // Exact entry lookup through the pointer structure (not the id table).
  FindResult find_entry(std::int64_t id, std::int64_t value) const;

  struct RankResult {
    SlStatus status = SlStatus::ok;
    std::int64_t id = 0;
    std::int64_t value = 0;
  };
  // k-th entry of the (value, id) order, 1-based.
  RankResult at_rank(std::int64_t k) const;

  bool contains_id(std::int64_t id) const { return nodes_.count(id) > 0; }
  std::optional<std::int64_t> value_of(std::int64_t id) const;
  std::int64_t size() const { return size_; }
  int max_level() const { return max_level_; }
  int level_of_id(std::int64_t id) const;
  std::int64_t step_budget() const { return budget_; }

  // Instrumentation for the most recent operation.
  std::int64_t last_op_steps() const { return last_op_steps_; }
  std::int64_t last_rank_pointer_accesses() const { return last_rank_pointer_accesses_; }
  std::int64_t max_steps_seen() const { return max_steps_seen_; }

  // Full structural audit by brute recount: order, links, every distance counter,
  // bucket contents, levels against the hash family, sizes. Empty string = clean.
  std::string audit() const;

  // Canonical serialization: header, bucket table, then per-node level and
  // distance counters (sentinel -1 on absent levels) in bucket order.
  std::vector<std::uint8_t> canonical_digest() const;

  // Test hook: additively corrupts one distance counter (audit must catch it).
  void corrupt_counter_for_test(std::int64_t id, int level, bool left_side, std::int64_t delta);

  std::vector<std::pair<std::int64_t, std::int64_t>> entries_in_order() const;

 private:
  struct Node {
    std::int64_t value = 0;
    int level = 0;
    std::vector<std::int64_t> next;        // per level t in [0, level]
    std::vector<std::int64_t> prev;
    std::vector<std::int64_t> dist_left;   // per level t in [0, max_level], -1 when absent
    std::vector<std::int64_t> dist_right;
  };

  struct SearchResult {
    std::vector<std::int64_t> lefts;     // anchor id per level
    std::vector<std::int64_t> pos_left;  // level-0 position of each anchor (head = -1)
    std::int64_t found_id;
    std::int64_t steps;
  };

  static constexpr std::int64_t kHead = INT64_MIN;
  static constexpr std::int64_t kTail = INT64_MAX;

  const Node& node(std::int64_t id) const;
  Node& node(std::int64_t id);
  std::pair<std::int64_t, std::int64_t> key_of(std::int64_t id) const;  // (value, tiebreak)
  int bucket_of(std::int64_t id) const;
  std::uint64_t level_key_of(std::int64_t id) const;
  SearchResult search(std::int64_t value, std::int64_t id_tiebreak) const;
  SlStatus erase_impl(std::int64_t id, std::int64_t value, bool enforce_budget);

  friend class DualSkipList;

  SkipListConfig config_;
  Mode mode_;
  int max_level_;
  std::int64_t bucket_capacity_;
  int bucket_count_;
  std::int64_t budget_;
  LevelHashFamily levels_;
  std::map<std::int64_t, Node> nodes_;
  Node head_;
  Node tail_;
  std::vector<std::vector<std::int64_t>> buckets_;  // 1-based; each sorted by id
  std::int64_t size_ = 0;
  mutable std::int64_t last_op_steps_ = 0;
  mutable std::int64_t last_rank_pointer_accesses_ = 0;
  mutable std::int64_t max_steps_seen_ = 0;
};

// Full list over all entries plus a second skip list over distinct values, each
// distinct value linking to its first occurrence (minimal (value, index)).
class DualSkipList {
 public:
  explicit DualSkipList(SkipListConfig config);

  SlStatus insert(std::int64_t index, std::int64_t value);
  SlStatus erase(std::int64_t index, std::int64_t value);

  IndexableSkipList::RankResult at_rank(std::int64_t k) const;         // over all entries
  struct UniqueRankResult {
    SlStatus status = SlStatus::ok;
    std::int64_t value = 0;
    std::int64_t first_index = 0;  // first occurrence in the full list
  };
  UniqueRankResult unique_at_rank(std::int64_t k) const;               // over distinct values

  std::int64_t size() const { return full_.size(); }
  std::int64_t distinct_size() const { return distinct_.size(); }
  const IndexableSkipList& full() const { return full_; }
  const IndexableSkipList& distinct() const { return distinct_; }

  std::string audit() const;
  std::vector<std::uint8_t> canonical_digest() const;

 private:
  IndexableSkipList full_;
  IndexableSkipList distinct_;
  std::map<std::int64_t, std::int64_t> first_of_;  // value -> first index
};

}  // namespace walklab
