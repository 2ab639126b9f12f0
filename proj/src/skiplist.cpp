#include "walklab/skiplist.hpp"

#include <algorithm>
#include <cmath>

namespace walklab {

namespace {

int ceil_log2(std::int64_t x) {
  int bits = 0;
  while ((std::int64_t{1} << bits) < x) ++bits;
  return bits;
}

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void put_i64(std::vector<std::uint8_t>& out, std::int64_t v) {
  put_u64(out, static_cast<std::uint64_t>(v));
}

}  // namespace

IndexableSkipList::IndexableSkipList(SkipListConfig config, Mode mode)
    : config_(config),
      mode_(mode),
      max_level_(config.index_capacity > 1 ? ceil_log2(config.index_capacity) : 0),
      bucket_capacity_(std::max<std::int64_t>(1, ceil_log2(std::max(2, config.index_capacity)))),
      bucket_count_(config.bucket_count > 0 ? config.bucket_count
                                            : std::max(1, config.index_capacity)),
      budget_(static_cast<std::int64_t>(
          config.budget_constant *
          std::pow(ceil_log2(std::int64_t{config.index_capacity} + config.value_bits), 4))),
      levels_(max_level_, 4 * std::max(1, ceil_log2(std::max(2, config.index_capacity))) + 1,
              config.level_seed) {
  if (config_.index_capacity < 0) fail(ErrorCode::out_of_range, "negative capacity");
  if (config_.value_bits < 1 || config_.value_bits > 62)
    fail(ErrorCode::out_of_range, "value_bits must be in [1, 62]");
  head_.level = max_level_;
  tail_.level = max_level_;
  head_.next.assign(max_level_ + 1, kTail);
  head_.prev.assign(max_level_ + 1, kHead);
  tail_.next.assign(max_level_ + 1, kTail);
  tail_.prev.assign(max_level_ + 1, kHead);
  head_.dist_left.assign(max_level_ + 1, 0);
  head_.dist_right.assign(max_level_ + 1, 0);
  tail_.dist_left.assign(max_level_ + 1, 0);
  tail_.dist_right.assign(max_level_ + 1, 0);
  buckets_.assign(static_cast<size_t>(bucket_count_) + 1, {});
}

const IndexableSkipList::Node& IndexableSkipList::node(std::int64_t id) const {
  if (id == kHead) return head_;
  if (id == kTail) return tail_;
  return nodes_.find(id)->second;
}

IndexableSkipList::Node& IndexableSkipList::node(std::int64_t id) {
  if (id == kHead) return head_;
  if (id == kTail) return tail_;
  return nodes_.find(id)->second;
}

std::pair<std::int64_t, std::int64_t> IndexableSkipList::key_of(std::int64_t id) const {
  return {node(id).value, id};
}

int IndexableSkipList::bucket_of(std::int64_t id) const {
  if (mode_ == Mode::by_index) {
    // h(i) = floor(r * i / n) + 1 over indices i in [0, n).
    auto prod = static_cast<unsigned __int128>(bucket_count_) * static_cast<std::uint64_t>(id);
    return static_cast<int>(prod / static_cast<std::uint64_t>(config_.index_capacity)) + 1;
  }
  // h(x) = floor(r * u / 2^m) + 1 over the m-bit two's-complement residue u.
  std::uint64_t u = static_cast<std::uint64_t>(id + (std::int64_t{1} << (config_.value_bits - 1)));
  auto prod = static_cast<unsigned __int128>(bucket_count_) * u;
  return static_cast<int>(prod >> config_.value_bits) + 1;
}

std::uint64_t IndexableSkipList::level_key_of(std::int64_t id) const {
  if (mode_ == Mode::by_index) return static_cast<std::uint64_t>(id);
  return static_cast<std::uint64_t>(id + (std::int64_t{1} << (config_.value_bits - 1)));
}

IndexableSkipList::SearchResult IndexableSkipList::search(std::int64_t value,
                                                          std::int64_t id_tiebreak) const {
  SearchResult sr;
  sr.lefts.assign(max_level_ + 1, kHead);
  sr.pos_left.assign(max_level_ + 1, -1);
  sr.found_id = kHead;
  sr.steps = 0;
  std::int64_t cur = kHead;
  std::int64_t pos_cur = -1;
  std::pair<std::int64_t, std::int64_t> target{value, id_tiebreak};
  for (int t = max_level_; t >= 0; --t) {
    for (;;) {
      std::int64_t w = node(cur).next[t];
      ++sr.steps;
      if (w != kTail) {
        const Node& wn = node(w);
        std::pair<std::int64_t, std::int64_t> wkey{wn.value, w};
        if (wkey < target) {
          pos_cur += wn.dist_left[t] + 1;
          cur = w;
          continue;
        }
        if (wkey == target) sr.found_id = w;
      }
      break;
    }
    sr.lefts[t] = cur;
    sr.pos_left[t] = pos_cur;
  }
  return sr;
}

SlStatus IndexableSkipList::insert(std::int64_t id, std::int64_t value) {
  last_op_steps_ = 0;
  if (mode_ == Mode::by_index) {
    if (id < 0 || id >= config_.index_capacity)
      fail(ErrorCode::out_of_range, "index " + std::to_string(id));
  } else {
    if (id != value) fail(ErrorCode::out_of_range, "by-value entries must have id == value");
    std::int64_t half = std::int64_t{1} << (config_.value_bits - 1);
    if (value < -half || value >= half)
      fail(ErrorCode::value_out_of_universe, std::to_string(value));
  }
  if (nodes_.count(id)) return SlStatus::duplicate_index;
  int b = bucket_of(id);
  if (static_cast<std::int64_t>(buckets_[b].size()) >= bucket_capacity_)
    return SlStatus::bucket_overflow;

  int level = levels_.level_of(level_key_of(id));
  SearchResult sr = search(value, id);
  std::int64_t splice_cost = 8LL * (level + 1) + 2LL * (max_level_ - level) + 4;
  last_op_steps_ = sr.steps + splice_cost;
  max_steps_seen_ = std::max(max_steps_seen_, last_op_steps_);
  if (last_op_steps_ > budget_) return SlStatus::aborted;

  Node fresh;
  fresh.value = value;
  fresh.level = level;
  fresh.next.assign(level + 1, kTail);
  fresh.prev.assign(level + 1, kHead);
  fresh.dist_left.assign(max_level_ + 1, -1);
  fresh.dist_right.assign(max_level_ + 1, -1);
  Node& n = nodes_.emplace(id, std::move(fresh)).first->second;

  std::int64_t pos_new = sr.pos_left[0] + 1;
  for (int t = 0; t <= level; ++t) {
    std::int64_t left = sr.lefts[t];
    std::int64_t right = node(left).next[t];
    std::int64_t dl = pos_new - sr.pos_left[t] - 1;
    std::int64_t gap_before = node(left).dist_right[t];
    std::int64_t dr = gap_before - dl;
    n.dist_left[t] = dl;
    n.dist_right[t] = dr;
    n.prev[t] = left;
    n.next[t] = right;
    node(left).next[t] = id;
    node(right).prev[t] = id;
    node(left).dist_right[t] = dl;
    node(right).dist_left[t] = dr;
  }
  for (int t = level + 1; t <= max_level_; ++t) {
    std::int64_t left = sr.lefts[t];
    std::int64_t right = node(left).next[t];
    node(left).dist_right[t] += 1;
    node(right).dist_left[t] += 1;
  }
  auto& bucket = buckets_[b];
  bucket.insert(std::lower_bound(bucket.begin(), bucket.end(), id), id);
  ++size_;
  return SlStatus::ok;
}

SlStatus IndexableSkipList::erase(std::int64_t id, std::int64_t value) {
  return erase_impl(id, value, true);
}

SlStatus IndexableSkipList::erase_impl(std::int64_t id, std::int64_t value, bool enforce_budget) {
  last_op_steps_ = 0;
  auto it = nodes_.find(id);
  if (it == nodes_.end() || it->second.value != value) return SlStatus::entry_absent;
  int level = it->second.level;
  SearchResult sr = search(value, id);
  std::int64_t splice_cost = 6LL * (level + 1) + 2LL * (max_level_ - level) + 4;
  last_op_steps_ = sr.steps + splice_cost;
  max_steps_seen_ = std::max(max_steps_seen_, last_op_steps_);
  if (enforce_budget && last_op_steps_ > budget_) return SlStatus::aborted;

  Node& n = it->second;
  for (int t = level + 1; t <= max_level_; ++t) {
    std::int64_t left = sr.lefts[t];
    std::int64_t right = node(left).next[t];
    node(left).dist_right[t] -= 1;
    node(right).dist_left[t] -= 1;
  }
  for (int t = 0; t <= level; ++t) {
    std::int64_t left = n.prev[t];
    std::int64_t right = n.next[t];
    std::int64_t merged = n.dist_left[t] + n.dist_right[t];
    node(left).next[t] = right;
    node(right).prev[t] = left;
    node(left).dist_right[t] = merged;
    node(right).dist_left[t] = merged;
  }
  auto& bucket = buckets_[bucket_of(id)];
  bucket.erase(std::lower_bound(bucket.begin(), bucket.end(), id));
  nodes_.erase(it);
  --size_;
  return SlStatus::ok;
}

IndexableSkipList::FindResult IndexableSkipList::find_value(std::int64_t value) const {
  SearchResult sr = search(value, kHead);
  last_op_steps_ = sr.steps;
  FindResult out;
  std::int64_t w = node(sr.lefts[0]).next[0];
  if (w != kTail && node(w).value == value) {
    out.found = true;
    out.id = w;
    out.value = value;
  }
  return out;
}

IndexableSkipList::FindResult IndexableSkipList::find_entry(std::int64_t id,
                                                            std::int64_t value) const {
  SearchResult sr = search(value, id);
  last_op_steps_ = sr.steps;
  FindResult out;
  if (sr.found_id == id) {
    out.found = true;
    out.id = id;
    out.value = value;
  }
  return out;
}

IndexableSkipList::RankResult IndexableSkipList::at_rank(std::int64_t k) const {
  last_rank_pointer_accesses_ = 0;
  if (k < 1 || k > size_) return {SlStatus::rank_out_of_range, 0, 0};
  std::int64_t anchor = kHead;
  std::int64_t k_rem = k;
  int t = max_level_;
  while (t >= 0) {
    const Node& a = node(anchor);
    std::int64_t gap = a.dist_right[t];
    ++last_rank_pointer_accesses_;
    if (k_rem == gap + 1 && a.next[t] != kTail) {
      std::int64_t id = a.next[t];
      return {SlStatus::ok, id, node(id).value};
    }
    if (k_rem > gap + 1) {
      k_rem -= gap + 1;
      anchor = a.next[t];
      continue;
    }
    --t;
  }
  return {SlStatus::rank_out_of_range, 0, 0};
}

std::optional<std::int64_t> IndexableSkipList::value_of(std::int64_t id) const {
  auto it = nodes_.find(id);
  if (it == nodes_.end()) return std::nullopt;
  return it->second.value;
}

int IndexableSkipList::level_of_id(std::int64_t id) const {
  auto it = nodes_.find(id);
  if (it == nodes_.end()) fail(ErrorCode::entry_absent, std::to_string(id));
  return it->second.level;
}

std::vector<std::pair<std::int64_t, std::int64_t>> IndexableSkipList::entries_in_order() const {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t cur = head_.next[0]; cur != kTail; cur = node(cur).next[0])
    out.emplace_back(cur, node(cur).value);
  return out;
}

std::string IndexableSkipList::audit() const {
  auto describe = [](std::int64_t id) { return std::to_string(id); };
  // Level-0 chain: order, positions, strict key order.
  std::map<std::int64_t, std::int64_t> pos;
  std::vector<std::int64_t> order;
  std::int64_t prev = kHead;
  for (std::int64_t cur = head_.next[0]; cur != kTail; cur = node(cur).next[0]) {
    if (nodes_.find(cur) == nodes_.end()) return "dangling link to " + describe(cur);
    if (node(cur).prev[0] != prev) return "prev link broken at " + describe(cur);
    if (prev != kHead && !(key_of(prev) < key_of(cur)))
      return "order violation at " + describe(cur);
    pos[cur] = static_cast<std::int64_t>(order.size());
    order.push_back(cur);
    prev = cur;
  }
  if (static_cast<std::int64_t>(order.size()) != size_) return "size mismatch";
  // Per-node shape checks.
  for (const auto& [id, n] : nodes_) {
    if (!pos.count(id)) return "node not in level-0 chain: " + describe(id);
    if (n.level != levels_.level_of(level_key_of(id)))
      return "level mismatch at " + describe(id);
    for (int t = 0; t <= max_level_; ++t) {
      bool present = t <= n.level;
      if (!present && (n.dist_left[t] != -1 || n.dist_right[t] != -1))
        return "missing -1 sentinel at " + describe(id) + " level " + std::to_string(t);
      if (present && (n.dist_left[t] < 0 || n.dist_right[t] < 0))
        return "negative distance at " + describe(id) + " level " + std::to_string(t);
    }
  }
  // Distance counters against brute recount, every level.
  auto pos_of = [&](std::int64_t id) -> std::int64_t {
    if (id == kHead) return -1;
    if (id == kTail) return size_;
    return pos.at(id);
  };
  for (int t = 0; t <= max_level_; ++t) {
    std::int64_t cur = kHead;
    std::int64_t seen = 0;
    while (true) {
      std::int64_t nxt = node(cur).next[t];
      if (nxt != kTail && node(nxt).prev[t] != cur)
        return "prev link broken at level " + std::to_string(t) + " node " + describe(nxt);
      std::int64_t gap = pos_of(nxt) - pos_of(cur) - 1;
      if (node(cur).dist_right[t] != gap)
        return "dist_right wrong at " + describe(cur) + " level " + std::to_string(t) +
               " (stored " + std::to_string(node(cur).dist_right[t]) + ", actual " +
               std::to_string(gap) + ")";
      if (node(nxt).dist_left[t] != gap)
        return "dist_left wrong at " + describe(nxt) + " level " + std::to_string(t) +
               " (stored " + std::to_string(node(nxt).dist_left[t]) + ", actual " +
               std::to_string(gap) + ")";
      if (nxt == kTail) break;
      if (node(nxt).level < t) return "node below level in chain at " + describe(nxt);
      ++seen;
      cur = nxt;
    }
    std::int64_t expect = 0;
    for (const auto& [id, n] : nodes_)
      if (n.level >= t) ++expect;
    if (seen != expect) return "level " + std::to_string(t) + " chain misses nodes";
  }
  // Bucket table.
  std::int64_t bucketed = 0;
  for (int b = 1; b <= bucket_count_; ++b) {
    const auto& bucket = buckets_[b];
    if (!std::is_sorted(bucket.begin(), bucket.end())) return "bucket not sorted";
    if (static_cast<std::int64_t>(bucket.size()) > bucket_capacity_) return "bucket overfull";
    for (std::int64_t id : bucket) {
      if (bucket_of(id) != b) return "entry in wrong bucket: " + describe(id);
      if (!nodes_.count(id)) return "bucket entry without node: " + describe(id);
      ++bucketed;
    }
  }
  if (bucketed != size_) return "bucket table size mismatch";
  return "";
}

std::vector<std::uint8_t> IndexableSkipList::canonical_digest() const {
  std::vector<std::uint8_t> out;
  out.push_back(2);  // format version
  out.push_back(mode_ == Mode::by_index ? 0 : 1);
  put_i64(out, size_);
  put_i64(out, bucket_count_);
  put_i64(out, max_level_);
  for (int t = 0; t <= max_level_; ++t) {
    put_i64(out, head_.dist_right[t]);
    put_i64(out, tail_.dist_left[t]);
  }
  for (int b = 1; b <= bucket_count_; ++b) {
    const auto& bucket = buckets_[b];
    put_u64(out, bucket.size());
    for (std::int64_t id : bucket) {
      const Node& n = node(id);
      put_i64(out, id);
      put_i64(out, n.value);
      put_i64(out, n.level);
      for (int t = 1; t <= max_level_; ++t) {
        put_i64(out, n.dist_left[t]);
        put_i64(out, n.dist_right[t]);
      }
    }
  }
  return out;
}

void IndexableSkipList::corrupt_counter_for_test(std::int64_t id, int level, bool left_side,
                                                 std::int64_t delta) {
  Node& n = node(id);
  if (left_side) n.dist_left[level] += delta;
  else n.dist_right[level] += delta;
}

DualSkipList::DualSkipList(SkipListConfig config)
    : full_(config, IndexableSkipList::Mode::by_index),
      distinct_([&config] {
        SkipListConfig c = config;
        Rng rng(config.level_seed);
        rng.next_u64();
        c.level_seed = rng.next_u64();
        return c;
      }(), IndexableSkipList::Mode::by_value) {}

SlStatus DualSkipList::insert(std::int64_t index, std::int64_t value) {
  SlStatus st = full_.insert(index, value);
  if (st != SlStatus::ok) return st;
  auto it = first_of_.find(value);
  if (it == first_of_.end()) {
    SlStatus st2 = distinct_.insert(value, value);
    if (st2 != SlStatus::ok) {
      full_.erase_impl(index, value, false);  // roll back; never budget-limited
      return st2;
    }
    first_of_[value] = index;
  } else if (index < it->second) {
    it->second = index;
  }
  return SlStatus::ok;
}

SlStatus DualSkipList::erase(std::int64_t index, std::int64_t value) {
  SlStatus st = full_.erase(index, value);
  if (st != SlStatus::ok) return st;
  auto fv = full_.find_value(value);
  if (!fv.found) {
    distinct_.erase_impl(value, value, false);
    first_of_.erase(value);
  } else if (first_of_.at(value) == index) {
    first_of_[value] = fv.id;
  }
  return SlStatus::ok;
}

IndexableSkipList::RankResult DualSkipList::at_rank(std::int64_t k) const {
  return full_.at_rank(k);
}

DualSkipList::UniqueRankResult DualSkipList::unique_at_rank(std::int64_t k) const {
  auto rr = distinct_.at_rank(k);
  UniqueRankResult out;
  out.status = rr.status;
  if (rr.status == SlStatus::ok) {
    out.value = rr.value;
    out.first_index = first_of_.at(rr.value);
  }
  return out;
}

std::string DualSkipList::audit() const {
  std::string a = full_.audit();
  if (!a.empty()) return "full: " + a;
  std::string b = distinct_.audit();
  if (!b.empty()) return "distinct: " + b;
  // Cross checks: distinct list holds exactly the distinct values; links point at
  // the minimal (value, index) occurrence.
  auto entries = full_.entries_in_order();
  std::map<std::int64_t, std::int64_t> expect_first;
  for (auto [id, value] : entries) {
    auto it = expect_first.find(value);
    if (it == expect_first.end() || id < it->second) expect_first[value] = id;
  }
  if (expect_first.size() != static_cast<size_t>(distinct_.size()))
    return "distinct size mismatch";
  for (auto [value, first] : expect_first) {
    if (!distinct_.contains_id(value)) return "distinct value missing: " + std::to_string(value);
    auto it = first_of_.find(value);
    if (it == first_of_.end() || it->second != first)
      return "first-occurrence link wrong for value " + std::to_string(value);
  }
  if (first_of_.size() != expect_first.size()) return "stale first-occurrence links";
  return "";
}

std::vector<std::uint8_t> DualSkipList::canonical_digest() const {
  std::vector<std::uint8_t> out;
  out.push_back(3);  // dual-format version
  auto a = full_.canonical_digest();
  auto b = distinct_.canonical_digest();
  put_u64(out, a.size());
  out.insert(out.end(), a.begin(), a.end());
  put_u64(out, b.size());
  out.insert(out.end(), b.begin(), b.end());
  put_u64(out, first_of_.size());
  for (auto [value, first] : first_of_) {
    put_i64(out, value);
    put_i64(out, first);
  }
  return out;
}

}  // namespace walklab
