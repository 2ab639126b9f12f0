#include "walklab/prefix_tree.hpp"

#include <algorithm>

namespace walklab {

namespace {

int bits_for(std::uint64_t universe_size) {
  int bits = 0;
  while ((std::uint64_t{1} << bits) < universe_size) ++bits;
  return bits;
}

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

}  // namespace

CountingPrefixTree::CountingPrefixTree(UniverseConfig config) : config_(config) {
  if (config_.value_bound < 0) fail(ErrorCode::out_of_range, "negative value bound");
  if (config_.index_capacity < 0) fail(ErrorCode::out_of_range, "negative index capacity");
  std::uint64_t universe = 2 * static_cast<std::uint64_t>(config_.value_bound) + 1;
  depth_ = bits_for(universe);
  value_by_position_.assign(static_cast<size_t>(config_.index_capacity) + 1, std::nullopt);
}

std::uint64_t CountingPrefixTree::key_of(std::int64_t value) const {
  return static_cast<std::uint64_t>(value + config_.value_bound);
}

std::int64_t CountingPrefixTree::value_of(std::uint64_t key) const {
  return static_cast<std::int64_t>(key) - config_.value_bound;
}

void CountingPrefixTree::insert(int position, std::int64_t value) {
  last_op_visits_ = 0;
  if (position < 1 || position > config_.index_capacity)
    fail(ErrorCode::out_of_range, "position " + std::to_string(position));
  if (value < -config_.value_bound || value > config_.value_bound)
    fail(ErrorCode::value_out_of_universe, std::to_string(value));
  if (value_by_position_[position].has_value())
    fail(ErrorCode::position_occupied, "position " + std::to_string(position));

  std::uint64_t key = key_of(value);
  if (!root_) root_ = std::make_unique<Node>();
  Node* node = root_.get();
  ++last_op_visits_;
  // Walk root to leaf; unique counters are fixed on the way down (the leaf is new
  // iff the final count was zero, which equals the leaf's own pre-insert state).
  std::vector<Node*> path;
  path.push_back(node);
  for (int level = depth_ - 1; level >= 0; --level) {
    bool go_right = (key >> level) & 1;
    std::unique_ptr<Node>& child = go_right ? node->right : node->left;
    if (!child) child = std::make_unique<Node>();
    node = child.get();
    ++last_op_visits_;
    path.push_back(node);
  }
  bool new_leaf = node->count_total == 0;
  auto it = std::lower_bound(node->positions.begin(), node->positions.end(), position);
  node->positions.insert(it, position);
  for (Node* p : path) {
    p->count_total += 1;
    if (new_leaf) p->count_unique += 1;
  }
  value_by_position_[position] = value;
}

void CountingPrefixTree::erase(int position, std::int64_t value) {
  last_op_visits_ = 0;
  if (position < 1 || position > config_.index_capacity)
    fail(ErrorCode::out_of_range, "position " + std::to_string(position));
  if (value < -config_.value_bound || value > config_.value_bound)
    fail(ErrorCode::value_out_of_universe, std::to_string(value));
  if (!value_by_position_[position].has_value() || *value_by_position_[position] != value)
    fail(ErrorCode::entry_absent,
         "position " + std::to_string(position) + " value " + std::to_string(value));

  std::uint64_t key = key_of(value);
  Node* node = root_.get();
  ++last_op_visits_;
  std::vector<Node*> path;
  path.push_back(node);
  for (int level = depth_ - 1; level >= 0; --level) {
    node = ((key >> level) & 1) ? node->right.get() : node->left.get();
    ++last_op_visits_;
    path.push_back(node);
  }
  auto it = std::lower_bound(node->positions.begin(), node->positions.end(), position);
  node->positions.erase(it);
  bool leaf_emptied = node->count_total == 1;
  for (Node* p : path) {
    p->count_total -= 1;
    if (leaf_emptied) p->count_unique -= 1;
  }
  // Prune emptied nodes so the allocated shape stays canonical.
  for (size_t i = path.size(); i-- > 1;) {
    if (path[i]->count_total != 0) break;
    Node* parent = path[i - 1];
    if (parent->left.get() == path[i]) parent->left.reset();
    else parent->right.reset();
  }
  if (root_ && root_->count_total == 0) root_.reset();
  value_by_position_[position] = std::nullopt;
}

std::int64_t CountingPrefixTree::select_kth(std::int64_t k) const {
  last_op_visits_ = 0;
  if (!root_ || k < 1 || k > root_->count_total)
    fail(ErrorCode::rank_out_of_range, "k = " + std::to_string(k));
  const Node* node = root_.get();
  ++last_op_visits_;
  std::uint64_t key = 0;
  for (int level = 0; level < depth_; ++level) {
    std::int64_t k_left = node->left ? node->left->count_total : 0;
    if (k > k_left) {
      k -= k_left;
      node = node->right.get();
      key = (key << 1) | 1;
    } else {
      node = node->left.get();
      key <<= 1;
    }
    ++last_op_visits_;
  }
  return value_of(key);
}

std::int64_t CountingPrefixTree::select_kth_unique(std::int64_t k) const {
  last_op_visits_ = 0;
  if (!root_ || k < 1 || k > root_->count_unique)
    fail(ErrorCode::rank_out_of_range, "k = " + std::to_string(k));
  const Node* node = root_.get();
  ++last_op_visits_;
  std::uint64_t key = 0;
  for (int level = 0; level < depth_; ++level) {
    std::int64_t k_left = node->left ? node->left->count_unique : 0;
    if (k > k_left) {
      k -= k_left;
      node = node->right.get();
      key = (key << 1) | 1;
    } else {
      node = node->left.get();
      key <<= 1;
    }
    ++last_op_visits_;
  }
  return value_of(key);
}

CountingPrefixTree::ContainsResult CountingPrefixTree::contains(std::int64_t value) const {
  last_op_visits_ = 0;
  ContainsResult out;
  if (value < -config_.value_bound || value > config_.value_bound)
    fail(ErrorCode::value_out_of_universe, std::to_string(value));
  const Node* node = root_.get();
  std::uint64_t key = key_of(value);
  for (int level = depth_ - 1; node != nullptr && level >= 0; --level) {
    ++last_op_visits_;
    node = ((key >> level) & 1) ? node->right.get() : node->left.get();
  }
  if (node != nullptr) {
    ++last_op_visits_;
    out.present = node->count_total > 0;
    out.multiplicity = node->count_total;
    out.positions = node->positions;
  }
  return out;
}

std::optional<std::int64_t> CountingPrefixTree::value_at_position(int position) const {
  if (position < 1 || position > config_.index_capacity)
    fail(ErrorCode::out_of_range, "position " + std::to_string(position));
  return value_by_position_[position];
}

std::int64_t CountingPrefixTree::total_size() const { return root_ ? root_->count_total : 0; }

std::int64_t CountingPrefixTree::distinct_size() const {
  return root_ ? root_->count_unique : 0;
}

std::vector<std::uint8_t> CountingPrefixTree::canonical_digest() const {
  std::vector<std::uint8_t> out;
  out.push_back(1);  // format version
  // First block: pre-order structure and counters.
  std::vector<const Node*> stack;
  if (root_) stack.push_back(root_.get());
  std::vector<const Node*> leaves_in_order;
  while (!stack.empty()) {
    const Node* node = stack.back();
    stack.pop_back();
    std::uint8_t flags = 0;
    if (node->left) flags |= 1;
    if (node->right) flags |= 2;
    bool is_leaf = !node->left && !node->right;
    if (is_leaf) flags |= 4;
    out.push_back(flags);
    put_u64(out, static_cast<std::uint64_t>(node->count_total));
    put_u64(out, static_cast<std::uint64_t>(node->count_unique));
    if (is_leaf) leaves_in_order.push_back(node);
    // Push right first so left is processed first (pre-order).
    if (node->right) stack.push_back(node->right.get());
    if (node->left) stack.push_back(node->left.get());
  }
  // Pre-order of this tree visits leaves in ascending key order, so the second
  // section is ordered by value.
  out.push_back(0xff);  // section separator
  for (const Node* leaf : leaves_in_order) {
    put_u64(out, static_cast<std::uint64_t>(leaf->positions.size()));
    for (int p : leaf->positions) put_u64(out, static_cast<std::uint64_t>(p));
  }
  return out;
}

bool CountingPrefixTree::audit() const {
  // Recompute (total, unique) bottom-up and compare with stored counters.
  struct Pair {
    std::int64_t total;
    std::int64_t unique;
    bool ok;
  };
  auto recurse = [](auto&& self, const Node* node, bool is_leaf_level, int levels_left) -> Pair {
    if (is_leaf_level) {
      bool ok = node->count_total == static_cast<std::int64_t>(node->positions.size()) &&
                node->count_unique == (node->count_total > 0 ? 1 : 0) &&
                std::is_sorted(node->positions.begin(), node->positions.end()) && !node->left &&
                !node->right && node->count_total > 0;
      return {node->count_total, node->count_unique, ok};
    }
    std::int64_t total = 0, unique = 0;
    bool ok = true;
    for (const Node* child : {node->left.get(), node->right.get()}) {
      if (!child) continue;
      Pair sub = self(self, child, levels_left == 1, levels_left - 1);
      total += sub.total;
      unique += sub.unique;
      ok = ok && sub.ok;
    }
    ok = ok && node->count_total == total && node->count_unique == unique && total > 0;
    return {total, unique, ok};
  };
  if (!root_) return true;
  return recurse(recurse, root_.get(), depth_ == 0, depth_).ok;
}

void CountingPrefixTree::corrupt_counter_for_test(std::int64_t value, std::int64_t delta) {
  if (value < -config_.value_bound || value > config_.value_bound) {
    fail(ErrorCode::value_out_of_universe, "value outside universe");
  }
  const std::uint64_t key = key_of(value);
  Node* node = root_.get();
  if (!node) fail(ErrorCode::entry_absent, "value not stored");
  for (int bit = depth_ - 1; bit >= 0; --bit) {
    node = ((key >> bit) & 1) ? node->right.get() : node->left.get();
    if (!node) fail(ErrorCode::entry_absent, "value not stored");
  }
  node->count_total += delta;
}

}  // namespace walklab
