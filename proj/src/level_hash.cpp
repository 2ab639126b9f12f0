#include "walklab/level_hash.hpp"

namespace walklab {

namespace {

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

}  // namespace

LevelHashFamily::LevelHashFamily(int max_level, int degree, std::uint64_t seed)
    : max_level_(max_level), degree_(degree) {
  if (max_level_ < 0) fail(ErrorCode::out_of_range, "negative max level");
  if (degree_ < 1) fail(ErrorCode::out_of_range, "degree must be >= 1");
  Rng rng(seed);
  coeffs_.resize(max_level_);
  for (auto& poly : coeffs_) {
    poly.resize(degree_);
    for (auto& c : poly) c = rng.next_below(kPrime);
  }
}

int LevelHashFamily::bit(int t, std::uint64_t key) const {
  if (t < 1 || t > max_level_) fail(ErrorCode::out_of_range, "hash function index");
  const auto& poly = coeffs_[t - 1];
  std::uint64_t x = key % kPrime;
  std::uint64_t acc = 0;
  for (std::uint64_t c : poly) acc = (mulmod(acc, x) + c) % kPrime;
  return static_cast<int>(acc & 1);
}

int LevelHashFamily::level_of(std::uint64_t key) const {
  int level = 0;
  while (level < max_level_ && bit(level + 1, key) == 1) ++level;
  return level;
}

}  // namespace walklab
