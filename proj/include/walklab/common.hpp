#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace walklab {

// Library-wide error taxonomy. Contract violations throw; outcomes that a caller
// is expected to branch on (abort, overflow, absence) are returned as statuses by
// the data-structure APIs instead.
enum class ErrorCode {
  value_out_of_universe,
  position_occupied,
  entry_absent,
  rank_out_of_range,
  duplicate_input,
  not_sorted,
  not_square,
  out_of_range,
  infeasible_k,
  dimension_too_large,
  unknown_reduction,
  parse_error,
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::value_out_of_universe: return "ValueOutOfUniverse";
    case ErrorCode::position_occupied: return "PositionOccupied";
    case ErrorCode::entry_absent: return "EntryAbsent";
    case ErrorCode::rank_out_of_range: return "RankOutOfRange";
    case ErrorCode::duplicate_input: return "DuplicateInput";
    case ErrorCode::not_sorted: return "NotSorted";
    case ErrorCode::not_square: return "NotSquare";
    case ErrorCode::out_of_range: return "OutOfRange";
    case ErrorCode::infeasible_k: return "InfeasibleK";
    case ErrorCode::dimension_too_large: return "DimensionTooLarge";
    case ErrorCode::unknown_reduction: return "UnknownReduction";
    case ErrorCode::parse_error: return "ParseError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

// Deterministic 64-bit generator (splitmix64). The standard <random> distributions
// are implementation-defined across libraries; every sampled byte here is pinned by
// the code so that seeded reports are reproducible bit-for-bit.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound), bound > 0. Rejection sampling, no modulo bias.
  std::uint64_t next_below(std::uint64_t bound) {
    std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      std::uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

  // Uniform integer in [lo, hi] inclusive.
  std::int64_t next_in(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(next_below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Independent child stream; used to give sub-components their own seeds.
  Rng split() { return Rng(next_u64() ^ 0xa0761d6478bd642fULL); }

 private:
  std::uint64_t state_;
};

inline constexpr const char* kLibraryVersion = "0.1.0";

}  // namespace walklab
