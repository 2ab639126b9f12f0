#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "walklab/common.hpp"

namespace walklab {

// How the auxiliary record register treats the walk history.
//  canonical:      the register is trivial (size 1); moves leave no trace.
//  path_dependent: every merge/split move adds a nonzero residue mod Q, so the
//                  register accumulates a which-path record that suppresses
//                  interference between different routes to the same subset.
enum class RepPolicy { canonical, path_dependent };

struct WalkConfig {
  int n = 0;  // vertices 0..n-1
  int r = 0;  // subset size, 1 <= r < n
  RepPolicy policy = RepPolicy::canonical;
  int rep_modulus = 0;  // Q; 0 picks the policy default (1, or n + 1)
  std::int64_t dimension_cap = 1'000'000;
};

// Dense simulator of the subset walk. Basis states are (V, y, rep) with
// |V| = r, y outside V, rep in [0, Q). One walk step applies
//   (i)   a Grover diffusion over y within each (V, rep) block,
//   (ii)  the merge relabel (V, y) -> (V + y, y), rep += y + 1 (mod Q),
//   (iii) a Grover diffusion over y inside each (V', rep) block,
//   (iv)  the split relabel (V', y) -> (V' - y, y), rep += 2(y + 1) (mod Q).
// Relabels permute basis states (the rep shift is a bijection per move), and
// the diffusions are reflections, so each step is exactly unitary.
//
// A subset V is marked when three distinct members p, q, u satisfy
// values[p] + values[q] + values[u] = 0. The phase oracle negates every state
// whose subset is marked, and the measured success probability is the total
// squared amplitude on marked subsets.
class WalkSimulator {
 public:
  // values.size() must equal cfg.n; throws dimension_too_large when
  // C(n, r) * (n - r) * Q exceeds cfg.dimension_cap.
  WalkSimulator(WalkConfig cfg, std::vector<std::int64_t> values);

  // Uniform superposition over (V, y) with rep pinned to the subset's initial
  // record value (0 under the canonical policy).
  void reset();

  void apply_walk_step();
  void apply_phase_flip();

  // reset() followed by t2 rounds of [phase flip, then t1 walk steps].
  void run_schedule(std::int64_t t1, std::int64_t t2);

  double success_probability() const;
  double norm() const;

  std::int64_t dimension() const { return dim_; }
  std::int64_t subset_count() const { return static_cast<std::int64_t>(combos_a_.size()); }
  std::int64_t marked_subset_count() const { return marked_count_; }
  int rep_modulus() const { return q_; }

  struct SweepPoint {
    std::int64_t t1 = 0;
    std::int64_t t2 = 0;
    double success = 0.0;
  };
  // Evaluates every (t1, t2) in [1, t1_max] x [1, t2_max], sharing prefixes of
  // the t2 loop so the cost grows with t1_max^2 * t2_max walk steps.
  std::vector<SweepPoint> sweep(std::int64_t t1_max, std::int64_t t2_max);

  // Schedule used when the caller does not sweep: t1 = ceil(c1 * sqrt(r)),
  // t2 = ceil(c2 * (n / r)^1.5) with constants fixed from the calibration
  // sweeps recorded in the repository.
  static std::pair<std::int64_t, std::int64_t> default_schedule(int n, int r);

  // Test access to the raw state (layout: ((subset * (n - r)) + y_slot) * Q + rep).
  const std::vector<double>& amplitudes() const { return amps_; }
  void set_amplitudes(std::vector<double> a);

 private:
  void diffuse_blocks(std::vector<double>& v, std::int64_t block) const;

  WalkConfig cfg_;
  std::vector<std::int64_t> values_;
  int q_ = 1;
  std::int64_t dim_ = 0;       // full dimension including the record register
  std::int64_t core_a_ = 0;    // C(n, r) * (n - r)
  std::int64_t core_b_ = 0;    // C(n, r+1) * (r + 1)
  std::vector<std::uint64_t> combos_a_;
  std::vector<std::uint64_t> combos_b_;
  std::vector<std::int64_t> perm_ab_;   // core A index -> core B index
  std::vector<int> delta_ab_;           // rep shift of the merge move
  std::vector<std::int64_t> perm_ba_;   // core B index -> core A index
  std::vector<int> delta_ba_;           // rep shift of the split move
  std::vector<char> marked_;            // per subset rank
  std::vector<int> rep0_;               // initial record value per subset rank
  std::int64_t marked_count_ = 0;
  std::vector<double> amps_;            // A layout
  std::vector<double> scratch_;         // B layout
};

}  // namespace walklab
