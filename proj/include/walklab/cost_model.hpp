#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "walklab/common.hpp"

namespace walklab {

// Exact rational with normalized sign (den > 0) and gcd-reduced magnitude.
// All cost-model arithmetic stays in this type; no floating point decides anything.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n) : num(n), den(1) {}  // NOLINT: implicit by design
  Rational(std::int64_t n, std::int64_t d);

  static Rational from_decimal_string(const std::string& text);

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const;
  bool operator<=(const Rational& o) const { return *this < o || *this == o; }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return o <= *this; }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const;
};

Rational rational_max(const Rational& a, const Rational& b);
Rational rational_max(const Rational& a, const Rational& b, const Rational& c);

// Open interval (lo, hi) with exact rational endpoints. empty() means no feasible
// parameter exists.
struct OpenInterval {
  Rational lo;
  Rational hi;

  bool empty() const { return !(lo < hi); }
  bool contains(const Rational& x) const { return lo < x && x < hi; }
  std::string to_string() const;
};

// Exponent of the query cost r + n^1.5/r + (n^1.5/r^1.5) * r^(1-alpha) at r = n^beta:
// max(beta, 3/2 - beta, 3/2 - beta(1/2 + alpha)).
// pre: 0 < alpha <= 1, 0 < beta < 1 (out_of_range otherwise).
Rational walk_time_exponent(const Rational& alpha, const Rational& beta);

// Open range of beta for which walk_time_exponent < 1: (max(1/2, 1/(2 alpha + 1)), 1).
OpenInterval feasible_beta_range(const Rational& alpha);

// Exponent of the bucketed convolution pipeline at r elements:
// max((1+alpha)/2, 3/2 - alpha/2 - alpha*delta, [alpha if with_verification]).
// pre: 0 < alpha <= 1, delta > 0.
Rational convolution_pipeline_exponent(const Rational& alpha, const Rational& delta,
                                       bool with_verification);

// Open range of alpha keeping the pipeline sublinear: (1/(1+2 delta), 1).
OpenInterval feasible_alpha_range(const Rational& delta);

struct CombinedWindow {
  Rational alpha;       // the alpha the window was computed for
  Rational delta_eff;   // 1 - convolution_pipeline_exponent(alpha, delta, true)
  OpenInterval beta;    // feasible beta window
};

// Feasible beta window when the walk consumes a structured instance whose solver
// gains delta via bucketing and the walk batches k updates:
//   beta in (max(1/2, 1/(2 delta' + 1), 2/(k (1-alpha))), 1).
// alpha defaults to the midpoint of feasible_alpha_range(delta).
// pre: delta > 0; k > 2/(1-alpha), else infeasible_k.
CombinedWindow combined_window(const Rational& delta, const Rational& k);
CombinedWindow combined_window_with_alpha(const Rational& delta, const Rational& alpha,
                                          const Rational& k);

struct EwtBound {
  Rational exponent;           // 3/2
  std::string witness;         // the inequality that pins it
};

// Lower-bound exponent for zero-weight-triangle listing implied by the reduction
// chain: 1/4 + beta/2 >= 1 at the balanced point forces exponent 3/2.
EwtBound ewt_lower_bound();

}  // namespace walklab
