#include "walklab/cost_model.hpp"

#include <cstdlib>
#include <numeric>

namespace walklab {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) fail(ErrorCode::out_of_range, "rational overflow");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) fail(ErrorCode::out_of_range, "rational overflow");
  return out;
}

Rational parse_rational_text(const std::string& text);

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (den == 0) fail(ErrorCode::out_of_range, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational Rational::from_decimal_string(const std::string& text) {
  if (text.empty()) fail(ErrorCode::parse_error, "empty rational");
  try {
    return parse_rational_text(text);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(ErrorCode::parse_error, "not a rational: " + text);
  }
}

namespace {

Rational parse_rational_text(const std::string& text) {
  // Accept "a/b", integers, and plain decimals like "0.75".
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
  }
  auto dot = text.find('.');
  if (dot == std::string::npos) return Rational(std::stoll(text));
  std::string whole = text.substr(0, dot);
  std::string frac = text.substr(dot + 1);
  if (frac.size() > 18) fail(ErrorCode::parse_error, "too many decimal digits: " + text);
  bool negative = !whole.empty() && whole[0] == '-';
  std::int64_t w = whole.empty() || whole == "-" ? 0 : std::stoll(whole);
  std::int64_t scale = 1;
  for (size_t i = 0; i < frac.size(); ++i) scale = checked_mul(scale, 10);
  std::int64_t f = frac.empty() ? 0 : std::stoll(frac);
  std::int64_t mag = checked_add(checked_mul(w < 0 ? -w : w, scale), f);
  return Rational(negative || w < 0 ? -mag : mag, scale);
}

}  // namespace

Rational Rational::operator+(const Rational& o) const {
  return Rational(checked_add(checked_mul(num, o.den), checked_mul(o.num, den)),
                  checked_mul(den, o.den));
}

Rational Rational::operator-(const Rational& o) const {
  return *this + Rational(-o.num, o.den);
}

Rational Rational::operator*(const Rational& o) const {
  return Rational(checked_mul(num, o.num), checked_mul(den, o.den));
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num == 0) fail(ErrorCode::out_of_range, "division by zero");
  return Rational(checked_mul(num, o.den), checked_mul(den, o.num));
}

bool Rational::operator<(const Rational& o) const {
  return checked_mul(num, o.den) < checked_mul(o.num, den);
}

std::string Rational::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Rational rational_max(const Rational& a, const Rational& b) { return a < b ? b : a; }

Rational rational_max(const Rational& a, const Rational& b, const Rational& c) {
  return rational_max(rational_max(a, b), c);
}

std::string OpenInterval::to_string() const {
  return "(" + lo.to_string() + ", " + hi.to_string() + ")";
}

namespace {

void require_alpha(const Rational& alpha) {
  if (!(Rational(0) < alpha) || !(alpha <= Rational(1)))
    fail(ErrorCode::out_of_range, "alpha must be in (0, 1], got " + alpha.to_string());
}

}  // namespace

Rational walk_time_exponent(const Rational& alpha, const Rational& beta) {
  require_alpha(alpha);
  if (!(Rational(0) < beta) || !(beta < Rational(1)))
    fail(ErrorCode::out_of_range, "beta must be in (0, 1), got " + beta.to_string());
  Rational three_halves(3, 2);
  Rational term_setup = beta;
  Rational term_checks = three_halves - beta;
  Rational term_updates = three_halves - beta * (Rational(1, 2) + alpha);
  return rational_max(term_setup, term_checks, term_updates);
}

OpenInterval feasible_beta_range(const Rational& alpha) {
  require_alpha(alpha);
  Rational lo = rational_max(Rational(1, 2), Rational(1) / (Rational(2) * alpha + Rational(1)));
  return OpenInterval{lo, Rational(1)};
}

Rational convolution_pipeline_exponent(const Rational& alpha, const Rational& delta,
                                       bool with_verification) {
  require_alpha(alpha);
  if (!(Rational(0) < delta)) fail(ErrorCode::out_of_range, "delta must be positive");
  Rational term_walk = (Rational(1) + alpha) / Rational(2);
  Rational term_solve = Rational(3, 2) - alpha / Rational(2) - alpha * delta;
  Rational out = rational_max(term_walk, term_solve);
  if (with_verification) out = rational_max(out, alpha);
  return out;
}

OpenInterval feasible_alpha_range(const Rational& delta) {
  if (!(Rational(0) < delta)) fail(ErrorCode::out_of_range, "delta must be positive");
  return OpenInterval{Rational(1) / (Rational(1) + Rational(2) * delta), Rational(1)};
}

CombinedWindow combined_window_with_alpha(const Rational& delta, const Rational& alpha,
                                          const Rational& k) {
  OpenInterval alpha_window = feasible_alpha_range(delta);
  if (!alpha_window.contains(alpha))
    fail(ErrorCode::out_of_range,
         "alpha " + alpha.to_string() + " outside " + alpha_window.to_string());
  Rational one(1);
  Rational threshold = Rational(2) / (one - alpha);
  if (!(threshold < k))
    fail(ErrorCode::infeasible_k,
         "k must exceed 2/(1-alpha) = " + threshold.to_string() + ", got " + k.to_string());
  Rational delta_eff = one - convolution_pipeline_exponent(alpha, delta, true);
  Rational lo = rational_max(Rational(1, 2),
                             one / (Rational(2) * delta_eff + one),
                             Rational(2) / (k * (one - alpha)));
  return CombinedWindow{alpha, delta_eff, OpenInterval{lo, one}};
}

CombinedWindow combined_window(const Rational& delta, const Rational& k) {
  OpenInterval alpha_window = feasible_alpha_range(delta);
  Rational alpha = (alpha_window.lo + alpha_window.hi) / Rational(2);
  return combined_window_with_alpha(delta, alpha, k);
}

EwtBound ewt_lower_bound() {
  // The chain forces total time >= max over beta of min(..., computed terms); the
  // binding constraint at the balanced point is 1/4 + beta/2 >= 1 at beta = 3/2.
  Rational beta(3, 2);
  Rational lhs = Rational(1, 4) + beta / Rational(2);
  EwtBound out;
  out.exponent = beta;
  out.witness = "1/4 + beta/2 >= 1 holds with equality at beta = 3/2 (lhs = " +
                lhs.to_string() + ")";
  if (!(Rational(1) <= lhs)) fail(ErrorCode::out_of_range, "witness inequality violated");
  return out;
}

}  // namespace walklab
