#include "walklab/brute_force.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_set>

#include "walklab/cost_model.hpp"

namespace walklab {

namespace {

int sign_of(__int128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Sign of a*x + b*y - c at the rational point (xn/d, yn/d), d > 0.
int line_side(const Line& l, const RatPoint& p) {
  __int128 v = static_cast<__int128>(l.a) * p.xn + static_cast<__int128>(l.b) * p.yn -
               static_cast<__int128>(l.c) * p.d;
  return sign_of(v);
}

bool lines_parallel(const Line& l1, const Line& l2) {
  return static_cast<__int128>(l1.a) * l2.b == static_cast<__int128>(l2.a) * l1.b;
}

bool lines_identical(const Line& l1, const Line& l2) {
  return lines_parallel(l1, l2) &&
         static_cast<__int128>(l1.a) * l2.c == static_cast<__int128>(l2.a) * l1.c &&
         static_cast<__int128>(l1.b) * l2.c == static_cast<__int128>(l2.b) * l1.c;
}

std::optional<RatPoint> intersect(const Line& l1, const Line& l2) {
  __int128 det = static_cast<__int128>(l1.a) * l2.b - static_cast<__int128>(l2.a) * l1.b;
  if (det == 0) return std::nullopt;
  RatPoint p;
  p.xn = static_cast<__int128>(l1.c) * l2.b - static_cast<__int128>(l2.c) * l1.b;
  p.yn = static_cast<__int128>(l1.a) * l2.c - static_cast<__int128>(l2.a) * l1.c;
  p.d = det;
  if (p.d < 0) {
    p.xn = -p.xn;
    p.yn = -p.yn;
    p.d = -p.d;
  }
  return p;
}

void check_line(const Line& l) {
  constexpr std::int64_t kBound = std::int64_t{1} << 30;
  if (l.a == 0 && l.b == 0) fail(ErrorCode::out_of_range, "line with zero normal");
  if (std::abs(l.a) > kBound || std::abs(l.b) > kBound || std::abs(l.c) > kBound) {
    fail(ErrorCode::out_of_range, "line coefficient exceeds 2^30");
  }
}

void check_box(const Box& b) {
  constexpr std::int64_t kBound = std::int64_t{1} << 30;
  if (b.x_min > b.x_max || b.y_min > b.y_max) {
    fail(ErrorCode::out_of_range, "empty box");
  }
  for (std::int64_t v : {b.x_min, b.x_max, b.y_min, b.y_max}) {
    if (std::abs(v) > kBound) fail(ErrorCode::out_of_range, "box bound exceeds 2^30");
  }
}

// Sign of the scale factor between two parallel normals.
int parallel_scale_sign(const Line& base, const Line& other) {
  if (base.a != 0) return sign_of(base.a) * sign_of(other.a);
  return sign_of(base.b) * sign_of(other.b);
}

std::vector<Line> box_edges(const Box& b) {
  return {{1, 0, b.x_min}, {1, 0, b.x_max}, {0, 1, b.y_min}, {0, 1, b.y_max}};
}

}  // namespace

bool solve_3sum(const std::vector<std::int64_t>& values) {
  std::vector<std::int64_t> v(values);
  std::sort(v.begin(), v.end());
  const std::int64_t n = static_cast<std::int64_t>(v.size());
  for (std::int64_t k = 0; k < n; ++k) {
    const std::int64_t target = -v[k];
    std::int64_t lo = 0;
    std::int64_t hi = n - 1;
    while (lo <= hi) {
      const std::int64_t s = v[lo] + v[hi];
      if (s == target) return true;
      if (s < target) {
        ++lo;
      } else {
        --hi;
      }
    }
  }
  return false;
}

bool solve_3sumprime(const std::vector<std::int64_t>& values) {
  std::vector<std::int64_t> v(values);
  std::sort(v.begin(), v.end());
  const std::int64_t n = static_cast<std::int64_t>(v.size());
  for (std::int64_t k = 0; k < n; ++k) {
    const std::int64_t target = v[k];
    std::int64_t lo = 0;
    std::int64_t hi = n - 1;
    while (lo <= hi) {
      const std::int64_t s = v[lo] + v[hi];
      if (s == target) return true;
      if (s < target) {
        ++lo;
      } else {
        --hi;
      }
    }
  }
  return false;
}

bool solve_3list(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b,
                 const std::vector<std::int64_t>& c) {
  std::unordered_set<std::int64_t> targets(c.begin(), c.end());
  for (std::int64_t x : a) {
    for (std::int64_t y : b) {
      if (targets.count(x + y)) return true;
    }
  }
  return false;
}

bool solve_geombase(const std::vector<Point>& points) {
  // A non-horizontal line meets each row at most once, so a hit uses one point
  // per row and collinearity is the midpoint condition x0 + x2 = 2 * x1.
  std::unordered_set<std::int64_t> row0;
  std::unordered_set<std::int64_t> row2;
  std::unordered_set<std::int64_t> row1_doubled;
  for (const Point& p : points) {
    switch (p.y) {
      case 0: row0.insert(p.x); break;
      case 1: row1_doubled.insert(2 * p.x); break;
      case 2: row2.insert(p.x); break;
      default: fail(ErrorCode::out_of_range, "point off rows 0/1/2");
    }
  }
  for (std::int64_t a : row0) {
    for (std::int64_t b : row2) {
      if (row1_doubled.count(a + b)) return true;
    }
  }
  return false;
}

bool solve_3points_on_line(const std::vector<Point>& points) {
  const std::size_t n = points.size();
  for (std::size_t i = 0; i + 2 < n; ++i) {
    for (std::size_t j = i + 1; j + 1 < n; ++j) {
      const __int128 dx1 = points[j].x - points[i].x;
      const __int128 dy1 = points[j].y - points[i].y;
      for (std::size_t k = j + 1; k < n; ++k) {
        const __int128 dx2 = points[k].x - points[i].x;
        const __int128 dy2 = points[k].y - points[i].y;
        if (dx1 * dy2 - dy1 * dx2 == 0) return true;
      }
    }
  }
  return false;
}

bool solve_point_on_3lines(const std::vector<Line>& lines) {
  const std::size_t n = lines.size();
  for (const Line& l : lines) {
    if (l.a == 0 && l.b == 0) fail(ErrorCode::out_of_range, "line with zero normal");
  }
  for (std::size_t i = 0; i + 2 < n; ++i) {
    for (std::size_t j = i + 1; j + 1 < n; ++j) {
      const Line& li = lines[i];
      const Line& lj = lines[j];
      const __int128 det = static_cast<__int128>(li.a) * lj.b - static_cast<__int128>(lj.a) * li.b;
      const bool same_ij = det == 0 && lines_identical(li, lj);
      if (det == 0 && !same_ij) continue;  // parallel, disjoint pair
      const __int128 xn = static_cast<__int128>(li.c) * lj.b - static_cast<__int128>(lj.c) * li.b;
      const __int128 yn = static_cast<__int128>(li.a) * lj.c - static_cast<__int128>(lj.a) * li.c;
      for (std::size_t k = j + 1; k < n; ++k) {
        const Line& lk = lines[k];
        if (same_ij) {
          // Any line meeting (or equal to) the shared line closes the triple.
          if (!lines_parallel(li, lk) || lines_identical(li, lk)) return true;
        } else {
          if (static_cast<__int128>(lk.a) * xn + static_cast<__int128>(lk.b) * yn ==
              static_cast<__int128>(lk.c) * det) {
            return true;
          }
        }
      }
    }
  }
  return false;
}

bool solve_convolution(const std::vector<std::int64_t>& a) {
  const std::int64_t n = static_cast<std::int64_t>(a.size());
  for (std::int64_t i = 1; i <= n; ++i) {
    for (std::int64_t j = i + 1; i + j <= n; ++j) {
      if (a[i - 1] + a[j - 1] == a[i + j - 1]) return true;
    }
  }
  return false;
}

std::optional<std::tuple<std::int64_t, std::int64_t, std::int64_t>> solve_0ewt(
    const TripartiteWeights& g) {
  for (std::int64_t s = 1; s <= g.part_size; ++s) {
    for (std::int64_t t = 1; t <= g.part_size; ++t) {
      const std::int64_t w_lr = g.lr(s, t);
      for (std::int64_t q = 1; q <= g.part_size; ++q) {
        if (w_lr + g.rs(t, q) + g.ls(s, q) == 0) return std::make_tuple(s, t, q);
      }
    }
  }
  return std::nullopt;
}

bool point_in_open_strip(const Strip& s, const RatPoint& p) {
  const int f1 = line_side(s.l1, p);
  const int f2 = line_side(s.l2, p);
  if (f1 == 0 || f2 == 0) return false;
  // With boundary normals (a2, b2) = lambda * (a1, b1), strict betweenness is
  // opposite residual signs when lambda > 0 and equal signs when lambda < 0.
  return parallel_scale_sign(s.l1, s.l2) > 0 ? f1 != f2 : f1 == f2;
}

bool point_in_open_angle(const Angle& a, const RatPoint& p) {
  return a.side1 * line_side(a.l1, p) > 0 && a.side2 * line_side(a.l2, p) > 0;
}

bool point_in_closed_box(const Box& b, const RatPoint& p) {
  return p.xn >= static_cast<__int128>(b.x_min) * p.d &&
         p.xn <= static_cast<__int128>(b.x_max) * p.d &&
         p.yn >= static_cast<__int128>(b.y_min) * p.d &&
         p.yn <= static_cast<__int128>(b.y_max) * p.d;
}

std::optional<RatPoint> solve_general_covering(const CoveringInstance& inst) {
  check_box(inst.box);
  std::vector<Line> candidates = box_edges(inst.box);
  for (const Strip& s : inst.strips) {
    check_line(s.l1);
    check_line(s.l2);
    if (!lines_parallel(s.l1, s.l2)) {
      fail(ErrorCode::out_of_range, "strip boundary lines must be parallel");
    }
    candidates.push_back(s.l1);
    candidates.push_back(s.l2);
  }
  for (const Angle& a : inst.angles) {
    check_line(a.l1);
    check_line(a.l2);
    if (lines_parallel(a.l1, a.l2)) {
      fail(ErrorCode::out_of_range, "angle boundary lines must not be parallel");
    }
    candidates.push_back(a.l1);
    candidates.push_back(a.l2);
  }

  auto is_witness = [&](const RatPoint& p) {
    if (!point_in_closed_box(inst.box, p)) return false;
    for (const Strip& s : inst.strips) {
      if (point_in_open_strip(s, p)) return false;
    }
    for (const Angle& a : inst.angles) {
      if (point_in_open_angle(a, p)) return false;
    }
    return true;
  };

  // If the open interiors miss any part of the closed box, the uncovered set is
  // a union of convex polygons whose vertices all lie on candidate-line pairs.
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      if (auto p = intersect(candidates[i], candidates[j])) {
        if (is_witness(*p)) return p;
      }
    }
  }
  return std::nullopt;
}

bool solve_strips_cover_box(const std::vector<Strip>& strips, const Box& box) {
  check_box(box);
  if (strips.empty()) return false;
  for (const Strip& s : strips) {
    check_line(s.l1);
    check_line(s.l2);
    if (!lines_parallel(s.l1, s.l2)) {
      fail(ErrorCode::out_of_range, "strip boundary lines must be parallel");
    }
  }
  const Line& base = strips.front().l1;
  const bool all_parallel = std::all_of(strips.begin(), strips.end(), [&](const Strip& s) {
    return lines_parallel(base, s.l1);
  });
  if (!all_parallel) {
    CoveringInstance inst;
    inst.strips = strips;
    inst.box = box;
    return !solve_general_covering(inst).has_value();
  }

  // All strips share the normal direction of `base`: compare along a*x + b*y.
  auto offset_on_base = [&](const Line& l) {
    // l = lambda * base in the normal; its offset in base scale is c / lambda.
    const std::int64_t num = base.a != 0 ? l.a : l.b;
    const std::int64_t den = base.a != 0 ? base.a : base.b;
    return Rational(l.c) * Rational(den, num);
  };

  std::vector<std::pair<Rational, Rational>> intervals;
  for (const Strip& s : strips) {
    Rational r1 = offset_on_base(s.l1);
    Rational r2 = offset_on_base(s.l2);
    if (r1 == r2) continue;  // coincident boundaries: empty interior
    if (r2 < r1) std::swap(r1, r2);
    intervals.emplace_back(r1, r2);
  }

  Rational lo_proj(0);
  Rational hi_proj(0);
  bool first = true;
  for (std::int64_t x : {box.x_min, box.x_max}) {
    for (std::int64_t y : {box.y_min, box.y_max}) {
      const Rational v(base.a * x + base.b * y);
      if (first || v < lo_proj) lo_proj = v;
      if (first || hi_proj < v) hi_proj = v;
      first = false;
    }
  }

  // Greedy sweep: the open intervals must cover the closed projection range.
  Rational cur = lo_proj;
  for (std::size_t step = 0; step <= intervals.size(); ++step) {
    Rational best = cur;
    bool extended = false;
    for (const auto& [lo, hi] : intervals) {
      if (lo < cur && cur < hi && best < hi) {
        best = hi;
        extended = true;
      }
    }
    if (!extended) return false;
    cur = best;
    if (hi_proj < cur) return true;
  }
  return false;
}

}  // namespace walklab
