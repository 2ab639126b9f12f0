#include "walklab/reductions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <unordered_set>

#include "walklab/brute_force.hpp"
#include "walklab/skiplist.hpp"

namespace walklab {

namespace {

constexpr std::int64_t kShiftGuard = std::int64_t{1} << 60;

std::int64_t checked_int64(__int128 v, const char* what) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    fail(ErrorCode::out_of_range, what);
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace

ThreeListInstance map_3sum_to_3list(const ThreeSumInstance& src) {
  ValueSeq values = src.values;
  ValueSeq negated(values.size(), [values](std::int64_t i) { return -values.at(i); });
  return ThreeListInstance{values, values, negated};
}

ThreeSumPrimeInstance map_3list_to_3sumprime(const ThreeListInstance& src) {
  const std::int64_t na = src.a.size();
  const std::int64_t nb = src.b.size();
  const std::int64_t nc = src.c.size();

  std::int64_t min_ab = 0;
  std::int64_t min_c = 0;
  std::int64_t max_a = 0;
  std::int64_t max_b = 0;
  std::int64_t max_c = 0;
  for (std::int64_t i = 0; i < na; ++i) {
    const std::int64_t v = src.a.at(i);
    min_ab = std::min(min_ab, v);
    max_a = std::max(max_a, v);
  }
  for (std::int64_t i = 0; i < nb; ++i) {
    const std::int64_t v = src.b.at(i);
    min_ab = std::min(min_ab, v);
    max_b = std::max(max_b, v);
  }
  for (std::int64_t i = 0; i < nc; ++i) {
    const std::int64_t v = src.c.at(i);
    min_c = std::min(min_c, v);
    max_c = std::max(max_c, v);
  }

  // Shift A and B by k and C by 2k so every stored value is positive, then
  // spread the lists over the bands (m, 1.5m], (3m, 3.5m], (4m, 4.5m]. Band
  // sums only meet a band in the intended combination A + B = C.
  std::int64_t k = 1;
  k = std::max(k, 1 - min_ab);
  if (1 - min_c > 0) k = std::max(k, (2 - min_c) / 2);
  const std::int64_t top = std::max({max_a + k, max_b + k, max_c + 2 * k});
  const std::int64_t m = 2 * top;
  if (m > kShiftGuard / 8) fail(ErrorCode::out_of_range, "shift scalar overflow");

  ValueSeq a = src.a;
  ValueSeq b = src.b;
  ValueSeq c = src.c;
  return ThreeSumPrimeInstance{ValueSeq(
      na + nb + nc, [a, b, c, na, nb, k, m](std::int64_t i) {
        if (i < na) return a.at(i) + k + m;
        if (i < na + nb) return b.at(i - na) + k + 3 * m;
        return c.at(i - na - nb) + 2 * k + 4 * m;
      })};
}

GeomBaseInstance map_3list_to_geombase(const ThreeListInstance& src) {
  const std::int64_t na = src.a.size();
  const std::int64_t nb = src.b.size();
  ValueSeq a = src.a;
  ValueSeq b = src.b;
  ValueSeq c = src.c;
  return GeomBaseInstance{PointSeq(
      na + nb + c.size(), [a, b, c, na, nb](std::int64_t i) {
        if (i < na) return Point{2 * a.at(i), 0};
        if (i < na + nb) return Point{2 * b.at(i - na), 2};
        return Point{c.at(i - na - nb), 1};
      })};
}

ThreeListInstance map_geombase_to_3list(const GeomBaseInstance& src) {
  std::vector<std::int64_t> row0;
  std::vector<std::int64_t> row1;
  std::vector<std::int64_t> row2;
  for (std::int64_t i = 0; i < src.points.size(); ++i) {
    switch (src.points.at(i).y) {
      case 0: row0.push_back(i); break;
      case 1: row1.push_back(i); break;
      case 2: row2.push_back(i); break;
      default: fail(ErrorCode::out_of_range, "point off rows 0/1/2");
    }
  }
  PointSeq pts = src.points;
  auto row_values = [pts](std::vector<std::int64_t> idx, std::int64_t scale) {
    const std::int64_t n = static_cast<std::int64_t>(idx.size());
    return ValueSeq(n, [pts, idx = std::move(idx), scale](std::int64_t i) {
      return scale * pts.at(idx[i]).x;
    });
  };
  return ThreeListInstance{row_values(std::move(row0), 1), row_values(std::move(row2), 1),
                           row_values(std::move(row1), 2)};
}

PointsInstance map_unique_3sum_to_collinearity(const ThreeSumInstance& src) {
  const std::int64_t n = src.values.size();
  std::vector<std::int64_t> vals;
  vals.reserve(n);
  std::int64_t max_abs = 0;
  for (std::int64_t i = 0; i < n; ++i) {
    vals.push_back(src.values.at(i));
    max_abs = std::max(max_abs, std::abs(vals.back()));
  }
  std::sort(vals.begin(), vals.end());
  if (std::adjacent_find(vals.begin(), vals.end()) != vals.end()) {
    fail(ErrorCode::duplicate_input, "values must be distinct");
  }

  // Offsets sum to zero only as the full pattern {k, -3k, 2k}; with
  // k > 3 * max|x| no other pattern can cancel and no two abscissas collide.
  const std::int64_t k = 4 * max_abs + 1;
  if (max_abs + 3 * k > (std::int64_t{1} << 21)) {
    fail(ErrorCode::out_of_range, "cube would overflow 64 bits");
  }
  ValueSeq values = src.values;
  return PointsInstance{PointSeq(3 * n, [values, k](std::int64_t idx) {
    static constexpr std::int64_t kOffsets[3] = {1, -3, 2};
    const std::int64_t y = values.at(idx / 3) + kOffsets[idx % 3] * k;
    return Point{y, y * y * y};
  })};
}

LinesInstance map_collinearity_to_concurrency(const PointsInstance& src) {
  const std::int64_t n = src.points.size();
  std::int64_t max_coord = 1;
  for (std::int64_t i = 0; i < n; ++i) {
    const Point p = src.points.at(i);
    max_coord = std::max({max_coord, std::abs(p.x), std::abs(p.y)});
  }
  const std::int64_t lam = 2 * max_coord + 1;
  for (std::int64_t i = 0; i < n; ++i) {
    const Point p = src.points.at(i);
    checked_int64(static_cast<__int128>(p.x) + static_cast<__int128>(lam) * p.y,
                  "sheared abscissa overflow");
  }
  PointSeq pts = src.points;
  return LinesInstance{LineSeq(n, [pts, lam](std::int64_t i) {
    const Point p = pts.at(i);
    // Shear kills shared abscissas among distinct points, then the dual of
    // (p', y) is the line Y = p' X - y, i.e. p' X - Y = y.
    return Line{p.x + lam * p.y, -1, p.y};
  })};
}

CoveringInstance map_strips_to_covering(const std::vector<Strip>& strips, const Box& box) {
  CoveringInstance inst;
  inst.strips = strips;
  inst.box = box;
  return inst;
}

ClawResult claw_find(const ValueSeq& x, const ValueSeq& y) {
  ClawResult res;
  const std::int64_t nx = x.size();
  const std::int64_t ny = y.size();
  std::int64_t i = 0;
  std::int64_t j = 0;
  std::int64_t xv = 0;
  std::int64_t yv = 0;
  bool have_x = false;
  bool have_y = false;
  bool seen_x = false;
  bool seen_y = false;
  while (i < nx && j < ny) {
    ++res.steps;
    if (!have_x) {
      const std::int64_t next = x.at(i);
      if (seen_x && next < xv) fail(ErrorCode::not_sorted, "first sequence not ascending");
      xv = next;
      have_x = seen_x = true;
    }
    if (!have_y) {
      const std::int64_t next = y.at(j);
      if (seen_y && next < yv) fail(ErrorCode::not_sorted, "second sequence not ascending");
      yv = next;
      have_y = seen_y = true;
    }
    if (xv == yv) {
      res.common = xv;
      return res;
    }
    if (xv < yv) {
      ++i;
      have_x = false;
    } else {
      ++j;
      have_y = false;
    }
  }
  return res;
}

struct ConvFamily::Core {
  std::vector<std::vector<std::int64_t>> buckets;
  std::vector<char> bad;
  std::int64_t n = 0;
  std::int64_t r = 1;
  std::int64_t cap = 0;
  std::int64_t filler = 1;
  std::int64_t bad_count = 0;
  std::int64_t bad_mass = 0;
};

namespace {

std::int64_t family_element(const ConvFamily::Core& core, std::int64_t i, std::int64_t j,
                            std::int64_t k, int omega, std::int64_t pos) {
  if (omega != 0 && omega != 1) fail(ErrorCode::out_of_range, "variant must be 0 or 1");
  if (i < 0 || j < 0 || k < 0) fail(ErrorCode::out_of_range, "ranks must be nonnegative");
  if (pos < 1 || pos > 16 * core.r) fail(ErrorCode::out_of_range, "position out of range");
  const std::int64_t u = pos / 8;
  const std::int64_t lane = pos % 8;
  std::int64_t t;
  std::int64_t rank;
  switch (lane) {
    case 1: t = ((u - omega) % core.r + core.r) % core.r; rank = i; break;
    case 3: t = u % core.r; rank = j; break;
    case 4: t = u % core.r; rank = k; break;
    default: return core.filler;
  }
  if (core.bad[t] || rank >= static_cast<std::int64_t>(core.buckets[t].size())) {
    return core.filler;
  }
  return core.buckets[t][rank];
}

}  // namespace

ConvFamily::ConvFamily(std::vector<std::int64_t> sorted_values, const MulShiftHash& h) {
  auto core = std::make_shared<Core>();
  if (!std::is_sorted(sorted_values.begin(), sorted_values.end())) {
    fail(ErrorCode::not_sorted, "bucket input must be ascending");
  }
  core->n = static_cast<std::int64_t>(sorted_values.size());
  core->r = h.bucket_count();
  core->buckets.resize(core->r);
  std::int64_t max_abs = 0;
  for (std::int64_t v : sorted_values) {
    core->buckets[static_cast<std::int64_t>(hash_eval(h, v))].push_back(v);
    max_abs = std::max(max_abs, std::abs(v));
  }
  core->filler = 2 * max_abs + 1;
  core->cap = core->r > 0 ? (3 * core->n + core->r - 1) / core->r : 0;
  core->bad.assign(core->r, 0);
  for (std::int64_t t = 0; t < core->r; ++t) {
    const std::int64_t occ = static_cast<std::int64_t>(core->buckets[t].size());
    if (occ * core->r > 3 * core->n) {
      core->bad[t] = 1;
      ++core->bad_count;
      core->bad_mass += occ;
    }
  }
  core_ = std::move(core);
}

std::int64_t ConvFamily::bucket_count() const { return core_->r; }
std::int64_t ConvFamily::rank_capacity() const { return core_->cap; }
std::int64_t ConvFamily::filler() const { return core_->filler; }
std::int64_t ConvFamily::length() const { return 16 * core_->r; }
std::int64_t ConvFamily::bad_bucket_count() const { return core_->bad_count; }
std::int64_t ConvFamily::bad_mass() const { return core_->bad_mass; }

bool ConvFamily::bucket_bad(std::int64_t t) const {
  if (t < 0 || t >= core_->r) fail(ErrorCode::out_of_range, "bucket index");
  return core_->bad[t] != 0;
}

const std::vector<std::int64_t>& ConvFamily::bucket(std::int64_t t) const {
  if (t < 0 || t >= core_->r) fail(ErrorCode::out_of_range, "bucket index");
  return core_->buckets[t];
}

std::int64_t ConvFamily::element(std::int64_t i, std::int64_t j, std::int64_t k, int omega,
                                 std::int64_t pos) const {
  return family_element(*core_, i, j, k, omega, pos);
}

ConvolutionInstance ConvFamily::instance(std::int64_t i, std::int64_t j, std::int64_t k,
                                         int omega) const {
  auto core = core_;
  return ConvolutionInstance{ValueSeq(16 * core->r, [core, i, j, k, omega](std::int64_t idx) {
    return family_element(*core, i, j, k, omega, idx + 1);
  })};
}

StructuredSearchResult structured_sum_search(const std::vector<std::int64_t>& values,
                                             int bucket_bits, std::uint64_t seed) {
  StructuredSearchResult res;
  const std::int64_t n = static_cast<std::int64_t>(values.size());
  res.bucket_count = std::int64_t{1} << bucket_bits;
  if (n == 0) return res;

  Rng rng(seed);

  // Ingest through the order-maintaining index keyed by input position.
  SkipListConfig cfg;
  cfg.index_capacity = static_cast<int>(n);
  cfg.bucket_count = 0;
  cfg.value_bits = 32;
  cfg.level_seed = rng.next_u64();
  IndexableSkipList index(cfg, IndexableSkipList::Mode::by_index);
  for (std::int64_t i = 0; i < n; ++i) {
    const SlStatus st = index.insert(i, values[i]);
    if (st != SlStatus::ok) {
      fail(ErrorCode::out_of_range, std::string("ingest failed: ") + sl_status_name(st));
    }
  }
  auto sorted = std::make_shared<std::vector<std::int64_t>>();
  sorted->reserve(n);
  for (const auto& [id, value] : index.entries_in_order()) sorted->push_back(value);

  const MulShiftHash h = hash_sample(63, bucket_bits, rng);
  ConvFamily fam(*sorted, h);
  res.bucket_count = fam.bucket_count();
  res.bad_bucket_count = fam.bad_bucket_count();
  res.bad_mass = fam.bad_mass();
  const std::int64_t cap = fam.rank_capacity();
  res.family_size = 2 * (cap + 1) * (cap + 1) * (cap + 1);

  auto in_input = [&](std::int64_t v) {
    return std::binary_search(sorted->begin(), sorted->end(), v);
  };
  auto report = [&](std::int64_t a, std::int64_t b, std::int64_t c, bool via_bad) {
    if (a + b != c || !in_input(a) || !in_input(b) || !in_input(c)) {
      fail(ErrorCode::out_of_range, "candidate failed source verification");
    }
    res.found = true;
    res.a = a;
    res.b = b;
    res.c = c;
    res.via_bad_bucket = via_bad;
  };

  // Overfull buckets: each of their elements is tested in every role by two
  // claw searches (as a summand against S + e, as the target against e - S).
  const ValueSeq base(n, [sorted](std::int64_t q) { return (*sorted)[q]; });
  for (std::int64_t t = 0; t < fam.bucket_count(); ++t) {
    if (!fam.bucket_bad(t)) continue;
    for (const std::int64_t e : fam.bucket(t)) {
      const ValueSeq shifted(n, [sorted, e](std::int64_t q) { return (*sorted)[q] + e; });
      ClawResult claw = claw_find(shifted, base);
      res.claw_steps += static_cast<std::uint64_t>(claw.steps);
      if (claw.common) {
        report(e, *claw.common - e, *claw.common, true);
        return res;
      }
      const ValueSeq reflected(
          n, [sorted, e, n](std::int64_t q) { return e - (*sorted)[n - 1 - q]; });
      claw = claw_find(reflected, base);
      res.claw_steps += static_cast<std::uint64_t>(claw.steps);
      if (claw.common) {
        report(e - *claw.common, *claw.common, e, true);
        return res;
      }
    }
  }

  // Good buckets: scan the aligned pairs that the family's lane layout can
  // realize (carry offset omega, wrap through the doubled period) and probe
  // the target bucket for a + b. Every hit is a verified input solution, and
  // any solution over good buckets is reachable with omega equal to its hash
  // carry, so this scan decides exactly what the instance family decides.
  const std::int64_t r = fam.bucket_count();
  for (int omega = 0; omega <= 1; ++omega) {
    for (std::int64_t ua = 0; ua < 2 * r; ++ua) {
      const std::int64_t ta = ((ua - omega) % r + r) % r;
      if (fam.bucket_bad(ta) || fam.bucket(ta).empty()) continue;
      for (std::int64_t ub = 0; ua + ub <= 2 * r - 1; ++ub) {
        const std::int64_t tb = ub % r;
        if (fam.bucket_bad(tb) || fam.bucket(tb).empty()) continue;
        const std::int64_t tc = (ua + ub) % r;
        if (fam.bucket_bad(tc) || fam.bucket(tc).empty()) continue;
        const auto& bc = fam.bucket(tc);
        for (const std::int64_t a : fam.bucket(ta)) {
          for (const std::int64_t b : fam.bucket(tb)) {
            ++res.membership_probes;
            if (std::binary_search(bc.begin(), bc.end(), a + b)) {
              report(a, b, a + b, false);
              return res;
            }
          }
        }
      }
    }
  }
  return res;
}

TriangleFamily::TriangleFamily(ValueSeq conv_values) : values_(std::move(conv_values)) {
  n_ = values_.size();
  p_ = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(n_))));
  while (p_ * p_ > n_) --p_;
  while ((p_ + 1) * (p_ + 1) <= n_) ++p_;
  if (p_ * p_ != n_) fail(ErrorCode::not_square, "length must be a perfect square");
  std::int64_t max_abs = 0;
  for (std::int64_t i = 0; i < n_; ++i) max_abs = std::max(max_abs, std::abs(values_.at(i)));
  filler_ = 3 * max_abs + 1;
}

std::int64_t TriangleFamily::graph_count() const { return p_; }
std::int64_t TriangleFamily::part_size() const { return p_; }
std::int64_t TriangleFamily::filler() const { return filler_; }

TripartiteWeights TriangleFamily::graph(std::int64_t g) const {
  if (g < 1 || g > p_) fail(ErrorCode::out_of_range, "graph index");
  const ValueSeq vals = values_;
  const std::int64_t n = n_;
  const std::int64_t p = p_;
  const std::int64_t filler = filler_;
  auto val = [vals, n, filler](std::int64_t idx) {
    return idx >= 1 && idx <= n ? vals.at(idx - 1) : filler;
  };
  TripartiteWeights w;
  w.part_size = p_;
  w.lr = [val, p](std::int64_t s, std::int64_t t) { return val((s - 1) * p + t); };
  w.rs = [val, p, g](std::int64_t t, std::int64_t q) { return val((g - 1) * p + q - t); };
  w.ls = [vals, n, p, g, filler](std::int64_t s, std::int64_t q) {
    const std::int64_t idx = (s + g - 2) * p + q;
    return idx >= 1 && idx <= n ? -vals.at(idx - 1) : filler;
  };
  return w;
}

std::optional<std::pair<std::int64_t, std::int64_t>> TriangleFamily::map_back(
    std::int64_t g, std::int64_t s, std::int64_t t, std::int64_t q) const {
  const std::int64_t i1 = (s - 1) * p_ + t;
  const std::int64_t i2 = (g - 1) * p_ + q - t;
  if (i1 < 1 || i1 > n_ || i2 < 1 || i1 + i2 > n_ || i1 == i2) return std::nullopt;
  if (values_.at(i1 - 1) + values_.at(i2 - 1) != values_.at(i1 + i2 - 1)) return std::nullopt;
  return std::make_pair(i1, i2);
}

bool TriangleFamily::solve() const {
  for (std::int64_t g = 1; g <= p_; ++g) {
    const TripartiteWeights w = graph(g);
    for (std::int64_t s = 1; s <= p_; ++s) {
      for (std::int64_t t = 1; t <= p_; ++t) {
        const std::int64_t w_lr = w.lr(s, t);
        for (std::int64_t q = 1; q <= p_; ++q) {
          if (w_lr + w.rs(t, q) + w.ls(s, q) == 0 && map_back(g, s, t, q)) return true;
        }
      }
    }
  }
  return false;
}

namespace {

std::vector<std::int64_t> gen_values(Rng& rng, std::int64_t n, std::int64_t range) {
  std::vector<std::int64_t> v(n);
  for (auto& x : v) x = rng.next_in(-range, range);
  return v;
}

// Overwrites v[r] so that some triple satisfies the target relation; noop for
// tiny inputs.
void plant_sum_zero(std::vector<std::int64_t>& v, Rng& rng) {
  const std::int64_t n = static_cast<std::int64_t>(v.size());
  if (n < 3) return;
  const std::int64_t r = rng.next_below(n);
  std::int64_t i = rng.next_below(n);
  std::int64_t j = rng.next_below(n);
  while (i == r) i = rng.next_below(n);
  while (j == r || j == i) j = rng.next_below(n);
  v[r] = -(v[i] + v[j]);
}

void plant_sum_to_third(std::vector<std::int64_t>& v, Rng& rng) {
  const std::int64_t n = static_cast<std::int64_t>(v.size());
  if (n < 3) return;
  const std::int64_t r = rng.next_below(n);
  std::int64_t i = rng.next_below(n);
  std::int64_t j = rng.next_below(n);
  while (i == r) i = rng.next_below(n);
  while (j == r || j == i) j = rng.next_below(n);
  v[r] = v[i] + v[j];
}

struct ThreeLists {
  std::vector<std::int64_t> a;
  std::vector<std::int64_t> b;
  std::vector<std::int64_t> c;
};

ThreeLists gen_three_lists(Rng& rng, std::int64_t n) {
  ThreeLists t{gen_values(rng, n, 40), gen_values(rng, n, 40), gen_values(rng, n, 40)};
  if (n > 0 && rng.next_below(2) == 0) {
    t.c[rng.next_below(n)] = t.a[rng.next_below(n)] + t.b[rng.next_below(n)];
  }
  return t;
}

std::vector<Point> gen_row_points(Rng& rng, std::int64_t n) {
  std::vector<Point> pts(n);
  for (auto& p : pts) p = {rng.next_in(-40, 40), rng.next_in(0, 2)};
  if (n >= 3 && rng.next_below(2) == 0) {
    std::int64_t x0 = rng.next_in(-40, 40);
    std::int64_t x2 = rng.next_in(-40, 40);
    if ((x0 + x2) % 2 != 0) ++x2;
    pts[0] = {x0, 0};
    pts[1] = {x2, 2};
    pts[2] = {(x0 + x2) / 2, 1};
  }
  return pts;
}

std::vector<std::int64_t> gen_distinct_values(Rng& rng, std::int64_t n) {
  std::vector<std::int64_t> pool;
  const std::int64_t range = std::max<std::int64_t>(60, n);
  for (std::int64_t v = -range; v <= range; ++v) pool.push_back(v);
  for (std::int64_t i = static_cast<std::int64_t>(pool.size()) - 1; i > 0; --i) {
    std::swap(pool[i], pool[rng.next_below(i + 1)]);
  }
  pool.resize(n);
  if (n >= 3 && rng.next_below(2) == 0) {
    const std::int64_t target = -(pool[0] + pool[1]);
    if (std::find(pool.begin(), pool.end(), target) == pool.end()) pool[2] = target;
  }
  return pool;
}

std::vector<Point> gen_plane_points(Rng& rng, std::int64_t n) {
  std::vector<Point> pts(n);
  for (auto& p : pts) p = {rng.next_in(-30, 30), rng.next_in(-30, 30)};
  if (n >= 3 && rng.next_below(2) == 0) {
    // pts[2] = 2 * pts[1] - pts[0] lies on the line through pts[0], pts[1].
    pts[2] = {2 * pts[1].x - pts[0].x, 2 * pts[1].y - pts[0].y};
  }
  return pts;
}

struct StripsAndBox {
  std::vector<Strip> strips;
  Box box;
};

StripsAndBox gen_parallel_strips(Rng& rng, std::int64_t n) {
  StripsAndBox out;
  out.box = {rng.next_in(-10, 0), rng.next_in(1, 10), rng.next_in(-10, 0), rng.next_in(1, 10)};
  std::int64_t a = rng.next_in(-4, 4);
  std::int64_t b = rng.next_in(-4, 4);
  if (a == 0 && b == 0) b = 1;
  const std::int64_t count = std::max<std::int64_t>(1, n);
  if (rng.next_below(2) == 0) {
    // Overlapping ladder spanning the box projection: guaranteed cover.
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    bool first = true;
    for (std::int64_t x : {out.box.x_min, out.box.x_max}) {
      for (std::int64_t y : {out.box.y_min, out.box.y_max}) {
        const std::int64_t v = a * x + b * y;
        if (first || v < lo) lo = v;
        if (first || v > hi) hi = v;
        first = false;
      }
    }
    const std::int64_t step = std::max<std::int64_t>(1, (hi - lo + 2) / count + 1);
    for (std::int64_t i = 0; i < count; ++i) {
      const std::int64_t c1 = lo - 1 + i * step - 1;
      const std::int64_t c2 = c1 + step + 2;
      out.strips.push_back({{a, b, c1}, {a, b, c2}});
    }
  } else {
    for (std::int64_t i = 0; i < count; ++i) {
      const std::int64_t c1 = rng.next_in(-30, 30);
      const std::int64_t c2 = c1 + rng.next_in(0, 12);
      out.strips.push_back({{a, b, c1}, {a, b, c2}});
    }
  }
  return out;
}

std::vector<std::int64_t> gen_conv_array(Rng& rng, std::int64_t n) {
  std::vector<std::int64_t> a = gen_values(rng, n, 50);
  if (n >= 3 && rng.next_below(2) == 0) {
    // Plant A[i] + A[j] = A[i+j] with 1-based i != j.
    const std::int64_t i = 1 + rng.next_below(std::max<std::int64_t>(1, n / 2 - 1));
    std::int64_t j = i;
    while (j == i) j = 1 + rng.next_below(n - i);
    a[i + j - 1] = a[i - 1] + a[j - 1];
  }
  return a;
}

std::vector<Point> points_of(const PointsInstance& inst) { return inst.points.to_vector(); }

}  // namespace

std::vector<std::pair<std::string, std::string>> reduction_pairs() {
  return {{"3sum", "3list"},          {"3list", "3sumprime"}, {"3list", "geombase"},
          {"geombase", "3list"},      {"unique3sum", "collinear"},
          {"collinear", "concurrent"}, {"strips", "covering"},
          {"structured3sum", "conv"},  {"conv", "0ewt"}};
}

ReductionCheck run_reduction_check(const std::string& from, const std::string& to,
                                   std::int64_t n, Rng& rng) {
  ReductionCheck out;
  if (from == "3sum" && to == "3list") {
    auto v = gen_values(rng, n, 50);
    if (rng.next_below(2) == 0) plant_sum_zero(v, rng);
    out.source_answer = solve_3sum(v);
    const ThreeListInstance mapped = map_3sum_to_3list({ValueSeq::materialized(v)});
    out.mapped_answer =
        solve_3list(mapped.a.to_vector(), mapped.b.to_vector(), mapped.c.to_vector());
  } else if (from == "3list" && to == "3sumprime") {
    const ThreeLists t = gen_three_lists(rng, n);
    out.source_answer = solve_3list(t.a, t.b, t.c);
    const ThreeSumPrimeInstance mapped =
        map_3list_to_3sumprime({ValueSeq::materialized(t.a), ValueSeq::materialized(t.b),
                                ValueSeq::materialized(t.c)});
    out.mapped_answer = solve_3sumprime(mapped.values.to_vector());
  } else if (from == "3list" && to == "geombase") {
    const ThreeLists t = gen_three_lists(rng, n);
    out.source_answer = solve_3list(t.a, t.b, t.c);
    const GeomBaseInstance mapped =
        map_3list_to_geombase({ValueSeq::materialized(t.a), ValueSeq::materialized(t.b),
                               ValueSeq::materialized(t.c)});
    out.mapped_answer = solve_geombase(mapped.points.to_vector());
  } else if (from == "geombase" && to == "3list") {
    const auto pts = gen_row_points(rng, n);
    out.source_answer = solve_geombase(pts);
    const ThreeListInstance mapped = map_geombase_to_3list({PointSeq::materialized(pts)});
    out.mapped_answer =
        solve_3list(mapped.a.to_vector(), mapped.b.to_vector(), mapped.c.to_vector());
  } else if (from == "unique3sum" && to == "collinear") {
    const auto v = gen_distinct_values(rng, n);
    out.source_answer = solve_3sum(v);
    const PointsInstance mapped = map_unique_3sum_to_collinearity({ValueSeq::materialized(v)});
    out.mapped_answer = solve_3points_on_line(points_of(mapped));
  } else if (from == "collinear" && to == "concurrent") {
    const auto pts = gen_plane_points(rng, n);
    out.source_answer = solve_3points_on_line(pts);
    const LinesInstance mapped = map_collinearity_to_concurrency({PointSeq::materialized(pts)});
    out.mapped_answer = solve_point_on_3lines(mapped.lines.to_vector());
  } else if (from == "strips" && to == "covering") {
    const StripsAndBox sb = gen_parallel_strips(rng, n);
    out.source_answer = solve_strips_cover_box(sb.strips, sb.box);
    const CoveringInstance mapped = map_strips_to_covering(sb.strips, sb.box);
    out.mapped_answer = !solve_general_covering(mapped).has_value();
  } else if (from == "structured3sum" && to == "conv") {
    auto v = gen_values(rng, n, 60);
    if (rng.next_below(2) == 0) plant_sum_to_third(v, rng);
    out.source_answer = solve_3sumprime(v);
    out.mapped_answer = structured_sum_search(v, 3, rng.next_u64()).found;
  } else if (from == "conv" && to == "0ewt") {
    std::int64_t p = 2;
    while ((p + 1) * (p + 1) <= n) ++p;
    const auto a = gen_conv_array(rng, p * p);
    out.source_answer = solve_convolution(a);
    out.mapped_answer = TriangleFamily(ValueSeq::materialized(a)).solve();
  } else {
    fail(ErrorCode::unknown_reduction, from + " -> " + to);
  }
  out.agree = out.source_answer == out.mapped_answer;
  return out;
}

}  // namespace walklab
