#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "walklab/common.hpp"

namespace walklab {

// Lazy indexed sequence with an instrumented query counter. Reductions hand out
// sequences whose elements are computed on demand from their source oracles, so
// building one costs nothing per element until it is queried. Views that wrap
// another sequence share that sequence's counter through the captured copy.
template <typename T>
class Lazy {
 public:
  Lazy() : state_(std::make_shared<State>(State{0, {}, 0})) {}
  Lazy(std::int64_t n, std::function<T(std::int64_t)> f)
      : state_(std::make_shared<State>(State{n, std::move(f), 0})) {}

  static Lazy materialized(std::vector<T> v) {
    auto data = std::make_shared<std::vector<T>>(std::move(v));
    return Lazy(static_cast<std::int64_t>(data->size()),
                [data](std::int64_t i) { return (*data)[i]; });
  }

  T at(std::int64_t i) const {
    if (i < 0 || i >= state_->n) fail(ErrorCode::out_of_range, "index " + std::to_string(i));
    ++state_->queries;
    return state_->f(i);
  }

  std::int64_t size() const { return state_->n; }
  std::uint64_t queries() const { return state_->queries; }
  void reset_queries() const { state_->queries = 0; }

  std::vector<T> to_vector() const {
    std::vector<T> out;
    out.reserve(state_->n);
    for (std::int64_t i = 0; i < state_->n; ++i) out.push_back(at(i));
    return out;
  }

 private:
  struct State {
    std::int64_t n;
    std::function<T(std::int64_t)> f;
    mutable std::uint64_t queries;
  };
  std::shared_ptr<State> state_;
};

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;
  bool operator==(const Point&) const = default;
};

// Line a*x + b*y = c with (a, b) != (0, 0).
struct Line {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;
  bool operator==(const Line&) const = default;
};

using ValueSeq = Lazy<std::int64_t>;
using PointSeq = Lazy<Point>;
using LineSeq = Lazy<Line>;

// a + b + c = 0 over values of the list; indices are unrestricted, so one list
// element may serve several roles.
struct ThreeSumInstance {
  ValueSeq values;
};

// a + b = c over values of the list, same role semantics.
struct ThreeSumPrimeInstance {
  ValueSeq values;
};

// a in A, b in B, c in C with a + b = c.
struct ThreeListInstance {
  ValueSeq a;
  ValueSeq b;
  ValueSeq c;
};

// Points on the three horizontal rows y in {0, 1, 2}; asks for a non-horizontal
// line through three of them.
struct GeomBaseInstance {
  PointSeq points;
};

// Any three collinear points (indexed multiset semantics: coincident points are
// distinct members and a coincident pair is collinear with everything).
struct PointsInstance {
  PointSeq points;
};

// A point lying on at least three of the lines (indexed multiset semantics).
struct LinesInstance {
  LineSeq lines;
};

// A[1..n] exposed 0-based (at(i) = A[i+1]); solution = 1-based i != j with
// i + j <= n and A[i] + A[j] = A[i+j].
struct ConvolutionInstance {
  ValueSeq values;
};

// Complete tripartite graph on parts L, R, S of part_size nodes with integer
// edge weights; asks for a triangle of total weight zero.
struct TripartiteWeights {
  std::int64_t part_size = 0;
  std::function<std::int64_t(std::int64_t, std::int64_t)> lr;  // (s, t), 1-based
  std::function<std::int64_t(std::int64_t, std::int64_t)> rs;  // (t, q)
  std::function<std::int64_t(std::int64_t, std::int64_t)> ls;  // (s, q)
};

// Closed region between two parallel boundary lines; its interior is open.
struct Strip {
  Line l1;
  Line l2;
};

// Wedge: intersection of two half-planes around non-parallel boundary lines.
// side = +1 keeps a*x + b*y >= c, side = -1 keeps <= c.
struct Angle {
  Line l1;
  int side1 = 1;
  Line l2;
  int side2 = 1;
};

struct Box {
  std::int64_t x_min = 0;
  std::int64_t x_max = 0;
  std::int64_t y_min = 0;
  std::int64_t y_max = 0;
};

// Covering instance: regions plus an axis-parallel box; the point predicate of
// the witness search is membership in the box. Witness semantics: a point on an
// intersection of two boundary lines (box edges included), inside the closed
// box, and in the open interior of no region. Such a point exists iff the open
// region interiors fail to cover the closed box.
struct CoveringInstance {
  std::vector<Strip> strips;
  std::vector<Angle> angles;
  Box box;
};

// On-disk instance file: {"problem": ..., "n": ..., "values"|"points"|"lines",
// "seed": ...}.
struct InstanceFile {
  std::string problem;
  std::int64_t n = 0;
  std::vector<std::int64_t> values;
  std::vector<Point> points;
  std::vector<Line> lines;
  std::uint64_t seed = 0;
};

InstanceFile read_instance_file(const std::string& path);
void write_instance_file(const std::string& path, const InstanceFile& inst);
std::string instance_to_json_text(const InstanceFile& inst);
InstanceFile parse_instance_json_text(const std::string& text);

}  // namespace walklab
